"""Exact invariants, certified Tristram-Levine signatures and chirally
cosmetic surgery obstructions for alternating odd pretzel knots."""
from .errors import *  # noqa: F401,F403
from .errors import __all__ as _errors_all
from .invariants import (
    ConwayPolynomial,
    InvariantSet,
    JonesPolynomial,
    a2_closed,
    conway_polynomial,
    full_invariants,
    jones_polynomial,
    v3_closed,
    v3_from_jones,
    v3_skein,
)
from .obstruction import (
    INCONCLUSIVE,
    KNOWN_CHIRAL,
    NO_CCS,
    Reason,
    Verdict,
    cass_slope_sum,
    decide,
    strong_ratio,
    verify_theorems,
)
from .pretzel import PretzelKnot, canonical_form, canonical_knots, make_knot, parse_knot, seifert_matrix
from .signature import (
    PSignature,
    SignatureProfile,
    hermitian_signature_oracle,
    p_signature,
    sigma_ratio_table,
    sigma_table,
    signature_at_angle,
    signature_profile,
)

__version__ = "0.1.0"

__all__ = [
    "ConwayPolynomial", "InvariantSet", "JonesPolynomial", "PSignature", "PretzelKnot",
    "Reason", "SignatureProfile", "Verdict", "INCONCLUSIVE", "KNOWN_CHIRAL", "NO_CCS",
    "a2_closed", "canonical_form", "canonical_knots", "cass_slope_sum", "conway_polynomial",
    "decide", "full_invariants", "hermitian_signature_oracle", "jones_polynomial", "make_knot",
    "p_signature", "parse_knot", "seifert_matrix", "sigma_ratio_table", "sigma_table",
    "signature_at_angle", "signature_profile", "strong_ratio", "v3_closed", "v3_from_jones",
    "v3_skein", "verify_theorems", *_errors_all,
]
