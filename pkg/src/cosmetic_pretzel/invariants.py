"""Conway coefficients and the order-3 invariant ``v_3``.

Every quantity is available through more than one independent route:

* ``determinant`` -- ``det(x A - x^-1 A^T)`` rewritten in ``z = x - 1/x``;
* ``closed-form`` -- symmetric-polynomial formulas in the twists;
* ``skein`` -- unwinding crossings one at a time with the ``a_2``/``v_3``
  skein relations;
* ``jones`` -- derivatives of the Jones polynomial at ``t = 1``.

:func:`full_invariants` runs all of them and refuses to return if any two
disagree.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .algebra import IntPolynomial, LaurentPolynomial, bareiss_det
from .errors import NonIntegerV3, RewriteFailure, RouteMismatch, WrongGenus
from .pretzel import PretzelKnot, elementary_symmetric_all, seifert_matrix

__all__ = [
    "ConwayPolynomial",
    "JonesPolynomial",
    "InvariantSet",
    "alexander_x",
    "conway_polynomial",
    "laurent_to_z",
    "a2j_from_conway",
    "a2_closed",
    "v3_closed",
    "a4_closed_genus2",
    "a2_a4_a6_closed_genus3",
    "v3_skein",
    "kauffman_bracket",
    "jones_polynomial",
    "v3_from_jones",
    "full_invariants",
]

X = LaurentPolynomial.monomial(1)
X_INV = LaurentPolynomial.monomial(-1)
Z_IN_X = X - X_INV


# --------------------------------------------------------------------------
# Conway polynomial via the Seifert matrix


@dataclass(frozen=True)
class ConwayPolynomial:
    """``1 + a_2 z^2 + ... + a_{2g} z^{2g}``, stored as a dense polynomial in ``z``."""

    poly: IntPolynomial

    def __post_init__(self):
        if self.poly[0] != 1:
            raise ValueError(f"Conway polynomial of a knot has constant term 1, got {self.poly}")
        if any(c for i, c in enumerate(self.poly.coeffs) if i % 2):
            raise ValueError(f"Conway polynomial of a knot is even, got {self.poly}")

    @property
    def coefficients(self) -> list[int]:
        return list(self.poly.coeffs)

    @property
    def degree(self) -> int:
        return self.poly.degree

    def a(self, n: int) -> int:
        """Coefficient of ``z^n``."""
        return self.poly[n]

    def w_polynomial(self) -> IntPolynomial:
        """``1 + a_2 w + a_4 w^2 + ...``, i.e. the Conway polynomial with ``z^2 = w``."""
        return IntPolynomial(self.poly.coeffs[::2])

    def __str__(self) -> str:
        return self.poly.format("z")


def alexander_x(k: PretzelKnot) -> LaurentPolynomial:
    """``det(x A - x^{-1} A^T)`` as a Laurent polynomial in ``x = t^{1/2}``."""
    if k.genus == 0:
        return LaurentPolynomial.constant(1)
    a = seifert_matrix(k)
    n = len(a)
    m = [[X * a[i][j] - X_INV * a[j][i] for j in range(n)] for i in range(n)]
    return bareiss_det(m)


def laurent_to_z(f: LaurentPolynomial) -> IntPolynomial:
    """Write ``f(x)`` as a polynomial in ``z = x - 1/x``.

    Peels off ``c * z^d`` for the current top degree ``d``; raises
    :class:`RewriteFailure` if something with only negative powers is left.
    """
    rest = f
    out: dict[int, int] = {}
    powers = {0: LaurentPolynomial.constant(1)}
    while not rest.is_zero():
        d = rest.max_exponent
        if d < 0 or (d == 0 and rest.min_exponent < 0):
            raise RewriteFailure(f"{f} is not a polynomial in x - 1/x")
        c = rest.coeff(d)
        if d not in powers:
            powers[d] = Z_IN_X**d
        rest = rest - powers[d] * c
        out[d] = c
    dense = [0] * (max(out, default=-1) + 1)
    for d, c in out.items():
        dense[d] = c
    return IntPolynomial(dense)


def conway_polynomial(k: PretzelKnot) -> ConwayPolynomial:
    z = laurent_to_z(alexander_x(k))
    try:
        return ConwayPolynomial(z)
    except ValueError as exc:
        raise RewriteFailure(str(exc)) from exc


def a2j_from_conway(c: ConwayPolynomial, j: int) -> int:
    if j < 1:
        raise ValueError("a_2j is defined for j >= 1")
    return c.a(2 * j)


# --------------------------------------------------------------------------
# Closed forms


def _sym(k: PretzelKnot) -> list[int]:
    s = elementary_symmetric_all(k.twists)
    return s + [0] * 4


def a2_closed(k: PretzelKnot) -> int:
    g = k.genus
    if g == 0:
        return 0
    s = _sym(k)
    return g * (g + 1) // 2 + g * s[1] + s[2]


def _v3_closed_exact(g: int, s1: int, s2: int, s3: int) -> Fraction:
    inner = (
        Fraction(g * (g + 1) * (2 * g + 1), 3)
        + g * (2 * g + 1) * s1
        + g * s1 * s1
        + 2 * g * s2
        + s1 * s2
        + s3
    )
    return -inner / 2


def v3_closed(k: PretzelKnot) -> int:
    if k.genus == 0:
        return 0
    s = _sym(k)
    v = _v3_closed_exact(k.genus, s[1], s[2], s[3])
    if v.denominator != 1:
        raise NonIntegerV3(f"closed form gave v3 = {v} for {k}")
    return int(v)


def a4_closed_genus2(k: PretzelKnot) -> int:
    if k.genus != 2:
        raise WrongGenus(f"genus-2 formula applied to {k} (genus {k.genus})")
    s = _sym(k)
    return 1 + s[1] + s[2] + s[3] + s[4]


def a2_a4_a6_closed_genus3(k: PretzelKnot) -> tuple[int, int, int]:
    """Genus-3 closed forms, all symmetric polynomials taken over the seven twists."""
    if k.genus != 3:
        raise WrongGenus(f"genus-3 formula applied to {k} (genus {k.genus})")
    s = _sym(k)
    a2 = 6 + 3 * s[1] + s[2]
    a4 = 5 + 4 * s[1] + 3 * s[2] + 2 * s[3] + s[4]
    a6 = 1 + s[1] + s[2] + s[3] + s[4] + s[5] + s[6]
    return a2, a4, a6


# --------------------------------------------------------------------------
# Skein recursion


def v3_skein(k: PretzelKnot) -> int:
    """``v_3`` by the crossing-change recursion.

    A crossing change on strand ``i`` (``k_i -> k_i - 1``) resolves into two
    unknots with linking number ``-(sum of the other twists + g)``, so

        v3(K_-) = v3(K_+) - (a2(K_+) + a2(K_-) + lk^2) / 2.

    The last two strands are emptied this way, one of the two crossings they
    still carry is resolved, and the recursion continues on the knot with two
    fewer strands until the unknot (``v3 = 0``) is reached.
    """
    total = Fraction(0)
    ks = list(k.twists)
    while len(ks) > 1:
        g = (len(ks) - 1) // 2
        for idx in (len(ks) - 1, len(ks) - 2):
            while ks[idx] > 0:
                lk = sum(ks) - ks[idx] + g
                minus = PretzelKnot(tuple(ks))
                ks[idx] -= 1
                plus = PretzelKnot(tuple(ks))
                total -= Fraction(a2_closed(plus) + a2_closed(minus) + lk * lk, 2)
        # K(k_1..k_{2g-1}, 0, 0) -> K(k_1..k_{2g-1})
        lk = sum(ks) + g
        minus = PretzelKnot(tuple(ks))
        ks = ks[:-2]
        plus = PretzelKnot(tuple(ks))
        total -= Fraction(a2_closed(plus) + a2_closed(minus) + lk * lk, 2)
    if total.denominator != 1:
        raise NonIntegerV3(f"skein recursion gave v3 = {total} for {k}")
    return int(total)


# --------------------------------------------------------------------------
# Jones polynomial through the Kauffman bracket


A = LaurentPolynomial.monomial(1)
A_INV = LaurentPolynomial.monomial(-1)
LOOP = -(A**2) - A**-2


@dataclass(frozen=True)
class JonesPolynomial:
    poly: LaurentPolynomial  # in t

    def at_one(self) -> Fraction:
        return self.poly(1)

    def derivative_at_one(self, order: int) -> int:
        return self.poly.derivative_at_one(order)

    def __str__(self) -> str:
        return self.poly.format("t")


def _twist_column(crossings: int) -> tuple[LaurentPolynomial, LaurentPolynomial]:
    # A 2-tangle as (coefficient of ||, coefficient of =).  Stacking a crossing
    # A*|| + A^-1*= underneath: || is the identity and = . = closes a loop.
    vert, horiz = LaurentPolynomial.constant(1), LaurentPolynomial()
    for _ in range(crossings):
        vert, horiz = vert * A, vert * A_INV + horiz * A + horiz * A_INV * LOOP
    return vert, horiz


def kauffman_bracket(k: PretzelKnot) -> LaurentPolynomial:
    """Unnormalised bracket of the standard diagram, in the variable ``A``."""
    # Side by side: = is the identity and || . || closes a loop.
    vert, horiz = LaurentPolynomial(), LaurentPolynomial.constant(1)
    for t in k.twists:
        cv, ch = _twist_column(2 * t + 1)
        vert, horiz = vert * cv * LOOP + vert * ch + horiz * cv, horiz * ch
    # pretzel closure: || closes to one loop, = to two
    return vert + horiz * LOOP


def jones_polynomial(k: PretzelKnot) -> JonesPolynomial:
    n = 2 * k.twist_sum + 2 * k.genus + 1
    writhe = -n
    normalised = (-(A**3)) ** (-writhe) * kauffman_bracket(k)
    v = normalised.divide_exponents(-4)
    jones = JonesPolynomial(v)
    if jones.at_one() != 1:
        raise ArithmeticError(f"Jones polynomial of {k} has V(1) = {jones.at_one()}")
    return jones


def v3_from_jones(k: PretzelKnot) -> Fraction:
    """``-V'''(1)/36 - V''(1)/12``; raises :class:`NonIntegerV3` if the result is fractional."""
    jones = jones_polynomial(k)
    v = -Fraction(jones.derivative_at_one(3), 36) - Fraction(jones.derivative_at_one(2), 12)
    if v.denominator != 1:
        raise NonIntegerV3(f"Jones route gave v3 = {v} for {k}")
    return v


# --------------------------------------------------------------------------
# Aggregation


@dataclass(frozen=True)
class InvariantSet:
    knot: PretzelKnot
    conway: ConwayPolynomial
    a2: int
    a4: Optional[int]
    a6: Optional[int]
    v3: int
    routes: dict = field(default_factory=dict, compare=False)
    mirrored: bool = False

    def a(self, n: int) -> int:
        return self.conway.a(n)

    def mirror(self) -> "InvariantSet":
        """Invariants of the mirror image: ``a_2j`` unchanged, ``v_3`` negated."""
        return InvariantSet(
            self.knot, self.conway, self.a2, self.a4, self.a6, -self.v3,
            dict(self.routes), not self.mirrored,
        )

    def to_dict(self) -> dict:
        d = {
            "knot": str(self.knot),
            "conway": self.conway.coefficients,
            "a2": self.a2,
            "a4": self.a4,
            "a6": self.a6,
            "v3": self.v3,
            "routes": {k: list(v) for k, v in self.routes.items()},
        }
        if self.mirrored:
            d["mirror"] = True
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _agree(quantity: str, values: list[tuple[str, object]]) -> tuple[object, list[str]]:
    ref_route, ref = values[0]
    for route, v in values[1:]:
        if v != ref:
            raise RouteMismatch(quantity, ref_route, ref, route, v)
    return ref, [r for r, _ in values]


def full_invariants(k: PretzelKnot, *, jones: bool = True) -> InvariantSet:
    """All applicable routes, cross-checked.

    ``jones=False`` skips the bracket computation, which dominates the cost
    for large twist counts.
    """
    conway = conway_polynomial(k)
    g = k.genus
    a2_routes = [("determinant", conway.a(2)), ("closed-form", a2_closed(k))]
    a4_routes = [("determinant", conway.a(4))] if g >= 2 else []
    a6_routes = [("determinant", conway.a(6))] if g >= 3 else []
    if g == 2:
        a4_routes.append(("closed-form", a4_closed_genus2(k)))
    elif g == 3:
        c2, c4, c6 = a2_a4_a6_closed_genus3(k)
        a2_routes.append(("closed-form-genus3", c2))
        a4_routes.append(("closed-form", c4))
        a6_routes.append(("closed-form", c6))
    v3_routes = [("closed-form", v3_closed(k)), ("skein", v3_skein(k))]
    if jones:
        v3_routes.append(("jones", int(v3_from_jones(k))))

    routes = {}
    a2, routes["a2"] = _agree("a2", a2_routes)
    a4 = a6 = None
    if a4_routes:
        a4, routes["a4"] = _agree("a4", a4_routes)
    if a6_routes:
        a6, routes["a6"] = _agree("a6", a6_routes)
    v3, routes["v3"] = _agree("v3", v3_routes)
    return InvariantSet(k, conway, a2, a4, a6, v3, routes)
