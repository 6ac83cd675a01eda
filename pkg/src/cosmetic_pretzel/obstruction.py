"""Obstructions to chirally cosmetic surgeries on alternating odd pretzel knots.

If ``S^3_{p/q}(K)`` and ``S^3_{p/q'}(K)`` are orientation-reversingly
homeomorphic then

* ``sigma(K, p) / p = F := -8 a_2 v_3 / (7 a_2^2 - a_2 - 10 a_4)``, and
* ``q + q' = -sigma(K, p) / (4 a_2)`` is an integer.

:func:`decide` chains the cheap consequences of these identities (integer
inequalities in ``a_2, a_4, v_3``) before the certified p-signature search,
and returns a :class:`Verdict` whose reasons can be re-checked from the
numbers stored in them.
"""
from __future__ import annotations

import json
import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor
from typing import Iterable, Optional

from .errors import DegenerateDenominator, TheoremViolation
from .invariants import InvariantSet, full_invariants
from .pretzel import PretzelKnot, canonical_form, canonical_knots
from .signature import p_signature, signature_profile

__all__ = [
    "StrongRatio",
    "Reason",
    "Verdict",
    "NO_CCS",
    "INCONCLUSIVE",
    "KNOWN_CHIRAL",
    "strong_ratio",
    "ratio_window_check",
    "weak_checks",
    "gen_threshold",
    "min_twist_sum_for_threshold",
    "cass_slope_sum",
    "decide",
    "verify_theorems",
    "TheoremReport",
]

log = logging.getLogger(__name__)

NO_CCS = "NoCCS"
INCONCLUSIVE = "Inconclusive"
KNOWN_CHIRAL = "KnownChiral"


def _fmt(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Reason:
    """One applied criterion: ``lhs <relation> rhs`` with exact values.

    ``relation`` is one of ``>``, ``>=``, ``<``, ``<=``, ``!=``, ``==`` or
    ``not-integer`` (which ignores ``rhs``).  :meth:`holds` recomputes the
    comparison from the stored numbers; ``fires`` is what the pipeline saw.
    """

    stage: int
    criterion: str
    lhs: Fraction
    relation: str
    rhs: Optional[Fraction]
    fires: bool
    statement: str = ""
    data: dict = field(default_factory=dict, compare=False)

    def holds(self) -> bool:
        a, b = Fraction(self.lhs), None if self.rhs is None else Fraction(self.rhs)
        if self.relation == "not-integer":
            return a.denominator != 1
        return {
            ">": lambda: a > b,
            ">=": lambda: a >= b,
            "<": lambda: a < b,
            "<=": lambda: a <= b,
            "!=": lambda: a != b,
            "==": lambda: a == b,
        }[self.relation]()

    def to_dict(self) -> dict:
        return {
            "stage": self.stage,
            "criterion": self.criterion,
            "statement": self.statement,
            "lhs": _fmt(self.lhs),
            "relation": self.relation,
            "rhs": None if self.rhs is None else _fmt(self.rhs),
            "fires": self.fires,
            "data": _jsonable(self.data),
        }


def _decimal_bound(x: Fraction, *, up: bool, places: int = 6) -> str:
    # rounded outward, so the printed decimal is still a valid bound
    scale = 10**places
    n = ceil(x * scale) if up else floor(x * scale)
    sign = "-" if n < 0 else ""
    q, r = divmod(abs(n), scale)
    return f"{sign}{q}.{r:0{places}d}"


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return _fmt(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


@dataclass(frozen=True)
class Verdict:
    knot: PretzelKnot
    outcome: str
    reasons: tuple[Reason, ...]
    survivors: tuple[tuple[int, Fraction], ...] = ()

    @property
    def decisive(self) -> list[Reason]:
        return [r for r in self.reasons if r.fires]

    def recheck(self) -> bool:
        """Every reason's recorded outcome matches a fresh evaluation, and a
        NoCCS verdict has at least one firing reason."""
        if any(r.holds() != r.fires for r in self.reasons):
            return False
        if self.outcome == NO_CCS:
            return bool(self.decisive)
        return True

    def to_dict(self) -> dict:
        return {
            "knot": str(self.knot),
            "outcome": self.outcome,
            "reasons": [r.to_dict() for r in self.reasons],
            "survivors": [{"p": p, "q_plus_qprime": _fmt(s)} for p, s in self.survivors],
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


# --------------------------------------------------------------------------
# individual criteria


@dataclass(frozen=True)
class StrongRatio:
    """``F = -8 a_2 v_3 / D`` with ``D = 7 a_2^2 - a_2 - 10 a_4``."""

    numerator: int
    denominator: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    @property
    def sign(self) -> int:
        return (self.denominator > 0) - (self.denominator < 0)

    def __str__(self) -> str:
        return _fmt(self.value)


def _inv(k: PretzelKnot, inv: Optional[InvariantSet]) -> InvariantSet:
    return inv if inv is not None else full_invariants(k)


def _a4(inv: InvariantSet) -> int:
    return inv.a4 if inv.a4 is not None else 0


def strong_ratio(k: PretzelKnot, inv: Optional[InvariantSet] = None) -> StrongRatio:
    if k.genus < 1:
        raise ValueError("strong ratio needs genus >= 1")
    inv = _inv(k, inv)
    d = 7 * inv.a2**2 - inv.a2 - 10 * _a4(inv)
    if d == 0:
        raise DegenerateDenominator(f"7 a2^2 - a2 - 10 a4 vanishes for {k}")
    return StrongRatio(-8 * inv.a2 * inv.v3, d)


def ratio_window_check(k: PretzelKnot, inv: Optional[InvariantSet] = None) -> Reason:
    """Fires (obstructs) when ``F`` lies outside ``(0, 2g]``.

    Written as ``(4/g) a_2 |v_3| > D``, which for genus 2 and 3 reads
    ``2 a_2 |v_3| > D`` and ``(4/3) a_2 |v_3| > D``.
    """
    inv = _inv(k, inv)
    g = k.genus
    d = 7 * inv.a2**2 - inv.a2 - 10 * _a4(inv)
    lhs = Fraction(4, g) * inv.a2 * abs(inv.v3)
    if d == 0:
        return Reason(2, "ratio-window", lhs, ">", Fraction(d), False,
                      "denominator vanishes; criterion inapplicable", {"D": d})
    f = Fraction(-8 * inv.a2 * inv.v3, d)
    if f <= 0:
        # F outside the window on the left; record as F <= 0
        return Reason(2, "ratio-window", Fraction(0), ">=", f, True,
                      f"F = {_fmt(f)} <= 0", {"F": f, "D": d, "g": g})
    fires = lhs > d
    rel = ">" if fires else "<="
    return Reason(2, "ratio-window", lhs, ">", Fraction(d), fires,
                  f"{_fmt(lhs)} {rel} {d}", {"F": f, "D": d, "g": g, "slack": d - lhs})


def weak_checks(k: PretzelKnot, inv: Optional[InvariantSet] = None) -> list[Reason]:
    """Integer inequalities in ``a_2`` and ``v_3`` that obstruct on their own."""
    inv = _inv(k, inv)
    g, a2, v3 = k.genus, inv.a2, abs(inv.v3)
    out = []
    if g == 2:
        lhs, rhs = 2 * v3, 7 * a2 - 4
        out.append(Reason(1, "genus2-weak", Fraction(lhs), ">=", Fraction(rhs), lhs >= rhs,
                          f"2|v3| = {lhs} {'>=' if lhs >= rhs else '<'} 7 a2 - 4 = {rhs}"))
    if g == 3:
        lhs, rhs = 4 * v3, 21 * a2 - 28
        out.append(Reason(1, "genus3-weak", Fraction(lhs), ">", Fraction(rhs), lhs > rhs,
                          f"4|v3| = {lhs} {'>' if lhs > rhs else '<='} 21 a2 - 28 = {rhs}"))
    if g >= 1:
        lhs, rhs = 4 * v3, 7 * g * a2
        out.append(Reason(1, "negative-knot-weak", Fraction(lhs), ">=", Fraction(rhs), lhs >= rhs,
                          f"4|v3| = {lhs} {'>=' if lhs >= rhs else '<'} 7 g a2 = {rhs}"))
    return out


def gen_threshold(k: PretzelKnot) -> Reason:
    """``sum k_i >= g (9 + sqrt 237) / 12``, decided with integers only."""
    g, s1 = k.genus, k.twist_sum
    t = 12 * s1 - 9 * g
    signed_sq = t * abs(t)
    rhs = 237 * g * g
    fires = signed_sq >= rhs
    if t < 0:
        statement = f"12 s1 - 9 g = {t} < 0"
    else:
        statement = f"12 s1 - 9 g = {t}, {t}^2 = {t * t} {'>=' if fires else '<'} 237 g^2 = {rhs}"
    return Reason(1, "twist-sum-threshold", Fraction(signed_sq), ">=", Fraction(rhs), fires,
                  statement, {"s1": s1, "g": g})


def min_twist_sum_for_threshold(g: int) -> int:
    s = 0
    while True:
        t = 12 * s - 9 * g
        if t >= 0 and t * t >= 237 * g * g:
            return s
        s += 1


def cass_slope_sum(k: PretzelKnot, p: int, inv: Optional[InvariantSet] = None) -> Fraction:
    """``q + q' = -sigma(K, p) / (4 a_2)``."""
    inv = _inv(k, inv)
    return Fraction(-p_signature(k, p).value, 4 * inv.a2)


# --------------------------------------------------------------------------
# the pipeline


_MIN_L_WIDTH = Fraction(1, 10**60)


def decide(k: PretzelKnot, *, max_candidates: int = 200_000) -> Verdict:
    """Run every obstruction in order and report what survives.

    0. all twists zero: the (-2, 2g+1) torus knot, known to admit them;
    1. weak integer inequalities and the twist-sum threshold;
    2. ``F`` must lie in ``(0, 2g]``;
    3. ``p`` must be a multiple of ``denom(F)``; ``|sigma(K,p)/p - L| < 2g/p``
       leaves finitely many, each checked against ``F`` exactly;
    4. ``q + q'`` must be an integer for the remaining ``p``.
    """
    k = canonical_form(k)
    if k.genus < 1:
        raise ValueError("decide needs genus >= 1")
    if k.is_torus():
        return Verdict(k, KNOWN_CHIRAL, (
            Reason(0, "torus-knot", Fraction(k.twist_sum), "==", Fraction(0), True,
                   f"{k} is the (-2,{2 * k.genus + 1}) torus knot"),
        ))
    inv = full_invariants(k, jones=k.twist_sum <= 60)
    reasons: list[Reason] = []

    reasons.extend(weak_checks(k, inv))
    reasons.append(gen_threshold(k))
    if any(r.fires for r in reasons):
        return Verdict(k, NO_CCS, tuple(reasons))

    window = ratio_window_check(k, inv)
    reasons.append(window)
    if window.fires:
        return Verdict(k, NO_CCS, tuple(reasons))
    try:
        sr = strong_ratio(k, inv)
    except DegenerateDenominator as exc:
        reasons.append(Reason(2, "degenerate-denominator", Fraction(0), "==", Fraction(0), False, str(exc)))
        return Verdict(k, INCONCLUSIVE, tuple(reasons))
    f = sr.value
    g = k.genus
    den = f.denominator

    profile = signature_profile(k)
    width = Fraction(1, 10**12)
    while True:
        bounds = profile.asymptotic_ratio_bounds(width)
        if f > bounds.hi or f < bounds.lo or width < _MIN_L_WIDTH:
            break
        width /= 10**8
    if f > bounds.hi:
        p_limit = ceil(2 * g / (f - bounds.hi))
        reasons.append(Reason(
            3, "signature-asymptotics", f, ">=", bounds.hi + Fraction(2 * g, p_limit), True,
            f"sigma(K,p)/p < L + {2 * g}/p with L < {_decimal_bound(bounds.hi, up=True)}, "
            f"so sigma(K,p)/p < F = {_fmt(f)} for p >= {p_limit}",
            {"F": f, "L_upper": bounds.hi, "p_limit": p_limit, "denominator": den}))
    elif f < bounds.lo:
        p_limit = floor(2 * g / (bounds.lo - f)) + 1
        reasons.append(Reason(
            3, "signature-asymptotics", bounds.lo - Fraction(2 * g, p_limit), ">", f, True,
            f"sigma(K,p)/p > L - {2 * g}/p with L > {_decimal_bound(bounds.lo, up=False)}, "
            f"so sigma(K,p)/p > F = {_fmt(f)} for p >= {p_limit}",
            {"F": f, "L_lower": bounds.lo, "p_limit": p_limit, "denominator": den}))
    else:
        reasons.append(Reason(3, "signature-asymptotics", f, "!=", f, False,
                              f"F = {_fmt(f)} cannot be separated from the limit of sigma(K,p)/p",
                              {"L_lower": bounds.lo, "L_upper": bounds.hi}))
        return Verdict(k, INCONCLUSIVE, tuple(reasons))

    candidates = list(range(den, p_limit, den))
    if len(candidates) > max_candidates:
        reasons.append(Reason(3, "candidate-budget", Fraction(len(candidates)), "<=",
                              Fraction(max_candidates), False, "too many p to check exhaustively"))
        return Verdict(k, INCONCLUSIVE, tuple(reasons))

    matching = []
    for p in candidates:
        sig = p_signature(k, p)
        if p >= 2 and sig.value <= 0:
            raise TheoremViolation(f"sigma({k}, {p}) = {sig.value} is not positive")
        ratio = sig.ratio
        if ratio != f:
            reasons.append(Reason(3, "p-signature-mismatch", ratio, "!=", f, True,
                                  f"sigma(K,{p})/{p} = {_fmt(ratio)} != F",
                                  {"p": p, "sigma": sig.value, "coincidence": sig.coincidence_flag}))
        else:
            matching.append((p, sig.value))

    survivors = []
    for p, sigma in matching:
        qq = Fraction(-sigma, 4 * inv.a2)
        fires = qq.denominator != 1
        reasons.append(Reason(4, "slope-integrality", qq, "not-integer", None, fires,
                              f"p = {p}: q + q' = -{sigma}/(4*{inv.a2}) = {_fmt(qq)}"
                              + (" is not an integer" if fires else " is an integer"),
                              {"p": p, "sigma": sigma, "a2": inv.a2}))
        if not fires:
            survivors.append((p, qq))

    if survivors:
        return Verdict(k, INCONCLUSIVE, tuple(reasons), tuple(survivors))
    if not any(r.fires for r in reasons):
        raise AssertionError("NoCCS without a firing reason")
    return Verdict(k, NO_CCS, tuple(reasons))


# --------------------------------------------------------------------------
# theorem-scale verification


@dataclass
class TheoremReport:
    verdicts: list[Verdict] = field(default_factory=list)
    threshold_checks: list[dict] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        counts: dict[str, int] = {}
        for v in self.verdicts:
            counts[v.outcome] = counts.get(v.outcome, 0) + 1
        return {
            "ok": self.ok,
            "counts": dict(sorted(counts.items())),
            "verdicts": [v.to_dict() for v in sorted(self.verdicts, key=lambda v: (len(v.knot.twists), v.knot.twists))],
            "threshold_checks": self.threshold_checks,
            "violations": self.violations,
        }


def _decide_many(knots: list[PretzelKnot], jobs: int) -> list[Verdict]:
    if jobs > 1 and len(knots) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(decide, knots, chunksize=4))
    return [decide(k) for k in knots]


def verify_theorems(
    genus_sums: Iterable[tuple[int, int]] = ((2, 6), (3, 5)),
    *,
    threshold_genera: Iterable[int] = range(1, 9),
    threshold_samples: int = 200,
    seed: int = 0,
    jobs: int = 1,
    raise_on_violation: bool = True,
) -> TheoremReport:
    """Decide every canonical knot with ``0 < sum k_i <= max_sum`` for each
    ``(genus, max_sum)``, check the torus knots come back KnownChiral, and for
    each genus in ``threshold_genera`` check that random knots at the minimal
    threshold twist sum satisfy ``4|v3| >= 7 g a2``."""
    report = TheoremReport()
    knots: list[PretzelKnot] = []
    for genus, max_sum in genus_sums:
        knots.append(PretzelKnot((0,) * (2 * genus + 1)))
        knots.extend(canonical_knots(genus, max_sum, min_sum=1))
    report.verdicts = _decide_many(knots, jobs)
    for v in report.verdicts:
        expected = KNOWN_CHIRAL if v.knot.is_torus() else NO_CCS
        if v.outcome != expected:
            report.violations.append(f"{v.knot}: expected {expected}, got {v.outcome}")
        elif not v.recheck():
            report.violations.append(f"{v.knot}: reason chain does not re-check")

    from .invariants import a2_closed, v3_closed

    rng = random.Random(seed)
    for g in threshold_genera:
        s1 = min_twist_sum_for_threshold(g)
        worst = None
        for _ in range(threshold_samples):
            k = PretzelKnot(_random_composition(rng, s1, 2 * g + 1))
            slack = 4 * abs(v3_closed(k)) - 7 * g * a2_closed(k)
            if not gen_threshold(k).fires:
                report.violations.append(f"{k}: twist sum {s1} should pass the threshold")
            if slack < 0:
                report.violations.append(f"{k}: 4|v3| - 7 g a2 = {slack} < 0")
            worst = slack if worst is None else min(worst, slack)
        report.threshold_checks.append({"genus": g, "twist_sum": s1, "samples": threshold_samples, "min_slack": worst})

    if raise_on_violation and report.violations:
        raise TheoremViolation("; ".join(report.violations))
    return report


def _random_composition(rng: random.Random, total: int, parts: int) -> tuple[int, ...]:
    # uniform over weak compositions via stars and bars
    bars = sorted(rng.sample(range(total + parts - 1), parts - 1))
    out, prev = [], -1
    for b in bars + [total + parts - 1]:
        out.append(b - prev - 1)
        prev = b
    return tuple(out)
