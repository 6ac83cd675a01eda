"""Certified real-root isolation with Sturm sequences over the rationals."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..errors import NonSquarefree
from .polynomial import IntPolynomial, poly_gcd

__all__ = [
    "RationalInterval",
    "sturm_sequence",
    "sturm_count",
    "isolate_real_roots",
    "refine_interval",
]

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class RationalInterval:
    """Closed interval ``[lo, hi]`` with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = Fraction(self.lo), Fraction(self.hi)
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def point(cls, x: Rational) -> "RationalInterval":
        return cls(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def __contains__(self, x) -> bool:
        if isinstance(x, RationalInterval):
            return self.lo <= x.lo and x.hi <= self.hi
        return self.lo <= x <= self.hi

    def overlaps(self, other: "RationalInterval") -> bool:
        return not (self.hi < other.lo or other.hi < self.lo)

    def __repr__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


def sturm_sequence(p: IntPolynomial) -> list[IntPolynomial]:
    """Sturm chain ``p, p', -rem(p, p'), ...`` with positive rescaling at each step."""
    seq = [p.primitive(), p.derivative().primitive()]
    if seq[1].is_zero():
        return seq[:1]
    while True:
        r = seq[-2].rem_primitive(seq[-1])
        if r.is_zero():
            return seq
        seq.append(-r)


def _sign_changes(seq: list[IntPolynomial], x: Rational) -> int:
    changes = 0
    last = 0
    for q in seq:
        s = q.sign_at(x)
        if s == 0:
            continue
        if last and s != last:
            changes += 1
        last = s
    return changes


def sturm_count(p: IntPolynomial, lo: Rational, hi: Rational, seq=None) -> int:
    """Number of distinct real roots of ``p`` in the half-open interval ``(lo, hi]``."""
    if seq is None:
        seq = sturm_sequence(p)
    return _sign_changes(seq, lo) - _sign_changes(seq, hi)


def _open_count(p, seq, lo, hi) -> int:
    n = sturm_count(p, lo, hi, seq)
    if p(hi) == 0:
        n -= 1
    return n


def isolate_real_roots(p: IntPolynomial, domain: RationalInterval) -> list[RationalInterval]:
    """Disjoint intervals inside the open ``domain``, each holding exactly one root of ``p``.

    Rational roots hit during bisection come back as point intervals.
    Raises :class:`NonSquarefree` if ``gcd(p, p')`` has a root in the domain.
    """
    if p.is_zero():
        raise NonSquarefree("the zero polynomial has every number as a root")
    g = poly_gcd(p, p.derivative())
    if g.degree > 0 and _open_count(g, sturm_sequence(g), domain.lo, domain.hi) > 0:
        raise NonSquarefree(f"{p} has a repeated root in {domain}")

    seq = sturm_sequence(p)
    out: list[RationalInterval] = []
    stack = [(domain.lo, domain.hi)]
    while stack:
        lo, hi = stack.pop()
        n = _open_count(p, seq, lo, hi)
        if n == 0:
            continue
        if n == 1:
            out.append(RationalInterval(lo, hi))
            continue
        mid = (lo + hi) / 2
        if p(mid) == 0:
            out.append(RationalInterval.point(mid))
        stack.append((mid, hi))
        stack.append((lo, mid))
    out.sort(key=lambda iv: iv.lo)
    out = [_tighten_open(p, iv) for iv in out]
    # neighbours may share a non-root endpoint; halve both until they separate
    for i in range(len(out) - 1):
        while out[i].hi >= out[i + 1].lo:
            out[i] = refine_interval(p, out[i], out[i].width / 2)
            out[i + 1] = refine_interval(p, out[i + 1], out[i + 1].width / 2)
    return out


def _tighten_open(p: IntPolynomial, iv: RationalInterval) -> RationalInterval:
    # Open (lo, hi) isolating intervals whose endpoints are not roots are already
    # closed isolating intervals; otherwise bisect once to move off the root.
    if iv.is_point:
        return iv
    seq = sturm_sequence(p)
    lo, hi = iv.lo, iv.hi
    if p(lo) == 0:
        step = (hi - lo) / 2
        while p(lo + step) == 0 or _open_count(p, seq, lo, lo + step) > 0:
            step /= 2
        lo = lo + step
    if p(hi) == 0:
        step = (hi - lo) / 2
        while p(hi - step) == 0 or _open_count(p, seq, hi - step, hi) > 0:
            step /= 2
        hi = hi - step
    return RationalInterval(lo, hi)


def refine_interval(p: IntPolynomial, iv: RationalInterval, width: Rational) -> RationalInterval:
    """Bisect ``iv`` until it is at most ``width`` wide, keeping its single root inside."""
    width = Fraction(width)
    if width < 0:
        raise ValueError("negative target width")
    lo, hi = iv.lo, iv.hi
    if lo == hi:
        return iv
    if p(lo) == 0:
        return RationalInterval.point(lo)
    if p(hi) == 0:
        return RationalInterval.point(hi)
    slo = p.sign_at(lo)
    if slo == p.sign_at(hi):
        # endpoints with equal sign: fall back to Sturm counting on each half
        return _refine_sturm(p, iv, width)
    while hi - lo > width:
        mid = (lo + hi) / 2
        s = p.sign_at(mid)
        if s == 0:
            return RationalInterval.point(mid)
        if s == slo:
            lo = mid
        else:
            hi = mid
    return RationalInterval(lo, hi)


def _refine_sturm(p, iv, width):
    seq = sturm_sequence(p)
    lo, hi = iv.lo, iv.hi
    while hi - lo > width:
        mid = (lo + hi) / 2
        if p(mid) == 0:
            return RationalInterval.point(mid)
        if _open_count(p, seq, lo, mid) == 1:
            hi = mid
        else:
            lo = mid
    return RationalInterval(lo, hi)
