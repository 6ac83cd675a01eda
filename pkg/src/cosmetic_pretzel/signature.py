"""Certified Tristram-Levine signatures for alternating odd pretzel knots.

On the unit circle ``t = exp(i theta)`` we have ``z^2 = 2 cos(theta) - 2``,
so the Alexander roots on the circle are the roots ``w`` of

    q(w) = 1 + a_2 w + a_4 w^2 + ... + a_{2g} w^g

inside ``(-4, 0)``.  Those are isolated exactly with Sturm sequences; angles
are then bounded by outward-rounded interval arithmetic, and every
floor or comparison that decides a signature value is certified.

Angles are often handled in *turns*, ``tau = theta / (2 pi)``, which makes
``floor(theta p / 2 pi) = floor(tau p)`` an exact rational test.
"""
from __future__ import annotations

import threading
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

import mpmath
import numpy as np
from mpmath import iv
from mpmath.libmp import to_rational

from .algebra import (
    IntPolynomial,
    RationalInterval,
    isolate_real_roots,
    poly_gcd,
    real_cyclotomic,
    refine_interval,
)
from .errors import NonSquarefree, OnRoot, PrecisionExhausted, WrongRootCount
from .invariants import conway_polynomial
from .pretzel import PretzelKnot, seifert_matrix

__all__ = [
    "SignatureProfile",
    "PSignature",
    "signature_profile",
    "signature_at_angle",
    "p_signature",
    "sigma_table",
    "sigma_ratio_table",
    "hermitian_signature_oracle",
    "cos_turns_enclosure",
]

W_DOMAIN = RationalInterval(-4, 0)
_BASE_WIDTH = Fraction(1, 2**64)
_MAX_REFINE_BITS = 4096


# --------------------------------------------------------------------------
# interval helpers


_IV_LOCK = threading.RLock()


@contextmanager
def _iv_prec(prec: int):
    # mpmath's interval context is process-global
    with _IV_LOCK:
        saved = iv.prec
        iv.prec = prec
        try:
            yield
        finally:
            iv.prec = saved


def _frac(x) -> Fraction:
    p, q = to_rational(x._mpf_)
    return Fraction(int(p), int(q))


def _iv_bounds(x) -> RationalInterval:
    a, b = x._mpi_
    pa, qa = to_rational(a)
    pb, qb = to_rational(b)
    return RationalInterval(Fraction(int(pa), int(qa)), Fraction(int(pb), int(qb)))


def _iv_of(x: Fraction):
    x = Fraction(x)
    return iv.mpf(x.numerator) / iv.mpf(x.denominator)


def cos_turns_enclosure(turns: Fraction, prec: int = 96) -> RationalInterval:
    """Rational interval containing ``cos(2 pi * turns)``."""
    with _iv_prec(prec):
        return _iv_bounds(iv.cos(2 * iv.pi * _iv_of(turns)))


def _turns_enclosure(w: RationalInterval, prec: int) -> RationalInterval:
    """Enclose ``acos(1 + w/2) / (2 pi)`` for ``w`` in the given interval.

    ``acos`` is not available as an interval function, so a floating guess
    is widened until interval ``cos`` proves it brackets the true value.
    """
    y_lo = 1 + w.lo / 2  # largest angle
    y_hi = 1 + w.hi / 2  # smallest angle
    with mpmath.workprec(prec + 20):
        guess_lo = mpmath.acos(mpmath.mpf(y_hi.numerator) / y_hi.denominator) / (2 * mpmath.pi)
        guess_hi = mpmath.acos(mpmath.mpf(y_lo.numerator) / y_lo.denominator) / (2 * mpmath.pi)
    eps = Fraction(1, 2 ** (prec - 8))
    lo, hi = _frac(guess_lo) - eps, _frac(guess_hi) + eps
    lo = max(lo, Fraction(0))
    hi = min(hi, Fraction(1, 2))
    for _ in range(64):
        ok_lo = lo == 0 or cos_turns_enclosure(lo, prec).lo > y_hi
        ok_hi = hi == Fraction(1, 2) or cos_turns_enclosure(hi, prec).hi < y_lo
        if ok_lo and ok_hi:
            return RationalInterval(lo, hi)
        eps *= 4
        if not ok_lo:
            lo = max(lo - eps, Fraction(0))
        if not ok_hi:
            hi = min(hi + eps, Fraction(1, 2))
    raise PrecisionExhausted(f"could not certify arccos enclosure for w in {w}")


def _bits_for(width: Fraction) -> int:
    return 64 + max(width.denominator.bit_length() - width.numerator.bit_length(), 0)


def _turns_to_radians(t: RationalInterval) -> RationalInterval:
    with _iv_prec(_bits_for(t.width) if t.width else 128):
        pi = _iv_bounds(iv.pi)
    return RationalInterval(2 * t.lo * pi.lo, 2 * t.hi * pi.hi)


# --------------------------------------------------------------------------
# profile


@dataclass(frozen=True)
class SignatureProfile:
    """Isolated Alexander-root angles ``theta_1 < ... < theta_g`` in ``(0, pi)``.

    ``w_intervals[m]`` isolates the root of ``wpoly`` that corresponds to
    ``theta_m`` (so ``w`` *decreases* as ``m`` grows); ``turns[m]`` encloses
    ``theta_m / (2 pi)`` and ``theta[m]`` encloses ``theta_m`` in radians.
    The profile is never mutated; tighter enclosures are computed on demand
    and returned, not stored.
    """

    knot: PretzelKnot
    genus: int
    wpoly: IntPolynomial
    w_intervals: tuple[RationalInterval, ...]
    turns: tuple[RationalInterval, ...]
    theta: tuple[RationalInterval, ...]

    def tighter_turns(self, m: int, width: Fraction) -> RationalInterval:
        """Enclosure of ``theta_m / 2pi`` of width roughly ``width`` or less."""
        width = Fraction(width)
        if self.turns[m].width <= width:
            return self.turns[m]
        w_width = width
        while True:
            w_iv = refine_interval(self.wpoly, self.w_intervals[m], w_width)
            t = _turns_enclosure(w_iv, _bits_for(width))
            if t.width <= width or w_width < Fraction(1, 2**_MAX_REFINE_BITS):
                return t
            w_width /= 16

    def signature_just_below_pi(self) -> int:
        return 2 * self.genus

    def asymptotic_ratio_bounds(self, width: Fraction = Fraction(1, 10**12)) -> RationalInterval:
        """Enclosure of ``L = sum_m 2 (1 - theta_m / pi)``, the limit of ``sigma(K,p)/p``."""
        each = Fraction(width) / (4 * max(self.genus, 1))
        lo = hi = Fraction(0)
        for m in range(self.genus):
            t = self.tighter_turns(m, each)
            lo += 2 * (1 - 2 * t.hi)
            hi += 2 * (1 - 2 * t.lo)
        return RationalInterval(lo, hi)


def signature_profile(k: PretzelKnot) -> SignatureProfile:
    if k.genus < 1:
        raise ValueError("the unknot has an identically zero signature function")
    return _profile_cached(k)


@lru_cache(maxsize=4096)
def _profile_cached(k: PretzelKnot) -> SignatureProfile:
    q = conway_polynomial(k).w_polynomial()
    try:
        roots = isolate_real_roots(q, W_DOMAIN)
    except NonSquarefree as exc:
        raise NonSquarefree(f"signature profile of {k} unavailable: {exc}") from exc
    if len(roots) != k.genus:
        raise WrongRootCount(f"{k}: expected {k.genus} roots of {q.format('w')} in (-4, 0), found {len(roots)}")
    roots = [refine_interval(q, r, _BASE_WIDTH) for r in roots]
    roots.sort(key=lambda r: r.lo, reverse=True)  # increasing angle
    turns = tuple(_turns_enclosure(r, 128) for r in roots)
    theta = tuple(_turns_to_radians(t) for t in turns)
    for a, b in zip(turns, turns[1:]):
        if a.overlaps(b):
            raise PrecisionExhausted(f"{k}: angle enclosures {a} and {b} overlap")
    return SignatureProfile(k, k.genus, q, tuple(roots), turns, theta)


# --------------------------------------------------------------------------
# exact coincidence tests


def _root_of_unity_hits(profile: SignatureProfile, m: int, turns: Fraction) -> bool:
    """True iff ``theta_m / 2pi`` equals the rational ``turns`` exactly."""
    turns = Fraction(turns)
    n = turns.denominator
    # w = 2 cos(2 pi j / n) - 2 has minimal polynomial Psi_n(w + 2)
    minpoly = real_cyclotomic(n).compose_linear(1, 2)
    if poly_gcd(profile.wpoly, minpoly).degree < 1:
        return False
    # every conjugate is a root of q; check that this one is the m-th root
    target = profile.w_intervals[m]
    if n in (1, 2, 3, 4, 6):
        c = {1: 0, 2: -4, 3: -3, 4: -2, 6: -1}[n]
        return c in target and profile.wpoly(c) == 0
    prec = 96
    while prec <= _MAX_REFINE_BITS:
        c = cos_turns_enclosure(turns, prec)
        cw = RationalInterval(2 * c.lo - 2, 2 * c.hi - 2)
        if cw in target and cw.lo > target.lo and cw.hi < target.hi:
            return True
        if not cw.overlaps(target):
            return False
        prec *= 2
        target = refine_interval(profile.wpoly, target, cw.width)
    raise PrecisionExhausted("could not locate a cyclotomic root")


def _floor_turns_times(profile: SignatureProfile, m: int, p: int) -> tuple[int, bool]:
    """``(floor(tau_m * p), exact)`` where ``exact`` means ``tau_m * p`` is an integer."""
    t = profile.turns[m]
    width = t.width
    checked = False
    while True:
        lo, hi = t.lo * p, t.hi * p
        f_lo, f_hi = lo.numerator // lo.denominator, hi.numerator // hi.denominator
        if f_lo == f_hi and hi != f_hi:
            return f_lo, False
        if f_lo == f_hi and lo == hi:
            return f_lo, True  # point enclosure, only when w is rational
        candidate = f_hi if hi.denominator == 1 or f_hi > f_lo else f_lo
        if not checked:
            checked = True
            if _root_of_unity_hits(profile, m, Fraction(candidate, p)):
                return candidate, True
        if width < Fraction(1, 2**_MAX_REFINE_BITS):
            raise PrecisionExhausted(f"cannot separate theta_{m + 1} of {profile.knot} from 2 pi {candidate}/{p}")
        width /= 2**32
        t = profile.tighter_turns(m, width)


# --------------------------------------------------------------------------
# signature values


AngleQuery = Union[int, Fraction, RationalInterval]


def signature_at_angle(profile: SignatureProfile, angle: AngleQuery) -> int:
    """``sigma_omega`` for ``omega = exp(i * angle)``.

    ``angle`` is either an exact rational multiple of pi (an ``int`` or
    ``Fraction`` ``r`` meaning ``r * pi``) or a :class:`RationalInterval` in
    radians inside ``[0, pi]``.  Raises :class:`OnRoot` if the angle is an
    Alexander root or the interval cannot be separated from one.
    """
    count = 0
    if isinstance(angle, RationalInterval):
        for m in range(profile.genus):
            th = profile.theta[m]
            while th.overlaps(angle):
                if th.width < max(angle.width / 4, Fraction(1, 2**_MAX_REFINE_BITS)):
                    raise OnRoot(f"angle {angle} straddles theta_{m + 1} of {profile.knot}")
                th = _turns_to_radians(profile.tighter_turns(m, th.width / 2**16))
            count += th.hi < angle.lo
        return 2 * count

    r = Fraction(angle) % 2
    if r > 1:
        r = 2 - r
    target = r / 2  # in turns, inside [0, 1/2]
    for m in range(profile.genus):
        t = profile.turns[m]
        width = t.width
        checked = False
        while t.lo <= target <= t.hi:
            if not checked:
                checked = True
                if _root_of_unity_hits(profile, m, target):
                    raise OnRoot(f"angle {r}*pi is the Alexander root theta_{m + 1} of {profile.knot}")
            width /= 2**32
            t = profile.tighter_turns(m, width)
        count += t.hi < target
    return 2 * count


@dataclass(frozen=True)
class PSignature:
    p: int
    value: int
    coincidence_flag: bool

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.value, self.p)


def p_signature(k: PretzelKnot, p: int) -> PSignature:
    """``sigma(K, p)``: the signature function summed over the p-th roots of unity.

    Root ``theta_m`` contributes ``2 (p - 2 floor(theta_m p / 2pi) - 1)``.  If a
    root of unity lands exactly on ``theta_m`` the signature there is the
    average of the two one-sided limits, which gives ``2 (p - 2 theta_m p / 2pi)``.
    """
    if p < 1:
        raise ValueError("p must be a positive integer")
    if k.genus == 0:
        return PSignature(p, 0, False)
    profile = signature_profile(k)
    total = 0
    hit = False
    for m in range(profile.genus):
        f, exact = _floor_turns_times(profile, m, p)
        if exact:
            hit = True
            total += 2 * (p - 2 * f)
        else:
            total += 2 * (p - 2 * f - 1)
    return PSignature(p, total, hit)


def sigma_table(k: PretzelKnot, pmax: int) -> list[PSignature]:
    if pmax < 1:
        raise ValueError("pmax must be at least 1")
    return [p_signature(k, p) for p in range(1, pmax + 1)]


def sigma_ratio_table(k: PretzelKnot, pmax: int) -> list[tuple[int, Fraction]]:
    return [(s.p, s.ratio) for s in sigma_table(k, pmax)]


# --------------------------------------------------------------------------
# numeric oracle


def hermitian_signature_oracle(k: PretzelKnot, angle, *, tol: float = 1e-9, max_dps: int = 200) -> int:
    """Signature of ``(1 - w) A + (1 - conj w) A^T`` with ``w = exp(i * angle)``.

    Double precision first; if the smallest eigenvalue is too close to zero,
    retry in mpmath with growing precision and give up with
    :class:`PrecisionExhausted`.  Independent of the Sturm machinery.
    """
    if k.genus == 0:
        return 0
    a = np.array(seifert_matrix(k), dtype=float)
    omega = complex(mpmath.cos(angle), mpmath.sin(angle))
    m = (1 - omega) * a + (1 - omega.conjugate()) * a.T
    eig = np.linalg.eigvalsh(m)
    scale = float(np.abs(eig).max())
    if scale == 0.0:
        return 0  # omega = 1: the form vanishes identically
    if np.abs(eig).min() > tol * scale:
        return int(np.sum(eig > 0) - np.sum(eig < 0))

    dps = 30
    while dps <= max_dps:
        with mpmath.workdps(dps):
            om = mpmath.expj(mpmath.mpf(angle))
            A = mpmath.matrix(seifert_matrix(k))
            M = (1 - om) * A + (1 - mpmath.conj(om)) * A.T
            ev = mpmath.eighe(M, eigvals_only=True)
            top = max(abs(e) for e in ev)
            guard = mpmath.mpf(10) ** (-(dps // 2)) * top
            if top == 0:
                return 0
            if min(abs(e) for e in ev) > guard:
                return int(sum(1 for e in ev if e > 0) - sum(1 for e in ev if e < 0))
        dps *= 2
    raise PrecisionExhausted(f"angle {angle} is numerically on an Alexander root of {k}")
