"""Minimal polynomials of ``2 cos(2 pi / n)``, used to detect exact
coincidences between roots of unity and Alexander roots."""
from __future__ import annotations

from functools import lru_cache

from .polynomial import IntPolynomial

__all__ = ["cyclotomic", "real_cyclotomic"]


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPolynomial:
    """The n-th cyclotomic polynomial, from ``x^n - 1 = prod_{d | n} Phi_d``."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    p = IntPolynomial([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            p = p.divmod_exact(cyclotomic(d))
    return p


@lru_cache(maxsize=None)
def real_cyclotomic(n: int) -> IntPolynomial:
    """Minimal polynomial ``Psi_n`` of ``2 cos(2 pi / n)`` over Q.

    For ``n >= 3``, ``Phi_n(t) = t^(phi(n)/2) * Psi_n(t + 1/t)``; the
    palindromic ``Phi_n`` is peeled from the top with powers of ``t + 1/t``.
    """
    if n == 1:
        return IntPolynomial([-2, 1])
    if n == 2:
        return IntPolynomial([2, 1])
    phi = cyclotomic(n)
    half = phi.degree // 2
    # coefficients indexed by exponent offset from the centre: -half..half
    rest = {i - half: c for i, c in enumerate(phi.coeffs) if c}
    out = [0] * (half + 1)
    binom_cache: dict[int, IntPolynomial] = {}
    for k in range(half, -1, -1):
        c = rest.get(k, 0)
        out[k] = c
        if c == 0:
            continue
        # subtract c * (t + 1/t)^k expanded as a Laurent polynomial
        if k not in binom_cache:
            binom_cache[k] = IntPolynomial([1, 1]) ** k
        for i, b in enumerate(binom_cache[k].coeffs):
            e = 2 * i - k
            rest[e] = rest.get(e, 0) - c * b
    if any(rest.values()):
        raise ArithmeticError(f"Phi_{n} is not palindromic")
    return IntPolynomial(out)
