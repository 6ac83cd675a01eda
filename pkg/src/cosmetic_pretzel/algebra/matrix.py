"""Fraction-free determinants of polynomial matrices."""
from __future__ import annotations

from typing import Sequence

from .polynomial import IntPolynomial, LaurentPolynomial

__all__ = ["bareiss_det", "bareiss_det_poly", "cofactor_det"]


def _check_square(m: Sequence[Sequence]) -> int:
    n = len(m)
    for row in m:
        if len(row) != n:
            raise ValueError("determinant of a non-square matrix")
    return n


def bareiss_det_poly(m: Sequence[Sequence[IntPolynomial]]) -> IntPolynomial:
    """Bareiss elimination over Z[x]. Every division is exact by Sylvester's identity."""
    n = _check_square(m)
    if n == 0:
        return IntPolynomial.constant(1)
    a = [[IntPolynomial._coerce(e) for e in row] for row in m]
    sign = 1
    prev = IntPolynomial.constant(1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if swap is None:
                return IntPolynomial()
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (pivot * a[i][j] - a[i][k] * a[k][j]).divmod_exact(prev)
        prev = pivot
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def bareiss_det(m: Sequence[Sequence[LaurentPolynomial]]) -> LaurentPolynomial:
    """Determinant of a square matrix of Laurent polynomials.

    Entries are shifted by a common power of ``x`` so that the whole matrix is
    polynomial, the determinant is taken by Bareiss elimination over ``Z[x]``,
    and the shift (``n`` times) is undone at the end.
    """
    n = _check_square(m)
    if n == 0:
        return LaurentPolynomial.constant(1)
    entries = [[LaurentPolynomial._coerce(e) for e in row] for row in m]
    lowest = min((e.min_exponent for row in entries for e in row if not e.is_zero()), default=0)
    shift = -lowest
    polys = []
    for row in entries:
        prow = []
        for e in row:
            p, s = e.shift(shift).to_poly()
            prow.append(p * IntPolynomial.monomial(s) if s else p)
        polys.append(prow)
    det = bareiss_det_poly(polys)
    return LaurentPolynomial.from_poly(det, -n * shift)


def cofactor_det(m):
    """Laplace expansion along the first row. Exponential; meant as a test oracle."""
    n = _check_square(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = None
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in (list(r) for r in m[1:])]
        term = m[0][j] * cofactor_det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total
