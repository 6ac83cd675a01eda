"""Exact univariate polynomials with integer coefficients.

Two representations live here:

* :class:`IntPolynomial` -- dense, index = degree.  Used for Conway and
  Alexander data and everything Sturm-related.
* :class:`LaurentPolynomial` -- sparse map exponent -> coefficient, exponents
  may be negative.  Used for determinants in ``x = t**(1/2)`` and for
  bracket/Jones polynomials.

Both are immutable and hashable.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Number = Union[int, Fraction]

__all__ = ["IntPolynomial", "LaurentPolynomial", "poly_gcd", "squarefree_part"]


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPolynomial:
    """Dense polynomial over the integers.

    The zero polynomial has no coefficients and degree ``-1``.
    """

    __slots__ = ("coeffs",)

    ZERO_DEGREE = -1

    def __init__(self, coeffs: Iterable[int] = ()):
        coeffs = _strip(coeffs)
        for c in coeffs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficients required, got {type(c).__name__}")
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        return cls([0] * degree + [coeff])

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls([c])

    # --- basic structure -------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("IntPolynomial", self.coeffs))

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def format(self, var: str = "x") -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                power = var if i == 1 else f"{var}^{i}"
                body = power if mag == 1 else f"{mag}*{power}"
            terms.append(("-" if c < 0 else "+", body))
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    __str__ = format

    # --- ring operations -------------------------------------------------

    @staticmethod
    def _coerce(other) -> "IntPolynomial":
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial.constant(other)
        raise TypeError(f"cannot combine IntPolynomial with {type(other).__name__}")

    def __add__(self, other) -> "IntPolynomial":
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "IntPolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "IntPolynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "IntPolynomial":
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPolynomial":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = IntPolynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def derivative(self, order: int = 1) -> "IntPolynomial":
        p = self
        for _ in range(order):
            p = IntPolynomial(i * c for i, c in enumerate(p.coeffs) if i > 0)
        return p

    def __call__(self, x: Number) -> Number:
        """Horner evaluation; exact for ints and Fractions."""
        acc: Number = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    evaluate = __call__

    def sign_at(self, x: Number) -> int:
        v = self(x)
        return (v > 0) - (v < 0)

    def compose_linear(self, a: int, b: int) -> "IntPolynomial":
        """Return ``p(a*x + b)``."""
        lin = IntPolynomial([b, a])
        acc = IntPolynomial()
        for c in reversed(self.coeffs):
            acc = acc * lin + c
        return acc

    def content(self) -> int:
        from math import gcd

        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self) -> "IntPolynomial":
        """Divide out the content and make the leading coefficient positive."""
        if self.is_zero():
            return self
        g = self.content()
        if self.leading < 0:
            g = -g
        return IntPolynomial(c // g for c in self.coeffs)

    def divmod_exact(self, other: "IntPolynomial") -> "IntPolynomial":
        """Exact quotient ``self / other``; raises ``ArithmeticError`` if it leaves a remainder."""
        q, r = _divmod_rational(self, other)
        if any(rc != 0 for rc in r):
            raise ArithmeticError(f"{other!r} does not divide {self!r}")
        if any(c.denominator != 1 for c in q):
            raise ArithmeticError(f"quotient of {self!r} by {other!r} is not integral")
        return IntPolynomial(int(c) for c in q)

    __floordiv__ = divmod_exact

    def rem_primitive(self, other: "IntPolynomial") -> "IntPolynomial":
        """Remainder of ``self`` by ``other`` over Q, scaled by a *positive*
        rational to an integer polynomial with coprime coefficients.

        Sign is preserved, which is what Sturm chains need.
        """
        _, r = _divmod_rational(self, other)
        return _clear_positive(r)

    @classmethod
    def from_fractions(cls, coeffs: Sequence[Fraction]) -> "IntPolynomial":
        """Positive rescaling of a rational polynomial to a primitive integer one."""
        return _clear_positive(list(coeffs))


def _divmod_rational(a: IntPolynomial, b: IntPolynomial):
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in a.coeffs]
    db = b.degree
    lb = b.leading
    q = [Fraction(0)] * max(len(r) - db, 0)
    for shift in range(len(r) - 1 - db, -1, -1):
        c = r[shift + db] / lb
        if c:
            q[shift] = c
            for j, bc in enumerate(b.coeffs):
                r[shift + j] -= c * bc
    r = r[:db] if db > 0 else []
    while r and r[-1] == 0:
        r.pop()
    return q, r


def _clear_positive(coeffs: Sequence[Fraction]) -> IntPolynomial:
    from math import gcd, lcm

    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        return IntPolynomial()
    den = 1
    for c in coeffs:
        den = lcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return IntPolynomial(c // g for c in ints)


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Greatest common divisor over Q, returned primitive with positive leading coefficient."""
    a, b = a.primitive(), b.primitive()
    while not b.is_zero():
        a, b = b, a.rem_primitive(b).primitive()
    return a.primitive()


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    g = poly_gcd(p, p.derivative())
    if g.degree <= 0:
        return p.primitive()
    q, _ = _divmod_rational(p, g)
    return _clear_positive(q).primitive()


class LaurentPolynomial:
    """Sparse Laurent polynomial ``sum c_e x**e`` with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        for e, c in (terms or {}).items():
            if not isinstance(c, int) or not isinstance(e, int):
                raise TypeError("LaurentPolynomial needs integer exponents and coefficients")
            if c:
                clean[e] = c
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPolynomial is immutable")

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPolynomial":
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, c: int) -> "LaurentPolynomial":
        return cls({0: c})

    @classmethod
    def from_poly(cls, p: IntPolynomial, shift: int = 0) -> "LaurentPolynomial":
        return cls({i + shift: c for i, c in enumerate(p.coeffs)})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def min_exponent(self) -> int:
        return min(self.terms) if self.terms else 0

    @property
    def max_exponent(self) -> int:
        return max(self.terms) if self.terms else 0

    def coeff(self, e: int) -> int:
        return self.terms.get(e, 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(("LaurentPolynomial", tuple(self.terms.items())))

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.terms})"

    def format(self, var: str = "x") -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = var if e == 1 else f"{var}^{e}" if e > 0 else f"{var}^({e})"
                body = power if mag == 1 else f"{mag}*{power}"
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    __str__ = format

    @staticmethod
    def _coerce(other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(other)
        raise TypeError(f"cannot combine LaurentPolynomial with {type(other).__name__}")

    def __add__(self, other) -> "LaurentPolynomial":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentPolynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "LaurentPolynomial":
        other = self._coerce(other)
        out: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPolynomial":
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            ((e, c),) = self.terms.items()
            if c not in (1, -1):
                raise ValueError("monomial with non-unit coefficient is not invertible")
            return LaurentPolynomial({e * n: c if n % 2 else 1})
        result = LaurentPolynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by ``x**k``."""
        return LaurentPolynomial({e + k: c for e, c in self.terms.items()})

    def substitute_power(self, k: int) -> "LaurentPolynomial":
        """Return ``p(x**k)``; ``k`` may be negative."""
        return LaurentPolynomial({e * k: c for e, c in self.terms.items()})

    def divide_exponents(self, k: int) -> "LaurentPolynomial":
        """Inverse of :meth:`substitute_power`; every exponent must be divisible by ``k``."""
        bad = [e for e in self.terms if e % k]
        if bad:
            raise ArithmeticError(f"exponents {bad} not divisible by {k}")
        return LaurentPolynomial({e // k: c for e, c in self.terms.items()})

    def to_poly(self) -> tuple[IntPolynomial, int]:
        """Return ``(p, s)`` with ``self == x**s * p(x)`` and ``p(0) != 0``."""
        if not self.terms:
            return IntPolynomial(), 0
        s = self.min_exponent
        dense = [0] * (self.max_exponent - s + 1)
        for e, c in self.terms.items():
            dense[e - s] = c
        return IntPolynomial(dense), s

    def __call__(self, x: Number) -> Number:
        x = Fraction(x) if not isinstance(x, Fraction) else x
        return sum((c * x**e for e, c in self.terms.items()), Fraction(0))

    def derivative_at_one(self, order: int) -> int:
        """``d^order/dx^order`` evaluated at ``x = 1``: sum of ``c * e(e-1)...(e-order+1)``."""
        total = 0
        for e, c in self.terms.items():
            falling = 1
            for i in range(order):
                falling *= e - i
            total += c * falling
        return total
