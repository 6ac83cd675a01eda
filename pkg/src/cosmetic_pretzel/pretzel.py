"""Alternating odd pretzel knots ``K(k_1, ..., k_{2g+1})``.

``K(k_1, ..., k_n)`` is the pretzel knot ``P(2k_1+1, ..., 2k_n+1)`` where
strand ``i`` carries ``k_i`` full right-handed twists on top of its single
odd crossing.  Only nonnegative twists are represented; the mirror family is
reached through the mirror rules in :mod:`cosmetic_pretzel.invariants`.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BadLength, NegativeTwist, ParseError, UnknotHasNoSurfaceBasis

__all__ = [
    "PretzelKnot",
    "make_knot",
    "parse_knot",
    "canonical_form",
    "seifert_matrix",
    "crossing_number",
    "elementary_symmetric",
    "elementary_symmetric_all",
    "canonical_knots",
]


@dataclass(frozen=True, order=True)
class PretzelKnot:
    twists: tuple[int, ...]

    def __post_init__(self):
        twists = tuple(self.twists)
        if len(twists) % 2 == 0:
            raise BadLength(f"need an odd number of strands, got {len(twists)}")
        for k in twists:
            if not isinstance(k, int) or isinstance(k, bool):
                raise TypeError(f"twist counts must be integers, got {k!r}")
            if k < 0:
                raise NegativeTwist(f"twist counts must be nonnegative, got {k}")
        object.__setattr__(self, "twists", twists)

    @property
    def genus(self) -> int:
        return (len(self.twists) - 1) // 2

    @property
    def strands(self) -> int:
        return len(self.twists)

    @property
    def twist_sum(self) -> int:
        return sum(self.twists)

    def is_unknot(self) -> bool:
        return self.genus == 0

    def is_torus(self) -> bool:
        """All twists zero: the (-2, 2g+1) torus knot."""
        return self.genus >= 1 and not any(self.twists)

    def with_twist(self, index: int, value: int) -> "PretzelKnot":
        t = list(self.twists)
        t[index] = value
        return PretzelKnot(tuple(t))

    def __str__(self) -> str:
        return "K(" + ",".join(str(k) for k in self.twists) + ")"

    def to_json(self) -> str:
        return json.dumps({"twists": list(self.twists)})

    @classmethod
    def from_json(cls, text: str) -> "PretzelKnot":
        data = json.loads(text)
        try:
            twists = data["twists"]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"missing 'twists' field in {text!r}") from exc
        return make_knot(twists)


def make_knot(twists: Iterable[int]) -> PretzelKnot:
    twists = tuple(twists)
    if not twists:
        raise BadLength("a pretzel knot needs at least one strand")
    return PretzelKnot(twists)


_KNOT_RE = re.compile(r"^\s*K\s*\(\s*([0-9\s,]*)\)\s*$")


def parse_knot(text: str) -> PretzelKnot:
    """Parse ``"K(1,0,0,0,0)"``. Whitespace is ignored."""
    m = _KNOT_RE.match(text)
    if not m:
        raise ParseError(f"expected K(k1,...,kn) with nonnegative integers, got {text!r}")
    body = m.group(1).strip()
    if not body:
        raise BadLength("a pretzel knot needs at least one strand")
    try:
        twists = [int(tok) for tok in body.split(",")]
    except ValueError as exc:
        raise ParseError(f"bad twist list in {text!r}") from exc
    return make_knot(twists)


def canonical_form(k: PretzelKnot) -> PretzelKnot:
    # All invariants we compute are symmetric in the twists, so sorting is safe.
    return PretzelKnot(tuple(sorted(k.twists, reverse=True)))


def seifert_matrix(k: PretzelKnot) -> list[list[int]]:
    """The ``2g x 2g`` banded Seifert matrix.

    Row ``i`` (1-based) has ``k_i + k_{i+1} + 1`` on the diagonal,
    ``k_{i+1}`` just right of it and ``k_{i+1} + 1`` just below.
    """
    g = k.genus
    if g == 0:
        raise UnknotHasNoSurfaceBasis("the unknot has no genus-1 surface basis")
    ks = k.twists
    n = 2 * g
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = ks[i] + ks[i + 1] + 1
        if i + 1 < n:
            a[i][i + 1] = ks[i + 1]
            a[i + 1][i] = ks[i + 1] + 1
    return a


def crossing_number(k: PretzelKnot) -> int:
    if k.genus == 0:
        return 0
    return 2 * k.twist_sum + 2 * k.genus + 1


def elementary_symmetric_all(ks: Sequence[int]) -> list[int]:
    """``[s_0, s_1, ..., s_m]`` for ``ks`` of length ``m``, via
    ``s_{n,m+1} = s_{n,m} + k_{m+1} s_{n-1,m}``."""
    s = [1]
    for k in ks:
        nxt = s + [0]
        for n in range(len(s), 0, -1):
            nxt[n] = s[n] + k * s[n - 1] if n < len(s) else k * s[n - 1]
        s = nxt
    return s


def elementary_symmetric(n: int, ks: Sequence[int]) -> int:
    if n < 0:
        raise ValueError("negative elementary symmetric index")
    s = elementary_symmetric_all(ks)
    return s[n] if n < len(s) else 0


def _partitions(total: int, parts: int, cap: int):
    # nonincreasing tuples of exactly `parts` entries in [0, cap] summing to `total`
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, cap), -1, -1):
        if first * parts < total:
            break
        for rest in _partitions(total - first, parts - 1, first):
            yield (first,) + rest


def canonical_knots(genus: int, max_sum: int, *, min_sum: int = 0, max_twist: int | None = None):
    """Every canonical (nonincreasing) knot of the given genus with
    ``min_sum <= sum(k_i) <= max_sum`` and each ``k_i <= max_twist``."""
    cap = max_sum if max_twist is None else max_twist
    for total in range(min_sum, max_sum + 1):
        for t in _partitions(total, 2 * genus + 1, cap):
            yield PretzelKnot(t)
