import json
from itertools import combinations, product
from math import prod

import pytest
from hypothesis import given, strategies as st

from cosmetic_pretzel.algebra import IntPolynomial, cofactor_det
from cosmetic_pretzel.errors import BadLength, NegativeTwist, ParseError, UnknotHasNoSurfaceBasis
from cosmetic_pretzel.invariants import conway_polynomial
from cosmetic_pretzel.pretzel import (
    PretzelKnot,
    canonical_form,
    canonical_knots,
    crossing_number,
    elementary_symmetric,
    elementary_symmetric_all,
    make_knot,
    parse_knot,
    seifert_matrix,
)

knots = st.integers(0, 4).flatmap(
    lambda g: st.lists(st.integers(0, 4), min_size=2 * g + 1, max_size=2 * g + 1)
).map(make_knot)


def test_make_knot_genus():
    assert make_knot([0, 0, 0]).genus == 1
    assert make_knot([1, 0, 0, 0, 0]).genus == 2


@pytest.mark.parametrize("bad, exc", [([1, 0], BadLength), ([], BadLength), ([0, -1, 0], NegativeTwist)])
def test_make_knot_rejects(bad, exc):
    with pytest.raises(exc):
        make_knot(bad)


@pytest.mark.parametrize("raw, canon", [
    ((0, 2, 0, 1, 0), (2, 1, 0, 0, 0)),
    ((0, 0, 0), (0, 0, 0)),
    ((1, 1, 1, 1, 0, 0, 0), (1, 1, 1, 1, 0, 0, 0)),
])
def test_canonical_form(raw, canon):
    assert canonical_form(PretzelKnot(raw)).twists == canon


def test_seifert_trefoil():
    assert seifert_matrix(PretzelKnot((0, 0, 0))) == [[1, 0], [1, 1]]


def test_seifert_genus2_example():
    assert seifert_matrix(PretzelKnot((1, 0, 0, 0, 0))) == [[2, 0, 0, 0], [1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1]]


def test_seifert_genus2_symbolic_band():
    k = (3, 5, 7, 11, 13)
    a = seifert_matrix(PretzelKnot(k))
    k1, k2, k3, k4, k5 = k
    assert a == [
        [k1 + k2 + 1, k2, 0, 0],
        [k2 + 1, k2 + k3 + 1, k3, 0],
        [0, k3 + 1, k3 + k4 + 1, k4],
        [0, 0, k4 + 1, k4 + k5 + 1],
    ]


def test_seifert_genus3_band():
    k = (1, 2, 3, 4, 5, 6, 7)
    a = seifert_matrix(PretzelKnot(k))
    for i in range(6):
        for j in range(6):
            if i == j:
                want = k[i] + k[i + 1] + 1
            elif j == i + 1:
                want = k[i + 1]
            elif i == j + 1:
                want = k[j + 1] + 1
            else:
                want = 0
            assert a[i][j] == want


def test_seifert_unknot_has_no_basis():
    with pytest.raises(UnknotHasNoSurfaceBasis):
        seifert_matrix(PretzelKnot((2,)))


@pytest.mark.parametrize("g", range(1, 6))
def test_seifert_linking_form_is_unimodular(g):
    for k in canonical_knots(g, 2 * g + 1, max_twist=3):
        a = seifert_matrix(k)
        n = len(a)
        diff = [[a[i][j] - a[j][i] for j in range(n)] for i in range(n)]
        if n <= 6:
            assert cofactor_det(diff) == 1
        else:
            from cosmetic_pretzel.algebra import bareiss_det_poly
            assert bareiss_det_poly([[IntPolynomial([x]) for x in row] for row in diff]) == IntPolynomial([1])


@pytest.mark.parametrize("twists, c", [((0, 0, 0), 3), ((1, 0, 0, 0, 0), 7), ((1, 1, 1, 1, 0, 0, 0), 15), ((4,), 0)])
def test_crossing_number(twists, c):
    assert crossing_number(PretzelKnot(twists)) == c


def test_elementary_symmetric_examples():
    assert elementary_symmetric(2, (1, 1, 1, 1, 0, 0, 0)) == 6
    assert elementary_symmetric(0, (5, 3)) == 1
    assert elementary_symmetric(0, ()) == 1
    assert elementary_symmetric(4, (2, 1, 0, 0, 0)) == 0
    assert elementary_symmetric(7, (1, 1)) == 0


@given(st.lists(st.integers(0, 4), max_size=9))
def test_elementary_symmetric_brute_force(ks):
    s = elementary_symmetric_all(ks)
    for n in range(len(ks) + 1):
        assert s[n] == sum(prod(c) for c in combinations(ks, n))


@given(st.lists(st.integers(0, 4), min_size=1, max_size=9), st.data())
def test_truncation_rule_as_stated(ks, data):
    # trailing zeros beyond N: s_{n,m} = s_{n,N} whenever n >= N
    n_cut = data.draw(st.integers(0, len(ks)))
    ks = ks[:n_cut] + [0] * (len(ks) - n_cut)
    for n in range(n_cut, len(ks) + 1):
        assert elementary_symmetric(n, ks) == elementary_symmetric(n, ks[:n_cut])


@given(st.lists(st.integers(0, 4), min_size=1, max_size=9), st.data())
def test_truncation_holds_for_every_positive_index(ks, data):
    n_cut = data.draw(st.integers(0, len(ks)))
    ks = ks[:n_cut] + [0] * (len(ks) - n_cut)
    for n in range(1, len(ks) + 1):
        assert elementary_symmetric(n, ks) == elementary_symmetric(n, ks[:n_cut])


@given(knots)
def test_canonical_form_idempotent(k):
    c = canonical_form(k)
    assert canonical_form(c) == c
    assert sorted(c.twists) == sorted(k.twists)


@pytest.mark.parametrize("g", [1, 2, 3])
def test_conway_permutation_invariant(g):
    for t in product(range(3), repeat=2 * g + 1):
        k = PretzelKnot(t)
        assert conway_polynomial(k) == conway_polynomial(canonical_form(k))


@given(knots)
def test_text_and_json_round_trip(k):
    assert parse_knot(str(k)) == k
    assert PretzelKnot.from_json(k.to_json()) == k
    assert json.loads(k.to_json()) == {"twists": list(k.twists)}


@pytest.mark.parametrize("text", ["K(1,0)", "K()", "K(1,,0)", "L(1,0,0)", "K(1,-1,0)", "1,0,0", "K(a)"])
def test_parse_rejects(text):
    with pytest.raises((ParseError, BadLength)):
        parse_knot(text)


def test_parse_tolerates_whitespace():
    assert parse_knot(" K( 1, 0 ,0 ) ") == PretzelKnot((1, 0, 0))


def test_canonical_enumeration_counts():
    assert len(list(canonical_knots(2, 4, min_sum=1))) == 11
    assert len(list(canonical_knots(2, 4))) == 12
    assert len(list(canonical_knots(2, 6, min_sum=1))) == 28
    assert len(list(canonical_knots(3, 5, min_sum=1))) == 18
    for k in canonical_knots(3, 5, max_twist=2):
        assert k == canonical_form(k) and max(k.twists) <= 2


def test_torus_detection():
    assert PretzelKnot((0, 0, 0, 0, 0)).is_torus()
    assert not PretzelKnot((1, 0, 0)).is_torus()
    assert not PretzelKnot((0,)).is_torus()
    assert PretzelKnot((0,)).is_unknot()
