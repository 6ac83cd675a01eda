from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from cosmetic_pretzel.errors import TheoremViolation
from cosmetic_pretzel.invariants import a2_closed, full_invariants, v3_closed
from cosmetic_pretzel.obstruction import (
    INCONCLUSIVE,
    KNOWN_CHIRAL,
    NO_CCS,
    Reason,
    cass_slope_sum,
    decide,
    gen_threshold,
    min_twist_sum_for_threshold,
    ratio_window_check,
    strong_ratio,
    verify_theorems,
    weak_checks,
)
from cosmetic_pretzel.pretzel import PretzelKnot, canonical_knots
from cosmetic_pretzel.signature import p_signature

K = lambda *t: PretzelKnot(t)  # noqa: E731
SEVEN = K(1, 0, 0, 0, 0, 0, 0)


def _weak(k, name):
    return next(r for r in weak_checks(k) if r.criterion == name)


@pytest.mark.parametrize("knot, f", [
    (K(1, 0, 0, 0, 0), Fraction(44, 15)),
    (K(2, 2, 0, 0, 0, 0, 0), Fraction(400, 69)),
    (SEVEN, Fraction(4)),
    (K(1, 1, 0, 0, 0), Fraction(88, 25)),
])
def test_strong_ratio(knot, f):
    sr = strong_ratio(knot)
    assert sr.value == f and sr.sign == 1


def test_ratio_window_examples():
    r = ratio_window_check(K(2, 1, 0, 0, 0))
    assert r.fires and r.statement == "792 > 776"
    assert ratio_window_check(K(3, 0, 0, 0, 0)).fires
    assert not ratio_window_check(K(1, 0, 0, 0, 0)).fires
    r = ratio_window_check(K(1, 1, 1, 1, 0, 0, 0))
    assert r.fires and r.statement == "3584 > 3528"


def test_ratio_window_genus2_cases_in_one_parameter():
    # (N,0,0,0,0) passes only for N <= 2
    fired = [n for n in range(1, 8) if ratio_window_check(K(n, 0, 0, 0, 0)).fires]
    assert fired == list(range(3, 8))


def test_weak_examples():
    assert _weak(K(1, 1, 1, 0, 0), "genus2-weak").fires
    r = _weak(K(1, 0, 0, 0, 0), "genus2-weak")
    assert not r.fires and (r.lhs, r.rhs) == (22, 31)
    assert _weak(K(5, 0, 0, 0, 0, 0, 0), "genus3-weak").fires


def test_genus3_weak_fires_from_twist_sum_five():
    for k in canonical_knots(3, 9, min_sum=5):
        assert _weak(k, "genus3-weak").fires


@pytest.mark.parametrize("g, s1, fires", [(2, 5, True), (1, 2, False), (3, 7, True), (2, 4, False), (1, 3, True)])
def test_gen_threshold(g, s1, fires):
    k = PretzelKnot((s1,) + (0,) * (2 * g))
    assert gen_threshold(k).fires is fires


def test_threshold_matches_irrational_constant():
    alpha = (9 + 237 ** 0.5) / 12
    for g in range(1, 40):
        s = min_twist_sum_for_threshold(g)
        assert s - 1 < alpha * g <= s


@given(st.integers(1, 8).flatmap(lambda g: st.tuples(st.just(g), st.integers(0, 60))))
def test_threshold_implies_weak_inequality(gs):
    g, extra = gs
    s1 = min_twist_sum_for_threshold(g) + extra
    k = PretzelKnot((s1,) + (0,) * (2 * g))
    assert gen_threshold(k).fires
    assert 4 * abs(v3_closed(k)) >= 7 * g * a2_closed(k)


@pytest.mark.parametrize("knot, p, q", [(SEVEN, 5, Fraction(-5, 9)), (SEVEN, 1, 0), (K(2, 1, 0, 0, 0), 1, 0),
                                        (SEVEN, 2, Fraction(-1, 6))])
def test_cass_slope_sum(knot, p, q):
    assert cass_slope_sum(knot, p) == q


def test_decide_examples():
    v = decide(K(1, 0, 0, 0, 0))
    assert v.outcome == NO_CCS
    assert {r.criterion for r in v.decisive} <= {"signature-asymptotics", "p-signature-mismatch"}
    assert all(r.data["p"] % 15 == 0 for r in v.reasons if r.criterion == "p-signature-mismatch")

    v = decide(SEVEN)
    assert v.outcome == NO_CCS
    stage4 = [r for r in v.reasons if r.stage == 4]
    assert len(stage4) == 1 and stage4[0].data["p"] == 5 and stage4[0].lhs == Fraction(-5, 9)

    assert decide(K(0, 0, 0, 0, 0)).outcome == KNOWN_CHIRAL

    v = decide(K(2, 1, 1, 0, 0, 0, 0))
    assert v.outcome == NO_CCS
    asym = next(r for r in v.reasons if r.criterion == "signature-asymptotics")
    assert asym.data["L_upper"] < Fraction(850, 205) < Fraction(1219, 205)


def test_decide_canonicalises():
    assert decide(K(0, 0, 1, 0, 2)).to_dict() == decide(K(2, 1, 0, 0, 0)).to_dict()


def test_decide_is_deterministic():
    for k in (K(1, 0, 0, 0, 0), SEVEN, K(2, 1, 0, 0, 0)):
        assert decide(k).to_json() == decide(k).to_json()


def test_verdicts_recheck():
    for g, s in ((1, 4), (2, 6), (3, 5)):
        for k in canonical_knots(g, s):
            v = decide(k)
            assert v.recheck()
            if v.outcome == NO_CCS:
                assert v.decisive


def test_genus1_outcomes():
    # twist sum >= 3 passes the threshold; the twist knots below it must be handled by the pipeline
    for k in canonical_knots(1, 6, min_sum=1):
        assert decide(k).outcome == NO_CCS


def test_candidate_budget_gives_inconclusive():
    v = decide(SEVEN, max_candidates=1)
    assert v.outcome == INCONCLUSIVE
    assert v.reasons[-1].criterion == "candidate-budget"
    assert v.recheck()


def test_reason_holds():
    assert Reason(1, "x", Fraction(3), ">", Fraction(2), True).holds()
    assert not Reason(1, "x", Fraction(2), ">", Fraction(2), False).holds()
    assert Reason(4, "x", Fraction(-5, 9), "not-integer", None, True).holds()
    assert not Reason(4, "x", Fraction(-2), "not-integer", None, False).holds()


def test_tampered_reason_fails_recheck():
    v = decide(K(2, 1, 0, 0, 0))
    bad = Reason(2, "ratio-window", Fraction(700), ">", Fraction(776), True)
    tampered = type(v)(v.knot, v.outcome, v.reasons[:-1] + (bad,))
    assert not tampered.recheck()


def test_weak_checks_are_relaxations():
    for g in range(1, 5):
        for k in canonical_knots(g, 8, max_twist=4):
            if k.is_torus() or not any(r.fires for r in weak_checks(k)):
                continue
            assert ratio_window_check(k).fires or strong_ratio(k).value > 2 * g


def test_stage3_eliminations_are_sound():
    knots = [k for g, s in ((2, 6), (3, 5)) for k in canonical_knots(g, s, min_sum=1)]
    for k in knots:
        v = decide(k)
        if v.reasons[-1].stage < 3 and not any(r.stage >= 3 for r in v.reasons):
            continue
        f = strong_ratio(k).value
        checked = [r for r in v.reasons if r.criterion == "p-signature-mismatch"][:10]
        for r in checked:
            p = r.data["p"]
            assert p % f.denominator == 0
            assert p_signature(k, p).ratio != f


def test_verify_theorems_small():
    rep = verify_theorems(((2, 3),), threshold_genera=(1, 2), threshold_samples=20)
    assert rep.ok
    d = rep.to_dict()
    assert d["counts"] == {KNOWN_CHIRAL: 1, NO_CCS: 6}
    assert [c["genus"] for c in d["threshold_checks"]] == [1, 2]


def test_verify_theorems_reports_violations(monkeypatch):
    import cosmetic_pretzel.obstruction as ob

    real = ob.decide

    def fake(k, **kw):
        v = real(k, **kw)
        return ob.Verdict(v.knot, INCONCLUSIVE, v.reasons) if v.knot == K(1, 0, 0, 0, 0) else v

    monkeypatch.setattr(ob, "decide", fake)
    with pytest.raises(TheoremViolation, match="K\\(1,0,0,0,0\\)"):
        verify_theorems(((2, 1),), threshold_genera=(), threshold_samples=1)
    rep = verify_theorems(((2, 1),), threshold_genera=(), raise_on_violation=False)
    assert not rep.ok and len(rep.violations) == 1


def test_parallel_matches_serial():
    a = verify_theorems(((2, 4),), threshold_genera=(2,), threshold_samples=10, jobs=1).to_dict()
    b = verify_theorems(((2, 4),), threshold_genera=(2,), threshold_samples=10, jobs=2).to_dict()
    assert a == b


def test_all_invariants_consistent_with_ratio_inputs():
    for t in product(range(3), repeat=5):
        k = PretzelKnot(t)
        if k.is_torus():
            continue
        inv = full_invariants(k)
        sr = strong_ratio(k, inv)
        assert sr.value == Fraction(-8 * inv.a2 * inv.v3, 7 * inv.a2 ** 2 - inv.a2 - 10 * inv.a4)
