from fractions import Fraction

import pytest

from cosmetic_pretzel.errors import GoldenMismatch
from cosmetic_pretzel.reproduce import arc_count_bound, genus3_subscript_note, load_golden, reproduce_tables


@pytest.fixture(scope="module")
def report():
    return reproduce_tables()


def test_golden_files_load():
    assert len(load_golden("sigma_table_K1000000.csv")) == 52
    assert len(load_golden("ratio_bounds.csv")) == 12
    assert len(load_golden("point_values.csv")) == 5


def test_reproduction_is_clean(report):
    assert report.ok, report.mismatches


def test_printed_denominator_discrepancies_recorded(report):
    notes = {b["knot"]: b.get("note") for b in report.sections["ratio_bounds"]}
    assert "153n" in notes["K(2,0,0,0,0)"]
    assert "25n" in notes["K(1,1,0,0,0)"]
    assert notes["K(1,0,0,0,0)"] is None


def test_genus2_arc_count_bound():
    # theta_1 > 2pi/15, theta_2 > 8pi/15 gives sigma(K,15n) <= 40n - 4
    assert arc_count_bound([Fraction(2, 15), Fraction(8, 15)], 15) == (40, 4)


def test_genus3_subscript_note():
    note = genus3_subscript_note()
    assert note["vectors"] == 128
    assert note["a4_all_seven_disagree"] == 0
    assert note["a4_first_five_disagree"] > 0
    assert note["example"]["all_seven"] == note["example"]["determinant"]


def test_endgame_section(report):
    e = report.sections["endgame"]
    assert e["q_plus_qprime"] == "-5/9" and e["outcome"] == "NoCCS"


def test_mismatch_raises(monkeypatch):
    import cosmetic_pretzel.reproduce as rp

    real = rp.load_golden

    def tampered(name):
        rows = real(name)
        if name == "sigma_table_K1000000.csv":
            rows[4] = dict(rows[4], sigma_over_p="5")
        return rows

    monkeypatch.setattr(rp, "load_golden", tampered)
    with pytest.raises(GoldenMismatch, match="p = \\[5\\]"):
        rp.reproduce_tables(raise_on_mismatch=True)
