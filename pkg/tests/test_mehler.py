import json

import pytest

from bimehler.algebra import ONE, WeightPoly, wp_parse
from bimehler.biegf import BiSeries
from bimehler.hermite import hermite_poly
from bimehler.mehler import (
    FORMS,
    Mismatch,
    VerifyReport,
    lhs_series,
    rhs_closed_series,
    rhs_component_series,
    verify,
)
from bimehler.profiles import enumerate_full
import oracles

H22 = wp_parse("1 + 4*x + 2*x^2")


@pytest.mark.parametrize("build", [lhs_series, rhs_component_series, rhs_closed_series])
def test_low_cells(build):
    f = build(2, 2)
    assert f.coeff(0, 0) == ONE
    assert f.coeff(1, 0) == ONE
    assert f.coeff(1, 1) == wp_parse("1 + x + y + x*y")
    assert f.coeff(2, 2) == H22 * H22.swap_xy()


def test_lhs_cell_is_brute_force_count():
    f = lhs_series(2, 2)
    assert f.coeff(1, 1) == enumerate_full(1, 1)
    assert f.coeff(2, 2) == enumerate_full(2, 2)


def test_closed_form_against_derivative_oracle():
    expected = BiSeries.from_function(
        2, 2, lambda m, n: WeightPoly(oracles.to_terms(oracles.labelled_coefficient(oracles.MEHLER_CLOSED_FORM, m, n)))
    )
    assert rhs_closed_series(2, 2) == expected


@pytest.mark.parametrize("bounds", [(0, 0), (1, 0), (0, 3), (5, 2), (8, 8)])
def test_verify_passes(bounds):
    report = verify(*bounds)
    assert report.status == "pass"
    assert report.mismatches == []
    assert set(report.elapsed_ms) == set(FORMS)


def test_forms_are_integral():
    for build in FORMS.values():
        assert build(6, 6).is_integral()


def test_specialization_and_symmetry():
    f = lhs_series(6, 6)
    for m, n, p in f.cells():
        assert p.specialize(y=0) == hermite_poly(m, n)
        assert p.swap_xy() == p
        assert f.coeff(n, m) == p


def test_total_counts_match_enumeration():
    f = lhs_series(4, 4)
    for m, n, p in f.cells():
        count = sum(oracles.matching_size_counts(m, n).values())
        assert p.evaluate(1, 1) == count**2 == enumerate_full(m, n).evaluate(1, 1)


def test_report_lists_mismatches(monkeypatch):
    import bimehler.mehler as mehler

    broken = dict(FORMS)
    broken["closed"] = lambda M, N: rhs_closed_series(M, N) + BiSeries.from_cells(M, N, {(1, 1): ONE})
    monkeypatch.setattr(mehler, "FORMS", broken)
    report = mehler.verify(2, 2)
    assert report.status == "fail"
    assert {mm.forms for mm in report.mismatches} == {"lhs/closed", "component/closed"}
    mm = report.mismatches[0]
    assert (mm.m, mm.n) == (1, 1)
    assert mm.expected == wp_parse("1 + x + y + x*y")
    assert mm.actual == wp_parse("2 + x + y + x*y")


def test_report_json_schema():
    report = VerifyReport(1, 1, [Mismatch(1, 0, "lhs/closed", ONE, wp_parse("2*x"))], {"lhs": 0.5})
    data = json.loads(report.to_json())
    assert data == {
        "max_m": 1,
        "max_n": 1,
        "status": "fail",
        "mismatches": [{"m": 1, "n": 0, "forms": "lhs/closed", "expected": "1", "actual": "2*x"}],
        "elapsed_ms": {"lhs": 0.5},
    }
    assert wp_parse(data["mismatches"][0]["actual"]) == wp_parse("2*x")
    good = json.loads(verify(3, 3).to_json())
    assert good["status"] == "pass" and good["mismatches"] == []
