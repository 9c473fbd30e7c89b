"""Test for diagnostics module."""
from ..exact_linalg import PrimeField
from ..hilbert import HilbertTable
from ..diagnostics import CheckResult, run_verification, scheme_summary
from .common import fat_point, generic_p1xp1_schemes


def test_check_result():
    """test CheckResult rendering"""
    assert str(CheckResult("lower_bound", True)) == "PASS lower_bound"
    assert str(CheckResult("cap", False, "fails at (1,2)")) == "FAIL cap: fails at (1,2)"


def test_verify_single_fat_point():
    """test every check passes on single fat points"""
    for shape in [(1, 1), (2, 1)]:
        for mult in range(1, 4):
            results = run_verification(HilbertTable(fat_point(shape, mult)), generic=True)
            assert all(result.passed for result in results), [str(r) for r in results]


def test_verify_seven_point(seven_point):
    """test the seven point scheme passes without the generic checks"""
    results = run_verification(HilbertTable(seven_point))
    names = [result.name for result in results]
    assert all(result.passed for result in results)
    assert "acm_equality" in names
    assert "generic_bound" not in names
    assert "p1xp1_region" not in names


def test_verify_generic_p1xp1():
    """test the generic checks on random generic-support schemes"""
    for z in generic_p1xp1_schemes(3, seed=13, max_points=3):
        results = run_verification(HilbertTable(z), generic=True)
        names = {result.name for result in results}
        assert {"generic_bound", "p1xp1_region", "eventual_values", "coarse_polynomial"} <= names
        assert all(result.passed for result in results)


def test_scheme_summary(seven_point):
    """test scheme_summary"""
    summary = scheme_summary(HilbertTable(seven_point))
    assert summary["degree"] == 7
    assert summary["sigma"] == 7
    assert summary["resvector"] == [2, 2]
    assert summary["region"] == {"corners": [[2, 2]]}
    assert summary["sigma_bound"] == {"corners": [[6, 6]]}
    assert summary["field"] == {"mode": "rational"}
    assert summary["probabilistic"] is False

    summary = scheme_summary(HilbertTable(seven_point, field=PrimeField()))
    assert summary["field"] == {"mode": "prime", "p": 2147483647}
    assert summary["probabilistic"] is True
    assert summary["region"] == {"corners": [[2, 2]]}
