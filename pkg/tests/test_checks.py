import pytest

from alteuler.checks import (
    check_convolution_recurrence, check_corollary, check_equidistribution,
    check_identity_suite, check_prop1, check_routes, wp_rhs,
)
from alteuler.poly import Poly


def test_wp_example_n4():
    assert wp_rhs(4) == Poly([0, 16, 0, 40, 0, 24])


@pytest.mark.parametrize("name", ["stembridge", "wp", "anx-wnx"])
def test_cleared_identities(name):
    rep = check_identity_suite(name, 20)
    assert rep.passed, rep.counterexample
    assert len(rep.verdicts) == 20


@pytest.mark.parametrize("name", ["symmetry", "divisibility"])
def test_structure_suites(name):
    assert check_identity_suite(name, 30).passed


def test_unknown_suite():
    with pytest.raises(ValueError, match="unknown identity suite"):
        check_identity_suite("nope", 3)


def test_convolution_recurrence_convention():
    rep = check_convolution_recurrence(5)
    assert rep.passed
    assert rep.info["convention"] == "one-at-position-1"
    assert rep.info["sweep"] == {"zero-row": False, "one-at-position-1": True}
    assert check_convolution_recurrence(12).passed


def test_report_records_first_failure():
    from alteuler.report import CheckReport
    rep = CheckReport("demo")
    rep.record("a", True)
    rep.record("b", False, n=3)
    rep.record("c", False, n=4)
    assert not rep.passed
    assert rep.counterexample == {"case": "b", "n": 3}


def test_other_suites():
    assert check_routes(12).passed
    assert check_prop1(20).passed
    assert check_corollary(12).passed
    assert check_equidistribution(6).passed
