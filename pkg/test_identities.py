"""
Tests for the symbolic and numeric proofs of the closed forms
"""
import pytest

from claspkit import clasp_engine
from claspkit.clasp_engine import KappaTable
from claspkit.errors import IdentityFailed
from claspkit.identities import (
    bracket_identity_failures, certify_all_recursions, certify_corollary, certify_recursion,
    grid_weights, verify_corollary, verify_recursion_numeric, verify_recursion_symbolic,
)
from claspkit.qnum import QFactor, SymExponent, SymExpr
from claspkit.root_data import EXTREMAL_WEIGHTS, Weight


@pytest.fixture
def broken_two(monkeypatch):
    """Replace the constant [2] of the defining relations by [3]"""
    monkeypatch.setitem(clasp_engine.RECURSION_CONSTANTS, "two", SymExpr.fraction(1, [QFactor(SymExponent(0, 0, 3))]))


@pytest.mark.parametrize("which", range(1, 8))
def test_recursion_is_solved_by_closed_form(which):
    certificate = verify_recursion_symbolic(which)
    assert certificate.ok
    assert certificate.status == "verified"
    assert certificate.recursion_id == which
    assert certificate.difference.is_zero()
    assert certificate.lhs == certificate.rhs


def test_all_recursions():
    certificates = certify_all_recursions()
    assert [c.name for c in certificates] == [f"rr{i}" for i in range(1, 8)]
    assert [c.mu for c in certificates] == list(clasp_engine.RR_ORDER)
    assert all(c.stratum == "generic" for c in certificates)


def test_broken_constant_fails_symbolically(broken_two):
    certificate = certify_recursion(1)
    assert not certificate.ok
    assert certificate.status == "failed"
    with pytest.raises(IdentityFailed) as excinfo:
        verify_recursion_symbolic(1)
    assert excinfo.value.certificate is not None
    assert not excinfo.value.difference.is_zero()


def test_broken_constant_fails_numerically(broken_two):
    report = verify_recursion_numeric(2, 2, KappaTable("recursive"))
    assert not report.ok
    assert any(m.lam == Weight(1, 0) and m.mu == Weight(-1, 1) for m in report.mismatches)


def test_grid_order():
    assert grid_weights(1, 1) == [Weight(0, 0), Weight(0, 1), Weight(1, 0), Weight(1, 1)]


def test_numeric_grid():
    report = verify_recursion_numeric(3, 3)
    assert report.ok
    assert report.compared == 112
    assert report.skipped == 32


@pytest.mark.parametrize("varpi", EXTREMAL_WEIGHTS)
def test_product_formula_certificate(varpi):
    assert certify_corollary(varpi).ok


def test_product_formula_on_grid():
    checks = verify_corollary(3, 3)
    assert len(checks) == 8
    for check in checks:
        assert check.ok, check.varpi
        assert check.checked > 0


def test_even_brackets():
    assert bracket_identity_failures() == []


@pytest.mark.slow
def test_numeric_grid_to_twelve():
    report = verify_recursion_numeric(12, 12)
    assert report.ok
    assert report.compared + report.skipped == 9 * 13 * 13


@pytest.mark.slow
def test_product_formula_on_large_grid():
    for check in verify_corollary(10, 10):
        assert check.ok, check.varpi
        assert check.checked >= 9 * 11
