"""
Tests for kappa values, the memoized recursion and clasp expansions
"""
import pytest

from claspkit import clasp_engine
from claspkit.clasp_engine import (
    COROLLARY_SIGNS, RR_ORDER, KappaKey, KappaTable, clasp_exists_at, closed_form_expr,
    corollary_product, default_path, derive_corollary_signs, domain_keys, expansion_certificate,
    in_domain, kappa_closed, kappa_inv, kappa_recursive, recursion_for,
)
from claspkit.errors import BadPath, ClaspKitError, CycleDetected, NotDominant, OutOfDomain, UnknownWeight
from claspkit.exact_arith import RationalFunction
from claspkit.qnum import clear_denominators, qint
from claspkit.root_data import EXTREMAL_WEIGHTS, Weight


def ratio(top, bottom, sign=1):
    num, den = qint(1), qint(1)
    for n in top:
        num = num * qint(n)
    for n in bottom:
        den = den * qint(n)
    return RationalFunction(num * sign, den)


@pytest.mark.parametrize("lam,mu,expected", [
    (Weight(1, 0), Weight(-1, 1), ratio([2], [], -1)),
    (Weight(2, 0), Weight(-1, 1), ratio([3], [2], -1)),
    (Weight(0, 1), Weight(2, -1), ratio([4], [2], -1)),
    (Weight(1, 0), Weight(0, 0), ratio([5], [2])),
    (Weight(0, 1), Weight(1, -1), ratio([5], [2])),
    (Weight(1, 0), Weight(-1, 0), ratio([6, 2], [3], -1)),
    (Weight(2, 0), Weight(-2, 1), ratio([8, 3], [6], -1)),
    (Weight(0, 1), Weight(0, -1), ratio([6, 5], [3, 2])),
])
def test_closed_form_values(lam, mu, expected):
    assert kappa_closed(lam, mu) == expected


def test_highest_weights_have_kappa_one():
    table = KappaTable("recursive")
    assert table.kappa(Weight(2, 3), Weight(1, 0)) == 1
    assert table.kappa(Weight(0, 0), Weight(0, 1)) == 1


def test_domain():
    assert in_domain(Weight(1, 0), Weight(0, 0))
    assert not in_domain(Weight(0, 1), Weight(0, 0))
    assert not in_domain(Weight(1, 1), Weight(-2, 1))
    assert len(domain_keys(Weight(0, 0))) == 2
    assert len(domain_keys(Weight(2, 2))) == 9


def test_kappa_outside_the_domain():
    with pytest.raises(OutOfDomain):
        kappa_closed(Weight(0, 0), Weight(-1, 1))
    with pytest.raises(OutOfDomain):
        KappaTable("recursive").kappa(Weight(1, 0), Weight(-2, 1))


def test_inverse_is_zero_outside_the_domain():
    assert KappaTable("closed").kappa_inv(Weight(0, 0), Weight(-1, 0)) == 0
    assert kappa_inv(KappaKey(Weight(1, 0), Weight(0, 0))) == ratio([2], [5])


def test_keys_reject_unknown_weights():
    with pytest.raises(UnknownWeight):
        KappaKey(Weight(0, 0), Weight(1, 1))
    assert str(KappaKey(Weight(1, 0), Weight(0, 0))) == "kappa[(1,0),(0,0)]"


def test_table_refuses_out_of_domain_entries():
    table = KappaTable("closed")
    with pytest.raises(OutOfDomain):
        table.store(KappaKey(Weight(0, 0), Weight(-1, 0)), RationalFunction(1))
    with pytest.raises(ClaspKitError):
        KappaTable("lazy")


def test_recursion_order():
    assert RR_ORDER == (Weight(-1, 1), Weight(2, -1), Weight(0, 0), Weight(1, -1),
                        Weight(-1, 0), Weight(-2, 1), Weight(0, -1))
    assert recursion_for(5)[0] == Weight(-1, 0)
    with pytest.raises(ClaspKitError):
        recursion_for(0)
    with pytest.raises(ClaspKitError):
        recursion_for(8)


def test_recursive_values_match_closed_forms():
    table = KappaTable("recursive")
    for a in range(4):
        for b in range(4):
            for key in domain_keys(Weight(a, b)):
                assert table.kappa(key.lam, key.mu) == kappa_closed(key.lam, key.mu), key


def test_recursion_memoizes():
    table = KappaTable("recursive")
    key = KappaKey(Weight(2, 2), Weight(0, -1))
    value = kappa_recursive(key, table)
    assert key in table
    size = len(table)
    assert table.kappa(key.lam, key.mu) is value
    assert len(table) == size
    table.discard([key])
    assert key not in table
    table.discard()
    assert len(table) == 0


def test_cycle_is_detected(monkeypatch):
    monkeypatch.setitem(clasp_engine.RECURSIONS, (-1, 1), lambda c: c.kappa(0, 0, (-1, 1)))
    table = KappaTable("recursive")
    with pytest.raises(CycleDetected):
        table.kappa(Weight(1, 0), Weight(-1, 1))
    assert KappaKey(Weight(1, 0), Weight(-1, 1)) not in table


@pytest.mark.parametrize("mu", EXTREMAL_WEIGHTS + (Weight(0, 0),))
def test_cleared_closed_form_specializes(mu):
    (num,), den = clear_denominators([closed_form_expr(mu)])
    lam = Weight(2, 1)
    realized = RationalFunction(
        num.substitute("A", lam.a).substitute("B", lam.b),
        den.substitute("A", lam.a).substitute("B", lam.b),
    )
    assert realized == kappa_closed(lam, mu)


def test_corollary_signs_are_consistent():
    assert derive_corollary_signs() == COROLLARY_SIGNS
    assert derive_corollary_signs(Weight(2, 5)) == COROLLARY_SIGNS


@pytest.mark.parametrize("varpi", EXTREMAL_WEIGHTS)
def test_corollary_product(varpi):
    for lam in (Weight(2, 3), Weight(4, 1)):
        sign, product = corollary_product(lam, varpi)
        assert product * sign == kappa_closed(lam, varpi)


def test_corollary_product_errors():
    with pytest.raises(UnknownWeight):
        corollary_product(Weight(1, 1), Weight(0, 0))
    with pytest.raises(NotDominant):
        corollary_product(Weight(-1, 0), Weight(1, 0))
    with pytest.raises(OutOfDomain):
        corollary_product(Weight(0, 0), Weight(-1, 0))


def test_expansion_of_two_one():
    certificate = expansion_certificate(Weight(2, 1))
    assert certificate.path == (1, 1, 2)
    assert [len(step.corrections) for step in certificate.steps] == [0, 2, 2]
    second = certificate.steps[1]
    assert [c.child for c in second.corrections] == [Weight(0, 1), Weight(0, 0)]
    assert [step.result for step in certificate.steps] == [Weight(1, 0), Weight(2, 0), Weight(2, 1)]
    for step in certificate.steps:
        for correction in step.corrections:
            assert correction.kappa * correction.kappa_inv == 1


def test_expansion_along_another_path():
    certificate = expansion_certificate(Weight(2, 1), [2, 1, 1])
    assert [step.weight for step in certificate.steps] == [Weight(0, 0), Weight(0, 1), Weight(1, 1)]
    assert default_path(Weight(0, 2)) == (2, 2)


def test_expansion_errors():
    with pytest.raises(BadPath):
        expansion_certificate(Weight(2, 1), [1, 2])
    with pytest.raises(BadPath):
        expansion_certificate(Weight(1, 0), [3])
    with pytest.raises(NotDominant):
        expansion_certificate(Weight(-1, 0))


def test_wall_clasp_fails_at_five():
    report = clasp_exists_at(Weight(0, 2), 5)
    assert not report.exists
    assert report.failing_key == KappaKey(Weight(0, 1), Weight(0, -1))
    assert report.vanishing == "numerator"


def test_clasp_survives_a_negligible_step():
    report = clasp_exists_at(Weight(1, 1), 6)
    assert report.exists
    assert report.failing_key is None
    assert Weight(1, 0) in report.negligible_steps


def test_small_clasps_exist_generically():
    assert clasp_exists_at(Weight(1, 1), 20).exists
    with pytest.raises(ClaspKitError):
        clasp_exists_at(Weight(1, 1), 0)


def weights_below(bound):
    """Dominant weights with a + 2b + 3 <= bound"""
    return [Weight(a, b) for a in range(bound) for b in range(bound // 2 + 1) if a + 2 * b + 3 <= bound]


@pytest.mark.parametrize("ell", [5, 7, 9])
def test_clasps_exist_up_to_the_alcove_edge(ell):
    table = KappaTable("closed")
    for w in weights_below(ell):
        assert clasp_exists_at(w, ell, table=table).exists, w


@pytest.mark.parametrize("ell", [5, 7, 9])
def test_first_failures_lie_just_past_the_edge(ell):
    table = KappaTable("closed")
    failing = [w for w in weights_below(ell + 1) if not clasp_exists_at(w, ell, table=table).exists]
    assert failing
    assert all(w.a + 2 * w.b + 3 == ell + 1 for w in failing)


@pytest.mark.parametrize("w", [Weight(1, 1), Weight(3, 0)])
def test_clasps_just_past_the_edge_fail_at_five(w):
    report = clasp_exists_at(w, 5)
    assert not report.exists
    assert report.failing_key is not None
