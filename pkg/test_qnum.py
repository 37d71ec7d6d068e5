"""
Tests for quantum integers and symbolic bracket expressions
"""
import pytest

from claspkit.errors import ClaspKitError, DivisionByZero
from claspkit.exact_arith import LaurentPoly, RationalFunction
from claspkit.qnum import (
    QFactor, QInt, SymExponent, SymExpr, clear_denominators, fractions_equal, make_term,
    qdenominator, qint, sym_qfraction,
)

q = LaurentPoly.q_power(1)
A = LaurentPoly.monomial(1, A=1)


def realize(x: LaurentPoly, a: int, b: int) -> LaurentPoly:
    """Read A as q^a and B as q^b"""
    return x.substitute("A", a).substitute("B", b)


def test_small_quantum_integers():
    assert qint(1) == 1
    assert qint(2) == q + q ** -1
    assert qint(3) == q ** 2 + 1 + q ** -2
    assert qint(0).is_zero()
    assert qint(-2) == -qint(2)
    assert qint(2, level=2) == q ** 2 + q ** -2
    assert QInt(3, 2).realize() == qint(3, 2)


def test_level_must_be_positive():
    with pytest.raises(ClaspKitError):
        qint(2, level=0)


@pytest.mark.parametrize("n", range(1, 12))
def test_bracket_times_denominator(n):
    assert qint(n) * qdenominator() == q ** n - q ** -n


@pytest.mark.parametrize("n", range(1, 12))
def test_even_bracket_splits(n):
    assert qint(2 * n) == qint(2) * qint(n, 2)


def test_sym_exponent_text_and_shift():
    assert str(SymExponent(1, 2, 3)) == "a+2b+3"
    assert str(SymExponent(0, 2, -1)) == "2b-1"
    assert str(SymExponent(-1, 0, 0)) == "-a"
    assert str(SymExponent()) == "0"
    assert SymExponent(1, 2, 3).shift(1, -1) == SymExponent(1, 2, 2)
    assert SymExponent(2, 2, 4).evaluate(1, 1) == 8


def test_sym_exponent_normalization():
    assert SymExponent(-1, 0, 2).normalized() == (-1, SymExponent(1, 0, -2))
    assert SymExponent(0, 0, 3).normalized() == (1, SymExponent(0, 0, 3))


def test_make_term_cancels_and_normalizes_signs():
    a = QFactor(SymExponent(1, 0, 0))
    minus_a = QFactor(SymExponent(-1, 0, 0))
    assert make_term(3, [a], [a]).num == ()
    term = make_term(1, [minus_a])
    assert term.coeff == -1
    assert term.num == (a,)
    assert make_term(1, [QFactor(SymExponent())]) is None
    with pytest.raises(DivisionByZero):
        make_term(1, [], [QFactor(SymExponent())])


def test_like_terms_merge():
    x = SymExpr.bracket(1, 0, 1) + SymExpr.bracket(1, 0, 1)
    assert len(x.terms) == 1
    assert x.terms[0].coeff == 2
    assert (x - x).is_zero()


def test_evaluate_and_shift():
    assert SymExpr.bracket(1, 0, 1).evaluate(2, 0) == RationalFunction(qint(3))
    assert SymExpr.bracket(1, 0, 0).shift(1, 0) == SymExpr.bracket(1, 0, 1)
    ratio = SymExpr.fraction(1, [QFactor(SymExponent(0, 2, 2))], [QFactor(SymExponent(0, 2, 0))])
    assert ratio.evaluate(0, 1) == RationalFunction(qint(4), qint(2))


def test_evaluate_at_a_zero_denominator():
    x = SymExpr.fraction(1, [], [QFactor(SymExponent(1, 0, -1))])
    with pytest.raises(DivisionByZero):
        x.evaluate(1, 0)


def test_reciprocal():
    x = SymExpr.fraction(-2, [QFactor(SymExponent(1, 0, 1))], [QFactor(SymExponent(1, 0, 0))])
    assert x * x.reciprocal() == SymExpr.constant(1)
    with pytest.raises(ClaspKitError):
        (SymExpr.bracket(1, 0, 0) + 1).reciprocal()
    with pytest.raises(DivisionByZero):
        SymExpr().reciprocal()


def test_cleared_identity_holds():
    # [a+1][a-1] + 1 == [a]^2
    lhs = SymExpr.bracket(1, 0, 1) * SymExpr.bracket(1, 0, -1) + 1
    rhs = SymExpr.bracket(1, 0, 0) * SymExpr.bracket(1, 0, 0)
    (left, right), den = clear_denominators([lhs, rhs])
    assert left == right
    assert den == qdenominator() ** 2


def test_cleared_identity_fails_when_false():
    lhs = SymExpr.bracket(1, 0, 1) * SymExpr.bracket(1, 0, -1)
    rhs = SymExpr.bracket(1, 0, 0) * SymExpr.bracket(1, 0, 0)
    (left, right), _ = clear_denominators([lhs, rhs])
    assert not (left - right).is_zero()


@pytest.mark.parametrize("a,b", [(1, 0), (2, 1), (3, 4)])
def test_cleared_form_specializes(a, b):
    expr = SymExpr.fraction(
        -1,
        [QFactor(SymExponent(2, 2, 4)), QFactor(SymExponent(1, 0, 1))],
        [QFactor(SymExponent(2, 2, 2)), QFactor(SymExponent(1, 0, 0))],
    ) + SymExpr.bracket(0, 1, 1, level=2)
    (num,), den = clear_denominators([expr])
    assert RationalFunction(realize(num, a, b), realize(den, a, b)) == expr.evaluate(a, b)


def test_sym_qfraction_of_a_bracket():
    num, den = sym_qfraction(SymExponent(1, 0, 0))
    assert num == A - A ** -1
    assert den == q - q ** -1
    assert fractions_equal((LaurentPoly.constant(2), LaurentPoly.constant(4)),
                           (LaurentPoly.constant(1), LaurentPoly.constant(2)))


@pytest.mark.parametrize("n", range(-20, 21))
def test_three_term_bracket_relation(n):
    assert -qint(n + 1) == -qint(2) * qint(n) + qint(n - 1)
