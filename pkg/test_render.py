"""
Tests for quantum integer rendering
"""
from fractions import Fraction

import pytest

from claspkit.clasp_engine import kappa_closed
from claspkit.exact_arith import LaurentPoly, RationalFunction
from claspkit.qnum import qint
from claspkit.render import bracket_factorization, format_lp, format_rf
from claspkit.root_data import Weight

q = LaurentPoly.q_power(1)


def brackets(top, bottom=(), scale=1):
    num, den = LaurentPoly.one(), LaurentPoly.one()
    for n in top:
        num = num * qint(n)
    for n in bottom:
        den = den * qint(n)
    return RationalFunction(num * scale, den)


@pytest.mark.parametrize("value,text", [
    (RationalFunction(0), "0"),
    (RationalFunction(1), "1"),
    (RationalFunction(-1), "-1"),
    (brackets([2], scale=-1), "-[2]"),
    (brackets([4], [2]), "[4]/[2]"),
    (brackets([4], [2], scale=-1), "-[4]/[2]"),
    (brackets([5], [2]), "[5]/[2]"),
    (brackets([6, 5], [3, 2]), "[6][5]/([3][2])"),
    (brackets([6, 2], [3], scale=-1), "-[6][2]/[3]"),
    (brackets([8, 3], [6], scale=-1), "-[8][3]/[6]"),
    (brackets([3], scale=2), "2*[3]"),
])
def test_format_rf(value, text):
    assert format_rf(value) == text


def test_kappa_values_render_as_brackets():
    assert format_rf(kappa_closed(Weight(0, 1), Weight(0, -1))) == "[6][5]/([3][2])"
    assert format_rf(kappa_closed(Weight(1, 0), Weight(-1, 1))) == "-[2]"


def test_factorization_round_trips_through_value():
    value = brackets([7, 4], [2, 2])
    scale, top, bottom = bracket_factorization(value)
    assert scale == 1
    assert brackets(top, bottom) == value


def test_non_bracket_values_fall_back_to_polynomials():
    assert bracket_factorization(RationalFunction(q + 1)) is None
    assert format_rf(RationalFunction(q)) == "q"
    assert format_rf(RationalFunction(Fraction(1, 2))) == "1/2"
    assert format_lp(q ** 2 - 3) == "q^2 - 3"
