"""
Tests for weights, roots and the Weyl group of C2
"""
import pytest

from claspkit.errors import ClaspKitError, UnknownWeight
from claspkit.root_data import (
    ALL_FUND_WEIGHTS, ALPHA_1, ALPHA_2, POSITIVE_ROOTS, RHO, Weight, d_min, dominance_leq, element,
    find_root, fund_index, longest_element, make_root, pairing, phi_set, weyl_act, weyl_group,
)


def test_weight_parsing():
    assert Weight.parse("(1,-1)") == Weight(1, -1)
    assert Weight.parse(" 2, 3 ") == Weight(2, 3)
    with pytest.raises(ClaspKitError):
        Weight.parse("1;2")
    with pytest.raises(ClaspKitError):
        Weight.parse("1,2,3")


def test_epsilon_coordinates():
    assert RHO.epsilon == (2, 1)
    assert Weight.from_epsilon(*Weight(3, 2).epsilon) == Weight(3, 2)
    assert str(Weight(-2, 1)) == "(-2,1)"


def test_generators():
    assert element("s").act(Weight(1, 0)) == Weight(-1, 1)
    assert element("t").act(Weight(0, 1)) == Weight(2, -1)
    assert str(element("ss")) == "1"
    assert element("tt").length == 0


def test_weyl_group_order_and_longest_element():
    group = weyl_group()
    assert len(group) == 8
    assert [w.length for w in group] == [0, 1, 1, 2, 2, 3, 3, 4]
    w0 = longest_element()
    assert w0.word == "stst"
    assert weyl_act(w0, Weight(2, 3)) == Weight(-2, -3)


def test_group_products():
    s, t = element("s"), element("t")
    assert s * t == element("st")
    assert (s * t) * (s * t) == element("stst")
    assert element("ststst") == element("ts")


@pytest.mark.parametrize("varpi,word", [
    (Weight(1, 0), ""),
    (Weight(0, 1), ""),
    (Weight(0, 0), ""),
    (Weight(-1, 1), "s"),
    (Weight(2, -1), "t"),
    (Weight(1, -1), "st"),
    (Weight(-2, 1), "ts"),
    (Weight(-1, 0), "sts"),
    (Weight(0, -1), "tst"),
])
def test_shortest_dominating_element(varpi, word):
    w = d_min(varpi)
    assert w.word == word
    assert w.act(varpi).is_dominant()


@pytest.mark.parametrize("varpi", ALL_FUND_WEIGHTS)
def test_inversion_set_size_is_length(varpi):
    assert len(phi_set(varpi)) == d_min(varpi).length


def test_d_min_rejects_other_weights():
    with pytest.raises(UnknownWeight):
        d_min(Weight(1, 1))


def test_roots():
    assert [alpha.name for alpha in POSITIVE_ROOTS] == ["a1", "a2", "a1+a2", "2a1+a2"]
    assert [alpha.level for alpha in POSITIVE_ROOTS] == [1, 2, 1, 2]
    assert ALPHA_2.coroot == (0, 1)
    assert find_root("a1") is ALPHA_1
    assert find_root("a3") is None
    with pytest.raises(ClaspKitError):
        make_root((1, 2))


def test_pairings_with_rho():
    assert [pairing(alpha, RHO) for alpha in POSITIVE_ROOTS] == [1, 1, 3, 2]


def test_dominance_order():
    assert dominance_leq(Weight(0, 0), Weight(0, 1))
    assert not dominance_leq(Weight(0, 0), Weight(1, 0))
    assert not dominance_leq(Weight(1, 0), Weight(0, 1))
    assert dominance_leq(Weight(0, 1), Weight(2, 0))


def test_fundamental_index():
    assert fund_index(Weight(0, 0)) == 2
    assert fund_index(Weight(-1, 0)) == 1
    with pytest.raises(UnknownWeight):
        fund_index(Weight(1, 1))


BOX = [Weight(a, b) for a in range(-10, 10) for b in range(-10, 10)]


@pytest.mark.slow
def test_dominance_is_a_partial_order():
    for x in BOX:
        assert dominance_leq(x, x)
        for y in BOX:
            if x != y and dominance_leq(x, y):
                assert not dominance_leq(y, x), (x, y)
    small = [w for w in BOX if -3 <= w.a < 3 and -3 <= w.b < 3]
    for x in small:
        above = [y for y in small if dominance_leq(x, y)]
        for y in above:
            for z in small:
                if dominance_leq(y, z):
                    assert dominance_leq(x, z), (x, y, z)


def test_dominance_is_translation_invariant():
    step = Weight(3, -1)
    for x in BOX[::7]:
        for y in BOX[::11]:
            assert dominance_leq(x, y) == dominance_leq(x + step, y + step)
