"""
Tests for negligible weights and the lowest alcove at roots of unity
"""
import pytest

from claspkit.errors import EllTooSmall, NotDominant
from claspkit.fusion import (
    FusionContext, check_ell8_identity, in_lowest_alcove, is_negligible, lowest_alcove_interior,
    quantum_dim_at, upper_closure_weights,
)
from claspkit.root_data import Weight


def test_context():
    ctx = FusionContext(5)
    assert ctx.order == 10
    assert ctx.parity == "odd"
    assert FusionContext(6).parity == "even"
    with pytest.raises(EllTooSmall):
        FusionContext(4)


@pytest.mark.parametrize("ell,expected", [
    (5, [Weight(0, 1), Weight(2, 0)]),
    (6, [Weight(0, 1), Weight(1, 0)]),
    (7, [Weight(0, 2), Weight(2, 1), Weight(4, 0)]),
    (8, [Weight(0, 2), Weight(1, 1), Weight(2, 0)]),
])
def test_upper_closure(ell, expected):
    assert upper_closure_weights(FusionContext(ell)) == expected


@pytest.mark.parametrize("ell", range(5, 13))
def test_upper_closure_is_negligible(ell):
    ctx = FusionContext(ell)
    for lam in upper_closure_weights(ctx):
        assert is_negligible(lam, ctx), lam
        assert not in_lowest_alcove(lam, ctx)


@pytest.mark.parametrize("ell", range(5, 13))
def test_interior_is_not_negligible(ell):
    ctx = FusionContext(ell)
    interior = lowest_alcove_interior(ctx)
    assert interior[0] == Weight(0, 0)
    for lam in interior:
        assert not quantum_dim_at(lam, ctx).is_zero(), lam


def test_lowest_alcove_interiors():
    assert lowest_alcove_interior(FusionContext(5)) == [Weight(0, 0), Weight(1, 0)]
    assert lowest_alcove_interior(FusionContext(6)) == [Weight(0, 0)]
    assert lowest_alcove_interior(FusionContext(7)) == [
        Weight(0, 0), Weight(1, 0), Weight(0, 1), Weight(2, 0), Weight(1, 1), Weight(3, 0),
    ]


def test_negligible_needs_dominant_weight():
    ctx = FusionContext(5)
    with pytest.raises(NotDominant):
        is_negligible(Weight(-1, 0), ctx)
    assert not in_lowest_alcove(Weight(-1, 0), ctx)


def test_circle_identity_at_eight():
    assert check_ell8_identity(8)


def test_circle_identity_needs_eight():
    assert not check_ell8_identity(7)
    assert not check_ell8_identity(9)


@pytest.mark.parametrize("ell", range(5, 16))
def test_interior_matches_a_wide_search(ell):
    ctx = FusionContext(ell)
    wide = {Weight(a, b) for a in range(3 * ell) for b in range(3 * ell) if in_lowest_alcove(Weight(a, b), ctx)}
    interior = lowest_alcove_interior(ctx)
    assert set(interior) == wide
    assert len(interior) == len(wide)


@pytest.mark.parametrize("ell", range(5, 16))
def test_interior_and_upper_closure_are_disjoint(ell):
    ctx = FusionContext(ell)
    interior = lowest_alcove_interior(ctx)
    closure = upper_closure_weights(ctx)
    assert not set(interior) & set(closure)
    if ell % 2:
        assert len(closure) == (ell - 3) // 2 + 1
        assert len(interior) == sum((ell - 4 - 2 * b) + 1 for b in range((ell - 4) // 2 + 1))
    else:
        m = ell // 2 - 2
        assert len(closure) == (ell - 4) // 2 + 1
        assert len(interior) == m * (m + 1) // 2
