"""Graded basis symbols: weights, parity, the derivation, and rendering."""

from fractions import Fraction

import pytest

from confal.elements import Ambient, Element, make_key, parity, parse_element, weight


AMB1 = Ambient(1)
AMB2 = Ambient(2)
SPLIT = Ambient(2, (1, 1))


def unit(amb, p, q, i, j, m, n, coef=1):
    return Element.basis(amb, p, q, i, j, m, n, coef)


def test_weight_grading():
    assert unit(AMB1, 1, 1, 0, 0, 0, 0).weight() == Fraction(2)
    assert unit(AMB1, 1, 1, 1, 1, 0, 0).weight() == Fraction(1)
    assert unit(AMB1, 1, 1, 1, 1, 2, 1).weight() == Fraction(4)
    assert unit(SPLIT, 1, 2, 0, 1, 0, 0).weight() == Fraction(3, 2)


def test_parity_follows_symbol_and_unit():
    assert unit(AMB1, 1, 1, 0, 0, 1, 0).parity() == 0
    assert unit(SPLIT, 1, 2, 0, 1, 0, 0).parity() == 1
    assert unit(SPLIT, 1, 2, 1, 0, 0, 3).parity() == 1
    assert unit(SPLIT, 2, 2, 1, 1, 0, 0).parity() == 0


def test_grading_compatibility_is_enforced():
    with pytest.raises(ValueError):
        make_key(AMB1, 1, 1, 0, 1, 0, 0)
    with pytest.raises(ValueError):
        make_key(SPLIT, 1, 2, 0, 0, 0, 0)
    with pytest.raises(ValueError):
        make_key(AMB2, 3, 1, 0, 0, 0, 0)


def test_derivation_on_a_basis_symbol():
    e = unit(AMB1, 1, 1, 1, 1, 0, 0)
    assert e.partial() == unit(AMB1, 1, 1, 1, 1, 1, 0) + unit(AMB1, 1, 1, 1, 1, 0, 1)
    f = unit(AMB1, 1, 1, 0, 0, 1, 2)
    expect = 2 * unit(AMB1, 1, 1, 0, 0, 2, 2) + 3 * unit(AMB1, 1, 1, 0, 0, 1, 3)
    assert f.partial() == expect


def test_derivation_raises_weight_by_one():
    e = unit(AMB2, 2, 1, 1, 1, 1, 0)
    assert e.partial().weight() == e.weight() + 1


def test_linear_arithmetic_and_cancellation():
    a = unit(AMB1, 1, 1, 1, 1, 1, 0)
    b = unit(AMB1, 1, 1, 1, 1, 0, 1)
    assert (a + b) - a == b
    assert (a - a).is_zero()
    assert (-2) * a == a.scale(-2)
    assert Fraction(1, 2) * (2 * a) == a


def test_render_parse_round_trip():
    x = unit(AMB1, 1, 1, 1, 1, 2, 1, coef=-3)
    assert x.render() == "-3*E[1,1]{1,1}(2,1)"
    assert parse_element(AMB1, x.render()) == x
    y = unit(AMB2, 1, 2, 0, 0, 0, 1, coef=Fraction(5, 3)) + unit(AMB2, 2, 2, 1, 1, 0, 0)
    assert parse_element(AMB2, y.render()) == y
    assert parse_element(AMB1, Element.zero(AMB1).render()).is_zero()


def test_key_level_weight_and_parity_helpers():
    key = make_key(SPLIT, 1, 2, 0, 1, 1, 1)
    assert weight(key) == Fraction(7, 2)
    assert parity(key) == 1
