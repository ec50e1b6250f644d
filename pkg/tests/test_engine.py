"""Mode expansion of the singular product and the axiom checkers."""

from fractions import Fraction
from itertools import product

import pytest

from confal.elements import Ambient, Element
from confal.engine import (MatrixCarrier, check_derivative_axiom, check_jacobi,
                           check_skew_symmetry, generic_mode, modes,
                           weighted_mode)

AMB1 = Ambient(1)


def odd(m, n, coef=1):
    return Element.basis(AMB1, 1, 1, 1, 1, m, n, coef)


def even(m, n, coef=1):
    return Element.basis(AMB1, 1, 1, 0, 0, m, n, coef)


def test_rank_one_odd_mode_table():
    got = modes(odd(1, 0), odd(0, 0))
    assert sorted(got) == [0, 1]
    assert got[0] == odd(1, 0) + odd(0, 1)
    assert got[1] == odd(0, 0)


def test_equal_odd_symbols_annihilate():
    assert modes(odd(0, 0), odd(0, 0)) == {}


def test_generic_mode_matches_mode_table():
    u, v = odd(1, 0), odd(0, 0)
    table = modes(u, v)
    for a in range(4):
        assert generic_mode(u, a, v) == table.get(a, Element.zero(AMB1))


def test_weighted_mode_reindexes_by_weight():
    u, v = even(1, 1), even(0, 0)
    table = modes(u, v)
    for a, elem in table.items():
        m = Fraction(a + 1) - u.weight()
        assert weighted_mode(u, m, v) == elem


def test_modes_shift_weight_consistently():
    u, v = even(1, 0), odd(0, 1)
    for a, elem in modes(u, v).items():
        assert elem.weight() == u.weight() + v.weight() - Fraction(a + 1)
        assert elem.parity() == (u.parity() + v.parity()) % 2


def test_bilinearity_of_the_product():
    u = odd(1, 0) + 2 * odd(0, 1)
    v = even(0, 0) - even(1, 0)
    lhs = modes(u, v)
    rhs: dict = {}
    for uu, cu in ((odd(1, 0), 1), (odd(0, 1), 2)):
        for vv, cv in ((even(0, 0), 1), (even(1, 0), -1)):
            for a, elem in modes(uu, vv).items():
                acc = rhs.get(a, Element.zero(AMB1)) + (cu * cv) * elem
                rhs[a] = acc
    rhs = {a: e for a, e in rhs.items() if not e.is_zero()}
    assert lhs == rhs


def test_axiom_checkers_pass_on_a_small_sweep():
    basis = [odd(0, 0), odd(1, 0), odd(0, 1), even(0, 0)]
    carrier = MatrixCarrier(AMB1)
    pairs = list(product(basis, basis))
    triples = list(product(basis, basis, basis))
    assert check_derivative_axiom(carrier, pairs).ok
    assert check_skew_symmetry(carrier, pairs).ok
    assert check_jacobi(carrier, triples, 3, 3).ok


def test_checkers_detect_a_broken_carrier():
    class Broken(MatrixCarrier):
        def partial(self, e):
            return 2 * super().partial(e)

    basis = [odd(0, 0), odd(1, 0)]
    pairs = list(product(basis, basis))
    result = check_derivative_axiom(Broken(AMB1), pairs)
    assert not result.ok
    assert result.counterexamples


def test_generic_mode_rejects_negative_index():
    with pytest.raises(ValueError):
        generic_mode(odd(0, 0), -1, odd(1, 0))
