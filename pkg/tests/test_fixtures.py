"""Classical fixture algebras: current algebra and the weight-2 chiral field."""

from confal.engine import check_skew_symmetry
from confal.fixtures import (ChiralCarrier, CurrentCarrier, Vec,
                             axiom_fixture_run, chiral_generating_check,
                             current_generating_check)


def test_current_bracket_lowers_depth():
    carrier = CurrentCarrier()
    h1 = carrier.element("h", 1)
    e2 = carrier.element("e", 2)
    table = carrier.modes(h1, e2)
    assert sorted(table) == [0, 1]
    assert table[0] == Vec({("e", 2): 2})
    assert table[1] == Vec({("e", 1): 2})


def test_current_zero_mode_is_the_lie_bracket():
    carrier = CurrentCarrier()
    e1 = carrier.element("e", 1)
    f1 = carrier.element("f", 1)
    assert carrier.modes(e1, f1) == {0: Vec({("h", 1): 1})}


def test_chiral_self_bracket_at_bottom():
    carrier = ChiralCarrier()
    L = carrier.element(0)
    table = carrier.modes(L, L)
    assert table[0] == Vec({1: 1})
    assert table[1] == Vec({0: 2})
    assert 3 not in table


def test_chiral_skew_symmetry_sample():
    carrier = ChiralCarrier()
    pairs = [(carrier.element(m), carrier.element(n))
             for m in range(3) for n in range(3)]
    assert check_skew_symmetry(carrier, pairs).ok


def test_generating_function_expansions_match_mode_tables():
    assert current_generating_check(CurrentCarrier(), 3).ok
    assert chiral_generating_check(ChiralCarrier(), 3).ok


def test_full_fixture_run_is_clean():
    results = axiom_fixture_run(3)
    assert set(results) == {
        "current-derivative", "current-skew", "current-jacobi",
        "current-generating", "chiral-derivative", "chiral-skew",
        "chiral-jacobi", "chiral-generating"}
    for result in results.values():
        assert result.ok
