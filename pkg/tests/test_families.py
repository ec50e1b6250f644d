"""Family construction, involutions, closure, and the block reindexing map."""

from fractions import Fraction

import pytest

from confal.elements import Ambient, Element
from confal.families import (boson_fermion_iso_check, build_family,
                             closure_check, symplectic_involution,
                             transpose_involution)


def test_transpose_involution_fixes_diagonal():
    sigma = transpose_involution(2)
    assert sigma.image_unit(1, 1) == (1, 1, 1)
    assert sigma.image_unit(1, 2) == (1, 2, 1)


def test_symplectic_involution_swaps_halves_with_signs():
    sigma = symplectic_involution((2,))
    assert sigma.image_unit(1, 1) == (1, 2, 2)
    assert sigma.image_unit(2, 2) == (1, 1, 1)
    assert sigma.image_unit(1, 2) == (-1, 1, 2)
    assert sigma.image_unit(2, 1) == (-1, 2, 1)


def test_symplectic_involution_needs_even_blocks():
    with pytest.raises(ValueError):
        symplectic_involution((3,))


def test_selector_validation():
    with pytest.raises(ValueError):
        build_family("rkk:2", k=0)
    with pytest.raises(ValueError):
        build_family("nonsense", k=1)
    with pytest.raises(ValueError):
        build_family("dagger2", k=3)
    with pytest.raises(ValueError):
        build_family("super:0", k1=1)


def test_dimension_ladder_of_the_scalar_level_two_family():
    fam = build_family("rkk:2", k=1)
    assert fam.dim_at_weight(Fraction(2)) == 1
    assert fam.dim_at_weight(Fraction(5)) == 4
    assert fam.dim_at_weight(Fraction(1)) == 0


def test_level_one_family_lives_in_the_odd_diagonal_block():
    fam = build_family("rkk:1", k=1)
    assert fam.dim_at_weight(Fraction(1)) == 1
    basis = fam.basis_at_weight(Fraction(1))
    assert basis[0] == Element.basis(fam.ambient, 1, 1, 1, 1, 0, 0)


def test_split_family_has_half_integer_weights():
    fam = build_family("super:0", k1=1, k2=1)
    weights = fam.weights_up_to(Fraction(2))
    assert Fraction(3, 2) in weights
    assert fam.dim_at_weight(Fraction(3, 2)) == 2


def test_fixed_point_family_membership():
    fam = build_family("star2", k=2)
    amb = fam.ambient
    sym = (Element.basis(amb, 1, 2, 0, 0, 1, 0)
           + Element.basis(amb, 2, 1, 0, 0, 0, 1))
    anti = (Element.basis(amb, 1, 2, 0, 0, 1, 0)
            - Element.basis(amb, 2, 1, 0, 0, 0, 1))
    assert fam.contains(sym)
    assert not fam.contains(anti)


def test_families_close_under_all_modes():
    for name, kw in (("rkk:1", {"k": 1}), ("star1", {"k": 2}),
                     ("dagger2", {"k": 2}), ("super:0", {"k1": 1, "k2": 1})):
        fam = build_family(name, **kw)
        assert closure_check(fam, Fraction(3)).ok


def test_block_reindexing_is_a_structure_map():
    assert boson_fermion_iso_check(1, Fraction(3)).ok
