"""Span probes, finite weight-space products, and the free-module splitting."""

import random
from fractions import Fraction

import pytest

from confal.elements import Ambient, Element
from confal.families import build_family
from confal.probes import (designated_generators, free_module_decompose,
                           free_module_expand, generator_count_bound_check,
                           generator_probe, jordan_product,
                           jordan_structure_check, simplicity_probe)


def test_simplicity_probe_reaches_full_span():
    fam = build_family("rkk:1", k=1)
    report = simplicity_probe(fam, Fraction(3), slack=2)
    assert report.status == "reached-full-span"
    assert report.as_dict()["status"] == "reached-full-span"


def test_generator_probe_from_designated_seeds():
    fam = build_family("rkk:2", k=1)
    report = generator_probe(fam, Fraction(4))
    assert report.status == "reached-full-span"


def test_generator_probe_stalls_on_an_inadequate_seed():
    fam = build_family("rkk:2", k=1)
    seed = Element.basis(fam.ambient, 1, 1, 0, 0, 0, 1)
    report = generator_probe(fam, Fraction(4), seeds=[seed])
    assert report.status == "stalled"


def test_every_selector_has_designated_generators():
    for name, kw in (("rkk:1", {"k": 1}), ("rkk:2", {"k": 1}),
                     ("star1", {"k": 1}), ("star2", {"k": 1}),
                     ("dagger1", {"k": 2}), ("dagger2", {"k": 2}),
                     ("super:0", {"k1": 1, "k2": 1}),
                     ("superstar", {"k1": 1, "k2": 1}),
                     ("superdagger", {"k1": 2, "k2": 2})):
        fam = build_family(name, **kw)
        gens = designated_generators(fam)
        assert gens
        for g in gens:
            assert fam.contains(g)


def test_jordan_product_is_commutative_on_the_even_bottom_space():
    fam = build_family("star2", k=2)
    bottom = fam.basis_at_weight(Fraction(2))
    for u in bottom:
        for v in bottom:
            assert jordan_product(u, v) == jordan_product(v, u)


def test_jordan_structure_all_kinds():
    assert jordan_structure_check("A", 1).ok
    assert jordan_structure_check("gl", 2).ok
    assert jordan_structure_check("B", 2).ok
    assert jordan_structure_check("C", 2).ok


def test_jordan_structure_rejects_unknown_kind():
    with pytest.raises(ValueError):
        jordan_structure_check("Z", 2)


def test_free_module_round_trip_on_random_elements():
    amb = Ambient(2)
    rng = random.Random(7)
    sectors = [(p, q, i, j) for p in (1, 2) for q in (1, 2)
               for i in (0, 1) for j in (0, 1) if (i + j) % 2 == 0]
    for _ in range(50):
        elem = Element.zero(amb)
        for _ in range(rng.randint(1, 5)):
            p, q, i, j = rng.choice(sectors)
            m, n = rng.randint(0, 3), rng.randint(0, 3)
            coef = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
            elem = elem + Element.basis(amb, p, q, i, j, m, n, coef)
        decomposition = free_module_decompose(elem)
        assert free_module_expand(amb, decomposition) == elem


def test_generator_dimensions_stay_bounded():
    assert generator_count_bound_check(Ambient(1), Fraction(5)).ok
    assert generator_count_bound_check(Ambient(2, (1, 1)), Fraction(4)).ok
