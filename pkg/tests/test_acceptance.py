"""End-to-end acceptance checks for the whole package.

Everything here is exact rational arithmetic, so every comparison is for
strict equality; there are no tolerances anywhere.
"""

import random
from fractions import Fraction
from itertools import product

import pytest

from confal.corpus import run_corpus
from confal.elements import Ambient, Element
from confal.engine import (MatrixCarrier, check_derivative_axiom, check_jacobi,
                           check_skew_symmetry)
from confal.families import boson_fermion_iso_check, build_family
from confal.fixtures import ChiralCarrier, axiom_fixture_run, chiral_generating_check
from confal.oracle import crosscheck_even_sector
from confal.probes import (free_module_decompose, free_module_expand,
                           generator_count_bound_check, generator_probe,
                           jordan_structure_check, simplicity_probe)


def ambient_basis(amb, cap):
    """All canonical basis symbols of the ambient algebra up to a weight cap."""
    out = []
    for p in range(1, amb.k + 1):
        for q in range(1, amb.k + 1):
            for i in (0, 1):
                for j in (0, 1):
                    if (i + j) % 2 != amb.unit_parity(p, q):
                        continue
                    s = 0
                    while Fraction(2 * s + 4 - i - j, 2) <= cap:
                        for m in range(s + 1):
                            out.append(Element.basis(amb, p, q, i, j, m, s - m))
                        s += 1
    return out


# 1. Axiom suite: exhaustive sweeps with zero violations.

@pytest.mark.parametrize("k", [1, 2])
def test_axiom_suite_trivial_grading(k):
    amb = Ambient(k)
    carrier = MatrixCarrier(amb)
    pairs = list(product(ambient_basis(amb, Fraction(4)), repeat=2))
    assert check_derivative_axiom(carrier, pairs).ok
    assert check_skew_symmetry(carrier, pairs).ok
    triples = list(product(ambient_basis(amb, Fraction(3)), repeat=3))
    assert check_jacobi(carrier, triples, 4, 4).ok


def test_axiom_suite_split_grading():
    amb = Ambient(2, (1, 1))
    carrier = MatrixCarrier(amb)
    pairs = list(product(ambient_basis(amb, Fraction(3)), repeat=2))
    assert check_derivative_axiom(carrier, pairs).ok
    assert check_skew_symmetry(carrier, pairs).ok
    triples = list(product(ambient_basis(amb, Fraction(5, 2)), repeat=3))
    assert check_jacobi(carrier, triples, 3, 3).ok


# 2. Oracle equivalence: the even sector against the free bosonic model.

@pytest.mark.parametrize("k", [1, 2])
def test_oracle_equivalence(k):
    report = crosscheck_even_sector(k, 3)
    assert report.ok
    assert report.checked > 0
    assert not report.counterexamples


# 3. Identity corpus over the frozen closed forms.

def test_identity_corpus():
    report = run_corpus(k=2, max_exp=3, levels=(0, 1))
    assert report["ok"]
    assert report["checked"] > 0
    for row in report["cases"]:
        assert not row["failures"], row["tag"]


# 4. Simplicity probes reach full span within the window.

SIMPLICITY_CASES = [
    ("rkk:1", {"k": 1}), ("rkk:2", {"k": 1}), ("rkk:2", {"k": 2}),
    ("star1", {"k": 2}), ("star2", {"k": 2}),
    ("dagger1", {"k": 2}), ("dagger2", {"k": 2}),
    ("super:0", {"k1": 1, "k2": 1}), ("superstar", {"k1": 1, "k2": 1}),
    ("superdagger", {"k1": 2, "k2": 2}),
]


@pytest.mark.parametrize("name,kw", SIMPLICITY_CASES,
                         ids=[f"{n}-{tuple(kw.values())}" for n, kw in SIMPLICITY_CASES])
def test_simplicity_probe(name, kw):
    fam = build_family(name, **kw)
    report = simplicity_probe(fam, Fraction(4), slack=2)
    assert report.status == "reached-full-span", report.as_dict()


# 5. Generator probes: each designated generating set spans to weight 6.

GENERATOR_CASES = [
    ("rkk:1", {"k": 1}), ("rkk:1", {"k": 2}),
    ("rkk:2", {"k": 1}), ("rkk:2", {"k": 2}),
    ("rkk:3", {"k": 1}), ("rkk:3", {"k": 2}),
    ("star1", {"k": 1}), ("star1", {"k": 2}),
    ("star2", {"k": 1}), ("star2", {"k": 2}),
    ("dagger1", {"k": 2}), ("dagger1", {"k": 4}),
    ("dagger2", {"k": 2}), ("dagger2", {"k": 4}),
    ("super:0", {"k1": 1, "k2": 1}), ("super:0", {"k1": 2, "k2": 1}),
    ("super:1", {"k1": 1, "k2": 1}),
    ("superstar", {"k1": 1, "k2": 1}), ("superstar", {"k1": 2, "k2": 1}),
    ("superdagger", {"k1": 2, "k2": 2}), ("superdagger", {"k1": 2, "k2": 4}),
]


@pytest.mark.parametrize("name,kw", GENERATOR_CASES,
                         ids=[f"{n}-{tuple(kw.values())}" for n, kw in GENERATOR_CASES])
def test_generator_probe(name, kw):
    fam = build_family(name, **kw)
    report = generator_probe(fam, Fraction(6))
    assert report.status == "reached-full-span", report.as_dict()


# 6. Jordan structure with the exact scalar normalizations.

def test_jordan_structure():
    for ell in (0, 1):
        assert jordan_structure_check("A", 2, ell).ok
    assert jordan_structure_check("gl", 2, 0).ok
    assert jordan_structure_check("B", 2).ok
    assert jordan_structure_check("C", 2).ok


# 7. Fixtures pass the full axiom suite and the two-pole expansion.

def test_fixture_suite_depth_four():
    results = axiom_fixture_run(4)
    for name, result in results.items():
        assert result.ok, (name, result.counterexamples[:1])


def test_chiral_two_pole_structure():
    assert chiral_generating_check(ChiralCarrier(), 4).ok


# 8. Structural properties of the underlying free module.

def random_element(amb, rng, cap):
    sectors = [(p, q, i, j)
               for p in range(1, amb.k + 1) for q in range(1, amb.k + 1)
               for i in (0, 1) for j in (0, 1)
               if (i + j) % 2 == amb.unit_parity(p, q)]
    elem = Element.zero(amb)
    for _ in range(rng.randint(1, 6)):
        p, q, i, j = rng.choice(sectors)
        bound = int(cap - Fraction(4 - i - j, 2))
        m = rng.randint(0, bound)
        n = rng.randint(0, bound - m)
        coef = Fraction(rng.randint(-20, 20), rng.randint(1, 7))
        elem = elem + Element.basis(amb, p, q, i, j, m, n, coef)
    return elem


def test_free_module_round_trip_thousand_random_elements():
    rng = random.Random(20260823)
    ambients = [Ambient(1), Ambient(2), Ambient(2, (1, 1))]
    for idx in range(1000):
        amb = ambients[idx % len(ambients)]
        elem = random_element(amb, rng, Fraction(6))
        decomposition = free_module_decompose(elem)
        assert free_module_expand(amb, decomposition) == elem


def test_generator_dimension_bound():
    assert generator_count_bound_check(Ambient(1), Fraction(6)).ok
    assert generator_count_bound_check(Ambient(2), Fraction(6)).ok
    assert generator_count_bound_check(Ambient(2, (1, 1)), Fraction(6)).ok


@pytest.mark.parametrize("k", [1, 2])
def test_block_reindexing_isomorphism(k):
    assert boson_fermion_iso_check(k, Fraction(4)).ok
