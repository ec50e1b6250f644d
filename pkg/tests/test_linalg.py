"""Exact sparse row reduction used by the span probes."""

from fractions import Fraction

from confal.linalg import Echelon


def test_insert_and_rank():
    ech = Echelon()
    assert ech.insert({"a": Fraction(1), "b": Fraction(2)})
    assert ech.insert({"b": Fraction(1)})
    assert not ech.insert({"a": Fraction(2), "b": Fraction(1)})
    assert ech.rank == 2


def test_reduce_returns_exact_remainder():
    ech = Echelon()
    ech.insert({"x": Fraction(2), "y": Fraction(1)})
    rem = ech.reduce({"x": Fraction(1), "z": Fraction(3)})
    assert "x" not in rem
    assert rem["z"] == Fraction(3)
    assert rem["y"] == Fraction(-1, 2)


def test_contains_and_spans():
    ech = Echelon()
    ech.insert({"x": Fraction(1)})
    ech.insert({"y": Fraction(1), "z": Fraction(1)})
    assert ech.contains({"x": Fraction(7)})
    assert not ech.contains({"z": Fraction(1)})
    assert ech.spans([{"x": Fraction(1), "y": Fraction(2), "z": Fraction(2)}])
    assert not ech.spans([{"y": Fraction(1)}])


def test_zero_vector_is_never_new():
    ech = Echelon()
    assert not ech.insert({})
    assert ech.contains({})
    assert ech.rank == 0
