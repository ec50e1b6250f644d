"""Exact scalar arithmetic and the generalized binomial coefficient."""

from fractions import Fraction

from confal.scalars import Scalar, binomial, scalar_from_string, scalar_to_string


def test_binomial_natural_arguments():
    assert binomial(3, 2) == 3
    assert binomial(5, 0) == 1
    assert binomial(2, 5) == 0
    assert binomial(0, 0) == 1


def test_binomial_negative_top_argument():
    assert binomial(-1, 1) == -1
    assert binomial(-2, 1) == -2
    assert binomial(-1, 3) == -1
    assert binomial(-3, 2) == 6


def test_scalar_is_exact_rational():
    third = Scalar(1) / Scalar(3)
    assert 3 * third == Scalar(1)
    assert Scalar(7, 2) - Scalar(3) == Scalar(1, 2)


def test_scalar_string_round_trip():
    for text in ("0", "1", "-5", "3/7", "-22/9"):
        assert scalar_to_string(scalar_from_string(text)) == text
    assert scalar_from_string("4/2") == Scalar(2)


def test_scalar_interoperates_with_fraction():
    assert Scalar(1, 2) == Fraction(1, 2)
    assert Scalar(2, 4) == Scalar(1, 2)
