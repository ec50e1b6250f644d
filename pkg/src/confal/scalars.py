"""Exact rational scalars over Q and the generalized binomial coefficient.

All arithmetic in the package is exact; no floating point anywhere.
"""

from fractions import Fraction
from math import factorial

try:
    from gmpy2 import mpq as Scalar
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    Scalar = Fraction

ZERO = Scalar(0)
ONE = Scalar(1)

HALF = Fraction(1, 2)


def binomial(a: int, m: int) -> int:
    """Generalized binomial C(a, m) = a(a-1)...(a-m+1)/m! for any integer a, m >= 0."""
    if m < 0:
        raise ValueError("lower index must be a natural number")
    num = 1
    for i in range(m):
        num *= a - i
    return num // factorial(m)


def scalar_from_string(text: str) -> "Scalar":
    """Parse 'p' or 'p/q' into an exact scalar."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/")
        return Scalar(int(num), int(den))
    return Scalar(int(text))


def scalar_to_string(c) -> str:
    """Render a scalar as 'p' or 'p/q' in lowest terms."""
    c = Scalar(c)
    return str(c)
