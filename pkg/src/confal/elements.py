"""Basis symbols (E_{p,q})_{[i,j]}(m,n) and sparse rational combinations of them.

An ambient fixes the matrix size k and the Z2-grading of the matrix algebra:
either trivial (everything even) or split at a block boundary k1, in which case
a unit E_{p,q} is odd exactly when (p,q) crosses the boundary.  A key's block
pair [i,j] must match the parity of its unit, and exponents are natural numbers
(symbols with negative exponents are zero by convention and never built).
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple

from .scalars import Scalar, scalar_from_string, scalar_to_string


@dataclass(frozen=True)
class Ambient:
    k: int
    split: tuple[int, int] | None = None  # (k1, k2) or None for the trivial grading

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("matrix size must be positive")
        if self.split is not None:
            k1, k2 = self.split
            if k1 < 1 or k2 < 1 or k1 + k2 != self.k:
                raise ValueError("split sizes must be positive and sum to k")

    def unit_parity(self, p: int, q: int) -> int:
        if not (1 <= p <= self.k and 1 <= q <= self.k):
            raise ValueError("unit index out of range")
        if self.split is None:
            return 0
        k1 = self.split[0]
        return 0 if (p <= k1) == (q <= k1) else 1


class BasisKey(NamedTuple):
    """Symbol (E_{p,q})_{[i,j]}(m,n); tuple order (i,j,p,q,m,n) is the canonical order."""

    i: int
    j: int
    p: int
    q: int
    m: int
    n: int


def make_key(ambient: Ambient, p: int, q: int, i: int, j: int, m: int, n: int) -> BasisKey:
    if i not in (0, 1) or j not in (0, 1):
        raise ValueError("block indices must be 0 or 1")
    if m < 0 or n < 0:
        raise ValueError("exponents must be natural numbers")
    if (i + j) % 2 != ambient.unit_parity(p, q):
        raise ValueError(
            f"unit E[{p},{q}] has parity {ambient.unit_parity(p, q)}, "
            f"incompatible with block [{i},{j}]"
        )
    return BasisKey(i, j, p, q, m, n)


def weight(key: BasisKey) -> Fraction:
    """Exact half-integer weight m + n + d_{i,0} + d_{j,0} + (d_{i,1}+d_{j,1})/2."""
    return Fraction(2 * (key.m + key.n) + 4 - key.i - key.j, 2)


def parity(key: BasisKey) -> int:
    return (key.i + key.j) % 2


class Element:
    """Sparse rational combination of basis keys over a fixed ambient."""

    __slots__ = ("ambient", "terms")

    def __init__(self, ambient: Ambient, terms: dict | None = None):
        self.ambient = ambient
        pruned = {}
        if terms:
            for key, coef in terms.items():
                c = Scalar(coef)
                if c:
                    pruned[key] = c
        self.terms = pruned

    @classmethod
    def zero(cls, ambient: Ambient) -> "Element":
        return cls(ambient)

    @classmethod
    def basis(cls, ambient: Ambient, p: int, q: int, i: int, j: int, m: int, n: int,
              coef=1) -> "Element":
        return cls(ambient, {make_key(ambient, p, q, i, j, m, n): coef})

    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> Iterator[tuple[BasisKey, "Scalar"]]:
        for key in sorted(self.terms):
            yield key, self.terms[key]

    def _check(self, other: "Element"):
        if self.ambient != other.ambient:
            raise ValueError("ambient mismatch")

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        merged = dict(self.terms)
        for key, coef in other.terms.items():
            c = merged.get(key, 0) + coef
            if c:
                merged[key] = c
            else:
                merged.pop(key, None)
        out = Element.__new__(Element)
        out.ambient = self.ambient
        out.terms = merged
        return out

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __neg__(self) -> "Element":
        out = Element.__new__(Element)
        out.ambient = self.ambient
        out.terms = {key: -coef for key, coef in self.terms.items()}
        return out

    def scale(self, c) -> "Element":
        c = Scalar(c)
        out = Element.__new__(Element)
        out.ambient = self.ambient
        out.terms = {key: c * coef for key, coef in self.terms.items()} if c else {}
        return out

    def __rmul__(self, c) -> "Element":
        return self.scale(c)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Element) and self.ambient == other.ambient
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ambient, tuple(sorted(self.terms.items()))))

    def partial(self) -> "Element":
        """The derivation: u(m,n) -> (m+1)u(m+1,n) + (n+1)u(m,n+1), extended linearly."""
        out = {}
        for key, coef in self.terms.items():
            up = key._replace(m=key.m + 1)
            out[up] = out.get(up, 0) + (key.m + 1) * coef
            right = key._replace(n=key.n + 1)
            out[right] = out.get(right, 0) + (key.n + 1) * coef
        return Element(self.ambient, out)

    def weight(self) -> Fraction | None:
        """Common weight of all keys, or None if mixed or zero."""
        weights = {weight(key) for key in self.terms}
        if len(weights) == 1:
            return weights.pop()
        return None

    def parity(self) -> int | None:
        """Common parity of all keys, or None if mixed; 0 for the zero element."""
        if not self.terms:
            return 0
        parities = {parity(key) for key in self.terms}
        if len(parities) == 1:
            return parities.pop()
        return None

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key, coef in self.items():
            body = f"E[{key.p},{key.q}]{{{key.i},{key.j}}}({key.m},{key.n})"
            mag = coef if coef > 0 else -coef
            piece = body if mag == 1 else f"{scalar_to_string(mag)}*{body}"
            if not parts:
                parts.append(piece if coef > 0 else "-" + piece)
            else:
                parts.append(("+ " if coef > 0 else "- ") + piece)
        return " ".join(parts)

    def __repr__(self):
        return f"<Element {self.render()}>"


_TERM_RE = re.compile(
    r"^(?:(-?\d+(?:/\d+)?)\*)?"
    r"E\[(\d+),(\d+)\]\{(\d+),(\d+)\}\((\d+),(\d+)\)$"
)


def parse_element(ambient: Ambient, text: str) -> Element:
    """Inverse of Element.render for the canonical text grammar."""
    text = text.strip()
    if text == "0":
        return Element.zero(ambient)
    # split into signed terms at top-level +/- separators
    chunks = re.split(r"\s+([+-])\s+", text)
    terms = {}
    sign = 1
    pending = chunks[0]
    queue = [(1, pending)]
    for idx in range(1, len(chunks), 2):
        sign = 1 if chunks[idx] == "+" else -1
        queue.append((sign, chunks[idx + 1]))
    for sign, chunk in queue:
        chunk = chunk.strip()
        neg = 1
        if chunk.startswith("-"):
            neg = -1
            chunk = chunk[1:]
        match = _TERM_RE.match(chunk)
        if not match:
            raise ValueError(f"malformed term: {chunk!r}")
        coef_text, p, q, i, j, m, n = match.groups()
        coef = scalar_from_string(coef_text) if coef_text else Scalar(1)
        key = make_key(ambient, int(p), int(q), int(i), int(j), int(m), int(n))
        c = terms.get(key, 0) + sign * neg * coef
        if c:
            terms[key] = c
        else:
            terms.pop(key, None)
    return Element(ambient, terms)
