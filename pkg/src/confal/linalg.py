"""Incremental row reduction over Q for sparse vectors keyed by sortable symbols.

An Echelon holds a reduced row-echelon basis: one row per pivot, the pivot is
the smallest key of the row in canonical order, its coefficient is 1, and no
row's pivot appears in any other row.  Inserting a vector either grows the
rank or proves membership in the current span; everything is exact.
"""

from .scalars import Scalar


class Echelon:
    """Growable RREF basis of sparse Q-vectors."""

    def __init__(self):
        self.rows: dict = {}  # pivot key -> {key: Scalar}, pivot coefficient 1

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        """Residue of vec modulo the current span (fully reduced)."""
        residue = {k: Scalar(c) for k, c in vec.items() if c}
        # rows never contain each other's pivots, so eliminating one pivot
        # cannot reintroduce another and a single pass suffices
        for key in [k for k in residue if k in self.rows]:
            c = residue.get(key)
            if not c:
                continue
            for k2, c2 in self.rows[key].items():
                acc = residue.get(k2, 0) - c * c2
                if acc:
                    residue[k2] = acc
                else:
                    residue.pop(k2, None)
        return residue

    def insert(self, vec: dict) -> bool:
        """Add vec to the span; returns True when the rank grows."""
        residue = self.reduce(vec)
        if not residue:
            return False
        pivot = min(residue)
        inv = 1 / residue[pivot]
        row = {k: inv * c for k, c in residue.items()}
        # back-substitute into existing rows so the basis stays fully reduced
        for other in self.rows.values():
            c = other.get(pivot)
            if c:
                for k2, c2 in row.items():
                    acc = other.get(k2, 0) - c * c2
                    if acc:
                        other[k2] = acc
                    else:
                        other.pop(k2, None)
        self.rows[pivot] = row
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def spans(self, vectors) -> bool:
        return all(self.contains(v) for v in vectors)
