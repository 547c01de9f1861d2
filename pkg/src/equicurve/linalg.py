"""Exact rational linear algebra: incremental echelon spans and small dense solves.

Vectors are sparse dicts mapping column index to a nonzero Fraction. Ranks and
memberships are decided exactly; no numerical tolerance enters anywhere.
"""

from __future__ import annotations

from fractions import Fraction


class RowSpace:
    """Incrementally built row space in echelon form, for rank and membership queries."""

    def __init__(self):
        self.rows = {}  # pivot column -> row (dict col -> Fraction, pivot coeff 1)

    @property
    def rank(self):
        return len(self.rows)

    def _reduce(self, vec):
        vec = dict(vec)
        while vec:
            p = min(vec)
            row = self.rows.get(p)
            if row is None:
                return vec
            c = vec[p]
            for col, val in row.items():
                s = vec.get(col, 0) - c * val
                if s:
                    vec[col] = s
                else:
                    vec.pop(col, None)
        return vec

    def add(self, vec) -> bool:
        """Add a vector to the span; True if it was independent of the current span."""
        red = self._reduce(vec)
        if not red:
            return False
        p = min(red)
        inv = 1 / red[p]
        self.rows[p] = {col: val * inv for col, val in red.items()}
        return True

    def contains(self, vec) -> bool:
        return not self._reduce(vec)


def solve_exists(rows, rhs, ncols) -> bool:
    """Whether the linear system sum_j x_j * rows[j] = rhs has a rational solution.

    ``rows`` are sparse dicts over columns 0..ncols-1; decided by comparing the
    rank of the coefficient span with the rank after adjoining ``rhs``.
    """
    space = RowSpace()
    for r in rows:
        space.add(r)
    return space.contains(rhs)


def vec_from_list(values) -> dict:
    return {i: Fraction(v) for i, v in enumerate(values) if v}
