"""Exact linear algebra over Q and Z used by the ring modules.

Two independent tools live here on purpose: a reduced row-echelon form over
the rationals (the working reduction path for quotient rings) and an integer
Smith normal form (the oracle that certifies ranks and torsion-freeness).
Neither calls the other.
"""

from __future__ import annotations

from fractions import Fraction


class RationalEchelon:
    """Reduced row-echelon form of a set of row vectors over Q.

    Columns are taken in their given (fixed) order, so pivot columns are
    deterministic.  Vectors can then be reduced to a canonical representative
    modulo the row space, supported on non-pivot ("free") columns.
    """

    def __init__(self, ncols: int, rows=()):
        self.ncols = ncols
        self.rows: list[list[Fraction]] = []  # reduced, pivots normalized to 1
        self.pivot_cols: list[int] = []  # parallel to rows, strictly tracked
        for row in rows:
            self.add_row(row)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def free_cols(self) -> list[int]:
        taken = set(self.pivot_cols)
        return [j for j in range(self.ncols) if j not in taken]

    def add_row(self, row) -> bool:
        """Insert a row; returns True if it increased the rank."""
        vec = [Fraction(c) for c in row]
        if len(vec) != self.ncols:
            raise ValueError("row of wrong length")
        self._eliminate(vec)
        for j in range(self.ncols):
            if vec[j] != 0:
                pivot = j
                break
        else:
            return False
        inv = 1 / vec[pivot]
        vec = [c * inv for c in vec]
        # Back-substitute the new pivot into the existing rows.
        for r in self.rows:
            f = r[pivot]
            if f != 0:
                for j in range(pivot, self.ncols):
                    r[j] -= f * vec[j]
        self.rows.append(vec)
        self.pivot_cols.append(pivot)
        return True

    def _eliminate(self, vec: list[Fraction]) -> None:
        for r, p in zip(self.rows, self.pivot_cols):
            f = vec[p]
            if f != 0:
                for j in range(p, self.ncols):
                    vec[j] -= f * r[j]

    def reduce(self, vec) -> list[Fraction]:
        """Canonical representative of vec modulo the row space."""
        out = [Fraction(c) for c in vec]
        if len(out) != self.ncols:
            raise ValueError("vector of wrong length")
        self._eliminate(out)
        return out


def rational_rank(rows, ncols: int) -> int:
    ech = RationalEchelon(ncols)
    for row in rows:
        ech.add_row(row)
    return ech.rank


def smith_diagonals(rows) -> list[int]:
    """Invariant factors d_1 | d_2 | ... of an integer matrix.

    Returns the positive diagonal entries of the Smith normal form (zeros
    dropped); the length of the list is the rank.
    """
    mat = [[int(x) for x in row] for row in rows]
    if not mat or not mat[0]:
        return []
    nrows, ncols = len(mat), len(mat[0])
    diags: list[int] = []
    t = 0
    while t < min(nrows, ncols):
        # Find the nonzero entry of least magnitude in the trailing block.
        pivot = None
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                v = mat[i][j]
                if v != 0 and (best is None or abs(v) < best):
                    best = abs(v)
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        mat[t], mat[pi] = mat[pi], mat[t]
        for row in mat:
            row[t], row[pj] = row[pj], row[t]
        # Clear row t and column t; repeat while remainders appear.
        while True:
            p = mat[t][t]
            dirty = False
            for i in range(t + 1, nrows):
                if mat[i][t] != 0:
                    q = mat[i][t] // p
                    for j in range(t, ncols):
                        mat[i][j] -= q * mat[t][j]
                    if mat[i][t] != 0:
                        mat[t], mat[i] = mat[i], mat[t]
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, ncols):
                if mat[t][j] != 0:
                    q = mat[t][j] // p
                    for i in range(t, nrows):
                        mat[i][j] -= q * mat[i][t]
                    if mat[t][j] != 0:
                        for row in mat:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
                        break
            if not dirty:
                break
        # Enforce divisibility of later entries by the pivot.
        p = abs(mat[t][t])
        fixed = True
        for i in range(t + 1, nrows):
            for j in range(t + 1, ncols):
                if mat[i][j] % p != 0:
                    for jj in range(t, ncols):
                        mat[t][jj] += mat[i][jj]
                    fixed = False
                    break
            if not fixed:
                break
        if not fixed:
            continue
        diags.append(p)
        t += 1
    return diags
