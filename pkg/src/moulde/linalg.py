"""Exact linear algebra over the rationals.

Matrices are plain lists of rows of `fractions.Fraction`.  Dense
Gaussian elimination is entirely adequate at the problem sizes of this
package (at most a few thousand columns).
"""

from __future__ import annotations

from fractions import Fraction


def _clone(matrix):
    return [[Fraction(x) for x in row] for row in matrix]


def rref(matrix):
    """Reduced row echelon form.  Returns (rows, pivot_columns)."""
    m = _clone(matrix)
    if not m:
        return m, []
    rows, cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if m[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(matrix):
    _, pivots = rref(matrix)
    return len(pivots)


def nullspace(matrix, cols=None):
    """Exact basis of the right nullspace of the matrix.

    `cols` must be given when the matrix has no rows.  Basis vectors are
    normalized with leading free-variable entry 1, ordered by free
    column index (deterministic).
    """
    if not matrix:
        if cols is None:
            raise ValueError("cols required for an empty matrix")
        return [[Fraction(1 if i == j else 0) for i in range(cols)]
                for j in range(cols)]
    cols = len(matrix[0])
    red, pivots = rref(matrix)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def solve(matrix, rhs):
    """Solve M x = rhs exactly.  Returns one solution or None."""
    if not matrix:
        return None if any(b != 0 for b in rhs) else []
    cols = len(matrix[0])
    aug = [row + [b] for row, b in zip(matrix, rhs)]
    red, pivots = rref(aug)
    if cols in pivots:
        return None  # inconsistent: pivot in the rhs column
    x = [Fraction(0)] * cols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][cols]
    return x
