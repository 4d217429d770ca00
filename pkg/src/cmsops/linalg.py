"""Exact Gaussian elimination over the parameter fraction field.

Rows and columns follow the caller's canonical ordering; the pivot for
each column is the first row (in order) with a nonzero entry, which keeps
the elimination deterministic on symbolic matrices.
"""

from __future__ import annotations

from .coeffs import CoeffFrac

Matrix = list[list[CoeffFrac]]


def nullspace(matrix: Matrix) -> list[list[CoeffFrac]]:
    """Basis of the right null space of a matrix over the fraction field.

    Each basis vector is normalized so that its first nonzero coordinate
    (in column order) equals 1; vectors are returned in order of their
    free column.
    """
    if not matrix:
        return []
    nrows = len(matrix)
    ncols = len(matrix[0])
    m = [[matrix[r][c] for c in range(ncols)] for r in range(nrows)]
    pivot_of_col: dict[int, int] = {}
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, nrows):
            if not m[r][col].is_zero():
                pivot = r
                break
        if pivot is None:
            continue
        if pivot != rank:
            m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        m[rank] = [x / pv for x in m[rank]]
        for r in range(nrows):
            if r == rank:
                continue
            f = m[r][col]
            if f.is_zero():
                continue
            m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        pivot_of_col[col] = rank
        rank += 1
    basis: list[list[CoeffFrac]] = []
    free_cols = [c for c in range(ncols) if c not in pivot_of_col]
    for fc in free_cols:
        vec = [CoeffFrac.zero()] * ncols
        vec[fc] = CoeffFrac.one()
        for col, row in pivot_of_col.items():
            vec[col] = -m[row][fc]
        # normalize: first nonzero coordinate exactly 1
        lead = next(i for i in range(ncols) if not vec[i].is_zero())
        lv = vec[lead]
        basis.append([x / lv for x in vec])
    return basis


def solve_upper_triangular(diag: list[CoeffFrac], rhs: list[CoeffFrac]) -> list[CoeffFrac]:
    """Solve a diagonal system (used by the eigen recursion for clarity)."""
    return [b / d for b, d in zip(rhs, diag)]
