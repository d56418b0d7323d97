"""Exact Gaussian elimination helpers over the rationals.

All functions take vectors as tuples of Fraction and matrices as lists of
such row tuples. Nothing here mutates its arguments. These routines back
rank/ span/ solve queries for the cone and polytope layers; the LP kernel
has its own pivoting code.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Row = tuple[Fraction, ...]

_ZERO = Fraction(0)


def _rref(rows: Sequence[Row]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (matrix, pivot column indices)."""
    mat = [list(r) for r in rows]
    m = len(mat)
    n = len(mat[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pivot_row = next((i for i in range(r, m) if mat[i][c] != 0), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        pv = mat[r][c]
        mat[r] = [v / pv for v in mat[r]]
        for i in range(m):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return mat, pivots


def rank(rows: Sequence[Row]) -> int:
    if not rows:
        return 0
    return len(_rref(rows)[1])


def independent_subset(rows: Sequence[Row]) -> list[int]:
    """Indices of a greedy maximal linearly independent subset of rows."""
    chosen: list[Row] = []
    idx: list[int] = []
    current = 0
    for i, row in enumerate(rows):
        if any(v != 0 for v in row) and rank(chosen + [row]) > current:
            chosen.append(row)
            idx.append(i)
            current += 1
    return idx


def span_contains(basis: Sequence[Row], v: Row) -> bool:
    """Whether v lies in the linear span of basis vectors."""
    if all(x == 0 for x in v):
        return True
    if not basis:
        return False
    return rank(list(basis)) == rank(list(basis) + [v])


def solve(rows: Sequence[Row], rhs: Sequence[Fraction]) -> list[Fraction] | None:
    """One exact solution of rows * x = rhs, or None if inconsistent.

    Free variables are set to zero.
    """
    if not rows:
        return []
    n = len(rows[0])
    aug = [tuple(r) + (b,) for r, b in zip(rows, rhs)]
    mat, pivots = _rref(aug)
    # Inconsistent iff a pivot lands in the rhs column.
    if n in pivots:
        return None
    x = [_ZERO] * n
    for r, c in enumerate(pivots):
        x[c] = mat[r][n]
    return x


def solve_unique(rows: Sequence[Row], rhs: Sequence[Fraction]) -> list[Fraction] | None:
    """Solution of a system with full column rank, else None (also on inconsistency)."""
    if not rows:
        return None
    n = len(rows[0])
    if rank(rows) != n:
        return None
    return solve(rows, rhs)


def nullspace(rows: Sequence[Row], n: int) -> list[Row]:
    """Basis of {x : rows * x = 0} in dimension n."""
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    mat, pivots = _rref(rows)
    free = [c for c in range(n) if c not in pivots]
    basis: list[Row] = []
    for fc in free:
        vec = [_ZERO] * n
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -mat[r][fc]
        basis.append(tuple(vec))
    return basis
