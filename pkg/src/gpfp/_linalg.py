"""Small exact linear algebra over the rationals.

Everything here works on lists of rows whose entries are ``int`` or
``Fraction``.  The matrices in this package are tiny (at most a few dozen
columns), so plain Gauss-Jordan elimination is fast enough and avoids any
floating-point tolerance.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Row = Sequence[int | Fraction]


def row_reduce(rows: Sequence[Row]) -> tuple[list[list[Fraction]], list[int]]:
    """Return the reduced row echelon form and the pivot columns."""
    mat = [[Fraction(v) for v in r] for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(mat):
            break
        p = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if p is None:
            continue
        mat[r], mat[p] = mat[p], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    return mat[:r], pivots


def rank(rows: Sequence[Row]) -> int:
    return len(row_reduce(rows)[1])


def affine_rank(points: Sequence[Row]) -> int:
    """Dimension of the affine hull of ``points`` (-1 for the empty set)."""
    if not points:
        return -1
    base = points[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in points[1:]]
    return rank(diffs) if diffs else 0


def nullspace(rows: Sequence[Row], ncols: int) -> list[list[Fraction]]:
    """Basis of the right nullspace of ``rows``."""
    red, pivots = row_reduce(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -red[r][f]
        basis.append(vec)
    return basis


def solve_square(rows: Sequence[Row], rhs: Row) -> list[Fraction] | None:
    """Solve ``rows @ x = rhs`` for a square system; ``None`` when singular."""
    n = len(rows)
    aug = [list(r) + [v] for r, v in zip(rows, rhs)]
    red, pivots = row_reduce(aug)
    if len(pivots) < n or pivots[-1] >= n:
        return None
    return [red[i][n] for i in range(n)]
