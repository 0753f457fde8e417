"""Exact integer/rational linear algebra helpers.

Everything here works over the rationals via :class:`fractions.Fraction`;
matrices are plain lists of lists.  The sizes involved (one row per
half-edge or per basis path) are small, so simple Gaussian elimination is
adequate and keeps results exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

Vector = tuple[int, ...]


def vzero(rank: int) -> Vector:
    return (0,) * rank


def vadd(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vsub(a: Vector, b: Vector) -> Vector:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vneg(a: Vector) -> Vector:
    return tuple(-x for x in a)


def vsum(vectors: Sequence[Vector], rank: int) -> Vector:
    total = vzero(rank)
    for v in vectors:
        total = vadd(total, v)
    return total


def mat_vec(matrix: Sequence[Sequence[int]], v: Vector) -> Vector:
    return tuple(sum(m * x for m, x in zip(row, v, strict=True)) for row in matrix)


def det2(matrix: Sequence[Sequence[int]]) -> int:
    return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]


def determinant(matrix: Sequence[Sequence[int]]) -> Fraction:
    """Determinant of a square matrix, computed exactly."""
    n = len(matrix)
    rows = [[Fraction(x) for x in row] for row in matrix]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, n):
            if rows[r][col] != 0:
                factor = rows[r][col] * inv
                for c in range(col, n):
                    rows[r][c] -= factor * rows[col][c]
    return det


def solve_unique(
    matrix: Sequence[Sequence[int]], rhs_columns: Sequence[Sequence[int]]
) -> Optional[list[list[Fraction]]]:
    """Solve ``A x = b`` for each right-hand side column.

    Returns one solution column per right-hand side, or ``None`` when the
    system is inconsistent or the solution is not unique.
    """
    n_rows = len(matrix)
    n_cols = len(matrix[0]) if n_rows else 0
    n_rhs = len(rhs_columns)
    aug = [
        [Fraction(matrix[r][c]) for c in range(n_cols)]
        + [Fraction(rhs_columns[k][r]) for k in range(n_rhs)]
        for r in range(n_rows)
    ]
    pivots = []
    row = 0
    for col in range(n_cols):
        pivot = next((r for r in range(row, n_rows) if aug[r][col] != 0), None)
        if pivot is None:
            continue
        aug[row], aug[pivot] = aug[pivot], aug[row]
        inv = 1 / aug[row][col]
        aug[row] = [x * inv for x in aug[row]]
        for r in range(n_rows):
            if r != row and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
        if row == n_rows:
            break
    # Inconsistent: a zero row of A with a nonzero right-hand side entry.
    for r in range(row, n_rows):
        if any(aug[r][n_cols + k] != 0 for k in range(n_rhs)):
            return None
    if len(pivots) < n_cols:
        return None  # solution space has positive dimension
    solutions = [[Fraction(0)] * n_cols for _ in range(n_rhs)]
    for r, col in enumerate(pivots):
        for k in range(n_rhs):
            solutions[k][col] = aug[r][n_cols + k]
    return solutions


def nullspace(rows: Sequence[Sequence[Fraction]], n_cols: int) -> list[list[Fraction]]:
    """Basis of the right null space of the matrix given by ``rows``."""
    mat = [list(row) for row in rows]
    pivots: list[int] = []
    row = 0
    for col in range(n_cols):
        pivot = next((r for r in range(row, len(mat)) if mat[r][col] != 0), None)
        if pivot is None:
            continue
        mat[row], mat[pivot] = mat[pivot], mat[row]
        inv = 1 / mat[row][col]
        mat[row] = [x * inv for x in mat[row]]
        for r in range(len(mat)):
            if r != row and mat[r][col] != 0:
                factor = mat[r][col]
                mat[r] = [x - factor * y for x, y in zip(mat[r], mat[row])]
        pivots.append(col)
        row += 1
        if row == len(mat):
            break
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * n_cols
        vec[f] = Fraction(1)
        for r, col in enumerate(pivots):
            vec[col] = -mat[r][f]
        basis.append(vec)
    return basis


def rank_of(rows: Sequence[Sequence[Fraction]], n_cols: int) -> int:
    return n_cols - len(nullspace(rows, n_cols))
