"""Small exact linear algebra kernels (integers and rationals only)."""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {c: v // g for c, v in row.items()} if g > 1 else row


def sparse_rank(rows: Iterable[dict[int, int]]) -> int:
    """Rank over Q of an integer matrix given as sparse rows {col: value}.

    Fraction-free elimination: a row is reduced against stored pivots by
    integer cross-multiplication and then divided by its content, so the
    entries stay small for boundary matrices.
    """
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                pivots[c] = _primitive(row)
                break
            a, b = piv[c], row[c]
            new = {col: a * v for col, v in row.items()}
            for col, v in piv.items():
                w = new.get(col, 0) - b * v
                if w:
                    new[col] = w
                else:
                    new.pop(col, None)
            row = _primitive(new) if new else new
    return len(pivots)


def rank(matrix: Sequence[Sequence[int]]) -> int:
    return sparse_rank({j: v for j, v in enumerate(r) if v} for r in matrix)


def determinant(matrix: Sequence[Sequence]) -> Fraction:
    """Determinant by Gaussian elimination over Q."""
    a = [[Fraction(x) for x in row] for row in matrix]
    size = len(a)
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, size):
            f = a[r][col] / a[col][col]
            if f:
                for c in range(col, size):
                    a[r][c] -= f * a[col][c]
    return det


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction] | None:
    """Solve A x = b exactly for a full-column-rank A (rows may exceed columns).

    Returns None when the system is inconsistent.
    """
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    where: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if aug[i][c] != 0), None)
        if pivot is None:
            raise ValueError("matrix does not have full column rank")
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[r])]
        where.append(r)
        r += 1
    if any(aug[i][ncols] != 0 for i in range(r, nrows)):
        return None
    return [aug[where[c]][ncols] for c in range(ncols)]
