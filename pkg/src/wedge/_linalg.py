"""Gaussian elimination over the rationals (small dense systems only)."""

from __future__ import annotations

from fractions import Fraction


def determinant(rows) -> Fraction:
    a = [[Fraction(x) for x in row] for row in rows]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] * inv
            if f:
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    return det


def solve_in_span(columns, target) -> list[Fraction]:
    """Coordinates of ``target`` in the span of linearly independent ``columns``.

    Raises ``ValueError`` if ``target`` is outside the span.
    """
    ncols = len(columns)
    nrows = len(target)
    aug = [[Fraction(columns[c][r]) for c in range(ncols)] + [Fraction(target[r])] for r in range(nrows)]
    pivots = []
    row = 0
    for col in range(ncols):
        pivot = next((r for r in range(row, nrows) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("columns are linearly dependent")
        aug[row], aug[pivot] = aug[pivot], aug[row]
        inv = 1 / aug[row][col]
        aug[row] = [x * inv for x in aug[row]]
        for r in range(nrows):
            if r != row and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
    if any(aug[r][ncols] != 0 for r in range(row, nrows)):
        raise ValueError("target is not in the span")
    return [aug[i][ncols] for i in range(ncols)]
