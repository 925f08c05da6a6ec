"""Exact determinants for the small dense windows cut out of Toeplitz matrices.

Two routes: memoized cofactor expansion for symbolic entries (any ring
element supporting +, -, *), and fraction-free Bareiss elimination for
rational entries.  Window sizes stay in single digits, so the exponential
cofactor route is comfortably fast and avoids polynomial division.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError


def det_cofactor(matrix):
    """Determinant by Laplace expansion, memoized on column subsets."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise DomainError("determinant requires a square matrix")
    if n == 0:
        return 1
    cache: dict[int, object] = {}

    def expand(row: int, colmask: int):
        if row == n:
            return 1
        cached = cache.get(colmask)
        if cached is not None:
            return cached
        total = None
        sign = 1
        for col in range(n):
            bit = 1 << col
            if not colmask & bit:
                continue
            entry = matrix[row][col]
            if entry:
                term = entry * expand(row + 1, colmask & ~bit)
                if sign < 0:
                    term = -term
                total = term if total is None else total + term
            sign = -sign
        if total is None:
            total = matrix[0][0] - matrix[0][0]  # ring zero of the right type
        cache[colmask] = total
        return total

    return expand(0, (1 << n) - 1)


def det_bareiss(matrix) -> Fraction:
    """Fraction-free elimination; exact over rationals and integers."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise DomainError("determinant requires a square matrix")
    if n == 0:
        return Fraction(1)
    a = [[Fraction(v) for v in row] for row in matrix]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if not a[k][k]:
            pivot = next((i for i in range(k + 1, n) if a[i][k]), None)
            if pivot is None:
                return Fraction(0)
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]
