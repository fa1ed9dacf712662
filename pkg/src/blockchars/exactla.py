"""Exact rational linear algebra: solve, rank, and integer PSD elimination.

Everything here works over Fraction (or plain int for the fraction-free PSD
test); no floating point enters any decision.
"""

from fractions import Fraction


def solve_linear(matrix, rhs) -> list[Fraction]:
    """Solve A x = b exactly for square invertible A by Gaussian elimination."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(v)] for row, v in zip(matrix, rhs)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot_row is None:
            raise ValueError("matrix is singular")
        a[col], a[pivot_row] = a[pivot_row], a[col]
        pivot = a[col][col]
        for r in range(n):
            if r != col and a[r][col] != 0:
                factor = a[r][col] / pivot
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return [a[i][n] / a[i][i] for i in range(n)]


def rank(matrix) -> int:
    """Rank of a rational matrix by row reduction."""
    if not matrix:
        return 0
    rows = [[Fraction(x) for x in row] for row in matrix]
    cols = len(rows[0])
    r = 0
    for col in range(cols):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pivot = rows[r][col]
        for i in range(r + 1, len(rows)):
            if rows[i][col] != 0:
                factor = rows[i][col] / pivot
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


class LUSolver:
    """Reusable exact factorization of a square invertible matrix.

    Stores the row-reduced augmented identity (i.e. the inverse), which makes
    repeated solves a single exact matrix-vector product.  Intended for the
    modest sizes of the coinvariant module (at most 720).
    """

    def __init__(self, matrix):
        n = len(matrix)
        a = [[Fraction(x) for x in row] for row in matrix]
        inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        for col in range(n):
            pivot_row = next((r for r in range(col, n) if a[r][col] != 0), None)
            if pivot_row is None:
                raise ValueError("matrix is singular")
            a[col], a[pivot_row] = a[pivot_row], a[col]
            inv[col], inv[pivot_row] = inv[pivot_row], inv[col]
            pivot = a[col][col]
            if pivot != 1:
                a[col] = [x / pivot for x in a[col]]
                inv[col] = [x / pivot for x in inv[col]]
            for r in range(n):
                if r != col and a[r][col] != 0:
                    factor = a[r][col]
                    a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
                    inv[r] = [x - factor * y for x, y in zip(inv[r], inv[col])]
        self.n = n
        self.inverse = inv

    def solve(self, rhs) -> list[Fraction]:
        return [
            sum((row[j] * rhs[j] for j in range(self.n) if rhs[j]), Fraction(0))
            for row in self.inverse
        ]


def is_psd_integer(matrix: list[list[int]]) -> bool:
    """Exact positive-semidefiniteness of a symmetric integer matrix.

    Fraction-free symmetric elimination (Bareiss) with largest-diagonal
    pivoting.  Because every chosen pivot is positive, the transformed diagonal
    entries share the sign of the true Schur-complement diagonal, so a negative
    entry refutes PSD immediately; an all-zero diagonal forces the remaining
    block to vanish entirely.
    """
    m = [list(row) for row in matrix]
    n = len(m)
    prev = 1
    for t in range(n):
        best, best_i = 0, -1
        for i in range(t, n):
            d = m[i][i]
            if d < 0:
                return False
            if d > best:
                best, best_i = d, i
        if best_i == -1:
            # diagonal of the remaining block is zero: PSD iff the block is zero
            return all(
                m[i][j] == 0 for i in range(t, n) for j in range(i + 1, n)
            )
        p = best_i
        if p != t:
            m[t], m[p] = m[p], m[t]
            for row in m:
                row[t], row[p] = row[p], row[t]
        pivot = m[t][t]
        for i in range(t + 1, n):
            mit = m[i][t]
            row_i, row_t = m[i], m[t]
            for j in range(i, n):
                row_i[j] = (pivot * row_i[j] - mit * row_t[j]) // prev
            for j in range(i, n):
                m[j][i] = row_i[j]
        prev = pivot
    return True
