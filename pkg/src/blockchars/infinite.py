"""Block characters of the infinite symmetric group.

The extreme normalized block characters are z^(decrement) for z in
{0, +-1, +-1/2, +-1/3, ...}; each restricts to S_n as an explicit convex
combination of the normalized tau characters, with coefficient arrays solving
a backward recursion in n.
"""

from fractions import Fraction
from math import comb, factorial

from .characters import BlockFunction, tau
from .combinatorics import eulerian


def check_extreme_label(z) -> Fraction:
    """Valid labels: 0 or a fraction with numerator +-1."""
    z = Fraction(z)
    if z != 0 and abs(z.numerator) != 1:
        raise ValueError(f"label must be 0 or +-1/K for integer K >= 1, got {z}")
    return z


def sigma_infinity(z, c: int) -> Fraction:
    """Value of the extreme character with label z on a permutation of
    decrement c; the zero label is the delta function at the identity."""
    z = check_extreme_label(z)
    if c < 0:
        raise ValueError("decrement must be nonnegative")
    if z == 0:
        return Fraction(1 if c == 0 else 0)
    return z**c


def restrict_to_finite(z, n: int) -> BlockFunction:
    """Restriction to S_n: values z^(n - ℓ) on cycle count ℓ.

    z = 1/k matches sigma(n, k) normalized at the identity; z = -1/k the
    sign-twisted version; z = 0 the normalized regular character.
    """
    if n < 1:
        raise ValueError("n must be positive")
    z = check_extreme_label(z)
    return BlockFunction(n, [sigma_infinity(z, n - ell) for ell in range(1, n + 1)])


class CoefficientArray:
    """Triangular array a[n][k] of tau-mixture coefficients, 1 <= k <= n <= N.

    Rows are exact rationals summing to 1; extreme arrays additionally satisfy
    the backward recursion tying row n to row n+1.
    """

    def __init__(self, rows: list[list[Fraction]], label: str = ""):
        for n, row in enumerate(rows, start=1):
            if len(row) != n:
                raise ValueError("row n must have exactly n entries")
        self.rows = [[Fraction(a) for a in row] for row in rows]
        self.label = label

    @property
    def depth(self) -> int:
        return len(self.rows)

    def coefficient(self, n: int, k: int) -> Fraction:
        if not 1 <= k <= n <= self.depth:
            raise ValueError("need 1 <= k <= n <= depth")
        return self.rows[n - 1][k - 1]

    def row(self, n: int) -> list[Fraction]:
        return list(self.rows[n - 1])


def extreme_array(kind: str, depth: int, big_k: int | None = None) -> CoefficientArray:
    """The three extreme coefficient families.

    T1(K): C(n+K-k, n) A(n,k) / K^n  -> label 1/K
    T2(K): C(K+k-1, n) A(n,k) / K^n  -> label -1/K
    T3:    A(n,k) / n!               -> label 0
    """
    if kind in ("T1", "T2"):
        if big_k is None or big_k < 1:
            raise ValueError(f"{kind} needs an integer parameter K >= 1")
    elif kind != "T3":
        raise ValueError("kind must be T1, T2 or T3")
    rows = []
    for n in range(1, depth + 1):
        if kind == "T1":
            row = [
                Fraction(comb(n + big_k - k, n) * eulerian(n, k), big_k**n)
                for k in range(1, n + 1)
            ]
        elif kind == "T2":
            row = [
                Fraction(comb(big_k + k - 1, n) * eulerian(n, k), big_k**n)
                for k in range(1, n + 1)
            ]
        else:
            row = [
                Fraction(eulerian(n, k), factorial(n)) for k in range(1, n + 1)
            ]
        rows.append(row)
    label = kind if kind == "T3" else f"{kind}(K={big_k})"
    return CoefficientArray(rows, label)


def extreme_label_of(kind: str, big_k: int | None = None) -> Fraction:
    if kind == "T1":
        return Fraction(1, big_k)
    if kind == "T2":
        return Fraction(-1, big_k)
    if kind == "T3":
        return Fraction(0)
    raise ValueError("kind must be T1, T2 or T3")


def verify_rows_normalized(array: CoefficientArray) -> bool:
    """Condition 1: nonnegative rows summing to 1."""
    return all(
        all(a >= 0 for a in row) and sum(row) == 1 for row in array.rows
    )


def verify_backward_recursion(array: CoefficientArray) -> bool:
    """Condition 2, exactly, for every 1 <= k <= n < depth:

    a[n][k] = k (A(n,k)/A(n+1,k)) a[n+1][k]
            + (n-k+1) (A(n,k)/A(n+1,k+1)) a[n+1][k+1]
    """
    for n in range(1, array.depth):
        for k in range(1, n + 1):
            expected = k * Fraction(eulerian(n, k), eulerian(n + 1, k)) * array.coefficient(
                n + 1, k
            ) + (n - k + 1) * Fraction(
                eulerian(n, k), eulerian(n + 1, k + 1)
            ) * array.coefficient(
                n + 1, k + 1
            )
            if array.coefficient(n, k) != expected:
                return False
    return True


def array_to_character(array: CoefficientArray, n: int) -> BlockFunction:
    """The convex combination sum_k a[n][k] tau(n,k)/tau(n,k)(identity)."""
    if not 1 <= n <= array.depth:
        raise ValueError("n exceeds array depth")
    result = BlockFunction(n, [0] * n)
    for k in range(1, n + 1):
        a = array.coefficient(n, k)
        if a:
            result = result + (a / eulerian(n, k)) * tau(n, k)
    return result


def verify_extreme_identity(kind: str, n: int, big_k: int | None = None) -> bool:
    """Row n of an extreme array reproduces the restricted infinite character."""
    array = extreme_array(kind, n, big_k)
    z = extreme_label_of(kind, big_k)
    return array_to_character(array, n) == restrict_to_finite(z, n)


def mixture(weights: dict, n: int) -> BlockFunction:
    """Finite-support convex combination of restricted extreme characters.

    Weights must be nonnegative rationals summing to 1.  For a truncated
    countable mixture the dropped tail has total mass 1 - sum(weights), which
    bounds the absolute error pointwise since every extreme value is in [-1, 1].
    """
    total = Fraction(0)
    result = BlockFunction(n, [0] * n)
    for z, weight in weights.items():
        weight = Fraction(weight)
        if weight < 0:
            raise ValueError("weights must be nonnegative")
        total += weight
        if weight:
            result = result + weight * restrict_to_finite(z, n)
    if total != 1:
        raise ValueError(f"weights must sum to 1, got {total}")
    return result


def restriction_consistency(z, n: int) -> bool:
    """Restricting the S_n character to S_{n-1} reproduces the S_{n-1} one
    (values shift by a cycle, so no renormalization is needed)."""
    from .characters import restrict

    if n < 2:
        raise ValueError("need n >= 2")
    return restrict(restrict_to_finite(z, n)) == restrict_to_finite(z, n - 1)


def bounded_labels(max_k: int) -> list[Fraction]:
    """0 and +-1/K for K = 1..max_k: every label with |1/z| <= max_k."""
    labels = [Fraction(0)]
    for k in range(1, max_k + 1):
        labels.append(Fraction(1, k))
        labels.append(Fraction(-1, k))
    return labels


def labels_linearly_independent(max_k: int, n: int) -> bool:
    """Distinctness at finite level: restricted values form a full-column-rank
    matrix once n is at least the number of labels."""
    from . import exactla

    labels = bounded_labels(max_k)
    matrix = [
        [restrict_to_finite(z, n).values[ell] for z in labels] for ell in range(n)
    ]
    return exactla.rank(matrix) == len(labels)
