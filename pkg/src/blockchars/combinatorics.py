"""Partitions, permutations and the integer sequences everything else consumes.

Partitions are plain tuples of weakly decreasing positive integers (the empty
tuple is the partition of 0).  Permutations are tuples in one-row notation:
``g = (g(1), ..., g(n))`` with values exactly ``{1, ..., n}``.  All counts are
exact Python integers.
"""

from functools import lru_cache
from itertools import permutations as _itertools_permutations
from math import factorial

Partition = tuple[int, ...]
Permutation = tuple[int, ...]


def is_partition(parts) -> bool:
    """True if ``parts`` is a weakly decreasing tuple of positive integers."""
    return all(isinstance(p, int) and p > 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def check_partition(parts) -> Partition:
    lam = tuple(parts)
    if not is_partition(lam):
        raise ValueError(f"not a partition: {parts!r}")
    return lam


def partitions_of(n: int, max_parts: int | None = None) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order.

    Reverse lexicographic means ``(n)`` first and ``(1,)*n`` last; this is the
    canonical order used to key decomposition output.  ``max_parts`` keeps only
    partitions with at most that many parts.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    limit = n if max_parts is None else max_parts
    result: list[Partition] = []

    def extend(prefix: list[int], remaining: int, max_part: int, parts_left: int):
        if remaining == 0:
            result.append(tuple(prefix))
            return
        if parts_left == 0:
            return
        for part in range(min(remaining, max_part), 0, -1):
            prefix.append(part)
            extend(prefix, remaining - part, part, parts_left - 1)
            prefix.pop()

    extend([], n, n if n else 1, limit)
    if n == 0:
        return [()]
    return result


def conjugate(lam: Partition) -> Partition:
    """Transposed diagram: column lengths of ``lam`` become row lengths."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def hook_lengths(lam: Partition) -> list[list[int]]:
    conj = conjugate(lam)
    return [
        [lam[i] - (j + 1) + conj[j] - (i + 1) + 1 for j in range(lam[i])]
        for i in range(len(lam))
    ]


def dim_syt(lam: Partition) -> int:
    """Number of standard Young tableaux of shape ``lam`` (hook-length product).

    Exact for any size; cross-checked against explicit enumeration in tests.
    """
    n = sum(lam)
    product = 1
    for row in hook_lengths(lam):
        for h in row:
            product *= h
    return factorial(n) // product


def is_permutation(g) -> bool:
    return sorted(g) == list(range(1, len(g) + 1))


def check_permutation(g) -> Permutation:
    word = tuple(g)
    if not is_permutation(word):
        raise ValueError(f"not a permutation in one-row notation: {g!r}")
    return word


def all_permutations(n: int):
    """Iterator over S_n in lexicographic one-row order."""
    return _itertools_permutations(range(1, n + 1))


def cycle_count(g: Permutation) -> int:
    """Number of cycles of ``g``, fixed points included."""
    n = len(g)
    seen = [False] * (n + 1)
    count = 0
    for start in range(1, n + 1):
        if not seen[start]:
            count += 1
            j = start
            while not seen[j]:
                seen[j] = True
                j = g[j - 1]
    return count


def decrement(g: Permutation) -> int:
    """n minus the cycle count; stable under appending fixed points."""
    return len(g) - cycle_count(g)


def cycle_type(g: Permutation) -> Partition:
    n = len(g)
    seen = [False] * (n + 1)
    lengths = []
    for start in range(1, n + 1):
        if not seen[start]:
            length = 0
            j = start
            while not seen[j]:
                seen[j] = True
                j = g[j - 1]
                length += 1
            lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def permutation_with_cycle_type(lam: Partition) -> Permutation:
    """A canonical representative with the given cycle type."""
    word: list[int] = []
    start = 1
    for part in lam:
        block = list(range(start + 1, start + part)) + [start]
        word.extend(block)
        start += part
    return tuple(word)


def descent_set(g: Permutation) -> set[int]:
    """Positions ``j`` with ``g(j+1) < g(j)``; subset of {1, ..., n-1}."""
    return {j for j in range(1, len(g)) if g[j] < g[j - 1]}


def descent_number(g: Permutation) -> int:
    return sum(1 for j in range(1, len(g)) if g[j] < g[j - 1])


def descent_tail_counts(g: Permutation) -> tuple[int, ...]:
    """Vector d_i = |D(g) ∩ {i, ..., n}| for i = 1..n; weakly decreasing, d_n = 0."""
    n = len(g)
    d = [0] * (n + 1)
    for i in range(n - 1, 0, -1):
        d[i] = d[i + 1] + (1 if g[i] < g[i - 1] else 0)
    return tuple(d[1:])


@lru_cache(maxsize=None)
def _eulerian_row(n: int) -> tuple[int, ...]:
    # A(n, k) = k A(n-1, k) + (n-k+1) A(n-1, k-1), A(1, 1) = 1
    if n == 1:
        return (1,)
    prev = _eulerian_row(n - 1)
    row = []
    for k in range(1, n + 1):
        value = 0
        if k <= n - 1:
            value += k * prev[k - 1]
        if k >= 2:
            value += (n - k + 1) * prev[k - 2]
        row.append(value)
    return tuple(row)


def eulerian(n: int, k: int) -> int:
    """Eulerian number: permutations of n with exactly k-1 descents.

    Out-of-range k gives 0 by convention.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if k < 1 or k > n:
        return 0
    return _eulerian_row(n)[k - 1]


def eulerian_column_table(n: int, k_max: int) -> list[list[int]]:
    """Rows ``table[m][k-1] = eulerian(m+1, k)`` for m+1 = 1..n, k = 1..k_max.

    Column-limited so huge n stays affordable; the shape samplers walk this
    table, so it is kept as a list for O(1) row access.
    """
    table: list[list[int]] = []
    prev: list[int] = []
    for m in range(1, n + 1):
        width = min(m, k_max)
        row = []
        for k in range(1, width + 1):
            value = 0
            if k <= m - 1:
                value += k * prev[k - 1]
            if k >= 2:
                value += (m - k + 1) * prev[k - 2]
            if m == 1:
                value = 1
            row.append(value)
        table.append(row)
        prev = row
    return table


@lru_cache(maxsize=None)
def stirling_first_unsigned(n: int, ell: int) -> int:
    """Number of permutations of n with exactly ``ell`` cycles."""
    if n < 1:
        raise ValueError("n must be positive")
    if ell < 1 or ell > n:
        return 0
    if n == 1:
        return 1
    return stirling_first_unsigned(n - 1, ell - 1) + (n - 1) * stirling_first_unsigned(
        n - 1, ell
    )


@lru_cache(maxsize=None)
def stirling_second(n: int, k: int) -> int:
    """Set partitions of an n-set into k blocks."""
    if k < 0 or k > n:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    return k * stirling_second(n - 1, k) + stirling_second(n - 1, k - 1)
