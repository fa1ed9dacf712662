"""Multiplicities of irreducible characters inside block characters.

The two counting kernels:

* ``m_count(lam, k)`` — standard tableaux of shape ``lam`` with k-1 descents.
* ``s_count(lam, k)`` — semistandard tableaux of shape ``lam`` with entries <= k.

They are linked by a pair of binomial inversions and by an explicit bijection
between semistandard tableaux and pairs (standard tableau, admissible weakly
increasing sequence); both are implemented and cross-verified.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb

from .characters import BlockFunction, to_tau_basis
from .combinatorics import Partition, check_partition, dim_syt, hook_lengths
from .tableaux import (
    SYT_ENUMERATION_BOUND,
    Tableau,
    entry_positions,
    enumerate_syt,
    is_semistandard,
    shape_of,
    tableau_descent_number,
    tableau_descents,
)

# The level-by-level descent DP visits every partition of every j <= n, so it
# is priced per n, not per shape; past this bound use hooks or enumeration.
DESCENT_DP_BOUND = 30


def _addable_corners(mu: Partition):
    rows = len(mu)
    for r in range(rows):
        if r == 0 or mu[r] < mu[r - 1]:
            yield r, mu[:r] + (mu[r] + 1,) + mu[r + 1 :]
    yield rows, mu + (1,)


@lru_cache(maxsize=8)
def descent_distributions(n: int) -> dict[Partition, tuple[int, ...]]:
    """For every shape of n, the vector counting its standard tableaux by
    descent number (index d holds the tableaux with exactly d descents).

    Grows tableaux one box at a time; the state (shape, row of the last box)
    is all that descent counting needs, which keeps the walk polynomial in
    practice even though tableau counts are astronomically large.
    """
    if not 1 <= n <= DESCENT_DP_BOUND:
        raise ValueError(f"descent DP limited to 1 <= n <= {DESCENT_DP_BOUND}")
    level: dict[tuple[Partition, int], list[int]] = {((1,), 0): [1]}
    for j in range(2, n + 1):
        following: dict[tuple[Partition, int], list[int]] = {}
        for (mu, last_row), counts in level.items():
            for r, grown in _addable_corners(mu):
                shift = 1 if r > last_row else 0
                target = following.get((grown, r))
                if target is None:
                    target = [0] * j
                    following[(grown, r)] = target
                for d, c in enumerate(counts):
                    if c:
                        target[d + shift] += c
        level = following
    result: dict[Partition, list[int]] = {}
    for (mu, _), counts in level.items():
        total = result.setdefault(mu, [0] * n)
        for d, c in enumerate(counts):
            total[d] += c
    return {mu: tuple(v) for mu, v in result.items()}


def is_hook(lam: Partition) -> bool:
    return len(lam) >= 1 and all(part == 1 for part in lam[1:])


def m_count(lam: Partition, k: int) -> int:
    """Standard tableaux of shape ``lam`` with exactly k-1 descents.

    Hooks use the closed form (every standard tableau of a hook with r rows
    has exactly r-1 descents); other shapes go through the descent DP.
    Out-of-range k gives 0.
    """
    lam = check_partition(lam)
    n = sum(lam)
    if n == 0:
        raise ValueError("shape must be nonempty")
    if k < 1 or k > n:
        return 0
    if is_hook(lam):
        rows = len(lam)
        return comb(n - 1, rows - 1) if k == rows else 0
    if n > DESCENT_DP_BOUND:
        raise ValueError(f"|shape| = {n} exceeds descent DP bound {DESCENT_DP_BOUND}")
    return descent_distributions(n)[lam][k - 1]


def m_count_by_enumeration(lam: Partition, k: int) -> int:
    """Filter the explicit tableau list by descent number; the test oracle."""
    if sum(lam) > SYT_ENUMERATION_BOUND:
        raise ValueError("enumeration oracle limited to small shapes")
    return sum(1 for t in enumerate_syt(lam) if tableau_descent_number(t) == k - 1)


def s_count_content(lam: Partition, k: int) -> int:
    """Semistandard count by the content/hook product, exact for any size."""
    lam = check_partition(lam)
    value = Fraction(1)
    for i, row in enumerate(hook_lengths(lam), start=1):
        for j, hook in enumerate(row, start=1):
            value *= Fraction(k + j - i, hook)
            if value == 0:
                return 0
    assert value.denominator == 1
    return value.numerator


def s_count(lam: Partition, k: int) -> int:
    """Semistandard tableaux of shape ``lam`` with entries in {1, ..., k}.

    Uses s_k = sum_j C(n+j, j) m_{k-j} where the descent counts are available,
    falling back to the content product for oversized shapes; the two paths
    must agree wherever both run (enforced in the test suite).
    """
    lam = check_partition(lam)
    n = sum(lam)
    if k < 1:
        raise ValueError("k must be positive")
    if is_hook(lam) or n <= DESCENT_DP_BOUND:
        return sum(
            comb(n + j, j) * m_count(lam, k - j)
            for j in range(k)
            if 1 <= k - j <= n
        )
    return s_count_content(lam, k)


def is_admissible(tableau: Tableau, sequence, k: int) -> bool:
    """Weakly increasing, within [1, k], strictly increasing at tableau descents."""
    n = sum(len(row) for row in tableau)
    seq = tuple(sequence)
    if len(seq) != n or any(not isinstance(x, int) for x in seq):
        return False
    if not seq or seq[0] < 1 or seq[-1] > k:
        return False
    if any(seq[i] > seq[i + 1] for i in range(n - 1)):
        return False
    descents = tableau_descents(tableau)
    return all(seq[i - 1] < seq[i] for i in descents)


def admissible_to_ssyt(tableau: Tableau, sequence, k: int) -> Tableau:
    """Replace entry j of the standard tableau by the j-th sequence value.

    Admissibility makes the result semistandard with entries <= k.
    """
    seq = tuple(sequence)
    if not is_admissible(tableau, seq, k):
        raise ValueError("sequence is not admissible for this tableau")
    return tuple(tuple(seq[value - 1] for value in row) for row in tableau)


def ssyt_to_admissible(ssyt: Tableau) -> tuple[Tableau, tuple[int, ...]]:
    """Inverse of :func:`admissible_to_ssyt`: standardize and read off values.

    Equal entries of a semistandard tableau occupy distinct columns, and the
    standardization numbers them left to right.
    """
    if not is_semistandard(ssyt):
        raise ValueError("input must be semistandard")
    boxes = [
        (value, j, i) for i, row in enumerate(ssyt) for j, value in enumerate(row)
    ]
    boxes.sort()
    n = len(boxes)
    rows = [[0] * len(row) for row in ssyt]
    sequence = []
    for number, (value, j, i) in enumerate(boxes, start=1):
        rows[i][j] = number
        sequence.append(value)
    return tuple(tuple(r) for r in rows), tuple(sequence)


def enumerate_admissible(tableau: Tableau, k: int):
    """All admissible sequences for a tableau and bound k; exponential, tests only."""
    n = sum(len(row) for row in tableau)
    descents = tableau_descents(tableau)

    def extend(prefix: list[int]):
        i = len(prefix)
        if i == n:
            yield tuple(prefix)
            return
        low = 1 if i == 0 else prefix[-1] + (1 if i in descents else 0)
        for v in range(low, k + 1):
            prefix.append(v)
            yield from extend(prefix)
            prefix.pop()

    yield from extend([])


def count_admissible(tableau: Tableau, k: int) -> int:
    """Number of admissible sequences, by a per-position DP.

    Independent of the binomial formula C(n+j, j) it is checked against.
    """
    n = sum(len(row) for row in tableau)
    descents = tableau_descents(tableau)
    ways = [1] * k  # ways[v-1] = sequences so far ending at value v
    for i in range(2, n + 1):
        strict = (i - 1) in descents
        nxt = [0] * k
        running = 0
        for v in range(1, k + 1):
            if strict:
                nxt[v - 1] = running
                running += ways[v - 1]
            else:
                running += ways[v - 1]
                nxt[v - 1] = running
        ways = nxt
    return sum(ways)


def decompose(phi: BlockFunction) -> dict[Partition, Fraction]:
    """Multiplicity of each irreducible character inside ``phi``.

    b(lam) = sum_k a_k m_k(lam) for the tau coefficients a; zero entries are
    omitted.  Keys follow the canonical reverse lexicographic order.
    """
    n = phi.n
    if n > DESCENT_DP_BOUND:
        raise ValueError(f"decomposition limited to n <= {DESCENT_DP_BOUND}")
    a = to_tau_basis(phi)
    distributions = descent_distributions(n)
    result: dict[Partition, Fraction] = {}
    for lam in sorted(distributions, reverse=True):
        multiplicity = sum(
            (a[k - 1] * distributions[lam][k - 1] for k in range(1, n + 1)),
            Fraction(0),
        )
        if multiplicity != 0:
            result[lam] = multiplicity
    return result


def decomposition_dimension_check(phi: BlockFunction) -> bool:
    """sum_lam b(lam) dim(lam) must reproduce the value at the identity."""
    total = sum(
        (b * dim_syt(lam) for lam, b in decompose(phi).items()), Fraction(0)
    )
    return total == phi.at_identity()


def verify_duality(n: int) -> bool:
    """m_k of the transposed shape equals m_{n+1-k} of the original, all shapes."""
    from .combinatorics import conjugate, partitions_of

    return all(
        m_count(conjugate(lam), k) == m_count(lam, n + 1 - k)
        for lam in partitions_of(n)
        for k in range(1, n + 1)
    )


def verify_ms_inversion(n: int) -> bool:
    """Both binomial inversions between the m- and s-counts, all shapes of n."""
    from .combinatorics import partitions_of

    for lam in partitions_of(n):
        for k in range(1, n + 1):
            s_from_m = sum(
                comb(n + j, j) * m_count(lam, k - j)
                for j in range(k)
                if k - j >= 1
            )
            if s_from_m != s_count_content(lam, k):
                return False
            m_from_s = sum(
                (-1) ** j * comb(n + 1, j) * s_count_content(lam, k - j)
                for j in range(k)
                if k - j >= 1
            )
            if m_from_s != m_count(lam, k):
                return False
    return True
