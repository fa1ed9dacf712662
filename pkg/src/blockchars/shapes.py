"""Random Young diagrams under the descent (tau) and word (sigma) measures.

Small n: exact rational distributions over all shapes.  Large n: seeded Monte
Carlo via RSK insertion, with profiles rescaled by sqrt(n) to exhibit the
limit-shape concentration.  Probabilities stay exact rationals; only aggregate
Monte Carlo statistics (profile means, sup distances) use floats.
"""

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, isqrt
from random import Random
from typing import NamedTuple

import numpy as np

from .combinatorics import (
    Partition,
    check_partition,
    descent_number,
    dim_syt,
    eulerian,
    eulerian_column_table,
    partitions_of,
)
from .irreducibles import m_count, s_count
from .tableaux import rsk_shape

MEASURE_KINDS = ("tau", "sigma")

# x-grid for rescaled profiles; covers the support of the limit curves at w >= 1
DEFAULT_PROFILE_GRID = tuple(Fraction(i, 10) for i in range(-30, 31))


class Profile:
    """Piecewise-linear boundary of a Young diagram in rotated coordinates.

    Slopes are +-1; the slope on [m, m+1) is -1 exactly when m lies in
    {lam_i - i}.  Far from the diagram the profile is |x|.
    """

    __slots__ = ("n", "partition", "rows", "width", "_down_steps", "_integer_values")

    def __init__(self, lam: Partition):
        lam = check_partition(lam)
        self.n = sum(lam)
        self.partition = lam
        self.rows = len(lam)
        self.width = lam[0] if lam else 0
        down = {lam[i] - (i + 1) for i in range(len(lam))}
        down.update(-i for i in range(self.rows + 1, self.n + 2))
        self._down_steps = down
        self._integer_values = None

    def slope(self, m: int) -> int:
        """Slope on the unit interval [m, m+1)."""
        if m >= self.width:
            return 1
        if m < -self.n - 1:
            return -1
        return -1 if m in self._down_steps else 1

    def integer_values(self) -> list[int]:
        """f(m) for m = -n-1 .. n+1, indexed by m + n + 1."""
        if self._integer_values is None:
            span = self.n + 1
            values = [span]
            current = span
            for m in range(-span, span):
                current += self.slope(m)
                values.append(current)
            self._integer_values = values
        return self._integer_values

    def value(self, x) -> Fraction:
        """Exact evaluation at a rational point."""
        x = Fraction(x)
        span = self.n + 1
        if x <= -span or x >= span:
            return abs(x)
        m = math.floor(x)
        base = self.integer_values()[m + span]
        return base + self.slope(m) * (x - m)

    def value_float(self, t: float) -> float:
        if t <= -self.n - 1 or t >= self.n + 1:
            return abs(t)
        m = math.floor(t)
        base = self.integer_values()[m + self.n + 1]
        return base + self.slope(m) * (t - m)

    def rescaled(self, grid) -> list[float]:
        """f(x sqrt(n)) / sqrt(n) on the grid; the limit-shape observable."""
        root = math.sqrt(self.n) if self.n else 1.0
        return [self.value_float(float(x) * root) / root for x in grid]


def profile(lam: Partition) -> Profile:
    return Profile(lam)


def profile_eval(p: Profile, x) -> Fraction:
    return p.value(x)


def diagonal_counts(lam: Partition) -> dict[int, int]:
    """Boxes per diagonal j - i; the independent oracle for profile values."""
    counts: dict[int, int] = {}
    for i, part in enumerate(lam, start=1):
        for j in range(1, part + 1):
            counts[j - i] = counts.get(j - i, 0) + 1
    return counts


@dataclass(frozen=True)
class ShapeMeasure:
    """Exact probability distribution on the shapes of n induced by a block
    character family member."""

    n: int
    k: int
    kind: str
    probabilities: dict[Partition, Fraction]

    def support(self) -> list[Partition]:
        return sorted(self.probabilities, reverse=True)

    def __getitem__(self, lam: Partition) -> Fraction:
        return self.probabilities.get(tuple(lam), Fraction(0))


def exact_measure(n: int, k: int, kind: str) -> ShapeMeasure:
    """P(shape) proportional to m_k * dim (tau) or s_k * dim (sigma)."""
    if kind not in MEASURE_KINDS:
        raise ValueError(f"kind must be one of {MEASURE_KINDS}")
    if kind == "tau" and not 1 <= k <= n:
        raise ValueError("tau measure needs 1 <= k <= n")
    if kind == "sigma" and k < 1:
        raise ValueError("sigma measure needs k >= 1")
    probabilities: dict[Partition, Fraction] = {}
    if kind == "tau":
        denominator = eulerian(n, k)
        for lam in partitions_of(n):
            weight = m_count(lam, k)
            if weight:
                probabilities[lam] = Fraction(weight * dim_syt(lam), denominator)
    else:
        denominator = k**n
        for lam in partitions_of(n, max_parts=k):
            weight = s_count(lam, k)
            if weight:
                probabilities[lam] = Fraction(weight * dim_syt(lam), denominator)
    total = sum(probabilities.values())
    if total != 1:
        raise AssertionError(f"measure does not sum to 1: {total}")
    return ShapeMeasure(n, k, kind, probabilities)


def _randbelow(rng: Random, bound: int) -> int:
    """Uniform integer in [0, bound) from raw generator bits; rejection keeps
    it unbiased and pinned to the documented getrandbits stream."""
    bits = bound.bit_length()
    r = rng.getrandbits(bits)
    while r >= bound:
        r = rng.getrandbits(bits)
    return r


def _replicate_rng(seed: int, index: int) -> Random:
    # derived seed per replicate: batches are order-independent and prefix-stable
    return Random(seed ^ index)


@lru_cache(maxsize=2)
def _eulerian_table(n: int, k: int) -> list[list[int]]:
    return eulerian_column_table(n, k)


def sample_sigma_shape(n: int, k: int, seed: int) -> Partition:
    """RSK shape of a uniform word of length n over k letters."""
    rng = Random(seed)
    return _sigma_shape(rng, n, k)


def _sigma_shape(rng: Random, n: int, k: int) -> Partition:
    word = [1 + _randbelow(rng, k) for _ in range(n)]
    return rsk_shape(word)


def sample_tau_shape(n: int, k: int, seed: int) -> Partition:
    """RSK shape of a uniform permutation with exactly k-1 descents.

    The permutation is built by the backward Eulerian chain: walking m = n..2,
    value m either keeps the descent count (m branch weight k A(m-1,k)) or
    created a new descent (weight (m-k+1) A(m-1,k-1)), with the insertion slot
    uniform within the chosen branch.  All branch draws compare exact integers.
    """
    rng = Random(seed)
    return _tau_shape(rng, n, k)


def _tau_shape(rng: Random, n: int, k: int) -> Partition:
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    table = _eulerian_table(n, k)
    decisions: list[tuple[bool, int]] = []
    j = k
    for m in range(n, 1, -1):
        row_m, row_prev = table[m - 1], table[m - 2]
        preserve_weight = j * row_prev[j - 1] if j <= min(m - 1, k) else 0
        r = _randbelow(rng, row_m[j - 1])
        if r < preserve_weight:
            decisions.append((True, _randbelow(rng, j)))
        else:
            decisions.append((False, _randbelow(rng, m - j + 1)))
            j -= 1
    word = [1]
    descents: list[int] = []
    for m in range(2, n + 1):
        preserve, slot = decisions[n - m]
        if preserve:
            if slot == len(descents):
                word.append(m)
                continue
            adjacency = descents[slot]
        elif slot == 0:
            word.insert(0, m)
            descents = [0] + [d + 1 for d in descents]
            continue
        else:
            adjacency = _nth_non_descent(descents, slot - 1)
        word.insert(adjacency + 1, m)
        descents = (
            [d for d in descents if d < adjacency]
            + [adjacency + 1]
            + [d + 1 for d in descents if d > adjacency]
        )
    assert len(descents) == k - 1
    return rsk_shape(word)


def _nth_non_descent(descents: list[int], rank: int) -> int:
    index = rank
    for d in descents:
        if d <= index:
            index += 1
        else:
            break
    return index


def sample_tau_shape_rejection(n: int, k: int, seed: int) -> Partition:
    """Rejection oracle: uniform permutations resampled until the descent
    number is k-1.  Only viable at small n; used to validate the exact chain."""
    rng = Random(seed)
    while True:
        word = list(range(1, n + 1))
        for i in range(n - 1, 0, -1):
            j = _randbelow(rng, i + 1)
            word[i], word[j] = word[j], word[i]
        if descent_number(tuple(word)) == k - 1:
            return rsk_shape(word)


@dataclass(frozen=True)
class SampleBatch:
    """Reproducible batch of sampled shapes: replicate i uses the generator
    seeded with seed XOR i, so the batch is determined by (seed, count)."""

    n: int
    k: int
    kind: str
    seed: int
    count: int
    shapes: list[Partition] = field(repr=False)

    def shape_counts(self) -> Counter:
        return Counter(self.shapes)


def sample_batch(n: int, k: int, kind: str, seed: int, count: int) -> SampleBatch:
    if kind not in MEASURE_KINDS:
        raise ValueError(f"kind must be one of {MEASURE_KINDS}")
    if count < 0:
        raise ValueError("count must be nonnegative")
    draw = _tau_shape if kind == "tau" else _sigma_shape
    shapes = [draw(_replicate_rng(seed, i), n, k) for i in range(count)]
    return SampleBatch(n, k, kind, seed, count, shapes)


class TVResult(NamedTuple):
    distance: Fraction
    sigma_mixture_coefficients: tuple[Fraction, ...]


def sigma_mixture_coefficients(n: int, k: int) -> tuple[Fraction, ...]:
    """c_j = (-1)^j C(n+1, j) (k-j)^n / eulerian(n, k) for j = 0..k-1.

    These express the tau measure as a signed mixture of sigma measures; they
    sum to 1 exactly.
    """
    denominator = eulerian(n, k)
    return tuple(
        Fraction((-1) ** j * comb(n + 1, j) * (k - j) ** n, denominator)
        for j in range(k)
    )


def tv_distance_exact(n: int, k: int) -> TVResult:
    """Sum over shapes of |P_tau - P_sigma|, exactly, plus the mixture
    coefficients whose decay drives the estimate."""
    p_tau = exact_measure(n, k, "tau").probabilities
    p_sigma = exact_measure(n, k, "sigma").probabilities
    support = set(p_tau) | set(p_sigma)
    distance = sum(
        (abs(p_tau.get(lam, Fraction(0)) - p_sigma.get(lam, Fraction(0))) for lam in support),
        Fraction(0),
    )
    coefficients = sigma_mixture_coefficients(n, k)
    if sum(coefficients) != 1:
        raise AssertionError("mixture coefficients must sum to 1")
    return TVResult(distance, coefficients)


def empirical_l1_distance(counts: Counter, measure: ShapeMeasure, total: int) -> float:
    """Same sum-of-absolute-differences convention as tv_distance_exact."""
    support = set(counts) | set(measure.probabilities)
    return sum(
        abs(counts.get(lam, 0) / total - float(measure[lam])) for lam in support
    )


def mean_profile(batch: SampleBatch, grid=DEFAULT_PROFILE_GRID) -> list[float]:
    """Pointwise average of the rescaled profiles over the batch."""
    means, _ = mean_profile_with_stderr(batch, grid)
    return means


def mean_profile_with_stderr(
    batch: SampleBatch, grid=DEFAULT_PROFILE_GRID
) -> tuple[list[float], list[float]]:
    if batch.count == 0:
        raise ValueError("batch is empty")
    rows = np.array([Profile(lam).rescaled(grid) for lam in batch.shapes])
    means = rows.mean(axis=0)
    if batch.count > 1:
        stderr = rows.std(axis=0, ddof=1) / math.sqrt(batch.count)
    else:
        stderr = np.zeros(len(grid))
    return means.tolist(), stderr.tolist()


def sup_distance(p, q) -> float:
    if len(p) != len(q):
        raise ValueError("grids differ")
    return max(abs(a - b) for a, b in zip(p, q))


def goodness_of_fit(counts: Counter, measure: ShapeMeasure, total: int):
    """Chi-square statistic against the exact measure.

    Cells with expectation below 5 are pooled into one, the usual validity
    floor.  Returns (statistic, degrees of freedom, p-value).
    """
    from scipy.stats import chi2

    expected = {lam: float(p) * total for lam, p in measure.probabilities.items()}
    main = [lam for lam, e in expected.items() if e >= 5.0]
    pooled_expected = sum(e for e in expected.values() if e < 5.0)
    pooled_observed = sum(
        c for lam, c in counts.items() if expected.get(lam, 0.0) < 5.0
    )
    statistic = sum(
        (counts.get(lam, 0) - expected[lam]) ** 2 / expected[lam] for lam in main
    )
    cells = len(main)
    if pooled_expected > 0:
        statistic += (pooled_observed - pooled_expected) ** 2 / pooled_expected
        cells += 1
    dof = max(cells - 1, 1)
    return statistic, dof, float(chi2.sf(statistic, dof))


def profile_csv(grid, means, stderrs) -> str:
    """CSV emission: columns x, mean_f, stderr."""
    lines = ["x,mean_f,stderr"]
    for x, m, s in zip(grid, means, stderrs):
        lines.append(f"{float(x)!r},{float(m)!r},{float(s)!r}")
    return "\n".join(lines) + "\n"


def batch_manifest(batch: SampleBatch, grid=DEFAULT_PROFILE_GRID, values=None) -> dict:
    """JSON-ready description of a batch and its mean rescaled profile."""
    if values is None:
        values = mean_profile(batch, grid)
    return {
        "n": batch.n,
        "k": batch.k,
        "kind": batch.kind,
        "seed": batch.seed,
        "count": batch.count,
        "grid": [float(x) for x in grid],
        "values": [float(v) for v in values],
    }


def sqrt_k_for(n: int) -> int:
    """Integer sqrt helper for the k ~ sqrt(n) regime used in the TV sweeps."""
    return isqrt(n)
