"""The coinvariant algebra of S_n at small n, materialized exactly.

Polynomials are sparse dicts mapping exponent tuples (length n) to rational
coefficients.  Normal forms are taken modulo the symmetric ideal using its
staircase basis under pure lexicographic order with x_1 > ... > x_n: the i-th
basis element is the complete homogeneous polynomial of degree i in the tail
variables x_i, ..., x_n, whose leading term is x_i^i.  Normal forms therefore
live on exponents with a_i <= i - 1, a space of dimension n!.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import lcm

from . import exactla
from .combinatorics import (
    Partition,
    Permutation,
    all_permutations,
    descent_number,
    descent_tail_counts,
)

MultivariatePolynomial = dict[tuple[int, ...], Fraction]

COINVARIANT_DEFAULT_BOUND = 5
COINVARIANT_HARD_BOUND = 6


def poly_add(target: dict, source: dict, scale=1) -> None:
    """target += scale * source, dropping zeros."""
    for exps, coefficient in source.items():
        value = target.get(exps, 0) + scale * coefficient
        if value:
            target[exps] = value
        else:
            target.pop(exps, None)


def poly_equal(p: dict, q: dict) -> bool:
    return {e: c for e, c in p.items() if c} == {e: c for e, c in q.items() if c}


def poly_str(poly: dict, names: str = "x") -> str:
    if not poly:
        return "0"
    pieces = []
    for exps in sorted(poly, reverse=True):
        factors = [
            f"{names}{i}" + (f"^{e}" if e > 1 else "")
            for i, e in enumerate(exps, start=1)
            if e
        ]
        monomial = "*".join(factors) if factors else "1"
        c = poly[exps]
        pieces.append(f"{'+' if c >= 0 else '-'} {abs(c)}*{monomial}")
    text = " ".join(pieces)
    return text[2:] if text.startswith("+ ") else text


def elementary_symmetric(n: int, k: int) -> MultivariatePolynomial:
    """e_k in n variables; e_1, ..., e_n generate the symmetric ideal."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    poly: MultivariatePolynomial = {}
    for subset in combinations(range(n), k):
        exps = [0] * n
        for i in subset:
            exps[i] = 1
        poly[tuple(exps)] = Fraction(1)
    return poly


def _tail_monomials(n: int, start: int, degree: int):
    """Exponent tuples of the given degree supported on variables start..n (1-based)."""
    result = []

    def build(position: int, remaining: int, exps: list[int]):
        if position == n - 1:
            exps[position] = remaining
            result.append(tuple(exps))
            exps[position] = 0
            return
        for e in range(remaining + 1):
            exps[position] = e
            build(position + 1, remaining - e, exps)
            exps[position] = 0

    build(start - 1, degree, [0] * n)
    return result


class _Reducer:
    """Normal-form engine for one variable count, memoized per monomial.

    Reduction rewrites x_i^i as minus the other degree-i monomials in the tail
    variables; coefficients stay integers throughout.
    """

    def __init__(self, n: int):
        self.n = n
        # substitution monomials for x_i^i, keyed by i (1-based)
        self.substitutions = {
            i: [m for m in _tail_monomials(n, i, i) if m[i - 1] != i]
            for i in range(1, n + 1)
        }
        self.cache: dict[tuple[int, ...], dict[tuple[int, ...], int]] = {}

    def monomial_nf(self, exps: tuple[int, ...]) -> dict[tuple[int, ...], int]:
        cached = self.cache.get(exps)
        if cached is not None:
            return cached
        reducible = next(
            (i for i in range(1, self.n + 1) if exps[i - 1] >= i), None
        )
        if reducible is None:
            result = {exps: 1}
        else:
            i = reducible
            rest = list(exps)
            rest[i - 1] -= i
            result = {}
            for substitution in self.substitutions[i]:
                merged = tuple(r + s for r, s in zip(rest, substitution))
                for mono, coefficient in self.monomial_nf(merged).items():
                    value = result.get(mono, 0) - coefficient
                    if value:
                        result[mono] = value
                    else:
                        result.pop(mono, None)
        self.cache[exps] = result
        return result

    def normal_form(self, poly: MultivariatePolynomial) -> MultivariatePolynomial:
        result: MultivariatePolynomial = {}
        for exps, coefficient in poly.items():
            if coefficient:
                poly_add(result, self.monomial_nf(tuple(exps)), coefficient)
        return result


@lru_cache(maxsize=COINVARIANT_HARD_BOUND + 1)
def _reducer(n: int) -> _Reducer:
    return _Reducer(n)


def normal_form(n: int, poly: MultivariatePolynomial) -> MultivariatePolynomial:
    """Canonical representative of ``poly`` modulo the symmetric ideal.

    Linear and idempotent; kills e_1, ..., e_n; image spanned by the n!
    staircase monomials.
    """
    if not 1 <= n <= COINVARIANT_HARD_BOUND:
        raise ValueError(f"normal forms limited to n <= {COINVARIANT_HARD_BOUND}")
    return _reducer(n).normal_form(poly)


def staircase_monomials(n: int) -> list[tuple[int, ...]]:
    """All exponent tuples with a_i <= i-1, in lexicographic order; n! of them."""
    monomials: list[tuple[int, ...]] = []

    def build(position: int, exps: list[int]):
        if position == n:
            monomials.append(tuple(exps))
            return
        for e in range(position + 1):
            exps[position] = e
            build(position + 1, exps)
            exps[position] = 0

    build(0, [0] * n)
    return monomials


def descent_monomial(g: Permutation) -> MultivariatePolynomial:
    """u_g: variable x_{g(i)} carries exponent d_i(g) = |D(g) ∩ {i..n}|."""
    tails = descent_tail_counts(g)
    exps = [0] * len(g)
    for i, value in enumerate(g):
        exps[value - 1] = tails[i]
    return {tuple(exps): Fraction(1)}


def permute_polynomial(g: Permutation, poly: MultivariatePolynomial) -> MultivariatePolynomial:
    """Variable substitution x_i -> x_{g(i)}."""
    result: MultivariatePolynomial = {}
    for exps, coefficient in poly.items():
        moved = [0] * len(exps)
        for i, e in enumerate(exps):
            moved[g[i] - 1] = e
        key = tuple(moved)
        value = result.get(key, 0) + coefficient
        if value:
            result[key] = value
        else:
            result.pop(key, None)
    return result


def pdeg(poly: MultivariatePolynomial) -> Partition:
    """Partition degree: lexicographic maximum of the sorted exponent vectors."""
    best: tuple[int, ...] = ()
    for exps, coefficient in poly.items():
        if coefficient:
            candidate = tuple(sorted(exps, reverse=True))
            if candidate > best:
                best = candidate
    while best and best[-1] == 0:
        best = best[:-1]
    return best


class QuotientBasis:
    """The descent basis of the coinvariant algebra, with exact change of basis.

    Permutations are ordered by descent number so that the span of the first
    blocks realizes the filtration; the stored integer inverse certifies that
    the n! normal forms are linearly independent.
    """

    def __init__(self, n: int, allow_large: bool = False):
        bound = COINVARIANT_HARD_BOUND if allow_large else COINVARIANT_DEFAULT_BOUND
        if not 1 <= n <= bound:
            raise ValueError(f"quotient basis limited to n <= {bound}")
        self.n = n
        self.permutations = sorted(all_permutations(n), key=lambda g: (descent_number(g), g))
        self.descent_numbers = [descent_number(g) for g in self.permutations]
        self.monomials = staircase_monomials(n)
        self.monomial_index = {m: i for i, m in enumerate(self.monomials)}
        self.normal_forms = [
            normal_form(n, descent_monomial(g)) for g in self.permutations
        ]
        matrix = [[0] * len(self.permutations) for _ in self.monomials]
        for column, nf in enumerate(self.normal_forms):
            for mono, coefficient in nf.items():
                assert coefficient.denominator == 1
                matrix[self.monomial_index[mono]][column] = int(coefficient)
        solver = exactla.LUSolver(matrix)  # raises if the forms were dependent
        denominator = lcm(
            *(entry.denominator for row in solver.inverse for entry in row)
        )
        self.inverse_rows = [
            [int(entry * denominator) for entry in row] for row in solver.inverse
        ]
        self.inverse_denominator = denominator
        self.rank = len(self.permutations)

    def coordinates(self, poly: MultivariatePolynomial) -> list[int]:
        """Integer coordinates over the staircase monomials (input must be a
        normal form with integer coefficients)."""
        vector = [0] * len(self.monomials)
        for mono, coefficient in poly.items():
            assert coefficient.denominator == 1
            vector[self.monomial_index[mono]] = int(coefficient)
        return vector

    def express(self, poly: MultivariatePolynomial) -> list[Fraction]:
        """Coefficients of a normal form in the descent basis."""
        vector = self.coordinates(poly)
        return [
            Fraction(
                sum(m * v for m, v in zip(row, vector) if v),
                self.inverse_denominator,
            )
            for row in self.inverse_rows
        ]

    def diagonal_coefficient(self, index: int, poly: MultivariatePolynomial) -> Fraction:
        """Coefficient of basis element ``index`` only; one exact dot product."""
        vector = self.coordinates(poly)
        row = self.inverse_rows[index]
        return Fraction(
            sum(m * v for m, v in zip(row, vector) if v), self.inverse_denominator
        )


@lru_cache(maxsize=COINVARIANT_HARD_BOUND + 1)
def build_quotient_basis(n: int, allow_large: bool = False) -> QuotientBasis:
    return QuotientBasis(n, allow_large)


def filtration_dims(n: int) -> tuple[int, ...]:
    """dim F(k) = #{g : d(g) <= k} for k = 0..n-1, by direct census."""
    counts = [0] * n
    for g in all_permutations(n):
        counts[descent_number(g)] += 1
    dims = []
    running = 0
    for c in counts:
        running += c
        dims.append(running)
    return tuple(dims)


def layer_traces(n: int, s: Permutation, allow_large: bool = False) -> list[Fraction]:
    """Traces of ``s`` on the filtration layers, indexed by k = 1..n.

    Layer k is spanned by the classes of u_g with d(g) = k-1; the trace reads
    the diagonal coefficients of the permuted, re-reduced basis elements.
    """
    basis = build_quotient_basis(n, allow_large)
    traces = [Fraction(0)] * n
    for index, g in enumerate(basis.permutations):
        acted = normal_form(n, permute_polynomial(s, basis.normal_forms[index]))
        traces[basis.descent_numbers[index]] += basis.diagonal_coefficient(index, acted)
    return traces


def quotient_trace(n: int, k: int, s: Permutation, allow_large: bool = False) -> Fraction:
    """Trace of ``s`` on the k-th filtration layer; equals tau(n, k) at the
    cycle count of ``s``."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    return layer_traces(n, s, allow_large)[k - 1]
