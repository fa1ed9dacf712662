"""Block characters of S_n: the sigma, tau, psi and Ewens families.

A block function is determined by its values on the cycle count ℓ = 1..n, kept
as exact rationals.  Values are the canonical representation; coefficients in
the sigma or tau bases are computed views.
"""

from fractions import Fraction
from math import comb, factorial, lcm
from typing import NamedTuple

from . import exactla
from .combinatorics import all_permutations, cycle_count, eulerian

GRAM_ORACLE_BOUND = 5


class BlockFunction:
    """Exact-rational function of the cycle count on S_n.

    ``values[ℓ-1]`` is the value on any permutation with ℓ cycles; the value at
    the identity is ``values[n-1]``.
    """

    __slots__ = ("n", "values")

    def __init__(self, n: int, values):
        values = tuple(Fraction(v) for v in values)
        if n < 1 or len(values) != n:
            raise ValueError("need exactly n values for ℓ = 1..n")
        self.n = n
        self.values = values

    def __repr__(self):
        return f"BlockFunction(n={self.n}, values={[str(v) for v in self.values]})"

    def __eq__(self, other):
        return (
            isinstance(other, BlockFunction)
            and self.n == other.n
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.n, self.values))

    def __add__(self, other):
        self._check_compatible(other)
        return BlockFunction(self.n, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        self._check_compatible(other)
        return BlockFunction(self.n, [a - b for a, b in zip(self.values, other.values)])

    def __mul__(self, scalar):
        return BlockFunction(self.n, [Fraction(scalar) * v for v in self.values])

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return BlockFunction(self.n, [v / Fraction(scalar) for v in self.values])

    def _check_compatible(self, other):
        if not isinstance(other, BlockFunction) or other.n != self.n:
            raise ValueError("block functions must live on the same group")

    def __call__(self, ell: int) -> Fraction:
        """Value on permutations with ``ell`` cycles."""
        if not 1 <= ell <= self.n:
            raise ValueError(f"cycle count must be in 1..{self.n}")
        return self.values[ell - 1]

    def at_identity(self) -> Fraction:
        return self.values[self.n - 1]

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)


def zero_function(n: int) -> BlockFunction:
    return BlockFunction(n, [0] * n)


def sigma(n: int, k: int) -> BlockFunction:
    """Character of S_n permuting positions of words over k letters: k^ℓ."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    return BlockFunction(n, [Fraction(k**ell) for ell in range(1, n + 1)])


def sigma_hat(n: int, k: int) -> BlockFunction:
    """Sign-twisted word character: (-1)^n (-k)^ℓ."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    sign_n = (-1) ** n
    return BlockFunction(
        n, [Fraction(sign_n * (-k) ** ell) for ell in range(1, n + 1)]
    )


def sign_character(n: int) -> BlockFunction:
    return BlockFunction(n, [Fraction((-1) ** (n - ell)) for ell in range(1, n + 1)])


def regular_character(n: int) -> BlockFunction:
    return BlockFunction(n, [0] * (n - 1) + [factorial(n)])


def tau(n: int, k: int) -> BlockFunction:
    """Extreme block character: alternating sum over the sigma family.

    tau(n, k) = sum_{j=0}^{k-1} (-1)^j C(n+1, j) sigma(n, k-j); its value at the
    identity is the Eulerian number counting permutations with k-1 descents.
    """
    if not 1 <= k <= n:
        raise ValueError(f"k must be in 1..{n}")
    values = [
        sum((-1) ** j * comb(n + 1, j) * (k - j) ** ell for j in range(k))
        for ell in range(1, n + 1)
    ]
    return BlockFunction(n, values)


def psi(n: int, k: int) -> BlockFunction:
    """Character of the words using exactly k letters (inclusion-exclusion)."""
    if not 1 <= k <= n:
        raise ValueError(f"k must be in 1..{n}")
    values = [
        sum((-1) ** (k - j) * comb(k, j) * j**ell for j in range(1, k + 1))
        for ell in range(1, n + 1)
    ]
    return BlockFunction(n, values)


def generalized_binomial(theta: Fraction, n: int) -> Fraction:
    """C(theta, n) as the degree-n polynomial theta(theta-1)...(theta-n+1)/n!."""
    theta = Fraction(theta)
    product = Fraction(1)
    for i in range(n):
        product *= theta - i
    return product / factorial(n)


class EwensFunction(NamedTuple):
    """theta^ℓ together with its tau-expansion coefficients.

    ``degenerate`` flags theta = 0, where the values collapse to the zero
    function and the positivity threshold statement does not apply.
    """

    function: BlockFunction
    tau_coefficients: tuple[Fraction, ...]
    degenerate: bool


def ewens(n: int, theta) -> EwensFunction:
    """The Ewens block function theta^ℓ and its generalized-binomial expansion.

    Coefficient of tau(n, j) is C(theta + n - j, n), exact in rational theta.
    """
    theta = Fraction(theta)
    if theta < 0:
        raise ValueError("theta must be nonnegative")
    values = [theta**ell for ell in range(1, n + 1)]
    coefficients = tuple(
        generalized_binomial(theta + n - j, n) for j in range(1, n + 1)
    )
    return EwensFunction(BlockFunction(n, values), coefficients, theta == 0)


def to_sigma_basis(phi: BlockFunction) -> tuple[Fraction, ...]:
    """Coordinates c with phi(ℓ) = sum_k c_k k^ℓ; the Vandermonde system is
    solved exactly and is always invertible."""
    n = phi.n
    matrix = [[Fraction(k**ell) for k in range(1, n + 1)] for ell in range(1, n + 1)]
    return tuple(exactla.solve_linear(matrix, list(phi.values)))


def from_sigma_basis(n: int, coefficients) -> BlockFunction:
    values = [
        sum(Fraction(c) * k**ell for k, c in enumerate(coefficients, start=1))
        for ell in range(1, n + 1)
    ]
    return BlockFunction(n, values)


def to_tau_basis(phi: BlockFunction) -> tuple[Fraction, ...]:
    """Coefficients a with phi = sum_k a_k tau(n, k).

    Uses the inversion sigma(n, k) = sum_{j=0}^{k-1} C(n+j, j) tau(n, k-j) on
    top of the exact sigma coordinates; round-trips bit-exactly.
    """
    n = phi.n
    c = to_sigma_basis(phi)
    return tuple(
        sum((c[k - 1] * comb(n + k - m, k - m) for k in range(m, n + 1)), Fraction(0))
        for m in range(1, n + 1)
    )


def from_tau_basis(n: int, coefficients) -> BlockFunction:
    result = zero_function(n)
    for k, a in enumerate(coefficients, start=1):
        if a:
            result = result + Fraction(a) * tau(n, k)
    return result


class CharacterTest(NamedTuple):
    is_character: bool
    witness: int | None  # 1-based index of the first negative tau coefficient
    tau_coefficients: tuple[Fraction, ...]


def is_character(phi: BlockFunction) -> CharacterTest:
    """Positivity gate: phi is a character iff all tau coefficients are >= 0."""
    a = to_tau_basis(phi)
    for k, coefficient in enumerate(a, start=1):
        if coefficient < 0:
            return CharacterTest(False, k, a)
    return CharacterTest(True, None, a)


def gram_psd_oracle(phi: BlockFunction) -> bool:
    """Brute-force positive-definiteness check, independent of the tau gate.

    Builds the full n! x n! matrix M[g, h] = phi(g h^{-1}) and runs exact
    pivoted symmetric elimination.  Denominators are cleared first so the
    elimination stays in integers.
    """
    n = phi.n
    if n > GRAM_ORACLE_BOUND:
        raise ValueError(f"Gram oracle limited to n <= {GRAM_ORACLE_BOUND}")
    denominator = lcm(*(v.denominator for v in phi.values))
    scaled = [int(v * denominator) for v in phi.values]
    group = list(all_permutations(n))
    inverses = []
    for g in group:
        inv = [0] * n
        for i, gi in enumerate(g, start=1):
            inv[gi - 1] = i
        inverses.append(tuple(inv))
    matrix = []
    for g in group:
        row = []
        for h_inv in inverses:
            product = tuple(g[h_inv[i] - 1] for i in range(n))
            row.append(scaled[cycle_count(product) - 1])
        matrix.append(row)
    return exactla.is_psd_integer(matrix)


def restrict(phi: BlockFunction) -> BlockFunction:
    """Restriction to S_{n-1}: drop a cycle, i.e. shift values by one."""
    if phi.n < 2:
        raise ValueError("cannot restrict below S_1")
    return BlockFunction(phi.n - 1, phi.values[1:])


def branching_check(n: int, k: int) -> bool:
    """Restriction rule for tau: Res tau(n,k) = k tau(n-1,k) + (n-k+1) tau(n-1,k-1).

    The k = 1 and k = n edges follow from the convention tau(n-1, k) = 0 for k
    outside 1..n-1.
    """
    if n < 2 or not 1 <= k <= n:
        raise ValueError("need n >= 2 and 1 <= k <= n")
    left = restrict(tau(n, k))
    right = zero_function(n - 1)
    if 1 <= k <= n - 1:
        right = right + k * tau(n - 1, k)
    if 1 <= k - 1 <= n - 1:
        right = right + (n - k + 1) * tau(n - 1, k - 1)
    return left == right


def tau_identity_value(n: int, k: int) -> Fraction:
    """tau(n, k) at the identity; must equal the Eulerian number."""
    return tau(n, k).at_identity()


def verify_regular_decomposition(n: int) -> bool:
    """sum_k tau(n, k) equals the character of the regular representation."""
    total = zero_function(n)
    for k in range(1, n + 1):
        total = total + tau(n, k)
    return total == regular_character(n)


def verify_eulerian_dimension(n: int) -> bool:
    return all(tau(n, k).at_identity() == eulerian(n, k) for k in range(1, n + 1))
