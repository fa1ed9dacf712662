from fractions import Fraction
from math import comb, factorial
from random import Random

import pytest

from blockchars.characters import (
    BlockFunction,
    branching_check,
    ewens,
    from_sigma_basis,
    from_tau_basis,
    gram_psd_oracle,
    is_character,
    psi,
    regular_character,
    restrict,
    sigma,
    sigma_hat,
    sign_character,
    tau,
    to_sigma_basis,
    to_tau_basis,
    verify_regular_decomposition,
)
from blockchars.combinatorics import eulerian, stirling_second


def test_sigma_values():
    assert sigma(3, 2).values == (2, 4, 8)
    assert sigma(4, 1).values == (1, 1, 1, 1)
    assert sigma(2, 3).values == (3, 9)


def test_sigma_hat_values():
    assert sigma_hat(3, 2).values == (2, -4, 8)
    assert sigma_hat(3, 2).at_identity() == sigma(3, 2).at_identity() == 8
    for n in range(1, 8):
        assert sigma_hat(n, 1) == sign_character(n)
        # sign twist relates the two families pointwise
        for k in range(1, 5):
            twisted = BlockFunction(
                n,
                [
                    sigma(n, k)(ell) * sign_character(n)(ell)
                    for ell in range(1, n + 1)
                ],
            )
            assert sigma_hat(n, k) == twisted


def test_tau_values():
    assert tau(3, 2).values == (-2, 0, 4)
    assert tau(3, 1).values == (1, 1, 1)
    assert tau(3, 3).values == (1, -1, 1)
    with pytest.raises(ValueError):
        tau(3, 4)


def test_tau_identity_is_eulerian():
    for n in range(1, 11):
        for k in range(1, n + 1):
            assert tau(n, k).at_identity() == eulerian(n, k)


def test_psi_values():
    assert psi(3, 2).values == (0, 2, 6)
    assert psi(5, 1).values == (1, 1, 1, 1, 1)
    # value at identity counts surjective words
    for n in range(1, 8):
        for k in range(1, n + 1):
            assert psi(n, k).at_identity() == factorial(k) * stirling_second(n, k)


def test_psi_tau_expansion():
    # psi(n, k) = sum_j C(n-j, k-j) tau(n, j)
    for n in range(1, 9):
        for k in range(1, n + 1):
            expected = tuple(
                comb(n - j, k - j) if j <= k else 0 for j in range(1, n + 1)
            )
            assert to_tau_basis(psi(n, k)) == expected


def test_sigma_basis_round_trip():
    assert to_sigma_basis(sigma(3, 2)) == (0, 1, 0)
    assert to_sigma_basis(tau(3, 2)) == (-4, 1, 0)
    assert to_sigma_basis(regular_character(3)) == (3, -3, 1)
    rng = Random(2)
    for _ in range(40):
        n = rng.randint(1, 12)
        phi = BlockFunction(
            n, [Fraction(rng.randint(-20, 20), rng.randint(1, 6)) for _ in range(n)]
        )
        assert from_sigma_basis(n, to_sigma_basis(phi)) == phi


def test_tau_basis_round_trip_fuzz():
    assert to_tau_basis(sigma(3, 2)) == (4, 1, 0)
    rng = Random(4)
    for _ in range(40):
        n = rng.randint(1, 20)
        phi = BlockFunction(
            n, [Fraction(rng.randint(-30, 30), rng.randint(1, 8)) for _ in range(n)]
        )
        assert from_tau_basis(n, to_tau_basis(phi)) == phi
    for n in range(1, 9):
        for k in range(1, n + 1):
            indicator = tuple(Fraction(int(j == k)) for j in range(1, n + 1))
            assert to_tau_basis(tau(n, k)) == indicator


def test_sigma_tau_inversion_coefficients():
    # sigma(n,k) = sum_{j=0}^{k-1} C(n+j, j) tau(n, k-j)
    for n in range(1, 13):
        for k in range(1, n + 1):
            a = to_tau_basis(sigma(n, k))
            for m in range(1, n + 1):
                expected = comb(n + k - m, k - m) if m <= k else 0
                assert a[m - 1] == expected


def test_sigma_hat_duality_pattern():
    # tau coefficients of sigma_hat(n,k) are C(n+j, j) at positions n+1-k+j
    for n in range(1, 13):
        for k in range(1, n + 1):
            a = to_tau_basis(sigma_hat(n, k))
            expected = [Fraction(0)] * n
            for j in range(k):
                expected[n - k + j] = Fraction(comb(n + j, j))
            assert list(a) == expected


def test_regular_decomposition():
    for n in range(1, 21):
        assert verify_regular_decomposition(n)


def test_ewens():
    assert ewens(3, 2).function == sigma(3, 2)
    zero = ewens(3, 0)
    assert zero.function.is_zero() and zero.degenerate
    e = ewens(3, Fraction(3, 2))
    assert e.tau_coefficients[2] == Fraction(-1, 16)
    assert not e.degenerate
    gate = is_character(e.function)
    assert not gate.is_character and gate.witness == 3
    # coefficients resum to the value vector
    for n in range(1, 8):
        for theta in (Fraction(1, 4), Fraction(5, 2), Fraction(7)):
            result = ewens(n, theta)
            assert from_tau_basis(n, result.tau_coefficients) == result.function


def test_ewens_threshold():
    for n in range(1, 9):
        for p in range(0, 4 * n + 1):
            theta = Fraction(p, 4)
            result = ewens(n, theta)
            if result.degenerate:
                assert theta == 0
                continue
            gate = is_character(result.function)
            expected = (theta.denominator == 1 and theta >= 1) or theta > n - 1
            assert gate.is_character == expected, (n, theta)


def test_is_character_examples():
    assert is_character(tau(3, 2)).is_character
    assert is_character(sigma_hat(3, 2)).is_character
    assert not is_character(tau(3, 2) - tau(3, 1)).is_character


def test_gram_oracle_examples():
    assert gram_psd_oracle(tau(3, 2))
    assert not gram_psd_oracle(tau(3, 2) - tau(3, 1))
    assert gram_psd_oracle(sigma(4, 1))  # all-ones matrix
    assert gram_psd_oracle(BlockFunction(3, [0, 0, 0]))
    with pytest.raises(ValueError):
        gram_psd_oracle(sigma(6, 2))


def test_gram_agreement_random():
    # smaller version of the acceptance sweep
    rng = Random(31)
    for _ in range(40):
        n = rng.randint(1, 4)
        if rng.random() < 0.5:
            phi = from_tau_basis(
                n, [Fraction(rng.randint(0, 5), rng.randint(1, 3)) for _ in range(n)]
            )
        else:
            phi = BlockFunction(
                n, [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n)]
            )
        assert is_character(phi).is_character == gram_psd_oracle(phi)


def test_restrict():
    assert restrict(sigma(3, 2)).values == (4, 8)
    assert restrict(tau(3, 2)).values == (0, 4)
    assert restrict(sigma(5, 1)) == sigma(4, 1)
    with pytest.raises(ValueError):
        restrict(sigma(1, 2))


def test_restrict_normalized_consistency():
    for n in range(2, 13):
        for k in range(1, n + 1):
            left = restrict(sigma(n, k))
            assert left == k * sigma(n - 1, k)
            normalized_left = left / left.at_identity()
            normalized_right = sigma(n - 1, k) / sigma(n - 1, k).at_identity()
            assert normalized_left == normalized_right


def test_branching():
    assert branching_check(3, 2)
    assert restrict(tau(3, 2)) == 2 * tau(2, 2) + 2 * tau(2, 1)
    for n in range(2, 13):
        for k in range(1, n + 1):
            assert branching_check(n, k)
