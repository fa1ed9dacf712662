from fractions import Fraction
from random import Random

import pytest

from blockchars.exactla import LUSolver, is_psd_integer, rank, solve_linear


def test_solve_linear_known():
    # x + 2y = 5, 3x + 4y = 11
    assert solve_linear([[1, 2], [3, 4]], [5, 11]) == [Fraction(1), Fraction(2)]


def test_solve_linear_random_round_trip():
    rng = Random(3)
    for _ in range(30):
        n = rng.randint(1, 6)
        a = [[Fraction(rng.randint(-5, 5)) for _ in range(n)] for _ in range(n)]
        x = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n)]
        b = [sum(a[i][j] * x[j] for j in range(n)) for i in range(n)]
        try:
            solved = solve_linear(a, b)
        except ValueError:
            continue  # singular draw
        assert solved == x


def test_solve_singular_raises():
    with pytest.raises(ValueError):
        solve_linear([[1, 1], [2, 2]], [1, 2])


def test_rank():
    assert rank([]) == 0
    assert rank([[0, 0], [0, 0]]) == 0
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[1, 0], [0, 1]]) == 2
    assert rank([[1, 2, 3], [4, 5, 6]]) == 2


def test_lu_solver_matches_solve():
    rng = Random(11)
    for _ in range(20):
        n = rng.randint(1, 6)
        a = [[Fraction(rng.randint(-4, 4)) for _ in range(n)] for _ in range(n)]
        try:
            solver = LUSolver(a)
        except ValueError:
            continue
        for _ in range(3):
            b = [Fraction(rng.randint(-9, 9)) for _ in range(n)]
            assert solver.solve(b) == solve_linear(a, b)


def test_psd_basic_cases():
    assert is_psd_integer([[0]])
    assert is_psd_integer([[2]])
    assert not is_psd_integer([[-1]])
    assert is_psd_integer([[1, 0], [0, 1]])
    assert is_psd_integer([[1, 1], [1, 1]])  # rank deficient but PSD
    assert not is_psd_integer([[1, 2], [2, 1]])  # eigenvalue -1
    assert not is_psd_integer([[0, 1], [1, 0]])  # zero diagonal, nonzero block
    assert is_psd_integer([[0, 0], [0, 0]])


def test_psd_gram_random():
    # A^T A is always PSD; subtracting a large multiple of identity is not
    rng = Random(5)
    for _ in range(25):
        n = rng.randint(1, 7)
        m = rng.randint(1, 7)
        a = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(m)]
        gram = [
            [sum(a[r][i] * a[r][j] for r in range(m)) for j in range(n)]
            for i in range(n)
        ]
        assert is_psd_integer(gram)
        shifted = [
            [gram[i][j] - (100 if i == j else 0) for j in range(n)] for i in range(n)
        ]
        assert not is_psd_integer(shifted)


def test_psd_agrees_with_float_eigenvalues():
    import numpy as np

    rng = Random(17)
    for _ in range(40):
        n = rng.randint(2, 6)
        a = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        sym = [[a[i][j] + a[j][i] for j in range(n)] for i in range(n)]
        eigen = np.linalg.eigvalsh(np.array(sym, dtype=float))
        if abs(eigen.min()) < 1e-9:
            continue  # numerically ambiguous, exact path is the authority
        assert is_psd_integer(sym) == (eigen.min() > 0)
