from math import factorial

import pytest

from blockchars.combinatorics import (
    all_permutations,
    check_partition,
    check_permutation,
    conjugate,
    cycle_count,
    cycle_type,
    decrement,
    descent_number,
    descent_set,
    descent_tail_counts,
    dim_syt,
    eulerian,
    eulerian_column_table,
    is_partition,
    partitions_of,
    permutation_with_cycle_type,
    stirling_first_unsigned,
    stirling_second,
)
from blockchars.tableaux import count_syt_by_enumeration


def test_partitions_of_small():
    assert partitions_of(0) == [()]
    assert partitions_of(3) == [(3,), (2, 1), (1, 1, 1)]
    assert len(partitions_of(8)) == 22


def test_partitions_reverse_lex_order():
    for n in range(1, 10):
        parts = partitions_of(n)
        assert parts == sorted(parts, reverse=True)
        assert len(parts) == len(set(parts))
        assert all(sum(lam) == n and is_partition(lam) for lam in parts)


def test_partitions_max_parts():
    assert partitions_of(5, max_parts=2) == [(5,), (4, 1), (3, 2)]
    for n in range(1, 9):
        for bound in range(1, n + 1):
            expected = [lam for lam in partitions_of(n) if len(lam) <= bound]
            assert partitions_of(n, max_parts=bound) == expected


def test_check_partition_rejects():
    with pytest.raises(ValueError):
        check_partition((1, 2))
    with pytest.raises(ValueError):
        check_partition((2, 0))


def test_conjugate():
    assert conjugate((2, 1)) == (2, 1)
    assert conjugate((3,)) == (1, 1, 1)
    assert conjugate((4, 3, 1)) == (3, 2, 2, 1)
    # column-count oracle and involution
    for n in range(13):
        for lam in partitions_of(n):
            direct = tuple(
                sum(1 for part in lam if part >= j) for j in range(1, (lam[0] if lam else 0) + 1)
            )
            assert conjugate(lam) == direct
            assert conjugate(conjugate(lam)) == lam


def test_cycle_count_and_decrement():
    assert cycle_count((1, 2, 3)) == 3 and decrement((1, 2, 3)) == 0
    assert cycle_count((2, 1, 3)) == 2 and decrement((2, 1, 3)) == 1
    assert cycle_count((2, 3, 1)) == 1 and decrement((2, 3, 1)) == 2


def test_decrement_stable_under_embedding():
    for n in range(1, 7):
        for g in all_permutations(n):
            embedded = g + (n + 1,)
            assert decrement(embedded) == decrement(g)


def test_cycle_type_representatives():
    for n in range(1, 7):
        for lam in partitions_of(n):
            rep = permutation_with_cycle_type(lam)
            check_permutation(rep)
            assert cycle_type(rep) == lam
            assert cycle_count(rep) == len(lam)


def test_descent_set():
    assert descent_set((1, 2, 3)) == set()
    assert descent_set((3, 2, 1)) == {1, 2}
    assert descent_set((3, 1, 2)) == {1}
    for n in range(2, 7):
        assert descent_set(tuple(range(1, n + 1))) == set()
        assert descent_set(tuple(range(n, 0, -1))) == set(range(1, n))


def test_descent_tail_counts():
    g = (3, 1, 2)
    assert descent_tail_counts(g) == (1, 0, 0)
    for n in range(1, 7):
        for g in all_permutations(n):
            tails = descent_tail_counts(g)
            descents = descent_set(g)
            assert tails == tuple(
                sum(1 for d in descents if d >= i) for i in range(1, n + 1)
            )
            assert tails[-1] == 0


def test_eulerian_brute_force():
    for n in range(1, 9):
        census = [0] * n
        for g in all_permutations(n):
            census[descent_number(g)] += 1
        for k in range(1, n + 1):
            assert eulerian(n, k) == census[k - 1]
        assert sum(eulerian(n, k) for k in range(1, n + 1)) == factorial(n)


def test_eulerian_known_values_and_range():
    assert eulerian(3, 2) == 4
    assert eulerian(4, 2) == 11
    assert eulerian(10, 1) == 1
    assert eulerian(5, 0) == 0 and eulerian(5, 6) == 0


def test_eulerian_column_table():
    table = eulerian_column_table(12, 4)
    for m in range(1, 13):
        for k in range(1, min(m, 4) + 1):
            assert table[m - 1][k - 1] == eulerian(m, k)


def test_stirling_first():
    assert stirling_first_unsigned(3, 1) == 2
    assert stirling_first_unsigned(4, 2) == 11
    for n in range(1, 7):
        census = [0] * n
        for g in all_permutations(n):
            census[cycle_count(g) - 1] += 1
        for ell in range(1, n + 1):
            assert stirling_first_unsigned(n, ell) == census[ell - 1]
        assert stirling_first_unsigned(n, n) == 1
        assert sum(stirling_first_unsigned(n, j) for j in range(1, n + 1)) == factorial(n)


def test_stirling_second_surjections():
    # k! S(n, k) counts surjective words, cross-checked by brute force
    for n in range(1, 7):
        for k in range(1, n + 1):
            count = 0
            for code in range(k**n):
                word = []
                c = code
                for _ in range(n):
                    word.append(c % k)
                    c //= k
                if len(set(word)) == k:
                    count += 1
            assert factorial(k) * stirling_second(n, k) == count


def test_dim_syt_matches_enumeration():
    for n in range(11):
        for lam in partitions_of(n):
            assert dim_syt(lam) == count_syt_by_enumeration(lam)
    assert dim_syt((4, 3, 1)) == 70
    assert dim_syt((9,)) == 1
