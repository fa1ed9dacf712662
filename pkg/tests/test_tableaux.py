from random import Random

import pytest

from blockchars.combinatorics import all_permutations, descent_set, partitions_of
from blockchars.tableaux import (
    enumerate_syt,
    is_semistandard,
    is_standard,
    rsk,
    rsk_inverse,
    rsk_shape,
    shape_of,
    tableau_descents,
)

FIG_TABLEAU = ((1, 2, 3, 5), (4, 6, 8), (7,))


def test_standard_and_semistandard_predicates():
    assert is_standard(FIG_TABLEAU)
    assert not is_standard(((1, 3), (2, 2)))
    assert is_semistandard(((1, 1, 2), (2, 3)))
    assert not is_semistandard(((1, 2), (1, 3)))  # column not strict
    assert not is_semistandard(((2, 1),))  # row decreasing


def test_tableau_descents_examples():
    assert tableau_descents(FIG_TABLEAU) == {3, 5, 6}
    assert tableau_descents(((1, 2, 3, 4),)) == set()
    n = 5
    column = tuple((i,) for i in range(1, n + 1))
    assert tableau_descents(column) == set(range(1, n))


def test_tableau_descents_rejects_non_standard():
    with pytest.raises(ValueError):
        tableau_descents(((1, 1), (2, 2)))


def test_enumerate_syt_counts():
    assert len(list(enumerate_syt((2, 1)))) == 2
    assert len(list(enumerate_syt((2, 2)))) == 2
    assert len(list(enumerate_syt((6,)))) == 1
    for lam in partitions_of(7):
        tableaux = list(enumerate_syt(lam))
        assert len(tableaux) == len(set(tableaux))
        assert all(is_standard(t) and shape_of(t) == lam for t in tableaux)


def test_enumerate_syt_bound():
    with pytest.raises(ValueError):
        list(enumerate_syt((15,)))
    # explicit override allows larger shapes
    assert sum(1 for _ in enumerate_syt((15,), max_size=15)) == 1


def test_rsk_identity_and_reverse():
    n = 6
    p, q = rsk(tuple(range(1, n + 1)))
    assert p == q == (tuple(range(1, n + 1)),)
    p, q = rsk((2, 1))
    assert p == q == ((1,), (2,))


def test_rsk_descent_property_exhaustive():
    for n in range(1, 8):
        for g in all_permutations(n):
            _, q = rsk(g)
            assert descent_set(g) == tableau_descents(q)


def test_rsk_standard_pair_and_shape():
    for n in range(1, 7):
        for g in all_permutations(n):
            p, q = rsk(g)
            assert is_standard(p) and is_standard(q)
            assert shape_of(p) == shape_of(q) == rsk_shape(g)


def test_rsk_inverse_round_trip_permutations():
    for n in range(1, 6):
        for g in all_permutations(n):
            assert rsk_inverse(*rsk(g)) == g


def test_rsk_on_words_semistandard():
    rng = Random(7)
    for _ in range(200):
        n = rng.randint(1, 10)
        k = rng.randint(1, 5)
        word = tuple(rng.randint(1, k) for _ in range(n))
        p, q = rsk(word)
        assert is_semistandard(p)
        assert is_standard(q)
        assert shape_of(p) == shape_of(q) == rsk_shape(word)
        assert rsk_inverse(p, q) == word


def test_rsk_word_bijectivity_small():
    # distinct words give distinct pairs; counts match k^n
    n, k = 4, 3
    seen = set()
    words = []

    def grow(prefix):
        if len(prefix) == n:
            words.append(tuple(prefix))
            return
        for x in range(1, k + 1):
            grow(prefix + [x])

    grow([])
    for word in words:
        seen.add(rsk(word))
    assert len(seen) == k**n
