"""Young tableaux: enumeration, descent statistics, and the RSK correspondence.

A tableau is a tuple of row tuples.  Standard tableaux contain 1..n with rows
and columns strictly increasing; semistandard tableaux have weakly increasing
rows and strictly increasing columns.
"""

from bisect import bisect_left, bisect_right

from .combinatorics import Partition

Tableau = tuple[tuple[int, ...], ...]

# Explicit tableau listings grow as fast as dim(shape); sizes past this need
# the counting routines in `irreducibles` instead.
SYT_ENUMERATION_BOUND = 14


def shape_of(tableau: Tableau) -> Partition:
    return tuple(len(row) for row in tableau)


def is_standard(tableau: Tableau) -> bool:
    entries = sorted(x for row in tableau for x in row)
    if entries != list(range(1, len(entries) + 1)):
        return False
    for row in tableau:
        if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
            return False
    return _columns_strict(tableau)


def is_semistandard(tableau: Tableau) -> bool:
    for row in tableau:
        if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
            return False
        if any(x < 1 for x in row):
            return False
    return _columns_strict(tableau) and _is_partition_shape(tableau)


def _is_partition_shape(tableau: Tableau) -> bool:
    lengths = [len(row) for row in tableau]
    return all(lengths[i] >= lengths[i + 1] for i in range(len(lengths) - 1)) and all(
        length > 0 for length in lengths
    )


def _columns_strict(tableau: Tableau) -> bool:
    for i in range(len(tableau) - 1):
        upper, lower = tableau[i], tableau[i + 1]
        if len(lower) > len(upper):
            return False
        if any(lower[j] <= upper[j] for j in range(len(lower))):
            return False
    return True


def entry_positions(tableau: Tableau) -> dict[int, tuple[int, int]]:
    """Map entry -> (row, column), 0-based; entries assumed distinct."""
    return {
        value: (i, j) for i, row in enumerate(tableau) for j, value in enumerate(row)
    }


def tableau_descents(tableau: Tableau) -> set[int]:
    """Entries i such that i+1 sits in a strictly lower row; standard input only."""
    if not is_standard(tableau):
        raise ValueError("descent set is defined for standard tableaux")
    pos = entry_positions(tableau)
    n = len(pos)
    return {i for i in range(1, n) if pos[i + 1][0] > pos[i][0]}


def tableau_descent_number(tableau: Tableau) -> int:
    return len(tableau_descents(tableau))


def tableau_descent_tail_counts(tableau: Tableau) -> tuple[int, ...]:
    """d_i(T) = |D(T) ∩ {i, ..., n}| for i = 1..n."""
    descents = tableau_descents(tableau)
    n = sum(len(row) for row in tableau)
    d = [0] * (n + 1)
    for i in range(n - 1, 0, -1):
        d[i] = d[i + 1] + (1 if i in descents else 0)
    return tuple(d[1:])


def enumerate_syt(lam: Partition, max_size: int = SYT_ENUMERATION_BOUND):
    """Yield every standard tableau of shape ``lam`` exactly once.

    Builds tableaux by placing 1..n at addable corners, so tableaux arrive in
    lexicographic order of their corner-row sequences.
    """
    n = sum(lam)
    if n > max_size:
        raise ValueError(f"|shape| = {n} exceeds enumeration bound {max_size}")
    if n == 0:
        yield ()
        return
    rows: list[list[int]] = [[] for _ in lam]

    def place(value: int):
        if value > n:
            yield tuple(tuple(row) for row in rows if row)
            return
        for i, target in enumerate(lam):
            filled = len(rows[i])
            if filled < target and (i == 0 or len(rows[i - 1]) > filled):
                rows[i].append(value)
                yield from place(value + 1)
                rows[i].pop()

    yield from place(1)


def count_syt_by_enumeration(lam: Partition, max_size: int = SYT_ENUMERATION_BOUND) -> int:
    """Brute-force tableau count; the cross-check partner of the hook product."""
    return sum(1 for _ in enumerate_syt(lam, max_size))


def _row_insert(rows: list[list[int]], x: int) -> int:
    """Insert ``x`` by row bumping; returns the row index where a cell was added.

    Bumps the leftmost entry strictly greater than ``x``, so equal letters stay
    in the same row and word input yields a semistandard insertion tableau.
    """
    i = 0
    while True:
        if i == len(rows):
            rows.append([x])
            return i
        row = rows[i]
        j = bisect_right(row, x)
        if j == len(row):
            row.append(x)
            return i
        row[j], x = x, row[j]
        i += 1


def rsk(word) -> tuple[Tableau, Tableau]:
    """RSK row insertion: word -> (insertion tableau P, recording tableau Q).

    For a permutation both tableaux are standard; for a general word P is
    semistandard.  Q records which row grew at each step, hence descents of a
    permutation match descents of Q.
    """
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for step, x in enumerate(word, start=1):
        i = _row_insert(p_rows, x)
        if i == len(q_rows):
            q_rows.append([step])
        else:
            q_rows[i].append(step)
    return tuple(tuple(r) for r in p_rows), tuple(tuple(r) for r in q_rows)


def rsk_shape(word) -> Partition:
    """Shape of the RSK insertion tableau, skipping the recording bookkeeping."""
    rows: list[list[int]] = []
    for x in word:
        _row_insert(rows, x)
    return tuple(len(r) for r in rows)


def rsk_inverse(p: Tableau, q: Tableau):
    """Recover the word from an RSK pair; inverse of :func:`rsk`.

    ``q`` must be standard; entries of ``q`` are popped in decreasing order and
    the corresponding cells of ``p`` reverse-bumped upward.
    """
    if not is_standard(q):
        raise ValueError("recording tableau must be standard")
    if shape_of(p) != shape_of(q):
        raise ValueError("tableaux must share a shape")
    p_rows = [list(row) for row in p]
    q_pos = entry_positions(q)
    n = len(q_pos)
    word: list[int] = []
    for step in range(n, 0, -1):
        i, _ = q_pos[step]
        x = p_rows[i].pop()
        if not p_rows[i]:
            del p_rows[i]
        for upper in range(i - 1, -1, -1):
            row = p_rows[upper]
            # rightmost entry strictly smaller than x gets bumped back out
            j = bisect_left(row, x) - 1
            if j < 0:
                raise ValueError("invalid RSK pair")
            row[j], x = x, row[j]
        word.append(x)
    word.reverse()
    return tuple(word)
