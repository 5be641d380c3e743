"""Exhaustive reference computations for small instances.

Nothing here uses elimination: every answer comes from walking all ``2**n``
vectors ``x`` in Gray-code order while keeping ``Mx`` up to date (flipping
``x_j`` adds column ``j``).  Matrices are given as lists of 0/1 lists.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterator, Sequence

Rows = Sequence[Sequence[int]]


def _pack(m: Rows) -> list[int]:
    """Column ``j`` packed as an int over the rows."""
    n = len(m[0]) if m else 0
    return [sum(m[i][j] << i for i in range(len(m))) for j in range(n)]


def images(m: Rows) -> Iterator[tuple[int, int]]:
    """``(x, Mx)`` as packed ints for every ``x``."""
    cols = _pack(m)
    x = y = 0
    yield x, y
    for i in range(1, 1 << len(cols)):
        j = (i & -i).bit_length() - 1
        x ^= 1 << j
        y ^= cols[j]
        yield x, y


def _bits(v: Sequence[int]) -> int:
    return sum(b << i for i, b in enumerate(v))


def _unbits(x: int, n: int) -> tuple[int, ...]:
    return tuple((x >> i) & 1 for i in range(n))


def solutions(m: Rows, b: Sequence[int]) -> list[tuple[int, ...]]:
    n = len(m[0]) if m else 0
    target = _bits(b)
    return sorted(_unbits(x, n) for x, y in images(m) if y == target)


def nullity(m: Rows) -> int:
    count = sum(1 for _, y in images(m) if y == 0)
    return count.bit_length() - 1


def rank(m: Rows) -> int:
    n = len(m[0]) if m else 0
    return n - nullity(m)


def graph_rows(n: int, edges, labels: Sequence[int]) -> list[list[int]]:
    m = [[0] * n for _ in range(n)]
    for u, v in edges:
        m[u][v] = m[v][u] = 1
    for i, e in enumerate(labels):
        m[i][i] = e
    return m


def boundary_counts(n: int, edges, labels: Sequence[int], root: int) -> tuple[int, ...]:
    """``(N(0,0), N(0,1), N(1,0), N(1,1))`` by enumeration."""
    eps = _bits(labels)
    others = ((1 << n) - 1) ^ (1 << root)
    counts = Counter()
    for x, y in images(graph_rows(n, edges, labels)):
        defect = y ^ eps
        if defect & others == 0:
            counts[2 * ((defect >> root) & 1) + ((x >> root) & 1)] += 1
    return tuple(counts[i] for i in range(4))


def rank_histogram(n: int, edges) -> dict[int, int]:
    hist = Counter()
    for lab in range(1 << n):
        hist[rank(graph_rows(n, edges, _unbits(lab, n)))] += 1
    return dict(sorted(hist.items()))
