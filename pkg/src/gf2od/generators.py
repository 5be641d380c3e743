"""Random instances for property checks."""

from __future__ import annotations

import os
import random

from .gf2core import BitVector, SymMatrix
from .graphs import Graph
from .trees import RootedTree

DEFAULT_SEED = 20240611


def seed_from_env() -> int:
    return int(os.environ.get("GF2OD_SEED", DEFAULT_SEED))


def random_symmetric(n: int, rng: random.Random, density: float = 0.5) -> SymMatrix:
    rows = [0] * n
    for i in range(n):
        for j in range(i, n):
            if rng.random() < density:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return SymMatrix(n, rows, _checked=False)


def random_vector(n: int, rng: random.Random) -> BitVector:
    return BitVector(n, rng.getrandbits(n) if n else 0)


def random_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph(n, frozenset(edges))


def random_tree(n: int, rng: random.Random) -> RootedTree:
    """Random root and labels; half the time a deep, path-like shape."""
    perm = list(range(n))
    rng.shuffle(perm)
    deep = rng.random() < 0.5
    parent: list = [None] * n
    for i in range(1, n):
        lo = max(0, i - 2) if deep else 0
        parent[perm[i]] = perm[rng.randrange(lo, i)]
    return RootedTree(tuple(parent), random_vector(n, rng))
