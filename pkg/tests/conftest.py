import random

import pytest
from hypothesis import strategies as st

from gf2od import BitVector, SymMatrix


@pytest.fixture
def rng():
    return random.Random(1234)


def M(*rows):
    return SymMatrix.from_lists([list(r) for r in rows])


def V(s):
    return BitVector.from_string(s)


@st.composite
def sym_matrices(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    rows = [0] * n
    for i in range(n):
        for j in range(i, n):
            if draw(st.booleans()):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return SymMatrix(n, rows)


@st.composite
def matrix_and_vector(draw, max_n=12):
    m = draw(sym_matrices(max_n))
    bits = draw(st.integers(0, (1 << m.n) - 1)) if m.n else 0
    return m, BitVector(m.n, bits)


def to_lists(m):
    return m.to_lists()
