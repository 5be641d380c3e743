import pytest
from hypothesis import given, settings

from gf2od import brute
from gf2od.gf2core import (
    BitVector,
    SymMatrix,
    add_outer,
    is_kernel_basis,
    kernel_basis,
    mat_vec,
    nullity,
    rank,
    solve,
)
from gf2od.generators import random_graph, random_symmetric, random_vector
from gf2od.graphs import Graph, graph_matrix
from gf2od.update import (
    BudgetExceeded,
    Case,
    apply_toggle,
    classify_toggle,
    diagonal_sweep,
    gray,
)

from conftest import M, V, matrix_and_vector

TABLE = {
    Case.NOT_IN_IMAGE: (-1, +1),
    Case.IN_IMAGE_PARITY_ZERO: (0, 0),
    Case.IN_IMAGE_PARITY_ONE: (+1, -1),
    Case.ZERO_VECTOR: (0, 0),
}


def _classify(m, u):
    return classify_toggle(m, kernel_basis(m), u)


def test_classify_examples():
    c = _classify(SymMatrix.zeros(2), V("10"))
    assert (c.tag, c.certificate) == (Case.NOT_IN_IMAGE, V("10"))
    c = _classify(SymMatrix.identity(2), V("10"))
    assert (c.tag, c.certificate) == (Case.IN_IMAGE_PARITY_ONE, V("10"))
    c = _classify(M((0, 1), (1, 0)), V("11"))
    assert (c.tag, c.certificate) == (Case.IN_IMAGE_PARITY_ZERO, V("11"))
    c = _classify(SymMatrix.identity(2), V("00"))
    assert (c.tag, c.certificate) == (Case.ZERO_VECTOR, None)


def test_apply_examples():
    m2, k2, d = apply_toggle(SymMatrix.zeros(2), kernel_basis(SymMatrix.zeros(2)), V("11"))
    assert m2 == M((1, 1), (1, 1)) and list(k2) == [V("11")] and d == -1
    m2, k2, d = apply_toggle(SymMatrix.identity(2), kernel_basis(SymMatrix.identity(2)), V("10"))
    assert m2 == M((0, 0), (0, 1)) and list(k2) == [V("10")] and d == 1
    m = M((1, 1), (1, 0))
    k = kernel_basis(m)
    assert apply_toggle(m, k, V("00")) == (m, k, 0)


def test_length_mismatch():
    with pytest.raises(ValueError):
        _classify(SymMatrix.identity(2), V("1"))


@settings(max_examples=300, deadline=None)
@given(matrix_and_vector(12))
def test_update_exact(mb):
    m, u = mb
    kernel = kernel_basis(m)
    case = classify_toggle(m, kernel, u)
    assert case.check(m, u)
    m2, k2, dnul = apply_toggle(m, kernel, u)
    assert m2 == add_outer(m, u)
    assert (dnul, -dnul) == TABLE[case.tag]
    assert dnul == nullity(m2) - nullity(m)
    assert rank(m2) - rank(m) == case.delta_rank
    assert is_kernel_basis(m2, k2)


def test_update_random_large(rng):
    for _ in range(300):
        n = rng.randint(1, 64)
        m = random_symmetric(n, rng, density=rng.choice([0.05, 0.5, 0.95]))
        u = random_vector(n, rng)
        kernel = kernel_basis(m)
        m2, k2, dnul = apply_toggle(m, kernel, u)
        assert dnul == nullity(m2) - nullity(m)
        assert is_kernel_basis(m2, k2)


def test_preimage_parity_independent_of_choice(rng):
    seen = 0
    for _ in range(300):
        n = rng.randint(1, 32)
        m = random_symmetric(n, rng, density=rng.choice([0.1, 0.5]))
        u = mat_vec(m, random_vector(n, rng))
        if u.is_zero():
            continue
        y = solve(m, u)
        for z in kernel_basis(m):
            seen += 1
            assert (u.bits & (y.bits ^ z.bits)).bit_count() % 2 == (u.bits & y.bits).bit_count() % 2
    assert seen > 0


def test_gray():
    codes = [gray(i) for i in range(16)]
    assert sorted(codes) == list(range(16))
    assert all(bin(a ^ b).count("1") == 1 for a, b in zip(codes, codes[1:]))


def test_sweep_examples():
    assert diagonal_sweep(Graph(2)).counts == {0: 1, 1: 2, 2: 1}
    assert diagonal_sweep(Graph.from_edges(2, [(0, 1)])).counts == {1: 1, 2: 3}
    # enumeration of all 8 diagonals on P3: ranks {2: 3, 3: 5}
    h = diagonal_sweep(Graph.path(3))
    assert h.counts == {2: 3, 3: 5} and h.total == 8


def test_sweep_budget():
    with pytest.raises(BudgetExceeded):
        diagonal_sweep(Graph(5), budget=4)


def test_sweep_matches_enumeration_small(rng):
    for _ in range(10):
        n = rng.randint(0, 6)
        g = random_graph(n, rng)
        assert diagonal_sweep(g).counts == brute.rank_histogram(n, g.edges)


def test_sweep_rank_steps(rng):
    g = random_graph(8, rng)
    prev = None
    for i in range(1 << 8):
        r = rank(graph_matrix(g, BitVector(8, gray(i))))
        if prev is not None:
            assert abs(r - prev) <= 1
        prev = r


def test_sweep_parallel_identical(rng):
    g = random_graph(9, rng)
    one = diagonal_sweep(g)
    many = diagonal_sweep(g, workers=3)
    assert one == many
    assert one.to_json() == many.to_json()


def test_histogram_json():
    h = diagonal_sweep(Graph(2))
    assert h.to_json() == {"rank_counts": {"0": 1, "1": 2, "2": 1}, "n": 2}
