import pytest
from hypothesis import given, settings

from gf2od import brute
from gf2od.gf2core import (
    BitVector,
    Matrix,
    SymMatrix,
    add_outer,
    dot,
    echelonize,
    image_contains,
    is_kernel_basis,
    kernel_basis,
    mat_vec,
    rank,
    solve,
    span,
)
from gf2od.generators import random_symmetric, random_vector

from conftest import M, V, matrix_and_vector, sym_matrices


def test_bitvector_masks_beyond_length():
    with pytest.raises(ValueError):
        BitVector(2, 0b100)
    assert BitVector.ones(3).bits == 0b111
    assert str(V("0110")) == "0110"
    assert V("0110")[1] == 1 and V("0110")[0] == 0


@pytest.mark.parametrize("a,b,want", [("000", "111", 0), ("11", "11", 0), ("101", "111", 0), ("1", "1", 1)])
def test_dot(a, b, want):
    assert dot(V(a), V(b)) == want


def test_dot_length_mismatch():
    with pytest.raises(ValueError):
        dot(V("1"), V("10"))


@given(sym_matrices(8))
def test_self_dot_is_popcount_parity(m):
    v = m.diagonal()
    assert dot(v, v) == v.popcount() % 2


def test_mat_vec_examples():
    assert mat_vec(SymMatrix.identity(3), V("101")) == V("101")
    assert mat_vec(SymMatrix.zeros(3), V("111")) == V("000")
    assert mat_vec(M((0, 1), (1, 0)), V("10")) == V("01")
    with pytest.raises(ValueError):
        mat_vec(SymMatrix.identity(2), V("1"))


def test_symmetry_checked_on_construction():
    with pytest.raises(ValueError):
        SymMatrix.from_lists([[0, 1], [0, 0]])


def test_rank_examples():
    assert rank(SymMatrix.zeros(3)) == 0
    assert rank(SymMatrix.identity(5)) == 5
    assert rank(M((1, 1), (1, 1))) == 1


def test_kernel_examples():
    assert len(kernel_basis(SymMatrix.identity(3))) == 0
    assert len(kernel_basis(SymMatrix.zeros(2))) == 2
    # brute force: kernel of [[1,1],[1,1]] is {00, 11}
    assert list(kernel_basis(M((1, 1), (1, 1)))) == [V("11")]


def test_solve_examples():
    assert solve(SymMatrix.identity(3), V("110")) == V("110")
    assert solve(SymMatrix.zeros(2), V("10")) is None
    # brute force gives {10, 01}; free variable x1 = 0 picks 10
    assert solve(M((1, 1), (1, 1)), V("11")) == V("10")
    with pytest.raises(ValueError):
        solve(SymMatrix.identity(2), V("1"))


def test_image_contains_examples():
    assert image_contains(SymMatrix.zeros(2), V("00"))
    assert not image_contains(SymMatrix.zeros(2), V("10"))
    assert not image_contains(M((1, 1), (1, 1)), V("10"))


def test_add_outer_examples():
    assert add_outer(SymMatrix.zeros(2), V("11")) == M((1, 1), (1, 1))
    m = M((0, 1), (1, 0))
    assert add_outer(m, V("00")) == m
    assert add_outer(m, V("11")) == SymMatrix.identity(2)


def test_empty_matrix():
    m = SymMatrix.zeros(0)
    assert rank(m) == 0
    assert len(kernel_basis(m)) == 0
    assert solve(m, BitVector(0)) == BitVector(0)


def test_echelonize_transform_and_determinism(rng):
    for _ in range(50):
        m = random_symmetric(rng.randint(0, 20), rng)
        e = echelonize(m)
        assert e.transform @ m == e.form
        assert rank(e.transform) == m.n
        assert echelonize(m) == e
        # reduced: each pivot column is a unit column
        for i, c in enumerate(e.pivots):
            assert e.form.column(c) == BitVector.unit(m.n, i)


def test_solve_rectangular():
    a = Matrix.from_lists([[1, 0, 1], [0, 1, 1]])
    x = solve(a, V("11"))
    assert mat_vec(a, x) == V("11")
    assert len(kernel_basis(a)) == 1


def test_rank_nullity_random(rng):
    for _ in range(200):
        m = random_symmetric(rng.randint(0, 64), rng, density=rng.random())
        assert rank(m) + len(kernel_basis(m)) == m.n
        assert is_kernel_basis(m, kernel_basis(m))


@settings(max_examples=150, deadline=None)
@given(matrix_and_vector(9))
def test_solve_agrees_with_enumeration(mb):
    m, b = mb
    x = solve(m, b)
    brute_sols = brute.solutions(m.to_lists(), b.to_list()) if m.n else [()]
    if x is None:
        assert brute_sols == []
    else:
        assert mat_vec(m, x) == b
        assert tuple(x) in brute_sols


@settings(max_examples=150, deadline=None)
@given(matrix_and_vector(10))
def test_image_contains_iff_solvable(mb):
    m, b = mb
    assert image_contains(m, b) == (solve(m, b) is not None)


@given(matrix_and_vector(12))
def test_add_outer_involution(mb):
    m, u = mb
    assert add_outer(add_outer(m, u), u) == m


def test_span_enumerates_all(rng):
    vecs = [random_vector(6, rng) for _ in range(3)]
    got = list(span(vecs, 6))
    assert len(got) == 8
    assert got[0] == BitVector(6)
