import pytest

from gf2od import brute
from gf2od.gf2core import BitVector, SymMatrix, dot, nullity, rank
from gf2od.generators import random_graph, random_vector
from gf2od.graphs import (
    Graph,
    ParseError,
    graph_matrix,
    parse_graph,
    parse_labels,
    solve_odd_domination,
    toggle_vertex_loop,
    verify_pattern,
)
from gf2od.update import Case

from conftest import M, V

EDGE = Graph.from_edges(2, [(0, 1)])
P3 = Graph.path(3)


def test_graph_rejects_loops_and_duplicates():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(1, 1)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph(2, frozenset({(0, 2)}))


def test_graph_matrix_examples():
    assert graph_matrix(EDGE, V("11")) == M((1, 1), (1, 1))
    assert graph_matrix(Graph(2), V("00")) == SymMatrix.zeros(2)
    assert graph_matrix(P3, V("111")) == M((1, 1, 0), (1, 1, 1), (0, 1, 1))
    with pytest.raises(ValueError):
        graph_matrix(P3, V("11"))


def test_solve_odd_domination_examples():
    assert sorted(map(str, solve_odd_domination(EDGE, V("11")))) == ["01", "10"]
    assert len(solve_odd_domination(Graph(3), V("000"))) == 8
    # enumeration over 8 vectors: only 010 solves (A + I) x = 1 on P3
    s = solve_odd_domination(P3, V("111"))
    assert list(s) == [V("010")]


def test_verify_pattern_examples():
    assert verify_pattern(Graph(3), V("000"), V("101"))
    assert not verify_pattern(EDGE, V("11"), V("11"))
    assert verify_pattern(EDGE, V("11"), V("10"))


def test_toggle_examples():
    eps, case, dnul = toggle_vertex_loop(Graph(1), V("0"), 0)
    assert (str(eps), case.tag, dnul) == ("1", Case.NOT_IN_IMAGE, -1)
    eps, case, dnul = toggle_vertex_loop(Graph(1), V("1"), 0)
    assert (str(eps), case.tag, case.certificate, dnul) == ("0", Case.IN_IMAGE_PARITY_ONE, V("1"), 1)
    eps, case, dnul = toggle_vertex_loop(EDGE, V("00"), 0)
    assert (case.tag, case.certificate, dnul) == (Case.IN_IMAGE_PARITY_ZERO, V("01"), 0)
    with pytest.raises(IndexError):
        toggle_vertex_loop(EDGE, V("00"), 2)


def test_empty_graph():
    s = solve_odd_domination(Graph(0), BitVector(0))
    assert list(s) == [BitVector(0)]


def test_patterns_match_enumeration_and_parity(rng):
    for _ in range(60):
        n = rng.randint(1, 10)
        g = random_graph(n, rng, p=rng.random())
        eps = random_vector(n, rng)
        s = solve_odd_domination(g, eps)
        want = brute.solutions(brute.graph_rows(n, g.edges, eps.to_list()), eps.to_list())
        assert sorted(tuple(x) for x in s) == want
        r = rank(graph_matrix(g, eps))
        for x in s:
            assert verify_pattern(g, eps, x)
            assert dot(eps, x) == r % 2


def test_all_ones_is_classical_odd_domination(rng):
    for _ in range(40):
        n = rng.randint(1, 12)
        g = random_graph(n, rng)
        ones = BitVector.ones(n)
        s = solve_odd_domination(g, ones)
        closed = [[1 if i == j or (min(i, j), max(i, j)) in g.edges else 0 for j in range(n)] for i in range(n)]
        assert sorted(tuple(x) for x in s) == brute.solutions(closed, [1] * n)


def test_toggle_twice_restores(rng):
    for _ in range(100):
        n = rng.randint(1, 20)
        g = random_graph(n, rng)
        eps = random_vector(n, rng)
        v = rng.randrange(n)
        e1, c1, d1 = toggle_vertex_loop(g, eps, v)
        e2, c2, d2 = toggle_vertex_loop(g, e1, v)
        assert e2 == eps
        assert d1 + d2 == 0


def test_toggle_delta_matches_scratch(rng):
    for _ in range(300):
        n = rng.randint(1, 64)
        g = random_graph(n, rng, p=rng.random())
        eps = random_vector(n, rng)
        v = rng.randrange(n)
        new, case, dnul = toggle_vertex_loop(g, eps, v)
        assert dnul == nullity(graph_matrix(g, new)) - nullity(graph_matrix(g, eps))


def test_parse_graph():
    g = parse_graph("# path\nn 3\n0 1\n1 2  # second\n\n")
    assert g == P3
    for text, line in [("n 2\n0 0\n", 2), ("n 2\n0 1\n1 0\n", 3), ("n 2\n0 5\n", 2), ("m 2\n", 1), ("n 2\n0\n", 2)]:
        with pytest.raises(ParseError) as exc:
            parse_graph(text)
        assert exc.value.line == line
    with pytest.raises(ParseError):
        parse_graph("# nothing\n")


def test_parse_labels():
    assert parse_labels("all0", 3) == V("000")
    assert parse_labels("all1", 3) == V("111")
    assert parse_labels("101", 3) == V("101")
    for bad in ("10", "1a1", "ones"):
        with pytest.raises(ParseError):
            parse_labels(bad, 3)
