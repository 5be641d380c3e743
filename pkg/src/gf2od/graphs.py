"""Partially looped graphs ``A(G) + D_eps`` and generalized odd domination.

A loop at ``v`` is recorded as ``eps[v] = 1``; the edge set itself never
contains loops.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .gf2core import BitVector, SymMatrix, kernel_basis
from .parity import AffineSolutionSet, solve_diag_system
from .update import UpdateCase, classify_toggle


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__("line %d: %s" % (line, message) if line is not None else message)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative vertex count")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError("edge %r is not a pair u < v of vertices below %d" % ((u, v), self.n))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        seen = set()
        for u, v in edges:
            if u == v:
                raise ValueError("self-loop at %d; loops belong in the label vector" % u)
            e = (min(u, v), max(u, v))
            if e in seen:
                raise ValueError("duplicate edge %r" % (e,))
            seen.add(e)
        return cls(n, frozenset(seen))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    def adjacency_rows(self) -> list[int]:
        rows = [0] * self.n
        for u, v in self.edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return rows

    def neighbors(self, v: int) -> list[int]:
        r = self.adjacency_rows()[v]
        return [w for w in range(self.n) if (r >> w) & 1]


def graph_matrix(g: Graph, eps: BitVector) -> SymMatrix:
    """``A(G) + D_eps``."""
    if eps.length != g.n:
        raise ValueError("label length %d does not match %d vertices" % (eps.length, g.n))
    rows = [r | (((eps.bits >> i) & 1) << i) for i, r in enumerate(g.adjacency_rows())]
    return SymMatrix(g.n, rows, _checked=False)


def solve_odd_domination(g: Graph, eps: BitVector) -> AffineSolutionSet:
    """All ``eps``-odd dominating patterns: solutions of ``(A + D_eps) x = eps``."""
    return solve_diag_system(graph_matrix(g, eps))


def verify_pattern(g: Graph, eps: BitVector, x: BitVector) -> bool:
    """Per-vertex check of ``sum_{w ~ v} x_w + eps_v x_v = eps_v``."""
    if not (eps.length == x.length == g.n):
        raise ValueError("length mismatch")
    adj = g.adjacency_rows()
    for v in range(g.n):
        lhs = ((adj[v] & x.bits).bit_count() + (eps[v] & x[v])) & 1
        if lhs != eps[v]:
            return False
    return True


def toggle_vertex_loop(g: Graph, eps: BitVector, v: int) -> tuple[BitVector, UpdateCase, int]:
    """Flip the loop at ``v``: returns the new labels, the update case for
    ``M + e_v e_v^T``, and the change in nullity."""
    if not 0 <= v < g.n:
        raise IndexError("vertex %d out of range for %d vertices" % (v, g.n))
    m = graph_matrix(g, eps)
    case = classify_toggle(m, kernel_basis(m), BitVector.unit(g.n, v))
    return eps.flip(v), case, case.delta_nullity


def parse_graph(text: str) -> Graph:
    """Read ``n <count>`` followed by one ``<u> <v>`` edge per line.

    ``#`` starts a comment; blank lines are skipped.
    """
    n = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise ParseError("expected header 'n <count>'", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError("vertex count is not an integer: %r" % parts[1], lineno) from None
            if n < 0:
                raise ParseError("negative vertex count", lineno)
            continue
        if len(parts) != 2:
            raise ParseError("expected '<u> <v>'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("vertex ids must be integers", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError("vertex out of range 0..%d" % (n - 1), lineno)
        if u == v:
            raise ParseError("self-loop at %d; use labels for loops" % u, lineno)
        e = (min(u, v), max(u, v))
        if e in seen:
            raise ParseError("duplicate edge %d %d" % e, lineno)
        seen.add(e)
        edges.append(e)
    if n is None:
        raise ParseError("missing header 'n <count>'")
    return Graph(n, frozenset(edges))


def parse_labels(spec: str, n: int) -> BitVector:
    """``all0``, ``all1``, or an explicit string of ``n`` bits."""
    spec = spec.strip()
    if spec == "all0":
        return BitVector.zeros(n)
    if spec == "all1":
        return BitVector.ones(n)
    try:
        eps = BitVector.from_string(spec)
    except ValueError:
        raise ParseError("labels must be all0, all1, or a 0/1 string: %r" % spec) from None
    if eps.length != n:
        raise ParseError("label string has length %d, graph has %d vertices" % (eps.length, n))
    return eps
