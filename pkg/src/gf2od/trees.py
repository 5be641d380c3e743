"""Boundary-state recursion for ``(A(T) + D_eps) x = eps`` on rooted trees.

For a rooted tree ``T`` with root ``r`` the boundary count is

    N_T(alpha, beta) = #{x : M x = eps + alpha e_r, x_r = beta}

which is ``2**k`` on an affine subset ``L`` of ``F_2^2`` and zero off it.
Points ``(alpha, beta)`` are indexed ``2 * alpha + beta``, so ``L`` is a
4-bit mask and ``N_T`` reads ``(N(0,0), N(0,1), N(1,0), N(1,1))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterator, Optional, Sequence

from .gf2core import BitVector, SymMatrix, TheoremViolation
from .graphs import Graph, ParseError, graph_matrix

POINTS = ((0, 0), (0, 1), (1, 0), (1, 1))


def _is_affine(mask: int) -> bool:
    pts = [i for i in range(4) if (mask >> i) & 1]
    # index XOR is coordinatewise addition
    return bool(pts) and all((mask >> (a ^ b ^ c)) & 1 for a in pts for b in pts for c in pts)


VALID_MASKS = frozenset(m for m in range(16) if _is_affine(m))

# _FIBERS[mask][beta]: set of gamma with (beta, gamma) in mask, as a 2-bit set
_FIBERS = tuple(((m & 3), (m >> 2) & 3) for m in range(16))

ALPHA_ZERO = 0b0011


@dataclass(frozen=True)
class AffineSubset:
    mask: int

    def __post_init__(self):
        if self.mask not in VALID_MASKS:
            raise ValueError("mask %s is not a nonempty affine subset of F2^2" % format(self.mask, "04b"))

    @classmethod
    def from_points(cls, points) -> "AffineSubset":
        return cls(sum(1 << (2 * a + b) for a, b in points))

    def points(self) -> list[tuple[int, int]]:
        return [p for i, p in enumerate(POINTS) if (self.mask >> i) & 1]

    def __contains__(self, point) -> bool:
        a, b = point
        return bool((self.mask >> (2 * a + b)) & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    @property
    def dim(self) -> int:
        return len(self).bit_length() - 1


@dataclass(frozen=True)
class BoundaryState:
    L: AffineSubset
    k: int

    def count(self, alpha: int, beta: int) -> int:
        return 1 << self.k if (alpha, beta) in self.L else 0

    def counts(self) -> tuple[int, int, int, int]:
        return tuple(self.count(a, b) for a, b in POINTS)

    def nullity(self) -> int:
        """``k + dim(L meet {alpha = 0})``."""
        on_line = (self.L.mask & ALPHA_ZERO).bit_count()
        if on_line == 0:
            raise TheoremViolation("L = %r misses alpha = 0" % (self.L.points(),))
        return self.k + on_line - 1


def leaf_state(label: int) -> BoundaryState:
    if label == 0:
        return BoundaryState(AffineSubset(0b0011), 0)
    if label == 1:
        return BoundaryState(AffineSubset(0b0110), 0)
    raise ValueError("label must be 0 or 1")


def _transition(root_label: int, per_beta, dump) -> tuple[int, int]:
    """``(mask, s)`` for the parent, given per beta either None (some child
    has no valid gamma) or ``(f, c)``: the number of children with both
    gamma free, and the sum of the forced gammas."""
    cells = {}
    for beta, fc in enumerate(per_beta):
        if fc is None:
            continue
        f, c = fc
        if f:
            cells[beta] = cells[2 + beta] = f - 1
        else:
            alpha = c ^ (root_label & beta) ^ root_label
            cells[2 * alpha + beta] = 0
    if not cells:
        raise TheoremViolation("empty boundary set; child states: %s" % dump())
    exps = set(cells.values())
    if len(exps) != 1:
        raise TheoremViolation("non-uniform fiber sizes %r; child states: %s" % (cells, dump()))
    mask = sum(1 << i for i in cells)
    if mask not in VALID_MASKS:
        raise TheoremViolation("boundary set %s is not affine; child states: %s" % (format(mask, "04b"), dump()))
    return mask, exps.pop()


@lru_cache(maxsize=None)
def _combine_masks(root_label: int, masks: tuple[int, ...]) -> tuple[int, int]:
    """Parent ``(mask, s)`` for a sorted tuple of child masks."""
    per_beta = []
    for beta in (0, 1):
        f = c = 0
        for m in masks:
            fib = _FIBERS[m][beta]
            if fib == 0:
                per_beta.append(None)
                break
            if fib == 3:
                f += 1
            elif fib == 2:
                c ^= 1
        else:
            per_beta.append((f, c))
    return _transition(root_label, per_beta, lambda: [AffineSubset(m).points() for m in masks])


def combine_children(root_label: int, children: Sequence[BoundaryState]) -> BoundaryState:
    """State of a root labelled ``root_label`` over the given child subtrees.

    Child ``i`` sees the root value as its own defect, so child ``i``
    contributes ``gamma_i`` with ``(beta, gamma_i)`` in ``L_i``; the root
    equation is ``sum gamma_i + eps_r beta = eps_r + alpha``.
    """
    if root_label not in (0, 1):
        raise ValueError("label must be 0 or 1")
    mask, s = _combine_masks(root_label, tuple(sorted(ch.L.mask for ch in children)))
    return BoundaryState(AffineSubset(mask), sum(ch.k for ch in children) + s)


def dary_step(state: BoundaryState, d: int, label: int) -> BoundaryState:
    """``combine_children(label, [state] * d)`` without building the list."""
    if d < 1:
        raise ValueError("arity must be >= 1")
    per_beta = []
    for beta in (0, 1):
        fib = _FIBERS[state.L.mask][beta]
        if fib == 0:
            per_beta.append(None)
        elif fib == 3:
            per_beta.append((d, 0))
        else:
            per_beta.append((0, (d & 1) if fib == 2 else 0))
    mask, s = _transition(label, per_beta, lambda: [(state.L.points(), "x%d" % d)])
    return BoundaryState(AffineSubset(mask), d * state.k + s)


@dataclass(frozen=True)
class RootedTree:
    """Vertices ``0..n-1``; ``parent[root]`` is ``None``."""

    parent: tuple[Optional[int], ...]
    label: BitVector

    def __post_init__(self):
        n = len(self.parent)
        if self.label.length != n:
            raise ValueError("label length %d does not match %d vertices" % (self.label.length, n))
        roots = [v for v, p in enumerate(self.parent) if p is None]
        if len(roots) != 1:
            raise ValueError("expected exactly one root, found %d" % len(roots))
        for v, p in enumerate(self.parent):
            if p is not None and not (0 <= p < n and p != v):
                raise ValueError("vertex %d has invalid parent %r" % (v, p))
        if len(self.order) != n:
            raise ValueError("parent relation contains a cycle")

    @property
    def n(self) -> int:
        return len(self.parent)

    @cached_property
    def root(self) -> int:
        return self.parent.index(None)

    @cached_property
    def children(self) -> tuple[tuple[int, ...], ...]:
        ch: list[list[int]] = [[] for _ in self.parent]
        for v, p in enumerate(self.parent):
            if p is not None:
                ch[p].append(v)
        return tuple(tuple(c) for c in ch)

    @cached_property
    def order(self) -> tuple[int, ...]:
        """Breadth-first order from the root; only reachable vertices."""
        out = [self.root]
        i = 0
        while i < len(out):
            out.extend(self.children[out[i]])
            i += 1
        return tuple(out)

    def edges(self) -> Iterator[tuple[int, int]]:
        for v, p in enumerate(self.parent):
            if p is not None:
                yield (min(v, p), max(v, p))

    def to_graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edges())

    def matrix(self) -> SymMatrix:
        return graph_matrix(self.to_graph(), self.label)


def boundary_state(t: RootedTree) -> BoundaryState:
    """Post-order fold of :func:`combine_children` over ``t``."""
    masks = [0] * t.n
    ks = [0] * t.n
    lab = t.label.bits
    children = t.children
    leaf_masks = (leaf_state(0).L.mask, leaf_state(1).L.mask)
    for v in reversed(t.order):
        ch = children[v]
        if not ch:
            masks[v] = leaf_masks[(lab >> v) & 1]
            continue
        if len(ch) == 1:
            key = (masks[ch[0]],)
            k = ks[ch[0]]
        else:
            key = tuple(sorted([masks[c] for c in ch]))
            k = sum([ks[c] for c in ch])
        masks[v], s = _combine_masks((lab >> v) & 1, key)
        ks[v] = k + s
    r = t.root
    return BoundaryState(AffineSubset(masks[r]), ks[r])


def pattern_count(t: RootedTree, alpha: int, beta: int) -> int:
    return boundary_state(t).count(alpha, beta)


def tree_nullity(t: RootedTree) -> int:
    return boundary_state(t).nullity()


def parse_tree(text: str) -> RootedTree:
    """One ``<id> <parent|-1> <label>`` line per vertex; ``#`` comments."""
    entries: dict[int, tuple[Optional[int], int]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError("expected '<id> <parent|-1> <label>'", lineno)
        try:
            v, p, lab = (int(x) for x in parts)
        except ValueError:
            raise ParseError("fields must be integers", lineno) from None
        if lab not in (0, 1):
            raise ParseError("label must be 0 or 1", lineno)
        if v < 0 or p < -1:
            raise ParseError("negative vertex id", lineno)
        if v in entries:
            raise ParseError("vertex %d listed twice" % v, lineno)
        entries[v] = (None if p == -1 else p, lab)
    n = len(entries)
    if n == 0:
        raise ParseError("tree file lists no vertices")
    if set(entries) != set(range(n)):
        raise ParseError("vertex ids must be exactly 0..%d" % (n - 1))
    parent = tuple(entries[v][0] for v in range(n))
    label = BitVector.from_list(entries[v][1] for v in range(n))
    try:
        return RootedTree(parent, label)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def eventual_labels(preperiod: Sequence[int], period: Sequence[int], count: int) -> list[int]:
    """First ``count`` terms of ``preperiod`` followed by ``period`` repeated."""
    if not period:
        raise ValueError("period must be nonempty")
    pre = len(preperiod)
    return [preperiod[j] if j < pre else period[(j - pre) % len(period)] for j in range(count)]


def complete_dary_tree(d: int, h: int, height_labels: Sequence[int]) -> RootedTree:
    """Complete ``d``-ary tree of height ``h``; a vertex whose subtree has
    height ``j`` gets ``height_labels[j]``.  Vertices are in heap order."""
    if d < 1:
        raise ValueError("arity must be >= 1")
    parent: list[Optional[int]] = [None]
    depth_label = [height_labels[h]]
    level_start, level_size = 0, 1
    for depth in range(1, h + 1):
        lab = height_labels[h - depth]
        for p in range(level_start, level_start + level_size):
            parent.extend([p] * d)
        depth_label.extend([lab] * (level_size * d))
        level_start += level_size
        level_size *= d
    return RootedTree(tuple(parent), BitVector.from_list(depth_label))


@dataclass(frozen=True)
class ResidueFormula:
    """``nullity(h) = c_r * d**h + b_r`` for ``h >= h0`` with ``h % p == r``."""

    d: int
    p: int
    h0: int
    per_residue: tuple[tuple[int, Fraction, Fraction], ...]

    def predict(self, h: int) -> int:
        if h < self.h0:
            raise ValueError("formula holds for h >= %d only" % self.h0)
        _, c, b = self.per_residue[h % self.p]
        val = c * self.d ** h + b
        if val.denominator != 1 or val < 0:
            raise TheoremViolation("predicted nullity %s at h=%d is not a natural number" % (val, h))
        return int(val)

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "p": self.p,
            "h0": self.h0,
            "residues": [{"r": r, "c": _frac(c), "b": _frac(b)} for r, c, b in self.per_residue],
        }


def _frac(q: Fraction) -> str:
    return "%d/%d" % (q.numerator, q.denominator)


def dary_states(d: int, labels: Sequence[int]) -> list[BoundaryState]:
    """Boundary states of the complete ``d``-ary trees of heights
    ``0..len(labels)-1`` under the given height labels."""
    state = leaf_state(labels[0])
    out = [state]
    for lab in labels[1:]:
        state = dary_step(state, d, lab)
        out.append(state)
    return out


def dary_periodic_fit(d: int, preperiod: Sequence[int], period: Sequence[int]) -> ResidueFormula:
    """Closed-form nullity of complete ``d``-ary trees whose height labels
    follow ``preperiod`` and then repeat ``period``."""
    if d < 2:
        raise ValueError("closed form needs d >= 2")
    if not period:
        raise ValueError("period must be nonempty")
    pre, q = len(preperiod), len(period)

    def label(j: int) -> int:
        return preperiod[j] if j < pre else period[(j - pre) % q]

    def phase(h: int):
        # determines the label used on the step out of height h
        return h if h < pre else pre + (h - pre) % q

    states = [leaf_state(label(0))]
    steps: list[int] = []  # steps[h] = k_{h+1} - d * k_h
    seen = {(states[0].L.mask, phase(0)): 0}
    h = 0
    while True:
        nxt = dary_step(states[h], d, label(h + 1))
        steps.append(nxt.k - d * states[h].k)
        states.append(nxt)
        h += 1
        key = (nxt.L.mask, phase(h))
        if key in seen:
            h0, cycle = seen[key], h - seen[key]
            break
        seen[key] = h
    dp = d ** cycle
    residues = []
    for r in range(cycle):
        h_r = h0 + (r - h0) % cycle
        # k_{h+P} = d^P k_h + C along the cycle starting at h_r
        C = sum(d ** (cycle - 1 - j) * steps[h0 + (h_r - h0 + j) % cycle] for j in range(cycle))
        fixed = Fraction(-C, dp - 1)
        c = (states[h_r].k - fixed) / Fraction(d) ** h_r
        b = fixed + states[h_r].nullity() - states[h_r].k
        residues.append((r, c, b))
    return ResidueFormula(d, cycle, h0, tuple(residues))
