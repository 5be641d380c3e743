"""Rank and kernel of ``M + u u^T`` from those of ``M``, and the Gray-code
sweep over all diagonal labelings of a graph."""

from __future__ import annotations

import enum
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Optional

from .gf2core import (
    BitVector,
    KernelBasis,
    SymMatrix,
    TheoremViolation,
    add_outer,
    kernel_basis,
    mat_vec,
    parity,
    solve,
)

if TYPE_CHECKING:
    from .graphs import Graph

DEFAULT_MAX_N = 24


class BudgetExceeded(ValueError):
    pass


class Case(enum.Enum):
    ZERO_VECTOR = "zero-vector"
    NOT_IN_IMAGE = "not-in-image"
    IN_IMAGE_PARITY_ZERO = "in-image-parity-0"
    IN_IMAGE_PARITY_ONE = "in-image-parity-1"

    @property
    def delta_nullity(self) -> int:
        return _DELTA_NUL[self]

    @property
    def delta_rank(self) -> int:
        return -_DELTA_NUL[self]


_DELTA_NUL = {
    Case.ZERO_VECTOR: 0,
    Case.NOT_IN_IMAGE: -1,
    Case.IN_IMAGE_PARITY_ZERO: 0,
    Case.IN_IMAGE_PARITY_ONE: +1,
}


@dataclass(frozen=True)
class UpdateCase:
    """How ``M + u u^T`` relates to ``M``.

    ``certificate`` is a kernel vector ``z`` with ``u . z = 1`` for
    ``NOT_IN_IMAGE``, and a preimage ``y`` with ``My = u`` for both
    in-image cases; ``None`` for the zero vector.
    """

    tag: Case
    certificate: Optional[BitVector] = None

    @property
    def delta_nullity(self) -> int:
        return self.tag.delta_nullity

    @property
    def delta_rank(self) -> int:
        return self.tag.delta_rank

    def check(self, m: SymMatrix, u: BitVector) -> bool:
        c = self.certificate
        if self.tag is Case.ZERO_VECTOR:
            return u.is_zero() and c is None
        if c is None or u.is_zero():
            return False
        if self.tag is Case.NOT_IN_IMAGE:
            return mat_vec(m, c).is_zero() and parity(u.bits & c.bits) == 1
        want = 1 if self.tag is Case.IN_IMAGE_PARITY_ONE else 0
        return mat_vec(m, c) == u and parity(u.bits & c.bits) == want


def classify_toggle(m: SymMatrix, kernel: KernelBasis, u: BitVector) -> UpdateCase:
    if u.length != m.n:
        raise ValueError("length mismatch: matrix is %dx%d, vector %d" % (m.n, m.n, u.length))
    if u.is_zero():
        return UpdateCase(Case.ZERO_VECTOR)
    for z in kernel:
        if parity(u.bits & z.bits):
            return UpdateCase(Case.NOT_IN_IMAGE, z)
    y = solve(m, u)
    if y is None:
        raise TheoremViolation("u is orthogonal to ker M but My = u is unsolvable")
    tag = Case.IN_IMAGE_PARITY_ONE if parity(u.bits & y.bits) else Case.IN_IMAGE_PARITY_ZERO
    return UpdateCase(tag, y)


def apply_toggle(
    m: SymMatrix, kernel: KernelBasis, u: BitVector
) -> tuple[SymMatrix, KernelBasis, int]:
    """``(M + u u^T, its kernel basis, change in nullity)``.

    The new kernel is derived from the old one, never recomputed.
    """
    case = classify_toggle(m, kernel, u)
    new_m = add_outer(m, u)
    if case.tag is Case.NOT_IN_IMAGE:
        # certificate is the first kernel vector with u.z = 1
        z = case.certificate
        vecs = []
        for v in kernel:
            if v is z:
                continue
            vecs.append(v + z if parity(u.bits & v.bits) else v)
        new_kernel = KernelBasis(tuple(vecs))
    elif case.tag is Case.IN_IMAGE_PARITY_ONE:
        new_kernel = KernelBasis(kernel.vectors + (case.certificate,))
    else:
        new_kernel = kernel
    return new_m, new_kernel, case.delta_nullity


@dataclass(frozen=True)
class RankHistogram:
    n: int
    counts: dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def to_json(self) -> dict:
        return {
            "rank_counts": {str(r): self.counts[r] for r in sorted(self.counts)},
            "n": self.n,
        }


def gray(i: int) -> int:
    return i ^ (i >> 1)


def _sweep_segment(g: "Graph", start: int, stop: int) -> Counter:
    """Ranks of ``A(G) + D_eps`` for ``eps = gray(start) .. gray(stop - 1)``."""
    n = g.n
    adj = g.adjacency_rows()
    eps = gray(start)
    m = SymMatrix(n, [r | (((eps >> i) & 1) << i) for i, r in enumerate(adj)], _checked=False)
    kernel = kernel_basis(m)
    r = n - len(kernel)
    counts = Counter({r: 1})
    for i in range(start + 1, stop):
        v = (i & -i).bit_length() - 1
        m, kernel, dnul = apply_toggle(m, kernel, BitVector(n, 1 << v))
        r -= dnul
        counts[r] += 1
    return counts


def diagonal_sweep(
    g: "Graph", budget: int = DEFAULT_MAX_N, workers: int = 1
) -> RankHistogram:
    """Histogram of ``rank(A(G) + D)`` over all ``2**n`` diagonals ``D``.

    Labelings are visited in reflected Gray-code order from zero, so each
    step is a single loop toggle.  With ``workers > 1`` the sequence is split
    into contiguous segments swept in separate processes.
    """
    n = g.n
    if n > budget:
        raise BudgetExceeded("n = %d exceeds sweep budget %d" % (n, budget))
    total = 1 << n
    workers = max(1, min(workers, total))
    if workers == 1:
        counts = _sweep_segment(g, 0, total)
    else:
        bounds = [total * w // workers for w in range(workers + 1)]
        counts = Counter()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futs = [pool.submit(_sweep_segment, g, a, b) for a, b in zip(bounds, bounds[1:])]
            for f in futs:
                counts.update(f.result())
    return RankHistogram(n, {r: c for r, c in sorted(counts.items())})
