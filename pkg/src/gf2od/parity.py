"""The diagonal system ``Mx = diag(M)`` for symmetric ``M``, its parity
invariant, and the congruence normal form of a symmetric bilinear form."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .gf2core import (
    BitVector,
    KernelBasis,
    Matrix,
    SymMatrix,
    TheoremViolation,
    _solve_and_kernel,
    mat_vec,
    parity,
    rank,
    span,
)


class NotInvertibleError(ValueError):
    pass


@dataclass(frozen=True)
class AffineSolutionSet:
    """``particular + span(kernel)``: every solution of ``Mx = rhs``."""

    particular: BitVector
    kernel: KernelBasis
    rhs: BitVector

    @property
    def dimension(self) -> int:
        return len(self.kernel)

    @property
    def rank(self) -> int:
        return self.particular.length - len(self.kernel)

    def __len__(self) -> int:
        return 1 << self.dimension

    def __iter__(self) -> Iterator[BitVector]:
        p = self.particular.bits
        n = self.particular.length
        for v in span(self.kernel.vectors, n):
            yield BitVector(n, p ^ v.bits)

    def __contains__(self, x: BitVector) -> bool:
        # reduce x - particular against the kernel basis
        if x.length != self.particular.length:
            return False
        rows = [v.bits for v in self.kernel]
        target = x.bits ^ self.particular.bits
        for v in _echelon_basis(rows):
            if target & (v & -v):
                target ^= v
        return target == 0


def _echelon_basis(rows: list[int]) -> list[int]:
    out: list[int] = []
    for r in rows:
        for v in out:
            if r & (v & -v):
                r ^= v
        if r:
            low = r & -r
            out = [v ^ r if v & low else v for v in out]
            out.append(r)
    return out


def diag_vector(m: SymMatrix) -> BitVector:
    return m.diagonal()


def solve_affine(m: SymMatrix, b: BitVector) -> AffineSolutionSet | None:
    x, kernel = _solve_and_kernel(m, b)
    if x is None:
        return None
    return AffineSolutionSet(x, kernel, b)


def solve_diag_system(m: SymMatrix) -> AffineSolutionSet:
    """All solutions of ``Mx = diag(M)``; this system is always consistent."""
    d = m.diagonal()
    sols = solve_affine(m, d)
    if sols is None:
        raise TheoremViolation("Mx = diag(M) reported unsolvable for %r" % (m,))
    return sols


def parity_of_solutions(m: SymMatrix) -> int:
    """The common value of ``diag(M) . x`` over solutions of ``Mx = diag(M)``,
    which is ``rank(M) mod 2``."""
    return rank(m) & 1


@dataclass(frozen=True)
class NormalForm:
    """Basis change ``P`` with ``P^T M P`` block diagonal.

    Columns of ``transform`` are, in order: ``unit_count`` vectors with
    ``B(v, v) = 1``, ``hyperbolic_count`` pairs ``(e, f)`` with
    ``B(e, f) = 1`` and ``B(e, e) = B(f, f) = 0``, then a basis of the radical.
    """

    transform: Matrix
    unit_count: int
    hyperbolic_count: int

    @property
    def rank(self) -> int:
        return self.unit_count + 2 * self.hyperbolic_count

    def block_pattern(self) -> Matrix:
        """The expected ``P^T M P``."""
        n = self.transform.nrows
        rows = [0] * n
        for i in range(self.unit_count):
            rows[i] = 1 << i
        for j in range(self.hyperbolic_count):
            e = self.unit_count + 2 * j
            rows[e] = 1 << (e + 1)
            rows[e + 1] = 1 << e
        return Matrix(n, n, rows)


def symmetric_normal_form(m: SymMatrix) -> NormalForm:
    """Greedy orthogonal splitting of ``B(v, w) = v^T M w``.

    Splits off a unit vector whenever any remaining vector is non-isotropic,
    otherwise a hyperbolic pair; lowest index first in both cases.  What is
    left pairs to zero with everything and is the radical.
    """
    n = m.n
    rows = m.rows

    def image(v: int) -> int:
        out = 0
        while v:
            low = v & -v
            out ^= rows[low.bit_length() - 1]
            v ^= low
        return out

    remaining = [1 << i for i in range(n)]
    units: list[int] = []
    pairs: list[tuple[int, int]] = []
    while remaining:
        images = [image(w) for w in remaining]
        pick = next((i for i, w in enumerate(remaining) if parity(w & images[i])), None)
        if pick is not None:
            u, mu = remaining.pop(pick), images.pop(pick)
            units.append(u)
            remaining = [w ^ u if parity(w & mu) else w for w in remaining]
            continue
        pair = None
        for i, w in enumerate(remaining):
            for j in range(i + 1, len(remaining)):
                if parity(remaining[j] & images[i]):
                    pair = (i, j)
                    break
            if pair:
                break
        if pair is None:
            break
        i, j = pair
        e, f = remaining[i], remaining[j]
        me, mf = images[i], images[j]
        pairs.append((e, f))
        rest = []
        for idx, w in enumerate(remaining):
            if idx in pair:
                continue
            if parity(w & mf):
                w ^= e
            if parity(remaining[idx] & me):
                w ^= f
            rest.append(w)
        remaining = rest
    cols = units + [v for p in pairs for v in p] + remaining
    # cols are the columns of P; store P row-wise
    p_rows = [0] * n
    for j, c in enumerate(cols):
        while c:
            low = c & -c
            p_rows[low.bit_length() - 1] |= 1 << j
            c ^= low
    return NormalForm(Matrix(n, n, p_rows), len(units), len(pairs))


def congruent(m: SymMatrix, p: Matrix) -> Matrix:
    """``P^T M P``."""
    return p.transpose() @ m @ p


def inverse_parity_identity(m: SymMatrix) -> bool:
    """Check ``diag(M)^T M^{-1} diag(M) == n (mod 2)`` for invertible ``M``."""
    sols = solve_diag_system(m)
    if sols.dimension:
        raise NotInvertibleError("matrix has rank %d < %d" % (sols.rank, m.n))
    d = m.diagonal()
    x = sols.particular
    if mat_vec(m, x) != d:
        raise TheoremViolation("solver returned a non-solution")
    return parity(d.bits & x.bits) == (m.n & 1)
