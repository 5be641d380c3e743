"""Dense linear algebra over GF(2) with rows packed into Python ints.

Coordinate ``i`` of a vector (and column ``i`` of a matrix row) is bit ``i``
of the packed integer.  Python ints give word-parallel XOR at any width, so
the logical length is carried separately from the packed value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence


class TheoremViolation(RuntimeError):
    """An outcome a proven identity rules out; always an implementation bug."""


_BIT_DIGITS = bytes.maketrans(b"\x00\x01", b"01")


def parity(x: int) -> int:
    return x.bit_count() & 1


@dataclass(frozen=True)
class BitVector:
    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("negative length")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits set beyond length %d" % self.length)

    @classmethod
    def zeros(cls, n: int) -> "BitVector":
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> "BitVector":
        return cls(n, (1 << n) - 1)

    @classmethod
    def unit(cls, n: int, i: int) -> "BitVector":
        if not 0 <= i < n:
            raise IndexError("coordinate %d out of range for length %d" % (i, n))
        return cls(n, 1 << i)

    @classmethod
    def from_list(cls, values: Iterable[int]) -> "BitVector":
        vals = list(values)
        bad = set(vals) - {0, 1}
        if bad:
            raise ValueError("entries must be 0 or 1, got %r" % (bad.pop(),))
        if not vals:
            return cls(0, 0)
        digits = bytes(reversed(vals)).translate(_BIT_DIGITS)
        return cls(len(vals), int(digits, 2))

    @classmethod
    def from_string(cls, s: str) -> "BitVector":
        """Parse ``"0110"``; the first character is coordinate 0."""
        if set(s) - {"0", "1"}:
            raise ValueError("bit string may only contain 0 and 1: %r" % s)
        return cls.from_list(int(c) for c in s)

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __iter__(self) -> Iterator[int]:
        for i in range(self.length):
            yield (self.bits >> i) & 1

    def __add__(self, other: "BitVector") -> "BitVector":
        _check_len(self, other)
        return BitVector(self.length, self.bits ^ other.bits)

    __xor__ = __add__

    def __str__(self) -> str:
        return "".join(str(b) for b in self)

    def to_list(self) -> list[int]:
        return list(self)

    def popcount(self) -> int:
        return self.bits.bit_count()

    def flip(self, i: int) -> "BitVector":
        return self + BitVector.unit(self.length, i)

    def is_zero(self) -> bool:
        return self.bits == 0

    def dot(self, other: "BitVector") -> int:
        return dot(self, other)


def _check_len(a: BitVector, b: BitVector) -> None:
    if a.length != b.length:
        raise ValueError("length mismatch: %d vs %d" % (a.length, b.length))


def dot(a: BitVector, b: BitVector) -> int:
    """Standard dot product over GF(2)."""
    _check_len(a, b)
    return parity(a.bits & b.bits)


class Matrix:
    """Immutable ``nrows x ncols`` matrix over GF(2), one packed int per row."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: Sequence[int]):
        rows = tuple(rows)
        if len(rows) != nrows:
            raise ValueError("expected %d rows, got %d" % (nrows, len(rows)))
        for r in rows:
            if r < 0 or r >> ncols:
                raise ValueError("row has bits beyond column %d" % ncols)
        object.__setattr__(self, "nrows", nrows)
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("%s is immutable" % type(self).__name__)

    @classmethod
    def from_lists(cls, data: Sequence[Sequence[int]], ncols: Optional[int] = None):
        if ncols is None:
            ncols = len(data[0]) if data else 0
        rows = []
        for row in data:
            if len(row) != ncols:
                raise ValueError("ragged matrix")
            rows.append(BitVector.from_list(row).bits)
        return cls(len(data), ncols, rows)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [1 << i for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls(nrows, ncols, [0] * nrows)

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def row(self, i: int) -> BitVector:
        return BitVector(self.ncols, self.rows[i])

    def column(self, j: int) -> BitVector:
        return BitVector(self.nrows, sum(((r >> j) & 1) << i for i, r in enumerate(self.rows)))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not 0 <= j < self.ncols:
            raise IndexError(j)
        return (self.rows[i] >> j) & 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.nrows, self.ncols, self.rows) == (other.nrows, other.ncols, other.rows)

    def __hash__(self) -> int:
        return hash((self.nrows, self.ncols, self.rows))

    def __repr__(self) -> str:
        body = ", ".join("".join(map(str, row)) for row in self.to_lists())
        return "%s(%dx%d: [%s])" % (type(self).__name__, self.nrows, self.ncols, body)

    def transpose(self) -> "Matrix":
        return Matrix(self.ncols, self.nrows, _transpose_rows(self.rows, self.ncols))

    def __matmul__(self, other):
        if isinstance(other, BitVector):
            return mat_vec(self, other)
        if isinstance(other, Matrix):
            return mat_mul(self, other)
        return NotImplemented

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        return Matrix(self.nrows, self.ncols, [a ^ b for a, b in zip(self.rows, other.rows)])


class SymMatrix(Matrix):
    """Square symmetric matrix; symmetry is checked on construction."""

    __slots__ = ()

    def __init__(self, n: int, rows: Sequence[int], *, _checked: bool = True):
        super().__init__(n, n, rows)
        if _checked and _transpose_rows(self.rows, n) != list(self.rows):
            raise ValueError("matrix is not symmetric")

    @classmethod
    def from_lists(cls, data: Sequence[Sequence[int]], ncols: Optional[int] = None):
        m = Matrix.from_lists(data, ncols)
        if m.nrows != m.ncols:
            raise ValueError("matrix is not square")
        return cls(m.nrows, m.rows)

    @classmethod
    def identity(cls, n: int) -> "SymMatrix":
        return cls(n, [1 << i for i in range(n)], _checked=False)

    @classmethod
    def zeros(cls, n: int) -> "SymMatrix":  # type: ignore[override]
        return cls(n, [0] * n, _checked=False)

    @classmethod
    def from_matrix(cls, m: Matrix) -> "SymMatrix":
        if m.nrows != m.ncols:
            raise ValueError("matrix is not square")
        return cls(m.nrows, m.rows)

    @property
    def n(self) -> int:
        return self.nrows

    def diagonal(self) -> BitVector:
        return BitVector(self.n, sum(((r >> i) & 1) << i for i, r in enumerate(self.rows)))


def _transpose_rows(rows: Sequence[int], ncols: int) -> list[int]:
    out = [0] * ncols
    for i, r in enumerate(rows):
        while r:
            low = r & -r
            out[low.bit_length() - 1] |= 1 << i
            r ^= low
    return out


def mat_vec(m: Matrix, x: BitVector) -> BitVector:
    if x.length != m.ncols:
        raise ValueError("length mismatch: matrix has %d columns, vector %d" % (m.ncols, x.length))
    xb = x.bits
    out = 0
    for i, r in enumerate(m.rows):
        if (r & xb).bit_count() & 1:
            out |= 1 << i
    return BitVector(m.nrows, out)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.ncols != b.nrows:
        raise ValueError("shape mismatch: %dx%d @ %dx%d" % (a.nrows, a.ncols, b.nrows, b.ncols))
    rows = []
    for r in a.rows:
        acc = 0
        while r:
            low = r & -r
            acc ^= b.rows[low.bit_length() - 1]
            r ^= low
        rows.append(acc)
    return Matrix(a.nrows, b.ncols, rows)


def _reduce(rows: list[int], ncols: int, transform: Optional[list[int]] = None) -> list[int]:
    """Gauss-Jordan reduction of ``rows`` in place over the low ``ncols`` columns.

    Pivot rule: leftmost column holding a nonzero, topmost available row.
    Bits at positions >= ``ncols`` ride along (used for augmented columns).
    When ``transform`` is given, the same row operations are applied to it.
    Returns the pivot column of each of the first ``rank`` rows.
    """
    pivots = []
    m = len(rows)
    top = 0
    for col in range(ncols):
        if top == m:
            break
        bit = 1 << col
        for p in range(top, m):
            if rows[p] & bit:
                break
        else:
            continue
        if p != top:
            rows[p], rows[top] = rows[top], rows[p]
            if transform is not None:
                transform[p], transform[top] = transform[top], transform[p]
        prow = rows[top]
        for r in range(m):
            if r != top and rows[r] & bit:
                rows[r] ^= prow
                if transform is not None:
                    transform[r] ^= transform[top]
        pivots.append(col)
        top += 1
    return pivots


@dataclass(frozen=True)
class Echelon:
    """Reduced row-echelon form with the row operations that produced it.

    ``transform @ source == form``; ``transform`` is invertible.
    """

    form: Matrix
    pivots: tuple[int, ...]
    transform: Matrix

    @property
    def rank(self) -> int:
        return len(self.pivots)


def echelonize(m: Matrix) -> Echelon:
    rows = list(m.rows)
    t = [1 << i for i in range(m.nrows)]
    pivots = _reduce(rows, m.ncols, t)
    return Echelon(Matrix(m.nrows, m.ncols, rows), tuple(pivots), Matrix(m.nrows, m.nrows, t))


def rank(m: Matrix) -> int:
    return len(_reduce(list(m.rows), m.ncols))


def nullity(m: Matrix) -> int:
    return m.ncols - rank(m)


@dataclass(frozen=True)
class KernelBasis:
    vectors: tuple[BitVector, ...]

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self) -> Iterator[BitVector]:
        return iter(self.vectors)

    def __getitem__(self, i: int) -> BitVector:
        return self.vectors[i]


def _kernel_from_rref(rows: Sequence[int], pivots: Sequence[int], ncols: int) -> KernelBasis:
    pivot_set = set(pivots)
    vectors = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = 1 << f
        for i, c in enumerate(pivots):
            if (rows[i] >> f) & 1:
                v |= 1 << c
        vectors.append(BitVector(ncols, v))
    return KernelBasis(tuple(vectors))


def kernel_basis(m: Matrix) -> KernelBasis:
    """Basis of ``{x : Mx = 0}``, one vector per free column in ascending order."""
    rows = list(m.rows)
    pivots = _reduce(rows, m.ncols)
    return _kernel_from_rref(rows, pivots, m.ncols)


def _solve_and_kernel(m: Matrix, b: BitVector) -> tuple[Optional[BitVector], KernelBasis]:
    if b.length != m.nrows:
        raise ValueError("length mismatch: matrix has %d rows, rhs %d" % (m.nrows, b.length))
    n = m.ncols
    low = (1 << n) - 1
    rows = [r | (((b.bits >> i) & 1) << n) for i, r in enumerate(m.rows)]
    pivots = _reduce(rows, n)
    kernel = _kernel_from_rref([r & low for r in rows], pivots, n)
    if any(r >> n for r in rows[len(pivots):]):
        return None, kernel
    x = 0
    for i, c in enumerate(pivots):
        if rows[i] >> n:
            x |= 1 << c
    return BitVector(n, x), kernel


def solve(m: Matrix, b: BitVector) -> Optional[BitVector]:
    """Some ``x`` with ``Mx = b``, or ``None`` when the system is inconsistent.

    The returned solution is canonical: every free variable is zero.
    """
    return _solve_and_kernel(m, b)[0]


def image_contains(m: SymMatrix, b: BitVector) -> bool:
    """Membership in the column space, tested as orthogonality to the kernel."""
    if b.length != m.n:
        raise ValueError("length mismatch: matrix is %dx%d, vector %d" % (m.n, m.n, b.length))
    return all(parity(b.bits & z.bits) == 0 for z in kernel_basis(m))


def add_outer(m: SymMatrix, u: BitVector) -> SymMatrix:
    """``M + u u^T``."""
    if u.length != m.n:
        raise ValueError("length mismatch: matrix is %dx%d, vector %d" % (m.n, m.n, u.length))
    ub = u.bits
    rows = [r ^ ub if (ub >> i) & 1 else r for i, r in enumerate(m.rows)]
    return SymMatrix(m.n, rows, _checked=False)


def is_kernel_basis(m: Matrix, basis: Iterable[BitVector]) -> bool:
    """Membership, linear independence, and cardinality ``ncols - rank``."""
    vecs = list(basis)
    if any(v.length != m.ncols for v in vecs):
        return False
    if any(not mat_vec(m, v).is_zero() for v in vecs):
        return False
    if len(_reduce([v.bits for v in vecs], m.ncols)) != len(vecs):
        return False
    return len(vecs) == nullity(m)


def is_invertible(m: Matrix) -> bool:
    return m.nrows == m.ncols and rank(m) == m.nrows


def span(vectors: Sequence[BitVector], length: int) -> Iterator[BitVector]:
    """All ``2**len(vectors)`` combinations, in Gray-code order from zero."""
    acc = 0
    yield BitVector(length, 0)
    for i in range(1, 1 << len(vectors)):
        acc ^= vectors[(i & -i).bit_length() - 1].bits
        yield BitVector(length, acc)
