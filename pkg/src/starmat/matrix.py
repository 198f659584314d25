"""Dense square matrices and the star product.

``A ⋆ B`` takes its diagonal from the entrywise product of the diagonals and
its off-diagonal entries from the ordinary product ``AB``.  For ``n = 2`` it
is associative with unit ``1``; from ``n = 3`` on it is not.
"""

from __future__ import annotations

from typing import NamedTuple

from . import _kernels
from .errors import DimensionError
from .scalars import FLOAT, RATIONAL, ScalarBackend, backend_of


class Matrix:
    """Immutable ``n x n`` matrix stored as a flat row-major tuple."""

    __slots__ = ("n", "entries", "backend")

    def __init__(self, rows, backend: ScalarBackend | None = None):
        rows = [list(r) for r in rows]
        n = len(rows)
        if n == 0:
            raise DimensionError("a matrix needs n >= 1")
        if any(len(r) != n for r in rows):
            raise DimensionError(f"rows must all have length {n}")
        flat = [x for r in rows for x in r]
        if backend is None:
            backend = backend_of(*flat)
        self.n = n
        self.entries = tuple(backend.coerce(x) for x in flat)
        self.backend = backend

    @classmethod
    def _make(cls, n: int, entries: tuple, backend: ScalarBackend) -> Matrix:
        # trusted constructor for kernel output; float results still get checked
        m = object.__new__(cls)
        m.n = n
        m.entries = entries if backend is RATIONAL else tuple(backend.check(x) for x in entries)
        m.backend = backend
        return m

    @classmethod
    def from_flat(cls, n: int, entries, backend: ScalarBackend | None = None) -> Matrix:
        entries = list(entries)
        if n < 1 or len(entries) != n * n:
            raise DimensionError(f"need {n}*{n} entries, got {len(entries)}")
        return cls([entries[i * n:(i + 1) * n] for i in range(n)], backend)

    @classmethod
    def identity(cls, n: int, backend: ScalarBackend = RATIONAL) -> Matrix:
        return cls.diagonal([backend.one] * n, backend)

    @classmethod
    def zero(cls, n: int, backend: ScalarBackend = RATIONAL) -> Matrix:
        if n < 1:
            raise DimensionError("a matrix needs n >= 1")
        return cls._make(n, (backend.zero,) * (n * n), backend)

    @classmethod
    def diagonal(cls, diag, backend: ScalarBackend | None = None) -> Matrix:
        diag = list(diag)
        if backend is None:
            backend = backend_of(*diag)
        n = len(diag)
        return cls([[diag[i] if i == j else backend.zero for j in range(n)] for i in range(n)],
                   backend)

    @classmethod
    def unit(cls, n: int, i: int, j: int, backend: ScalarBackend = RATIONAL) -> Matrix:
        """Matrix unit ``E_ij`` (zero-based indices)."""
        flat = [backend.zero] * (n * n)
        flat[i * n + j] = backend.one
        return cls._make(n, tuple(flat), backend)

    @property
    def rows(self) -> list[list]:
        n = self.n
        return [list(self.entries[i * n:(i + 1) * n]) for i in range(n)]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.n + j]

    def diag_entries(self) -> tuple:
        return tuple(self.entries[i * self.n + i] for i in range(self.n))

    def is_diagonal(self) -> bool:
        n, b = self.n, self.backend
        return all(b.is_zero(self.entries[i * n + j])
                   for i in range(n) for j in range(n) if i != j)

    def is_unit_diagonal(self) -> bool:
        return all(self.backend.eq(d, self.backend.one) for d in self.diag_entries())

    def is_zero(self) -> bool:
        return all(self.backend.is_zero(x) for x in self.entries)

    def to_backend(self, backend: ScalarBackend) -> Matrix:
        return Matrix.from_flat(self.n, self.entries, backend)

    def _pair(self, other: Matrix) -> ScalarBackend:
        if not isinstance(other, Matrix):
            raise TypeError(f"expected Matrix, got {type(other).__name__}")
        if other.n != self.n:
            raise DimensionError(f"dimension mismatch: {self.n} vs {other.n}")
        return FLOAT if FLOAT in (self.backend, other.backend) else self.backend

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.n != self.n:
            return False
        b = self._pair(other)
        return all(b.eq(x, y) for x, y in zip(self.entries, other.entries))

    def __hash__(self) -> int:
        return hash((self.n, self.entries))

    def __add__(self, other: Matrix) -> Matrix:
        b = self._pair(other)
        return Matrix._make(self.n, tuple(x + y for x, y in zip(self.entries, other.entries)), b)

    def __sub__(self, other: Matrix) -> Matrix:
        b = self._pair(other)
        return Matrix._make(self.n, tuple(x - y for x, y in zip(self.entries, other.entries)), b)

    def __neg__(self) -> Matrix:
        return Matrix._make(self.n, tuple(-x for x in self.entries), self.backend)

    def scale(self, s) -> Matrix:
        b = FLOAT if (self.backend is FLOAT or isinstance(s, float)) else self.backend
        s = b.coerce(s)
        return Matrix._make(self.n, tuple(s * x for x in self.entries), b)

    def matmul(self, other: Matrix) -> Matrix:
        """Ordinary row-by-column product."""
        b = self._pair(other)
        return Matrix._make(self.n, _kernels.matmul_flat(self.entries, other.entries, self.n), b)

    def star(self, other: Matrix) -> Matrix:
        b = self._pair(other)
        return Matrix._make(self.n, _kernels.star_flat(self.entries, other.entries, self.n), b)

    def __repr__(self) -> str:
        fmt = self.backend.format
        return "Matrix([" + ", ".join(
            "[" + ", ".join(fmt(x) for x in row) + "]" for row in self.rows) + "])"


class DiagSplit(NamedTuple):
    diag: Matrix
    offdiag: Matrix


class NonAssocWitness(NamedTuple):
    a: Matrix
    b: Matrix
    c: Matrix
    lhs: Matrix
    rhs: Matrix


def add(a: Matrix, b: Matrix) -> Matrix:
    return a + b


def subtract(a: Matrix, b: Matrix) -> Matrix:
    return a - b


def scale(s, a: Matrix) -> Matrix:
    return a.scale(s)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    return a.matmul(b)


def equal(a: Matrix, b: Matrix) -> bool:
    a._pair(b)
    return a == b


def diag_split(a: Matrix) -> DiagSplit:
    n, z = a.n, a.backend.zero
    d = tuple(x if k % (n + 1) == 0 else z for k, x in enumerate(a.entries))
    o = tuple(z if k % (n + 1) == 0 else x for k, x in enumerate(a.entries))
    return DiagSplit(Matrix._make(n, d, a.backend), Matrix._make(n, o, a.backend))


def star(a: Matrix, b: Matrix) -> Matrix:
    """``A ⋆ B = A0 B0 + (AB)_1`` for any ``n``."""
    return a.star(b)


def star2_closed(a: Matrix, b: Matrix) -> Matrix:
    """Closed form ``A0B0 + A0B1 + A1B0``, valid only for ``n = 2``."""
    if a.n != 2 or b.n != 2:
        raise DimensionError("the closed form is only defined for 2x2 matrices")
    bk = a._pair(b)
    a0, a1 = diag_split(a)
    b0, b1 = diag_split(b)
    return Matrix._make(2, (a0.matmul(b0) + a0.matmul(b1) + a1.matmul(b0)).entries, bk)


def hadamard(a: Matrix, b: Matrix) -> Matrix:
    bk = a._pair(b)
    return Matrix._make(a.n, tuple(x * y for x, y in zip(a.entries, b.entries)), bk)


def nonassoc_witness(n: int = 3, backend: ScalarBackend = RATIONAL) -> NonAssocWitness:
    """``E12, E23, E32`` padded to ``n x n`` with both bracketings of their star product."""
    if n < 3:
        raise DimensionError("star is associative for n <= 2; need n >= 3")
    a = Matrix.unit(n, 0, 1, backend)
    b = Matrix.unit(n, 1, 2, backend)
    c = Matrix.unit(n, 2, 1, backend)
    return NonAssocWitness(a, b, c, a.star(b).star(c), a.star(b.star(c)))
