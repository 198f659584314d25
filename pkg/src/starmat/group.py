"""The group G of star-invertible 2x2 matrices.

A 2x2 matrix is star-invertible exactly when both diagonal entries are
nonzero.  G factors as ``H ⋉ N`` with H the invertible diagonal matrices
and N the matrices with unit diagonal; the latter is abelian with
``(1+B1) ⋆ (1+C1) = 1+B1+C1``.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import DegenerateInput, DimensionError, InvalidArgument, NotInvertible, PreconditionError
from .matrix import Matrix, diag_split


class HNFactorization(NamedTuple):
    h: Matrix
    n_part: Matrix


def _require2(a: Matrix) -> None:
    if not isinstance(a, Matrix):
        raise InvalidArgument(f"expected a 2x2 matrix, got {type(a).__name__}")
    if a.n != 2:
        raise DimensionError(f"group operations need n = 2, got n = {a.n}")


def is_star_invertible(a: Matrix) -> bool:
    _require2(a)
    return not any(a.backend.is_zero(d) for d in a.diag_entries())


def _require_invertible(a: Matrix) -> None:
    if not is_star_invertible(a):
        raise NotInvertible("diagonal part is singular (a zero diagonal entry)")


def star_inverse(a: Matrix) -> Matrix:
    """``A0^-1 - A0^-1 A1 A0^-1``."""
    _require_invertible(a)
    bk = a.backend
    x, p, q, y = a.entries
    ix, iy = bk.invert(x), bk.invert(y)
    return Matrix._make(2, (ix, -ix * p * iy, -iy * q * ix, iy), bk)


def zero_divisor_witness(a: Matrix) -> Matrix:
    """Nonzero ``B`` with ``A ⋆ B = 0`` for ``A`` whose diagonal part is singular.

    ``B`` is the diagonal of ``A`` with its two entries exchanged, minus the
    off-diagonal part of ``A``.
    """
    _require2(a)
    if is_star_invertible(a):
        raise PreconditionError("matrix is star-invertible; it has no zero-divisor witness")
    if a.is_zero():
        raise DegenerateInput("the zero matrix has no canonical zero-divisor witness")
    x, p, q, y = a.entries
    return Matrix._make(2, (y, -p, -q, x), a.backend)


def hn_decompose(a: Matrix) -> HNFactorization:
    """Split ``A = A0 ⋆ (1 + A0^-1 A1)``."""
    _require_invertible(a)
    bk = a.backend
    x, p, q, y = a.entries
    h, _ = diag_split(a)
    n_part = Matrix._make(2, (bk.one, p * bk.invert(x), q * bk.invert(y), bk.one), bk)
    return HNFactorization(h, n_part)


def hn_compose(f: HNFactorization) -> Matrix:
    return f.h.star(f.n_part)


def in_h(a: Matrix) -> bool:
    return is_star_invertible(a) and a.is_diagonal()


def in_n(a: Matrix) -> bool:
    _require2(a)
    return a.is_unit_diagonal()


def conjugate_n_part(a0: Matrix, b: Matrix) -> Matrix:
    """Return ``1 + A0 B1 A0^-1``, the element with ``A0 ⋆ B = B~ ⋆ A0``."""
    _require2(a0)
    _require2(b)
    if not in_h(a0):
        raise InvalidArgument("first argument must be an invertible diagonal matrix")
    if not in_n(b):
        raise InvalidArgument("second argument must have unit diagonal")
    bk = a0._pair(b)
    x, _, _, y = a0.entries
    _, p, q, _ = b.entries
    return Matrix._make(2, (bk.one, x * p * bk.invert(y), y * q * bk.invert(x), bk.one), bk)


def star_power(a: Matrix, k: int) -> Matrix:
    """k-fold star product by binary exponentiation; negative k inverts first."""
    _require2(a)
    if k < 0:
        a = star_inverse(a)
        k = -k
    result = Matrix.identity(2, a.backend)
    base = a
    while k:
        if k & 1:
            result = result.star(base)
        k >>= 1
        if k:
            base = base.star(base)
    return result
