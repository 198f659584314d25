"""Explicit constructions printed by ``starmat witness``."""

from __future__ import annotations

from itertools import product

from . import group as grp
from . import hyperbolic as hyp
from .checks import SAMPLE
from .errors import NotInvertible
from .matrix import Matrix, nonassoc_witness
from .scalars import RATIONAL


def nonassoc3() -> dict:
    w = nonassoc_witness(3)
    return {"A": w.a, "B": w.b, "C": w.c, "(A@B)@C": w.lhs, "A@(B@C)": w.rhs}


def zerodiv(a: Matrix) -> dict:
    b = grp.zero_divisor_witness(a)
    return {"A": a, "B": b, "A@B": a.star(b)}


def rho_literal(a: Matrix) -> Matrix:
    """The display formula for rho with p, q taken as the raw off-diagonal entries.

    Translation column ``x (zp + q/z, zp - q/z)`` with ``z = x/y``.  This is
    *not* a representation; it exists to exhibit the failure.
    """
    if not grp.is_star_invertible(a):
        raise NotInvertible("diagonal part is singular (a zero diagonal entry)")
    x, p, q, y = a.entries
    z = x / y
    r = hyp.psi(z)
    return Matrix([[x * r.c, x * r.s, x * (z * p + q / z)],
                   [x * r.s, x * r.c, x * (z * p - q / z)],
                   [0, 0, x]])


def _invertible_in_order(values):
    for x, p, q, y in product(values, repeat=4):
        if x != 0 and y != 0:
            yield Matrix._make(2, (x, p, q, y), RATIONAL)


def rho_raw_reading(values=SAMPLE) -> dict:
    """First pair ``(A, B)``, in lexicographic order of their entries
    ``(a11, a12, a21, a22, b11, b12, b21, b22)`` over ascending ``values``,
    where the raw-entry reading of rho is not multiplicative.
    """
    values = sorted(values)
    mats = list(_invertible_in_order(values))
    for a in mats:
        for b in mats:
            ab = a.star(b)
            raw_lhs = rho_literal(ab)
            raw_rhs = rho_literal(a).matmul(rho_literal(b))
            if raw_lhs != raw_rhs:
                return {
                    "A": a, "B": b, "A@B": ab,
                    "raw rho(A@B)": raw_lhs, "raw rho(A) rho(B)": raw_rhs,
                    "rho(A@B)": hyp.rho(ab), "rho(A) rho(B)": hyp.rho(a).matmul(hyp.rho(b)),
                }
    raise AssertionError("raw reading is multiplicative on the whole search domain")


WITNESSES = {"nonassoc3": nonassoc3, "zerodiv": zerodiv, "rho-raw-reading": rho_raw_reading}
