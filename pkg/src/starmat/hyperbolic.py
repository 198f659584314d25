"""Hyperbolic rotations SO(1,1), the motion group ISO(1,1), and the
homomorphism from the star group onto it.

A rotation is stored as ``(c, s)`` standing for ``[[c, s], [s, c]]`` with
``c^2 - s^2 = 1``; a motion ``T[R, u]`` maps ``x`` to ``Rx + u``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidArgument, NotInvertible, RangeError, Unsupported
from .group import is_star_invertible
from .matrix import Matrix, diag_split
from .scalars import FLOAT, RATIONAL, ScalarBackend, backend_of

PHI_T_MAX = 700.0
#: Slack for float rotations built directly: composing rotations of size
#: cosh(t) leaves rounding of order eps * cosh(t)^2 in c^2 - s^2.
ROT_FLOAT_TOL = 1e-9


def _half(bk: ScalarBackend):
    return bk.invert(bk.one + bk.one)


@dataclass(frozen=True, eq=False)
class Vec2:
    e1: object
    e2: object

    def __post_init__(self):
        bk = backend_of(self.e1, self.e2)
        object.__setattr__(self, "e1", bk.coerce(self.e1))
        object.__setattr__(self, "e2", bk.coerce(self.e2))

    @property
    def backend(self) -> ScalarBackend:
        return backend_of(self.e1, self.e2)

    def __add__(self, other: Vec2) -> Vec2:
        return Vec2(self.e1 + other.e1, self.e2 + other.e2)

    def __sub__(self, other: Vec2) -> Vec2:
        return Vec2(self.e1 - other.e1, self.e2 - other.e2)

    def __neg__(self) -> Vec2:
        return Vec2(-self.e1, -self.e2)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Vec2):
            return NotImplemented
        bk = backend_of(self.e1, self.e2, other.e1, other.e2)
        return bk.eq(self.e1, other.e1) and bk.eq(self.e2, other.e2)

    def __hash__(self) -> int:
        return hash((self.e1, self.e2))

    def __iter__(self):
        yield self.e1
        yield self.e2


@dataclass(frozen=True, eq=False)
class HypRotation:
    c: object
    s: object

    def __post_init__(self):
        bk = backend_of(self.c, self.s)
        c, s = bk.coerce(self.c), bk.coerce(self.s)
        if not (_on_hyperbola_float(c, s) if bk is FLOAT else c * c - s * s == 1):
            raise InvalidArgument(f"c^2 - s^2 must equal 1, got c={c!r}, s={s!r}")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "s", s)

    @classmethod
    def _closed(cls, c, s) -> HypRotation:
        """Result of a group operation on valid rotations; floats skip re-validation."""
        if not (isinstance(c, float) or isinstance(s, float)):
            return cls(c, s)
        r = object.__new__(cls)
        object.__setattr__(r, "c", FLOAT.check(float(c)))
        object.__setattr__(r, "s", FLOAT.check(float(s)))
        return r

    @property
    def backend(self) -> ScalarBackend:
        return backend_of(self.c, self.s)

    @classmethod
    def identity(cls, backend: ScalarBackend = RATIONAL) -> HypRotation:
        return cls(backend.one, backend.zero)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HypRotation):
            return NotImplemented
        bk = backend_of(self.c, self.s, other.c, other.s)
        return bk.eq(self.c, other.c) and bk.eq(self.s, other.s)

    def __hash__(self) -> int:
        return hash((self.c, self.s))

    def matrix(self) -> Matrix:
        return Matrix([[self.c, self.s], [self.s, self.c]], self.backend)

    def det(self):
        return self.c * self.c - self.s * self.s


@dataclass(frozen=True)
class Motion:
    rot: HypRotation
    trans: Vec2

    @classmethod
    def identity(cls, backend: ScalarBackend = RATIONAL) -> Motion:
        return cls(HypRotation.identity(backend), Vec2(backend.zero, backend.zero))


def _on_hyperbola_float(c: float, s: float) -> bool:
    # relative to c^2, evaluated without squaring large values
    if abs(c) <= 1.0:
        return abs(c * c - s * s - 1.0) <= ROT_FLOAT_TOL
    r = s / c
    return abs((1.0 - r) * (1.0 + r) - 1.0 / (c * c)) <= ROT_FLOAT_TOL


def minkowski_form(u: Vec2, v: Vec2):
    """``b(u, v) = u1 v1 - u2 v2``."""
    return u.e1 * v.e1 - u.e2 * v.e2


def rot_compose(r: HypRotation, s: HypRotation) -> HypRotation:
    return HypRotation._closed(r.c * s.c + r.s * s.s, r.c * s.s + r.s * s.c)


def rot_apply(r: HypRotation, u: Vec2) -> Vec2:
    return Vec2(r.c * u.e1 + r.s * u.e2, r.s * u.e1 + r.c * u.e2)


def rot_inverse(r: HypRotation) -> HypRotation:
    return HypRotation._closed(r.c, -r.s)


def psi(x) -> HypRotation:
    """``x -> ((x + 1/x)/2, (x - 1/x)/2)``, an isomorphism ``F^x -> SO(1,1)``."""
    bk = backend_of(x)
    x = bk.coerce(x)
    ix = bk.invert(x)
    h = _half(bk)
    return HypRotation((x + ix) * h, (x - ix) * h)


def psi_inv(r: HypRotation):
    return r.c + r.s


def phi_real(t: float) -> HypRotation:
    """``(cosh t, sinh t)`` on the float backend."""
    t = FLOAT.coerce(t)
    if abs(t) > PHI_T_MAX:
        raise RangeError(f"|t| must be <= {PHI_T_MAX:g}, got {t!r}")
    return HypRotation(math.cosh(t), math.sinh(t))


def is_positive_component(r: HypRotation) -> bool:
    """Membership in SO+(1,1), the index-2 subgroup with ``c > 0``."""
    if not r.backend.ordered:
        raise Unsupported(f"{r.backend.name} backend is not ordered")
    return r.c > 0


def motion_compose(t1: Motion, t2: Motion) -> Motion:
    """``T[R,u] * T[S,v] = T[RS, u + Rv]``."""
    return Motion(rot_compose(t1.rot, t2.rot), t1.trans + rot_apply(t1.rot, t2.trans))


def motion_apply(t: Motion, x: Vec2) -> Vec2:
    return rot_apply(t.rot, x) + t.trans


def motion_inverse(t: Motion) -> Motion:
    r_inv = rot_inverse(t.rot)
    return Motion(r_inv, -rot_apply(r_inv, t.trans))


def _diag_xy(a0: Matrix):
    if not isinstance(a0, Matrix) or a0.n != 2:
        raise InvalidArgument("expected a 2x2 diagonal matrix")
    if not a0.is_diagonal():
        raise InvalidArgument("expected a diagonal matrix")
    return a0[0, 0], a0[1, 1]


def alpha(a0: Matrix) -> HypRotation:
    """``diag(x, y) -> psi(x / y)``; kernel is the scalar matrices."""
    x, y = _diag_xy(a0)
    bk = a0.backend
    if bk.is_zero(x) or bk.is_zero(y):
        raise NotInvertible("alpha needs nonzero diagonal entries")
    return psi(x * bk.invert(y))


def alpha_preimage(r: HypRotation) -> Matrix:
    """The section ``R -> diag(c + s, 1)`` of alpha."""
    bk = r.backend
    return Matrix.diagonal([r.c + r.s, bk.one], bk)


def beta(b: Matrix) -> Vec2:
    """``[[1, p], [q, 1]] -> (p + q, p - q)``."""
    if not isinstance(b, Matrix) or b.n != 2:
        raise InvalidArgument("beta expects a 2x2 matrix")
    if not b.is_unit_diagonal():
        raise InvalidArgument("beta expects a matrix with unit diagonal")
    p, q = b[0, 1], b[1, 0]
    return Vec2(p + q, p - q)


def beta_inv(v: Vec2) -> Matrix:
    bk = v.backend
    if bk.characteristic_two:
        raise Unsupported("beta is not invertible in characteristic two")
    h = _half(bk)
    return Matrix([[bk.one, (v.e1 + v.e2) * h], [(v.e1 - v.e2) * h, bk.one]], bk)


def gamma(a0: Matrix):
    """``diag(x, y) -> x``."""
    x, _ = _diag_xy(a0)
    return x


def phi_map(a: Matrix) -> Motion:
    """The homomorphism ``G -> ISO(1,1)``: ``T[alpha(A0), beta(1 + A1 A0^-1)]``."""
    if not is_star_invertible(a):
        raise NotInvertible("diagonal part is singular (a zero diagonal entry)")
    a0, a1 = diag_split(a)
    bk = a.backend
    a0_inv = Matrix.diagonal([bk.invert(d) for d in a0.diag_entries()], bk)
    return Motion(alpha(a0), beta(Matrix.identity(2, bk) + a1.matmul(a0_inv)))


def embed_affine(t: Motion) -> Matrix:
    """``T[R, u]`` as the 3x3 matrix ``[[R, u], [0, 1]]``."""
    r, u = t.rot, t.trans
    bk = backend_of(r.c, r.s, u.e1, u.e2)
    z, one = bk.zero, bk.one
    return Matrix([[r.c, r.s, u.e1], [r.s, r.c, u.e2], [z, z, one]], bk)


def rho(a: Matrix) -> Matrix:
    """Faithful 3x3 representation ``gamma(A0) * embed(Phi(A))``."""
    motion = phi_map(a)
    return embed_affine(motion).scale(gamma(diag_split(a).diag))


def rho_recover(m: Matrix) -> Matrix:
    """Invert :func:`rho` on its image."""
    if m.n != 3:
        raise InvalidArgument("rho images are 3x3")
    bk = m.backend
    x = m[2, 2]
    if bk.is_zero(x):
        raise InvalidArgument("not in the image of rho")
    ix = bk.invert(x)
    c, s = m[0, 0] * ix, m[0, 1] * ix
    y = x * bk.invert(c + s)
    t1, t2 = m[0, 2] * ix, m[1, 2] * ix
    h = _half(bk)
    # t1 = p/y + q/x and t2 = p/y - q/x
    p = (t1 + t2) * h * y
    q = (t1 - t2) * h * x
    return Matrix([[x, p], [q, y]], bk)
