"""Evaluation of parsed expressions and canonical formatting of values.

Values are plain library objects; their Python type is the tag:
scalar (``Fraction`` or ``float``), :class:`Matrix`, :class:`Vec2`,
:class:`HypRotation`, :class:`Motion`, or ``bool``.  3x3 results of
``embed``/``rho`` are ordinary matrices.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Mapping

from .. import group, hyperbolic as hyp
from ..errors import (DivisionByZero, EvalTypeError, StarmatError, UnboundIdentifier,
                      Unsupported)
from ..matrix import Matrix, diag_split, hadamard
from ..scalars import FLOAT, RATIONAL, ScalarBackend
from .lexer import tokenize
from .parser import BUILTIN_ARITY, BinaryOp, Call, Ident, MatrixLit, Neg, ScalarLit, VectorLit, parse

SCALAR, MATRIX, VECTOR, ROTATION, MOTION, BOOLEAN = (
    "scalar", "matrix", "vector", "rotation", "motion", "boolean")


def value_kind(v) -> str:
    if isinstance(v, bool):
        return BOOLEAN
    if isinstance(v, (Fraction, float, int)):
        return SCALAR
    if isinstance(v, Matrix):
        return MATRIX
    if isinstance(v, hyp.Vec2):
        return VECTOR
    if isinstance(v, hyp.HypRotation):
        return ROTATION
    if isinstance(v, hyp.Motion):
        return MOTION
    raise TypeError(f"not an expression value: {type(v).__name__}")


def _integer(k) -> int:
    if isinstance(k, Fraction) and k.denominator == 1:
        return k.numerator
    if isinstance(k, float) and k.is_integer():
        return int(k)
    raise EvalTypeError(f"expected an integer exponent, got {k!r}")


def _phi(t):
    if not isinstance(t, float):
        raise Unsupported("phi(t) needs the float backend")
    return hyp.phi_real(t)


# name -> (argument kinds, implementation)
BUILTINS: dict[str, tuple[tuple[str, ...], Callable]] = {
    "sinv": ((MATRIX,), group.star_inverse),
    "spow": ((MATRIX, SCALAR), lambda a, k: group.star_power(a, _integer(k))),
    "zdiv": ((MATRIX,), group.zero_divisor_witness),
    "hsplit0": ((MATRIX,), lambda a: diag_split(a).diag),
    "hsplit1": ((MATRIX,), lambda a: diag_split(a).offdiag),
    "had": ((MATRIX, MATRIX), hadamard),
    "hn_h": ((MATRIX,), lambda a: group.hn_decompose(a).h),
    "hn_n": ((MATRIX,), lambda a: group.hn_decompose(a).n_part),
    "conj": ((MATRIX, MATRIX), group.conjugate_n_part),
    "alpha": ((MATRIX,), hyp.alpha),
    "alphapre": ((ROTATION,), hyp.alpha_preimage),
    "beta": ((MATRIX,), hyp.beta),
    "betainv": ((VECTOR,), hyp.beta_inv),
    "gamma": ((MATRIX,), hyp.gamma),
    "psi": ((SCALAR,), hyp.psi),
    "psiinv": ((ROTATION,), hyp.psi_inv),
    "phimap": ((MATRIX,), hyp.phi_map),
    "rot": ((SCALAR, SCALAR), hyp.HypRotation),
    "b": ((VECTOR, VECTOR), hyp.minkowski_form),
    "mcompose": ((MOTION, MOTION), hyp.motion_compose),
    "mapply": ((MOTION, VECTOR), hyp.motion_apply),
    "minv": ((MOTION,), hyp.motion_inverse),
    "embed": ((MOTION,), hyp.embed_affine),
    "rho": ((MATRIX,), hyp.rho),
    "motion": ((ROTATION, VECTOR), hyp.Motion),
    "phi": ((SCALAR,), _phi),
    "ispos": ((ROTATION,), hyp.is_positive_component),
    "isinv": ((MATRIX,), group.is_star_invertible),
}
assert set(BUILTINS) == set(BUILTIN_ARITY)
assert all(len(BUILTINS[k][0]) == a for k, a in BUILTIN_ARITY.items())


def _mul(a, b):
    ka, kb = value_kind(a), value_kind(b)
    if ka == kb == SCALAR:
        return a * b
    if ka == kb == MATRIX:
        return a.matmul(b)
    if ka == SCALAR and kb == MATRIX:
        return b.scale(a)
    if ka == MATRIX and kb == SCALAR:
        return a.scale(b)
    if ka == SCALAR and kb == VECTOR:
        return hyp.Vec2(a * b.e1, a * b.e2)
    if ka == ROTATION and kb == ROTATION:
        return hyp.rot_compose(a, b)
    if ka == ROTATION and kb == VECTOR:
        return hyp.rot_apply(a, b)
    if ka == MOTION and kb == MOTION:
        return hyp.motion_compose(a, b)
    if ka == MOTION and kb == VECTOR:
        return hyp.motion_apply(a, b)
    raise EvalTypeError(f"cannot multiply {ka} by {kb}")


def _star(a, b):
    if value_kind(a) != MATRIX or value_kind(b) != MATRIX:
        raise EvalTypeError(f"'@' needs two matrices, got {value_kind(a)} and {value_kind(b)}")
    return a.star(b)


def _additive(op: str):
    def apply(a, b):
        ka, kb = value_kind(a), value_kind(b)
        if ka != kb or ka not in (SCALAR, MATRIX, VECTOR):
            raise EvalTypeError(f"cannot {op} {ka} and {kb}")
        return a + b if op == "add" else a - b
    return apply


_BINARY = {"star": _star, "mul": _mul, "add": _additive("add"), "sub": _additive("sub")}


class Evaluator:
    def __init__(self, env: Mapping[str, object] | None = None,
                 backend: ScalarBackend = RATIONAL):
        self.env = dict(env or {})
        self.backend = backend

    def _guard(self, span, fn, *args):
        try:
            result = fn(*args)
        except StarmatError as exc:
            if exc.span is None:
                exc.span = span
            raise
        except ZeroDivisionError as exc:
            raise DivisionByZero(str(exc), span) from exc
        if isinstance(result, float):
            result = FLOAT.check(result)
        return result

    def scalar(self, lit: ScalarLit):
        if lit.decimal and self.backend is not FLOAT:
            raise Unsupported("decimal literals need the float backend", lit.span)
        if lit.decimal:
            return self._guard(lit.span, FLOAT.parse, lit.text)
        return self._guard(lit.span, self._rational_lit, lit.text)

    def _rational_lit(self, text: str):
        return self.backend.coerce(RATIONAL.parse(text))

    def eval(self, node):
        if isinstance(node, ScalarLit):
            return self.scalar(node)
        if isinstance(node, MatrixLit):
            rows = [[self.scalar(x) for x in row] for row in node.rows]
            return self._guard(node.span, Matrix, rows, self.backend)
        if isinstance(node, VectorLit):
            e1, e2 = self.eval(node.e1), self.eval(node.e2)
            for part, v in ((node.e1, e1), (node.e2, e2)):
                if value_kind(v) != SCALAR:
                    raise EvalTypeError(f"vector components must be scalars, got {value_kind(v)}",
                                        part.span)
            return hyp.Vec2(e1, e2)
        if isinstance(node, Ident):
            try:
                return self.env[node.name]
            except KeyError:
                raise UnboundIdentifier(f"{node.name!r} is not bound", node.span) from None
        if isinstance(node, Neg):
            v = self.eval(node.operand)
            if value_kind(v) not in (SCALAR, MATRIX, VECTOR):
                raise EvalTypeError(f"cannot negate a {value_kind(v)}", node.span)
            return -v
        if isinstance(node, BinaryOp):
            left, right = self.eval(node.left), self.eval(node.right)
            return self._guard(node.span, _BINARY[node.op], left, right)
        if isinstance(node, Call):
            kinds, fn = BUILTINS[node.name]
            args = [self.eval(a) for a in node.args]
            for want, arg, sub in zip(kinds, args, node.args):
                got = value_kind(arg)
                if got != want:
                    raise EvalTypeError(f"{node.name}: expected {want}, got {got}", sub.span)
            return self._guard(node.span, fn, *args)
        raise TypeError(f"unknown AST node {node!r}")


def evaluate(source, env: Mapping[str, object] | None = None,
             backend: ScalarBackend = RATIONAL):
    """Evaluate text or an AST node."""
    node = parse(tokenize(source)) if isinstance(source, str) else source
    return Evaluator(env, backend).eval(node)


def _fmt_scalar(x) -> str:
    return FLOAT.format(x) if isinstance(x, float) else RATIONAL.format(Fraction(x))


def format_value(v) -> str:
    """Canonical text; scalars, matrices and vectors parse back to themselves."""
    kind = value_kind(v)
    if kind == BOOLEAN:
        return "true" if v else "false"
    if kind == SCALAR:
        return _fmt_scalar(v)
    if kind == MATRIX:
        return "[" + ";".join(",".join(_fmt_scalar(x) for x in row) for row in v.rows) + "]"
    if kind == VECTOR:
        return f"({_fmt_scalar(v.e1)},{_fmt_scalar(v.e2)})"
    if kind == ROTATION:
        return f"rot({_fmt_scalar(v.c)},{_fmt_scalar(v.s)})"
    return f"motion({format_value(v.rot)},{format_value(v.trans)})"
