"""JSON wire format for values, factorizations and check reports.

Rationals travel as strings (``"-3/7"``) and floats as JSON numbers.  Output
is compact (no whitespace) so golden files compare byte for byte.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction

from .errors import DecodeError, StarmatError
from .group import HNFactorization
from .hyperbolic import HypRotation, Motion, Vec2
from .matrix import Matrix
from .report import CheckReport
from .scalars import FLOAT, RATIONAL, backend_of


def encode_scalar(x):
    if isinstance(x, float):
        return FLOAT.to_json(x)
    return RATIONAL.to_json(Fraction(x))


def encode_matrix(m: Matrix) -> dict:
    return {"type": "matrix", "n": m.n,
            "entries": [[encode_scalar(x) for x in row] for row in m.rows]}


def encode_rotation(r: HypRotation) -> dict:
    return {"c": encode_scalar(r.c), "s": encode_scalar(r.s)}


def encode_vector(v: Vec2) -> list:
    return [encode_scalar(v.e1), encode_scalar(v.e2)]


def encode_value(v):
    """Map a library value onto plain JSON data."""
    if isinstance(v, bool):
        return v
    if isinstance(v, (Fraction, float, int)):
        return encode_scalar(v)
    if isinstance(v, Matrix):
        return encode_matrix(v)
    if isinstance(v, Vec2):
        return encode_vector(v)
    if isinstance(v, HypRotation):
        return encode_rotation(v)
    if isinstance(v, Motion):
        return {"rot": encode_rotation(v.rot), "u": encode_vector(v.trans)}
    if isinstance(v, HNFactorization):
        return {"h": encode_matrix(v.h), "n": encode_matrix(v.n_part)}
    if isinstance(v, CheckReport):
        return encode_report(v)
    raise TypeError(f"cannot encode {type(v).__name__}")


def encode_report(r: CheckReport) -> dict:
    return {
        "property": r.property,
        "backend": r.backend,
        "mode": r.mode,
        "trials": r.trials,
        "seed": r.seed,
        "passed": r.passed,
        "failures": r.failures,
        "elapsed_ms": round(r.elapsed_ms, 3),
    }


def dumps(v) -> str:
    return json.dumps(encode_value(v), separators=(",", ":"), ensure_ascii=False)


def decode_scalar(obj, path: str = "$"):
    if isinstance(obj, str):
        try:
            return RATIONAL.parse(obj)
        except StarmatError as exc:
            raise DecodeError(f"bad rational {obj!r} ({exc.kind})", path) from None
    if isinstance(obj, (int, float)) and not isinstance(obj, bool):
        if not math.isfinite(obj):
            raise DecodeError("non-finite number", path)
        return float(obj)
    raise DecodeError(f"expected a scalar, got {type(obj).__name__}", path)


def decode_matrix(obj, path: str = "$") -> Matrix:
    if not isinstance(obj, dict) or obj.get("type") != "matrix":
        raise DecodeError('expected {"type": "matrix", ...}', path)
    if set(obj) != {"type", "n", "entries"}:
        raise DecodeError(f"unexpected keys {sorted(set(obj) - {'type', 'n', 'entries'})}", path)
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DecodeError("n must be a positive integer", f"{path}.n")
    rows = obj["entries"]
    if not isinstance(rows, list) or len(rows) != n:
        raise DecodeError(f"expected {n} rows", f"{path}.entries")
    out = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise DecodeError(f"expected {n} entries", f"{path}.entries[{i}]")
        out.append([decode_scalar(x, f"{path}.entries[{i}][{j}]") for j, x in enumerate(row)])
    return Matrix(out, backend_of(*(x for r in out for x in r)))


def _decode_vector(obj, path: str) -> Vec2:
    if not isinstance(obj, list) or len(obj) != 2:
        raise DecodeError("expected a two-element vector", path)
    return Vec2(decode_scalar(obj[0], f"{path}[0]"), decode_scalar(obj[1], f"{path}[1]"))


def _decode_rotation(obj, path: str) -> HypRotation:
    if not isinstance(obj, dict) or set(obj) != {"c", "s"}:
        raise DecodeError('expected {"c": ..., "s": ...}', path)
    c, s = decode_scalar(obj["c"], f"{path}.c"), decode_scalar(obj["s"], f"{path}.s")
    try:
        return HypRotation(c, s)
    except StarmatError as exc:
        raise DecodeError(exc.message, path) from None


def decode_value(obj, path: str = "$"):
    """Inverse of :func:`encode_value`, dispatching on the JSON shape."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, (str, int, float)):
        return decode_scalar(obj, path)
    if isinstance(obj, list):
        return _decode_vector(obj, path)
    if isinstance(obj, dict):
        keys = set(obj)
        if obj.get("type") == "matrix":
            return decode_matrix(obj, path)
        if keys == {"c", "s"}:
            return _decode_rotation(obj, path)
        if keys == {"rot", "u"}:
            return Motion(_decode_rotation(obj["rot"], f"{path}.rot"),
                          _decode_vector(obj["u"], f"{path}.u"))
        if keys == {"h", "n"}:
            return HNFactorization(decode_matrix(obj["h"], f"{path}.h"),
                                   decode_matrix(obj["n"], f"{path}.n"))
        if "property" in keys:
            return decode_report(obj, path)
    raise DecodeError("unrecognised value shape", path)


def decode_report(obj, path: str = "$") -> CheckReport:
    want = {"property", "backend", "mode", "trials", "seed", "passed", "failures", "elapsed_ms"}
    if not isinstance(obj, dict) or set(obj) != want:
        raise DecodeError(f"check report needs keys {sorted(want)}", path)
    if not isinstance(obj["failures"], list):
        raise DecodeError("failures must be a list", f"{path}.failures")
    report = CheckReport(obj["property"], obj["backend"], obj["trials"], obj["seed"],
                         obj["mode"], obj["failures"], obj["elapsed_ms"])
    if report.passed != obj["passed"]:
        raise DecodeError("passed flag disagrees with failures", f"{path}.passed")
    return report


def loads(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DecodeError(f"invalid JSON: {exc.msg}", "$") from None
    return decode_value(obj)
