"""Scalar field backends.

Two backends ship: exact rationals (the default) and IEEE doubles, the
latter only needed for the real one-parameter subgroup ``phi(t)``.

Rationals are :class:`fractions.Fraction` instances, which already keep the
canonical form (positive denominator, reduced, zero as ``0/1``).  Matrix code
uses the ordinary Python operators on scalars; the backend object supplies
everything the operators cannot: coercion, equality policy, inversion with
our error types, text and JSON forms.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import DivisionByZero, ParseError, RangeError, ZeroDenominator

Rational = Fraction

#: Relative tolerance used by the float backend's approximate equality.
FLOAT_RTOL = 1e-12

_RATIONAL_RE = re.compile(r"-?[0-9]+(?:/[0-9]+)?")
_DECIMAL_RE = re.compile(r"-?[0-9]+(?:\.[0-9]+)?(?:[eE][+-]?[0-9]+)?")


def rational_normalize(num: int, den: int) -> Fraction:
    """Return the canonical rational ``num/den``."""
    if den == 0:
        raise ZeroDenominator(f"{num}/{den}")
    return Fraction(int(num), int(den))


def is_canonical(q: Fraction) -> bool:
    return q.denominator > 0 and math.gcd(q.numerator, q.denominator) == 1


def _first_mismatch(text: str, pattern: re.Pattern) -> int:
    """Byte offset of the first character that stops ``pattern`` matching."""
    m = pattern.match(text)
    end = m.end() if m else 0
    if m is None and text.startswith("-"):
        end = 1
    return len(text[:end].encode("utf-8"))


class ScalarBackend:
    """Field operations that differ between the shipped backends."""

    name: str = ""
    #: Shipped backends never have characteristic two; ``1 + 1 != 0`` is relied on.
    characteristic_two = False
    ordered = True
    zero: object
    one: object

    def coerce(self, x):
        raise NotImplementedError

    def eq(self, a, b) -> bool:
        raise NotImplementedError

    def is_zero(self, x) -> bool:
        return self.eq(x, self.zero)

    def check(self, x):
        """Validate a scalar produced by arithmetic; returns it unchanged."""
        return x

    def add(self, a, b):
        return self.check(a + b)

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return self.check(a * b)

    def invert(self, x):
        if self.is_zero(x):
            raise DivisionByZero("inverse of zero")
        return self.check(self.one / x)

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, x) -> str:
        raise NotImplementedError

    def to_json(self, x):
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"<{self.name} backend>"


class RationalBackend(ScalarBackend):
    name = "rational"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, bool):
            raise TypeError("booleans are not scalars")
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return self.parse(x)
        raise TypeError(f"cannot use {type(x).__name__} as an exact rational")

    def eq(self, a, b) -> bool:
        return a == b

    def is_zero(self, x) -> bool:
        return x == 0

    def parse(self, text: str) -> Fraction:
        if _RATIONAL_RE.fullmatch(text) is None:
            raise ParseError(f"malformed rational {text!r}", _first_mismatch(text, _RATIONAL_RE),
                             ("digit",))
        num, _, den = text.partition("/")
        return rational_normalize(int(num), int(den) if den else 1)

    def format(self, x) -> str:
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"

    def to_json(self, x):
        return self.format(x)


class FloatBackend(ScalarBackend):
    name = "float"
    zero = 0.0
    one = 1.0

    def coerce(self, x):
        if isinstance(x, bool):
            raise TypeError("booleans are not scalars")
        if isinstance(x, (int, float, Fraction)):
            return self.check(float(x))
        if isinstance(x, str):
            return self.parse(x)
        raise TypeError(f"cannot use {type(x).__name__} as a float scalar")

    def check(self, x):
        if not math.isfinite(x):
            raise RangeError(f"non-finite float {x!r}")
        return x

    def eq(self, a, b) -> bool:
        return abs(a - b) <= FLOAT_RTOL * max(1.0, abs(a), abs(b))

    def invert(self, x):
        if x == 0.0:
            raise DivisionByZero("inverse of zero")
        return self.check(1.0 / x)

    def parse(self, text: str) -> float:
        if _DECIMAL_RE.fullmatch(text) is None:
            raise ParseError(f"malformed decimal {text!r}", _first_mismatch(text, _DECIMAL_RE),
                             ("digit",))
        return self.check(float(text))

    def format(self, x) -> str:
        return repr(float(x))

    def to_json(self, x):
        return float(x)


RATIONAL = RationalBackend()
FLOAT = FloatBackend()
BACKENDS = {b.name: b for b in (RATIONAL, FLOAT)}


def get_backend(name: str) -> ScalarBackend:
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown backend {name!r}; choose from {sorted(BACKENDS)}") from None


def backend_of(*values) -> ScalarBackend:
    """Float if any value is a float, rational otherwise."""
    return FLOAT if any(isinstance(v, float) for v in values) else RATIONAL


def field_invert(x):
    """Multiplicative inverse in whichever backend ``x`` belongs to."""
    return backend_of(x).invert(x)


def scalar_parse(text: str, backend: ScalarBackend = RATIONAL):
    return backend.parse(text)


def scalar_format(x) -> str:
    return backend_of(x).format(x)
