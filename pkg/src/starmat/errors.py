"""Exception hierarchy shared by every layer of the library.

Domain errors may carry a ``span`` (byte offsets into an expression) once
they pass through the evaluator.
"""

from __future__ import annotations


class StarmatError(Exception):
    """Base class for all library errors."""

    kind = "Error"

    def __init__(self, message: str = "", span: tuple[int, int] | None = None):
        super().__init__(message)
        self.message = message
        self.span = span

    def __str__(self) -> str:
        text = f"{self.kind}: {self.message}" if self.message else self.kind
        if self.span is not None:
            text += f" (at bytes {self.span[0]}..{self.span[1]})"
        return text


class ZeroDenominator(StarmatError, ZeroDivisionError):
    kind = "ZeroDenominator"


class DivisionByZero(StarmatError, ZeroDivisionError):
    kind = "DivisionByZero"


class DimensionError(StarmatError, ValueError):
    kind = "DimensionError"


class NotInvertible(StarmatError, ValueError):
    kind = "NotInvertible"


class InvalidArgument(StarmatError, ValueError):
    kind = "InvalidArgument"


class PreconditionError(InvalidArgument):
    kind = "PreconditionError"


class DegenerateInput(InvalidArgument):
    kind = "DegenerateInput"


class RangeError(StarmatError, OverflowError):
    kind = "RangeError"


class Unsupported(StarmatError):
    kind = "Unsupported"


class LexError(StarmatError):
    kind = "LexError"

    def __init__(self, message: str, offset: int):
        super().__init__(message, (offset, offset + 1))
        self.offset = offset


class ParseError(StarmatError):
    kind = "ParseError"

    def __init__(self, message: str, offset: int, expected: frozenset[str] | tuple = ()):
        super().__init__(message, (offset, offset))
        self.offset = offset
        self.expected = tuple(sorted(expected))

    def __str__(self) -> str:
        text = f"{self.kind} at byte {self.offset}: {self.message}"
        if self.expected:
            text += f" (expected one of: {' '.join(self.expected)})"
        return text


class EvalTypeError(StarmatError, TypeError):
    kind = "TypeError"


class UnboundIdentifier(StarmatError, NameError):
    kind = "UnboundIdentifier"


class DecodeError(StarmatError):
    kind = "DecodeError"

    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{message} at {path}")
        self.path = path
