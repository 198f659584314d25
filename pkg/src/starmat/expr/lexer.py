"""Tokenizer for the matrix expression language.

Offsets are byte positions into the UTF-8 encoding of the input.
"""

from __future__ import annotations

import re
from typing import NamedTuple

from ..errors import LexError

SYMBOLS = frozenset("+-@*()[],;=")

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<decimal>[0-9]+\.[0-9]+(?:[eE][+-]?[0-9]+)?|[0-9]+[eE][+-]?[0-9]+)"
    r"|(?P<integer>[0-9]+)"
    r"|(?P<identifier>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<slash>/)"
    r"|(?P<symbol>[-+@*()\[\],;=])"
)


class Token(NamedTuple):
    kind: str  # integer | slash | decimal | identifier | symbol | eof
    lexeme: str
    offset: int

    @property
    def end(self) -> int:
        return self.offset + len(self.lexeme.encode("utf-8"))


def tokenize(text: str) -> list[Token]:
    """Split ``text`` into tokens, ending with an ``eof`` token."""
    tokens = []
    pos = 0
    byte = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise LexError(f"unexpected character {text[pos]!r}", byte)
        lexeme = m.group()
        if m.lastgroup != "ws":
            tokens.append(Token(m.lastgroup, lexeme, byte))
        byte += len(lexeme.encode("utf-8"))
        pos = m.end()
    tokens.append(Token("eof", "", byte))
    return tokens
