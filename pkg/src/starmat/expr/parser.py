"""Recursive-descent parser producing a small AST.

Grammar (all binary operators left-associative)::

    expr   := term (('+' | '-') term)*
    term   := unary (('@' | '*') unary)*
    unary  := '-' unary | atom
    atom   := matrix | '(' expr ')' | '(' expr ',' expr ')' | scalar | call | ident
    matrix := '[' row (';' row)* ']'        row := signed (',' signed)*
    signed := ['-'] scalar                 scalar := integer ['/' integer] | decimal
    call   := name '(' expr (',' expr)* ')'

Grouping is kept in the tree: ``@`` is not associative for n >= 3.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ParseError
from .lexer import Token, tokenize

BUILTIN_ARITY = {
    "sinv": 1, "spow": 2, "zdiv": 1, "hsplit0": 1, "hsplit1": 1, "had": 2,
    "hn_h": 1, "hn_n": 1, "conj": 2, "alpha": 1, "alphapre": 1, "beta": 1,
    "betainv": 1, "gamma": 1, "psi": 1, "psiinv": 1, "phimap": 1, "rot": 2,
    "b": 2, "mcompose": 2, "mapply": 2, "minv": 1, "embed": 1, "rho": 1,
    "motion": 2, "phi": 1, "ispos": 1, "isinv": 1,
}

Span = tuple[int, int]


@dataclass(frozen=True)
class ScalarLit:
    text: str  # "3", "-1/2", "2.5"; sign only inside matrix rows
    decimal: bool
    span: Span


@dataclass(frozen=True)
class MatrixLit:
    rows: tuple[tuple[ScalarLit, ...], ...]
    span: Span


@dataclass(frozen=True)
class VectorLit:
    e1: object
    e2: object
    span: Span


@dataclass(frozen=True)
class Ident:
    name: str
    span: Span


@dataclass(frozen=True)
class BinaryOp:
    op: str  # star | mul | add | sub
    left: object
    right: object
    span: Span


@dataclass(frozen=True)
class Neg:
    operand: object
    span: Span


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple
    span: Span


_BINOPS = {"+": "add", "-": "sub", "@": "star", "*": "mul"}


class Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def at_symbol(self, lexeme: str) -> bool:
        return self.tok.kind == "symbol" and self.tok.lexeme == lexeme

    def fail(self, expected, message: str | None = None):
        t = self.tok
        found = "end of input" if t.kind == "eof" else repr(t.lexeme)
        raise ParseError(message or f"unexpected {found}", t.offset, frozenset(expected))

    def expect_symbol(self, lexeme: str) -> Token:
        if not self.at_symbol(lexeme):
            self.fail({lexeme})
        return self.advance()

    def parse(self):
        node = self.expr()
        if self.tok.kind != "eof":
            self.fail({"+", "-", "@", "*", "end of input"})
        return node

    def expr(self):
        node = self.term()
        while self.tok.kind == "symbol" and self.tok.lexeme in "+-":
            op = _BINOPS[self.advance().lexeme]
            right = self.term()
            node = BinaryOp(op, node, right, (node.span[0], right.span[1]))
        return node

    def term(self):
        node = self.unary()
        while self.tok.kind == "symbol" and self.tok.lexeme in "@*":
            op = _BINOPS[self.advance().lexeme]
            right = self.unary()
            node = BinaryOp(op, node, right, (node.span[0], right.span[1]))
        return node

    def unary(self):
        if self.at_symbol("-"):
            start = self.advance().offset
            operand = self.unary()
            return Neg(operand, (start, operand.span[1]))
        return self.atom()

    def atom(self):
        t = self.tok
        if t.kind in ("integer", "decimal"):
            return self.scalar()
        if t.kind == "identifier":
            self.advance()
            if self.at_symbol("("):
                return self.call(t)
            return Ident(t.lexeme, (t.offset, t.end))
        if self.at_symbol("["):
            return self.matrix()
        if self.at_symbol("("):
            start = self.advance().offset
            first = self.expr()
            if self.at_symbol(","):
                self.advance()
                second = self.expr()
                end = self.expect_symbol(")").end
                return VectorLit(first, second, (start, end))
            self.expect_symbol(")")
            return first
        self.fail({"integer", "decimal", "identifier", "[", "(", "-"})

    def scalar(self, sign: Token | None = None) -> ScalarLit:
        t = self.tok
        start = sign.offset if sign else t.offset
        prefix = "-" if sign else ""
        if t.kind == "decimal":
            self.advance()
            return ScalarLit(prefix + t.lexeme, True, (start, t.end))
        if t.kind != "integer":
            self.fail({"integer", "decimal"})
        self.advance()
        if self.tok.kind == "slash":
            self.advance()
            den = self.tok
            if den.kind != "integer":
                self.fail({"integer"})
            self.advance()
            return ScalarLit(f"{prefix}{t.lexeme}/{den.lexeme}", False, (start, den.end))
        return ScalarLit(prefix + t.lexeme, False, (start, t.end))

    def signed_scalar(self) -> ScalarLit:
        sign = self.advance() if self.at_symbol("-") else None
        return self.scalar(sign)

    def matrix(self) -> MatrixLit:
        start = self.advance().offset
        rows = []
        while True:
            row = [self.signed_scalar()]
            while self.at_symbol(","):
                self.advance()
                row.append(self.signed_scalar())
            if rows and len(row) != len(rows[0]):
                raise ParseError(f"ragged matrix: row {len(rows) + 1} has {len(row)} entries, "
                                 f"expected {len(rows[0])}", row[0].span[0],
                                 frozenset({"rows of equal length"}))
            rows.append(tuple(row))
            if self.at_symbol(";"):
                self.advance()
                continue
            if self.at_symbol("]"):
                end = self.advance().end
                break
            self.fail({",", ";", "]"})
        if len(rows) != len(rows[0]):
            raise ParseError(f"matrix must be square, got {len(rows)}x{len(rows[0])}", start,
                             frozenset({"square matrix"}))
        return MatrixLit(tuple(rows), (start, end))

    def call(self, name: Token) -> Call:
        if name.lexeme not in BUILTIN_ARITY:
            raise ParseError(f"unknown function {name.lexeme!r}", name.offset,
                             frozenset(BUILTIN_ARITY))
        self.advance()  # '('
        args = [self.expr()]
        while self.at_symbol(","):
            self.advance()
            args.append(self.expr())
        end = self.expect_symbol(")").end
        arity = BUILTIN_ARITY[name.lexeme]
        if len(args) != arity:
            raise ParseError(f"{name.lexeme} takes {arity} argument(s), got {len(args)}",
                             name.offset, frozenset({f"{arity} argument(s)"}))
        return Call(name.lexeme, tuple(args), (name.offset, end))


def parse(source) -> object:
    """Parse a token list (or raw text) into an AST."""
    tokens = tokenize(source) if isinstance(source, str) else list(source)
    return Parser(tokens).parse()
