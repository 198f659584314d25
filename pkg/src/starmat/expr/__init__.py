from .evaluator import BUILTINS, Evaluator, evaluate, format_value, value_kind
from .lexer import Token, tokenize
from .parser import (BUILTIN_ARITY, BinaryOp, Call, Ident, MatrixLit, Neg, ScalarLit, VectorLit,
                     parse)

__all__ = [
    "BUILTINS", "BUILTIN_ARITY", "BinaryOp", "Call", "Evaluator", "Ident", "MatrixLit", "Neg",
    "ScalarLit", "Token", "VectorLit", "evaluate", "format_value", "parse", "tokenize",
    "value_kind",
]
