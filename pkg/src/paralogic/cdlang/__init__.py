"""CD-logic propositions: syntax, parsing, evaluation and derivability."""
from .evaluate import (
    Derivability,
    Valuation,
    evaluate,
    is_derivable,
    load_valuation,
    valuation_from_json,
)
from .parser import parse, parse_definition, tokenize
from .syntax import (
    Atom,
    Binary,
    Comparison,
    Const,
    Definition,
    Expr,
    PredApp,
    Quant,
    Unary,
    atoms,
    substitute,
    to_text,
)

__all__ = [
    "Atom", "Binary", "Comparison", "Const", "Definition", "Expr", "PredApp",
    "Quant", "Unary", "Valuation", "Derivability", "atoms", "evaluate",
    "is_derivable", "load_valuation", "parse", "parse_definition",
    "substitute", "to_text", "tokenize", "valuation_from_json",
]
