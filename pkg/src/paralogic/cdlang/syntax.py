"""AST node types and the canonical printer."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from ..pbit import PBit

UNARY_SYMBOLS = {
    "neg": "~",
    "demi": "%",
    "bang": "!",
    "gamma": "?",
    "weak_bang": "!-",
    "weak_gamma": "?-",
}
BINARY_SYMBOLS = {
    "strong_imp": "=>",
    "arrow": "->",
    "join": "|",
    "par": "(+)",
    "meet": "&",
    "tensor": "(*)",
}
QUANTIFIERS = ("all", "ex")


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Const:
    value: PBit


@dataclass(frozen=True)
class PredApp:
    """``name(arg, ...)``; lowercase args are terms, capitalised args name predicates."""

    name: str
    args: tuple[str, ...]


@dataclass(frozen=True)
class Comparison:
    """The order atom ``left < right``."""

    left: str
    right: str


@dataclass(frozen=True)
class Unary:
    op: str
    arg: "Expr"


@dataclass(frozen=True)
class Binary:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Quant:
    kind: str
    var: str
    body: "Expr"


Expr = Union[Atom, Const, PredApp, Comparison, Unary, Binary, Quant]


@dataclass(frozen=True)
class Definition:
    """A named macro such as ``cutoff(P, z) := ~P(z) & all y. (y < z -> P(y))``."""

    name: str
    params: tuple[str, ...]
    body: Expr


CONSTANT_NAMES = frozenset(PBit.__members__)


def is_term_name(name: str) -> bool:
    return name[:1].islower() or name[:1] == "_"


def to_text(e: Expr) -> str:
    """Print ``e`` so that parsing the result gives back ``e``."""
    if isinstance(e, Atom):
        return e.name
    if isinstance(e, Const):
        return "(%d,%d)" % e.value.pair
    if isinstance(e, PredApp):
        return f"{e.name}({', '.join(e.args)})"
    if isinstance(e, Comparison):
        return f"{e.left} < {e.right}"
    if isinstance(e, Unary):
        inner = to_text(e.arg)
        if isinstance(e.arg, Comparison):
            inner = f"({inner})"
        return UNARY_SYMBOLS[e.op] + inner
    if isinstance(e, Binary):
        return f"({to_text(e.left)} {BINARY_SYMBOLS[e.op]} {to_text(e.right)})"
    if isinstance(e, Quant):
        return f"({e.kind} {e.var}. {to_text(e.body)})"
    raise TypeError(f"not an expression: {e!r}")


def walk(e: Expr) -> Iterator[Expr]:
    yield e
    if isinstance(e, Unary):
        yield from walk(e.arg)
    elif isinstance(e, Binary):
        yield from walk(e.left)
        yield from walk(e.right)
    elif isinstance(e, Quant):
        yield from walk(e.body)


def atoms(e: Expr) -> list[str]:
    """Distinct propositional atom names in order of first occurrence."""
    seen: dict[str, None] = {}
    for node in walk(e):
        if isinstance(node, Atom):
            seen.setdefault(node.name)
    return list(seen)


def is_quantifier_free(e: Expr) -> bool:
    return not any(isinstance(n, Quant) for n in walk(e))


def substitute(e: Expr, target: Expr, replacement: Expr) -> Expr:
    """Replace every occurrence of the subtree ``target``."""
    if e == target:
        return replacement
    if isinstance(e, Unary):
        return Unary(e.op, substitute(e.arg, target, replacement))
    if isinstance(e, Binary):
        return Binary(
            e.op, substitute(e.left, target, replacement), substitute(e.right, target, replacement)
        )
    if isinstance(e, Quant):
        return Quant(e.kind, e.var, substitute(e.body, target, replacement))
    return e
