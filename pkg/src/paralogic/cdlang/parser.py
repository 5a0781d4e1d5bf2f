"""Lexer and precedence-climbing parser for the ASCII CD-logic syntax.

Precedence, loosest first::

    =>  ->          right associative
    |   (+)         left associative
    &   (*)         left associative
    ~ % ! ? !- ?-   prefix
    atoms, constants, Psi(x), x < y, ( ... ), all x. e, ex x. e

A quantifier body extends as far to the right as possible. The letters
``T F B N`` parse as atoms that read as the matching constant unless a
valuation assigns them; a pair literal such as ``(1,1)`` is always a
constant.
"""
from __future__ import annotations

import re
from typing import Iterable, NamedTuple

from ..errors import ParseError
from ..pbit import PBit
from .syntax import (
    BINARY_SYMBOLS,
    QUANTIFIERS,
    UNARY_SYMBOLS,
    Atom,
    Binary,
    Comparison,
    Const,
    Definition,
    Expr,
    PredApp,
    Quant,
    Unary,
    is_term_name,
)

_SYMBOLS = sorted(
    set(UNARY_SYMBOLS.values()) | set(BINARY_SYMBOLS.values()) | {"(", ")", ",", ".", "<", ":="},
    key=len,
    reverse=True,
)
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")
_PAIR = re.compile(r"\(\s*([01])\s*,\s*([01])\s*\)")

_BY_SYMBOL_UNARY = {v: k for k, v in UNARY_SYMBOLS.items()}
_BY_SYMBOL_BINARY = {v: k for k, v in BINARY_SYMBOLS.items()}
_LEVELS = (("=>", "->"), ("|", "(+)"), ("&", "(*)"))


class Token(NamedTuple):
    kind: str  # "ident", "const", "sym" or "eof"
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    i, line, col = 0, 1, 1
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            i, line, col = i + 1, line + 1, 1
            continue
        if ch.isspace():
            i, col = i + 1, col + 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        m = _PAIR.match(text, i)
        if m:
            tokens.append(Token("const", f"({m.group(1)},{m.group(2)})", line, col))
            col += m.end() - i
            i = m.end()
            continue
        m = _IDENT.match(text, i)
        if m:
            tokens.append(Token("ident", m.group(), line, col))
            col += m.end() - i
            i = m.end()
            continue
        for sym in _SYMBOLS:
            if text.startswith(sym, i):
                tokens.append(Token("sym", sym, line, col))
                i += len(sym)
                col += len(sym)
                break
        else:
            raise ParseError(
                f"unexpected character {ch!r}", line, col, ["identifier", "constant", *_SYMBOLS]
            )
    tokens.append(Token("eof", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, expected: Iterable[str]):
        tok = self.tok
        what = "end of input" if tok.kind == "eof" else f"token {tok.text!r}"
        raise ParseError(f"unexpected {what}", tok.line, tok.column, expected)

    def expect(self, text: str) -> Token:
        if self.tok.kind == "sym" and self.tok.text == text:
            return self.advance()
        self.fail([text])

    def ident(self, what: str = "identifier") -> str:
        tok = self.tok
        if tok.kind != "ident" or tok.text in QUANTIFIERS or tok.text in PBit.__members__:
            self.fail([what])
        self.advance()
        return tok.text

    def expr(self, level: int = 0) -> Expr:
        if level == len(_LEVELS):
            return self.unary()
        ops = _LEVELS[level]
        left = self.expr(level + 1)
        if level == 0:
            if self.tok.kind == "sym" and self.tok.text in ops:
                op = _BY_SYMBOL_BINARY[self.advance().text]
                return Binary(op, left, self.expr(0))
            return left
        while self.tok.kind == "sym" and self.tok.text in ops:
            op = _BY_SYMBOL_BINARY[self.advance().text]
            left = Binary(op, left, self.expr(level + 1))
        return left

    _STARTS = ("~", "%", "!", "?", "!-", "?-", "(", "all", "ex", "constant", "identifier")

    def unary(self) -> Expr:
        tok = self.tok
        if tok.kind == "sym" and tok.text in _BY_SYMBOL_UNARY:
            self.advance()
            return Unary(_BY_SYMBOL_UNARY[tok.text], self.unary())
        if tok.kind == "ident" and tok.text in QUANTIFIERS:
            self.advance()
            var = self.ident("variable")
            if not is_term_name(var):
                raise ParseError(
                    f"quantified variable {var!r} must start with a lowercase letter",
                    tok.line,
                    tok.column,
                )
            self.expect(".")
            return Quant(tok.text, var, self.expr(0))
        return self.primary()

    def primary(self) -> Expr:
        tok = self.tok
        if tok.kind == "sym" and tok.text == "(":
            self.advance()
            inner = self.expr(0)
            self.expect(")")
            return inner
        if tok.kind == "const":
            self.advance()
            return Const(PBit.parse(tok.text))
        if tok.kind != "ident" or tok.text in QUANTIFIERS:
            self.fail(self._STARTS)
        self.advance()
        nxt = self.tok
        if nxt.kind == "sym" and nxt.text == "(":
            self.advance()
            args = [self.ident("argument")]
            while self.tok.kind == "sym" and self.tok.text == ",":
                self.advance()
                args.append(self.ident("argument"))
            self.expect(")")
            return PredApp(tok.text, tuple(args))
        if nxt.kind == "sym" and nxt.text == "<":
            self.advance()
            return Comparison(tok.text, self.ident("term"))
        return Atom(tok.text)

    def end(self):
        if self.tok.kind != "eof":
            self.fail(["end of input", "=>", "->", "|", "(+)", "&", "(*)"])


def _check_bound(e: Expr, bound: frozenset):
    def term(name):
        if is_term_name(name) and name not in bound:
            raise ParseError(f"unbound variable {name!r}", 1, 1)

    if isinstance(e, PredApp):
        for a in e.args:
            term(a)
    elif isinstance(e, Comparison):
        term(e.left)
        term(e.right)
    elif isinstance(e, Unary):
        _check_bound(e.arg, bound)
    elif isinstance(e, Binary):
        _check_bound(e.left, bound)
        _check_bound(e.right, bound)
    elif isinstance(e, Quant):
        _check_bound(e.body, bound | {e.var})


def parse(text: str, free: Iterable[str] = ()) -> Expr:
    """Parse ``text`` into an AST.

    Every lowercase term in a predicate application or comparison must be
    bound by a quantifier or listed in ``free`` (domain individuals count as
    free names).
    """
    p = _Parser(text)
    e = p.expr(0)
    p.end()
    _check_bound(e, frozenset(free))
    return e


def parse_definition(text: str, free: Iterable[str] = ()) -> Definition:
    """Parse ``name(p1, p2, ...) := body``."""
    p = _Parser(text)
    name = p.ident("definition name")
    p.expect("(")
    params = [p.ident("parameter")]
    while p.tok.kind == "sym" and p.tok.text == ",":
        p.advance()
        params.append(p.ident("parameter"))
    p.expect(")")
    p.expect(":=")
    body = p.expr(0)
    p.end()
    _check_bound(body, frozenset(free) | {x for x in params if is_term_name(x)})
    return Definition(name, tuple(params), body)
