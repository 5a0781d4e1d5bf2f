"""Four-valued p-bits: CD logic over the two-element Boolean base.

A p-bit is a pair of bits ``(pos, neg)``: is there positive evidence, is
there negative evidence.

=====  ========  =============================
name   pair      reading
=====  ========  =============================
``T``  ``(1,0)`` true only
``F``  ``(0,1)`` false only
``B``  ``(1,1)`` both true and false (unit I)
``N``  ``(0,0)`` neither (unit ``-``)
=====  ========  =============================

Every connective is a 4x4 (or 4-entry) lookup table built once from the
pair algebra in :mod:`paralogic.heyting`.
"""
from __future__ import annotations

import enum
import re
from typing import NamedTuple

from .errors import ValidationError
from .heyting import BOOLEAN, PairAlgebra


class PBit(enum.IntEnum):
    N = 0
    F = 1
    T = 2
    B = 3

    @property
    def pos(self) -> int:
        return self.value >> 1

    @property
    def neg(self) -> int:
        return self.value & 1

    @property
    def pair(self) -> tuple[int, int]:
        return (self.pos, self.neg)

    @classmethod
    def from_bits(cls, pos: int, neg: int) -> "PBit":
        if pos not in (0, 1) or neg not in (0, 1):
            raise ValidationError(f"p-bit components must be 0 or 1, got ({pos},{neg})")
        return cls(2 * pos + neg)

    @classmethod
    def parse(cls, text) -> "PBit":
        """Accept ``"T"``/``"F"``/``"B"``/``"N"`` or a pair such as ``"(1,0)"``."""
        if isinstance(text, PBit):
            return text
        if isinstance(text, (list, tuple)) and len(text) == 2:
            return cls.from_bits(int(text[0]), int(text[1]))
        if not isinstance(text, str):
            raise ValidationError(f"cannot read a p-bit from {text!r}")
        s = text.strip()
        if s in cls.__members__:
            return cls[s]
        m = re.fullmatch(r"\(\s*([01])\s*,\s*([01])\s*\)", s)
        if m:
            return cls.from_bits(int(m.group(1)), int(m.group(2)))
        raise ValidationError(f"cannot read a p-bit from {text!r}")

    def __str__(self) -> str:
        return self.name


T, F, B, N = PBit.T, PBit.F, PBit.B, PBit.N
ALL = (T, F, B, N)

UNARY_OPS = ("neg", "demi", "bang", "gamma", "weak_bang", "weak_gamma")
BINARY_OPS = ("meet", "join", "arrow", "strong_imp", "tensor", "par")


def _build_tables(literal: bool):
    alg = PairAlgebra(BOOLEAN, literal=literal)
    unary = {
        op: tuple(PBit.from_bits(*getattr(alg, op)(a.pair)) for a in sorted(ALL))
        for op in UNARY_OPS
    }
    binary = {
        op: tuple(
            tuple(PBit.from_bits(*getattr(alg, op)(a.pair, b.pair)) for b in sorted(ALL))
            for a in sorted(ALL)
        )
        for op in BINARY_OPS
    }
    return unary, binary


_TABLES = {False: _build_tables(False), True: _build_tables(True)}


def apply_unary(op: str, a: PBit, literal: bool = False) -> PBit:
    try:
        table = _TABLES[literal][0][op]
    except KeyError:
        raise ValidationError(f"unknown unary operator {op!r}") from None
    return table[a]


def apply_binary(op: str, a: PBit, b: PBit, literal: bool = False) -> PBit:
    """Apply a binary connective.

    ``literal=True`` uses the implication whose falsity coordinate is
    ``x' & y'`` instead of the twist form ``x & y'``; it breaks the tensor
    unit law and is kept only for comparison.
    """
    try:
        table = _TABLES[literal][1][op]
    except KeyError:
        raise ValidationError(f"unknown binary operator {op!r}") from None
    return table[a][b]


def unary_table(op: str, literal: bool = False) -> dict:
    return {a: apply_unary(op, a, literal) for a in ALL}


def binary_table(op: str, literal: bool = False) -> dict:
    return {(a, b): apply_binary(op, a, b, literal) for a in ALL for b in ALL}


def neg(a):
    return apply_unary("neg", a)


def demi(a):
    return apply_unary("demi", a)


def bang(a):
    return apply_unary("bang", a)


def gamma(a):
    return apply_unary("gamma", a)


def weak_bang(a):
    return apply_unary("weak_bang", a)


def weak_gamma(a):
    return apply_unary("weak_gamma", a)


def meet(a, b):
    return apply_binary("meet", a, b)


def join(a, b):
    return apply_binary("join", a, b)


def arrow(a, b):
    return apply_binary("arrow", a, b)


def strong_imp(a, b):
    return apply_binary("strong_imp", a, b)


def tensor(a, b):
    return apply_binary("tensor", a, b)


def par(a, b):
    return apply_binary("par", a, b)


def knowledge_leq(a: PBit, b: PBit) -> bool:
    """Belnap knowledge order: N at the bottom, B at the top."""
    return a.pos <= b.pos and a.neg <= b.neg


def truth_leq(a: PBit, b: PBit) -> bool:
    """Belnap truth order: F at the bottom, T at the top."""
    return a.pos <= b.pos and a.neg >= b.neg


def is_designated(a: PBit) -> bool:
    return a.pos == 1


class KcPoint(NamedTuple):
    x: int
    y: int


_TO_KC = {T: KcPoint(1, 0), N: KcPoint(0, 1), B: KcPoint(-1, 0), F: KcPoint(0, -1)}
_FROM_KC = {p: a for a, p in _TO_KC.items()}


def to_kc(a: PBit) -> KcPoint:
    """Planar representation where demi-negation is a quarter turn."""
    return _TO_KC[PBit(a)]


def from_kc(p) -> PBit:
    try:
        return _FROM_KC[KcPoint(*p)]
    except (KeyError, TypeError):
        raise ValidationError(f"{tuple(p)!r} is not one of the four KC points") from None


class TraceStatus(NamedTuple):
    positive_nonempty: bool
    negative_nonempty: bool


def trace_status(a: PBit) -> TraceStatus:
    return TraceStatus(bool(a.pos), bool(a.neg))


def from_trace_status(t: TraceStatus) -> PBit:
    return PBit.from_bits(int(t.positive_nonempty), int(t.negative_nonempty))
