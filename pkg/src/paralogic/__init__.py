"""Paraconsistent logic toolkit: p-bits, a CD expression language,
probabilized evidence, sorites boundaries, paraconsistent distributions and
formal concept analysis."""
from . import cdlang, fca, heyting, pbit, ppd, probabilize, sorites
from .errors import (
    CapacityError,
    EvaluationError,
    ParalogicError,
    ParseError,
    SupportError,
    ValidationError,
)
from .pbit import PBit

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "EvaluationError",
    "PBit",
    "ParalogicError",
    "ParseError",
    "SupportError",
    "ValidationError",
    "cdlang",
    "fca",
    "heyting",
    "pbit",
    "ppd",
    "probabilize",
    "sorites",
]
