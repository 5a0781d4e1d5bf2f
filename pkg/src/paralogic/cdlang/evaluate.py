"""Evaluation of CD-logic expressions under a finite valuation."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping, Optional

from .._io import read_json, with_path
from ..errors import CapacityError, EvaluationError, ValidationError
from ..pbit import ALL, PBit, apply_binary, apply_unary, is_designated, join, meet
from .parser import parse_definition
from .syntax import (
    CONSTANT_NAMES,
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
    is_term_name,
    to_text,
)

MAX_ATOMS = 12


@dataclass(frozen=True)
class Valuation:
    """Assignment of p-bits to atoms, unary predicates and the ``<`` relation.

    With ``open_world`` set, anything unassigned reads as ``N``; otherwise a
    missing entry is an error.
    """

    domain: tuple = ()
    atoms: Mapping[str, PBit] = field(default_factory=dict)
    preds: Mapping[str, Mapping[str, PBit]] = field(default_factory=dict)
    less: Mapping[tuple, PBit] = field(default_factory=dict)
    open_world: bool = False
    definitions: Mapping[str, Definition] = field(default_factory=dict)

    def with_atoms(self, values: Mapping[str, PBit]) -> "Valuation":
        merged = dict(self.atoms)
        merged.update(values)
        return Valuation(self.domain, merged, self.preds, self.less, self.open_world, self.definitions)


def valuation_from_json(data: Mapping) -> Valuation:
    """Build a valuation from the JSON layout::

        {"domain": [...], "atoms": {"A": "B"}, "preds": {"Psi": {"a": "T"}},
         "less": {"a,b": "T"}, "open_world": false, "definitions": ["..."]}
    """
    domain = tuple(data.get("domain", ()))
    atom_values = {k: PBit.parse(v) for k, v in data.get("atoms", {}).items()}
    preds = {
        name: {ind: PBit.parse(v) for ind, v in table.items()}
        for name, table in data.get("preds", {}).items()
    }
    less = {}
    for key, v in data.get("less", {}).items():
        parts = [s.strip() for s in key.split(",")]
        if len(parts) != 2:
            raise ValidationError(f"order key {key!r} is not of the form 'a,b'")
        less[tuple(parts)] = PBit.parse(v)
    definitions = {}
    for text in data.get("definitions", ()):
        d = parse_definition(text, free=domain)
        definitions[d.name] = d
    return Valuation(domain, atom_values, preds, less, bool(data.get("open_world", False)), definitions)


def load_valuation(path) -> Valuation:
    return with_path(path, valuation_from_json, read_json(path))


class _Evaluator:
    def __init__(self, v: Valuation, definitions, literal: bool):
        self.v = v
        self.defs = dict(v.definitions)
        if definitions:
            self.defs.update(definitions)
        self.literal = literal
        self.domain = set(v.domain)

    def missing(self, what: str) -> PBit:
        if self.v.open_world:
            return PBit.N
        raise EvaluationError(f"valuation has no value for {what}")

    def term(self, name: str, env: Mapping[str, str]) -> str:
        if name in env:
            return env[name]
        if name in self.domain:
            return name
        raise EvaluationError(f"unknown individual or unbound variable {name!r}")

    def run(self, e: Expr, env: Mapping[str, str], alias: Mapping[str, str]) -> PBit:
        if isinstance(e, Const):
            return e.value
        if isinstance(e, Atom):
            try:
                return self.v.atoms[e.name]
            except KeyError:
                if e.name in CONSTANT_NAMES:
                    return PBit[e.name]
                return self.missing(f"atom {e.name!r}")
        if isinstance(e, Unary):
            return apply_unary(e.op, self.run(e.arg, env, alias), self.literal)
        if isinstance(e, Binary):
            left = self.run(e.left, env, alias)
            right = self.run(e.right, env, alias)
            return apply_binary(e.op, left, right, self.literal)
        if isinstance(e, Quant):
            if not self.v.domain:
                raise EvaluationError(f"quantifier '{e.kind} {e.var}' needs a declared domain")
            combine = meet if e.kind == "all" else join
            acc = None
            for ind in self.v.domain:
                val = self.run(e.body, {**env, e.var: ind}, alias)
                acc = val if acc is None else combine(acc, val)
            return acc
        if isinstance(e, Comparison):
            key = (self.term(e.left, env), self.term(e.right, env))
            try:
                return self.v.less[key]
            except KeyError:
                return self.missing(f"order pair {key[0]} < {key[1]}")
        if isinstance(e, PredApp):
            name = alias.get(e.name, e.name)
            if name in self.defs:
                return self.expand(self.defs[name], e, env, alias)
            if len(e.args) != 1:
                raise EvaluationError(f"predicate {name!r} is unary but got {len(e.args)} arguments")
            ind = self.term(e.args[0], env)
            table = self.v.preds.get(name)
            if table is None or ind not in table:
                return self.missing(f"{name}({ind})")
            return table[ind]
        raise TypeError(f"not an expression: {e!r}")

    def expand(self, d: Definition, call: PredApp, env, alias) -> PBit:
        if len(d.params) != len(call.args):
            raise EvaluationError(
                f"{d.name} takes {len(d.params)} arguments, got {len(call.args)}"
            )
        inner_env, inner_alias = {}, dict(alias)
        for param, arg in zip(d.params, call.args):
            if is_term_name(param):
                inner_env[param] = self.term(arg, env)
            else:
                inner_alias[param] = alias.get(arg, arg)
        return self.run(d.body, inner_env, inner_alias)


def evaluate(
    e: Expr,
    v: Valuation,
    env: Optional[Mapping[str, str]] = None,
    definitions: Optional[Mapping[str, Definition]] = None,
    literal: bool = False,
) -> PBit:
    """Evaluate ``e`` compositionally; ``all`` is a meet and ``ex`` a join over the domain.

    ``env`` binds free term variables to domain individuals.
    """
    return _Evaluator(v, definitions, literal).run(e, dict(env or {}), {})


@dataclass(frozen=True)
class Derivability:
    derivable: bool
    witness: Optional[dict] = None

    def __bool__(self) -> bool:
        return self.derivable


def is_derivable(
    e: Expr,
    base: Optional[Valuation] = None,
    max_atoms: int = MAX_ATOMS,
    literal: bool = False,
) -> Derivability:
    """Check that ``e`` is designated under all ``4**k`` assignments to its atoms.

    Predicates, order atoms and the domain come from ``base``; the letters
    ``T F B N`` are constants here unless ``base`` assigns them. The first
    failing assignment (in ``T, F, B, N`` order per atom) is the witness.
    """
    base = base or Valuation()
    names = [a for a in atoms(e) if a not in CONSTANT_NAMES or a in base.atoms]
    if len(names) > max_atoms:
        raise CapacityError(
            f"{len(names)} atoms exceed the derivability limit of {max_atoms}"
        )
    ev = _Evaluator(base, None, literal)
    for combo in itertools.product(ALL, repeat=len(names)):
        values = dict(zip(names, combo))
        ev.v = base.with_atoms(values)
        if not is_designated(ev.run(e, {}, {})):
            return Derivability(False, values)
    return Derivability(True, None)


__all__ = [
    "Valuation",
    "valuation_from_json",
    "load_valuation",
    "evaluate",
    "is_derivable",
    "Derivability",
    "to_text",
]
