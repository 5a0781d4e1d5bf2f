"""Probabilizing p-bit evidence over ensembles of situations.

A situation assigns a p-bit to every atom. Evaluating a proposition in each
situation and counting positive bits (``T`` or ``B``) and negative bits
(``F`` or ``B``) gives evidence counts; dividing by the ensemble size gives
the paraconsistent truth value, and the counts themselves are the PLN
``(n+, n-)`` form.

Subsampling uses numpy's ``Generator(PCG64(seed))``: one ``random()`` draw
per situation, in order, and the situation is kept when the draw is
``>= drop_rate``. Golden tests depend on that exact stream.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from .cdlang import Valuation, evaluate, parse
from ._io import read_json, with_path
from .errors import EvaluationError, ValidationError
from .pbit import ALL, PBit


@dataclass(frozen=True)
class SituationEnsemble:
    atoms: tuple
    situations: tuple  # of dicts atom -> PBit

    def __len__(self) -> int:
        return len(self.situations)

    def __add__(self, other: "SituationEnsemble") -> "SituationEnsemble":
        if tuple(self.atoms) != tuple(other.atoms):
            raise ValidationError("cannot join ensembles over different atoms")
        return SituationEnsemble(self.atoms, self.situations + other.situations)

    def to_json(self) -> dict:
        return {
            "atoms": list(self.atoms),
            "situations": [{a: row[a].name for a in self.atoms} for row in self.situations],
        }


def make_ensemble(atoms: Sequence[str], rows: Sequence[Mapping], open_world: bool = False) -> SituationEnsemble:
    """Validate rows against the atom vocabulary and convert values to p-bits."""
    atoms = tuple(atoms)
    vocab = set(atoms)
    situations = []
    for i, row in enumerate(rows):
        extra = set(row) - vocab
        if extra:
            raise ValidationError(f"situation {i} mentions undeclared atoms {sorted(extra)}")
        values = {}
        for a in atoms:
            if a in row:
                values[a] = PBit.parse(row[a])
            elif open_world:
                values[a] = PBit.N
            else:
                raise ValidationError(f"situation {i} has no value for atom {a!r}")
        situations.append(values)
    return SituationEnsemble(atoms, tuple(situations))


def ensemble_from_json(data: Mapping) -> SituationEnsemble:
    try:
        return make_ensemble(data["atoms"], data["situations"], bool(data.get("open_world", False)))
    except KeyError as exc:
        raise ValidationError(f"ensemble is missing key {exc}") from None


def load_ensemble(path) -> SituationEnsemble:
    return with_path(path, ensemble_from_json, read_json(path))


@dataclass(frozen=True)
class ParaTv:
    """Evidence fractions ``(n+/N, n-/N)``, kept exact so ``N * t_para == t_pln``."""

    w_pos: Fraction
    w_neg: Fraction


@dataclass(frozen=True)
class EvidenceCounts:
    n_pos: int
    n_neg: int
    n_total: int

    def __add__(self, other: "EvidenceCounts") -> "EvidenceCounts":
        return EvidenceCounts(
            self.n_pos + other.n_pos, self.n_neg + other.n_neg, self.n_total + other.n_total
        )

    @property
    def t_para(self) -> ParaTv:
        return ParaTv(Fraction(self.n_pos, self.n_total), Fraction(self.n_neg, self.n_total))

    @property
    def t_pln(self) -> tuple[int, int]:
        return (self.n_pos, self.n_neg)


@dataclass(frozen=True)
class Stv:
    s: float
    n: float


def aggregate(ens: SituationEnsemble, prop) -> EvidenceCounts:
    """Count positive and negative evidence for ``prop`` across ``ens``.

    ``B`` counts on both sides, ``N`` on neither.
    """
    if not len(ens):
        raise ValidationError("cannot aggregate over an empty ensemble")
    if isinstance(prop, str):
        prop = parse(prop)
    n_pos = n_neg = 0
    for i, row in enumerate(ens.situations):
        try:
            value = evaluate(prop, Valuation(atoms=row))
        except EvaluationError as exc:
            raise EvaluationError(f"situation {i}: {exc}") from exc
        n_pos += value.pos
        n_neg += value.neg
    return EvidenceCounts(n_pos, n_neg, len(ens))


def to_stv(c: EvidenceCounts) -> Stv:
    n = c.n_pos + c.n_neg
    if n == 0:
        raise ValidationError("strength is undefined without any evidence")
    return Stv(c.n_pos / n, n)


def confidence(n: float, k: float) -> float:
    """PLN confidence ``n / (n + k)`` for personality parameter ``k``."""
    if k <= 0:
        raise ValidationError(f"personality parameter k must be positive, got {k}")
    if n < 0:
        raise ValidationError(f"evidence count must be nonnegative, got {n}")
    return n / (n + k)


def conj_independent(a: Stv, b: Stv, universe: float) -> Stv:
    """Conjunction of STVs from independent evidence in a universe of size ``universe``."""
    if universe < 1:
        raise ValidationError(f"universe size must be at least 1, got {universe}")
    for tv in (a, b):
        if tv.n > universe:
            raise ValidationError(f"evidence count {tv.n} exceeds universe size {universe}")
        if not 0.0 <= tv.s <= 1.0:
            raise ValidationError(f"strength {tv.s} outside [0, 1]")
    return Stv(a.s * b.s, a.n + b.n - a.n * b.n / universe)


def subsample(ens: SituationEnsemble, drop_rate: float, seed: int) -> SituationEnsemble:
    """Keep each situation independently with probability ``1 - drop_rate``."""
    if not 0.0 <= drop_rate <= 1.0:
        raise ValidationError(f"drop rate must lie in [0, 1], got {drop_rate}")
    rng = np.random.Generator(np.random.PCG64(seed))
    draws = rng.random(len(ens))
    kept = tuple(row for row, u in zip(ens.situations, draws) if u >= drop_rate)
    return SituationEnsemble(ens.atoms, kept)


@dataclass(frozen=True)
class DependencyStats:
    mi_pbit: float
    mi_pos: float
    mi_neg: float


def _entropy_bits(p: np.ndarray) -> float:
    p = p[p > 0]
    return float(-(p * np.log2(p)).sum())


def _mutual_information(joint: np.ndarray) -> float:
    mi = (
        _entropy_bits(joint.sum(axis=1))
        + _entropy_bits(joint.sum(axis=0))
        - _entropy_bits(joint.ravel())
    )
    return max(mi, 0.0)


def joint_matrix(joint) -> np.ndarray:
    """Normalise a joint given as a mapping ``(a, b) -> mass`` or a 4x4 array.

    Array rows and columns follow ``PBit`` value order ``N, F, T, B``.
    """
    if isinstance(joint, Mapping):
        m = np.zeros((4, 4))
        for key, mass in joint.items():
            if isinstance(key, str):
                key = [s.strip() for s in key.split(",")]
            a, b = (PBit.parse(k) for k in key)
            m[a, b] += float(mass)
    else:
        m = np.asarray(joint, dtype=float)
        if m.shape != (4, 4):
            raise ValidationError(f"joint table must be 4x4, got shape {m.shape}")
    if not np.all(np.isfinite(m)) or (m < 0).any():
        raise ValidationError("joint table entries must be finite and nonnegative")
    if abs(m.sum() - 1.0) > 1e-9:
        raise ValidationError(f"joint table sums to {m.sum()!r}, not 1")
    return m


def dependency_stats(joint) -> DependencyStats:
    """Mutual information (bits) between two p-bits and between their component bits."""
    m = joint_matrix(joint)
    pos = np.zeros((2, 2))
    neg = np.zeros((2, 2))
    for a in ALL:
        for b in ALL:
            pos[a.pos, b.pos] += m[a, b]
            neg[a.neg, b.neg] += m[a, b]
    return DependencyStats(_mutual_information(m), _mutual_information(pos), _mutual_information(neg))


def load_joint(path) -> np.ndarray:
    """Read ``{"joint": {"T,T": 0.125, ...}}``; unlisted pairs have mass 0."""
    def build(data):
        if "joint" not in data:
            raise ValidationError("missing key 'joint'")
        return joint_matrix(data["joint"])

    return with_path(path, build, read_json(path))
