"""Paraconsistent probability distributions and intension degrees.

A ppd is a pair of ordinary distributions over the same outcomes, one for
positive and one for negative evidence. Entropy and relative entropy split
into a positive part plus a negative part. All quantities are in bits and
sums run left to right over the stored outcome order.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from ._io import read_json, with_path
from .errors import SupportError, ValidationError

DEFAULT_EPSILON = 1e-9
_TOL = 1e-9


def _as_distribution(values, name: str) -> np.ndarray:
    p = np.asarray(values, dtype=float)
    if p.ndim != 1 or p.size == 0:
        raise ValidationError(f"{name} must be a nonempty vector")
    if not np.all(np.isfinite(p)) or (p < 0).any():
        raise ValidationError(f"{name} has negative or non-finite entries")
    if abs(p.sum() - 1.0) > _TOL:
        raise ValidationError(f"{name} sums to {p.sum()!r}, not 1")
    return p


@dataclass(frozen=True, eq=False)
class Ppd:
    outcomes: tuple
    pos: np.ndarray
    neg: np.ndarray

    def __post_init__(self):
        outcomes = tuple(self.outcomes)
        if len(set(outcomes)) != len(outcomes):
            raise ValidationError("outcome ids must be distinct")
        pos = _as_distribution(self.pos, "pos")
        neg = _as_distribution(self.neg, "neg")
        if not (len(outcomes) == pos.size == neg.size):
            raise ValidationError("pos, neg and outcomes must have the same length")
        object.__setattr__(self, "outcomes", outcomes)
        object.__setattr__(self, "pos", pos)
        object.__setattr__(self, "neg", neg)

    def relabel(self, order: Sequence[int]) -> "Ppd":
        idx = list(order)
        return Ppd(tuple(self.outcomes[i] for i in idx), self.pos[idx], self.neg[idx])


def ppd_from_json(data: Mapping) -> Ppd:
    try:
        return Ppd(tuple(data["outcomes"]), data["pos"], data["neg"])
    except KeyError as exc:
        raise ValidationError(f"ppd is missing key {exc}") from None


def load_ppd(path) -> Ppd:
    return with_path(path, ppd_from_json, read_json(path))


def shannon_bits(p: np.ndarray) -> float:
    total = 0.0
    for x in p:
        if x > 0:
            total -= x * np.log2(x)
    return float(total)


def kl_bits(p: np.ndarray, q: np.ndarray) -> float:
    total = 0.0
    for x, y in zip(p, q):
        if x > 0:
            total += x * np.log2(x / y)
    return float(total)


def entropy(p: Ppd) -> float:
    return shannon_bits(p.pos) + shannon_bits(p.neg)


def _smooth(q: np.ndarray, epsilon: float) -> np.ndarray:
    if epsilon == 0:
        return q
    q = q + epsilon
    return q / q.sum()


def _check_support(p, q, outcomes, component):
    for o, x, y in zip(outcomes, p, q):
        if x > 0 and y <= 0:
            raise SupportError(
                f"{component}: target gives outcome {o!r} zero probability "
                "(use epsilon > 0 to smooth)"
            )


def relative_entropy(a: Ppd, b: Ppd, epsilon: float = 0.0) -> float:
    """``KL(a+ || b+) + KL(a- || b-)`` in bits, after epsilon-smoothing ``b``."""
    if epsilon < 0:
        raise ValidationError(f"epsilon must be nonnegative, got {epsilon}")
    if a.outcomes != b.outcomes:
        raise ValidationError("relative entropy needs the same outcome sequence on both sides")
    qp, qn = _smooth(b.pos, epsilon), _smooth(b.neg, epsilon)
    _check_support(a.pos, qp, a.outcomes, "pos")
    _check_support(a.neg, qn, a.outcomes, "neg")
    return kl_bits(a.pos, qp) + kl_bits(a.neg, qn)


@dataclass(frozen=True)
class InstanceEvidence:
    """Per-instance ``(w+, w-)`` evidence weights."""

    weights: Mapping[str, tuple]

    def __post_init__(self):
        clean = {}
        for k, pair in self.weights.items():
            if len(pair) != 2:
                raise ValidationError(f"instance {k!r} needs a (w+, w-) pair")
            wp, wn = float(pair[0]), float(pair[1])
            if not (np.isfinite(wp) and np.isfinite(wn)) or wp < 0 or wn < 0:
                raise ValidationError(f"instance {k!r} has a negative or non-finite weight")
            clean[k] = (wp, wn)
        object.__setattr__(self, "weights", clean)

    @property
    def instances(self) -> tuple:
        return tuple(self.weights)


def evidence_from_json(data: Mapping) -> InstanceEvidence:
    """``{"instances": {"moby": [1.0, 0.0], ...}}``."""
    if "instances" not in data:
        raise ValidationError("instance evidence is missing key 'instances'")
    return InstanceEvidence(dict(data["instances"]))


def load_evidence(path) -> InstanceEvidence:
    return with_path(path, evidence_from_json, read_json(path))


def intension_degree(
    x: InstanceEvidence, c: InstanceEvidence, epsilon: float = DEFAULT_EPSILON
) -> float:
    """Relative entropy of ``x``'s evidence against the context ``c``, in bits.

    Each component's weights are normalised over the context's instances
    (``x`` is zero outside its own); only the context side is smoothed. A
    component in which ``x`` has no evidence at all carries no information
    and adds nothing.
    """
    if epsilon < 0:
        raise ValidationError(f"epsilon must be nonnegative, got {epsilon}")
    if not x.instances:
        raise ValidationError("no instances given")
    unknown = [k for k in x.instances if k not in c.weights]
    if unknown:
        raise ValidationError(f"instances {unknown} are not in the context")
    order = c.instances
    xw = np.array([x.weights.get(k, (0.0, 0.0)) for k in order], dtype=float)
    cw = np.array([c.weights[k] for k in order], dtype=float)
    if xw.sum() == 0:
        raise ValidationError("x carries no evidence in either component")

    total = 0.0
    for j, name in ((0, "pos"), (1, "neg")):
        num = xw[:, j]
        if num.sum() == 0:
            continue
        num = num / num.sum()
        den = cw[:, j]
        if den.sum() > 0:
            den = den / den.sum()
        elif epsilon > 0:
            # smoothing an all-zero vector leaves the uniform distribution
            den = np.full(den.size, 1.0 / den.size)
        else:
            raise ValidationError(f"context {name} weights are all zero")
        den = _smooth(den, epsilon)
        _check_support(num, den, order, name)
        total += kl_bits(num, den)
    return total
