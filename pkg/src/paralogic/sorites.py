"""Paraconsistent concept boundaries for ordered series.

A :class:`SeriesModel` gives a predicate ``Psi`` (e.g. *high-up*) a p-bit on
each individual of an ordered domain. ``z`` is a cutoff of ``Psi`` when
``Psi`` fails at ``z`` but holds everywhere below ``z``; on a glutty
boundary several individuals can be cutoffs at once and "there is a
cutoff" comes out both true and false.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .cdlang import Valuation, evaluate, parse, parse_definition
from ._io import read_json, with_path
from .errors import ValidationError
from .pbit import PBit, join, neg

CUTOFF_BODY = "~Psi(z) & all y. (y < z -> Psi(y))"
CUTOFF_DEFINITION = parse_definition("cutoff(Psi, z) := " + CUTOFF_BODY)
_CUTOFF_EXPR = parse(CUTOFF_BODY, free=("z",))

LABELS = {"high": PBit.T, "not_high": PBit.F, "cutoff": PBit.B}


@dataclass(frozen=True)
class SeriesModel:
    domain: tuple
    psi: Mapping[str, PBit]
    less: Mapping[tuple, PBit]

    def valuation(self) -> Valuation:
        """Total valuation: unlisted order pairs read as ``F``."""
        less = {(a, b): PBit.F for a in self.domain for b in self.domain}
        less.update(self.less)
        return Valuation(
            domain=self.domain,
            preds={"Psi": dict(self.psi)},
            less=less,
            definitions={"cutoff": CUTOFF_DEFINITION},
        )


def make_model(
    domain: Sequence[str],
    psi: Mapping[str, object],
    less_true: Iterable[Sequence[str]] = (),
    less: Mapping[tuple, object] | None = None,
    transitive: bool = True,
) -> SeriesModel:
    """Build a series model.

    ``less_true`` lists pairs with ``a < b`` true; with ``transitive`` their
    transitive closure is added. ``less`` sets explicit values and wins over
    both.
    """
    domain = tuple(domain)
    known = set(domain)
    if len(known) != len(domain):
        raise ValidationError("domain contains duplicate individuals")
    missing = [d for d in domain if d not in psi]
    if missing:
        raise ValidationError(f"psi has no value for {missing}")
    extra = set(psi) - known
    if extra:
        raise ValidationError(f"psi mentions individuals outside the domain: {sorted(extra)}")
    pairs = set()
    for pair in less_true:
        a, b = pair
        if a not in known or b not in known:
            raise ValidationError(f"order pair {tuple(pair)!r} mentions an unknown individual")
        pairs.add((a, b))
    if transitive:
        changed = True
        while changed:
            changed = False
            for a, b in list(pairs):
                for c, d in list(pairs):
                    if b == c and (a, d) not in pairs:
                        pairs.add((a, d))
                        changed = True
    table = {p: PBit.T for p in pairs}
    for key, v in (less or {}).items():
        if key[0] not in known or key[1] not in known:
            raise ValidationError(f"order pair {key!r} mentions an unknown individual")
        table[tuple(key)] = PBit.parse(v)
    return SeriesModel(domain, {k: PBit.parse(v) for k, v in psi.items()}, table)


def model_from_json(data: Mapping) -> SeriesModel:
    """``{"domain": [...], "psi": {...}, "less_true": [[a, b], ...], "transitive": true}``.

    An optional ``"less": [[a, b, "F"], ...]`` sets explicit order values.
    """
    try:
        explicit = {(a, b): v for a, b, v in data.get("less", [])}
        return make_model(
            data["domain"],
            data["psi"],
            data.get("less_true", []),
            explicit,
            bool(data.get("transitive", True)),
        )
    except KeyError as exc:
        raise ValidationError(f"model is missing key {exc}") from None


def load_model(path) -> SeriesModel:
    return with_path(path, model_from_json, read_json(path))


def cutoff_value(m: SeriesModel, z: str) -> PBit:
    if z not in m.domain:
        raise ValidationError(f"unknown individual {z!r}")
    return evaluate(_CUTOFF_EXPR, m.valuation(), env={"z": z})


@dataclass(frozen=True)
class ExistentialCutoff:
    P: PBit  # there is a cutoff
    N: PBit  # there is no cutoff


def existential_cutoff(m: SeriesModel) -> ExistentialCutoff:
    if not m.domain:
        raise ValidationError("the series is empty")
    p = None
    for z in m.domain:
        v = cutoff_value(m, z)
        p = v if p is None else join(p, v)
    return ExistentialCutoff(p, neg(p))


@dataclass(frozen=True)
class SituationClassification:
    label: str
    weight: float = 1.0

    def __post_init__(self):
        if self.label not in LABELS:
            raise ValidationError(
                f"unknown label {self.label!r}; expected one of {sorted(LABELS)}"
            )
        if not self.weight > 0:
            raise ValidationError(f"weights must be positive, got {self.weight}")


def fuzzy_boundary(classifications: Iterable[SituationClassification]) -> tuple[float, float]:
    """Average per-situation classifications of one value into ``(s+, s-)``.

    ``high`` is positive evidence, ``not_high`` negative, ``cutoff`` both.
    The weight fractions are normalised by total evidence so the result sums
    to one; its first component reads as a fuzzy membership degree.
    """
    items = list(classifications)
    if not items:
        raise ValidationError("no classifications given")
    total = pos = negw = 0.0
    for c in items:
        bit = LABELS[c.label]
        total += c.weight
        pos += c.weight * bit.pos
        negw += c.weight * bit.neg
    w_pos, w_neg = pos / total, negw / total
    evidence = w_pos + w_neg
    return (w_pos / evidence, w_neg / evidence)


def cases_from_json(data: Mapping) -> tuple[str, list[SituationClassification]]:
    """``{"z": "31C", "cases": [{"label": "cutoff", "weight": 1}, ...]}``."""
    try:
        cases = [
            SituationClassification(c["label"], float(c.get("weight", 1.0)))
            for c in data["cases"]
        ]
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed classification file: {exc}") from None
    return str(data.get("z", "")), cases


def load_cases(path):
    return with_path(path, cases_from_json, read_json(path))
