"""Formal concept analysis in crisp, paraconsistent and fuzzy paraconsistent modes.

Crisp mode is classical FCA. In para mode every incidence is a p-bit and an
object has a property when the incidence is designated (``T`` or ``B``), so
the lattice is that of the positive projection. ``literal=True`` on
:func:`derive_objects` instead keeps objects whose incidences are all
undesignated; that pair of operators is not a Galois connection and is there
for comparison only.

Fuzzy mode keeps a positive and a negative grade per incidence on the chain
``{0, 1/g, ..., 1}``. Derivations run independently on each component
(positive extents against positive incidences, negative against negative),
so a fuzzy concept is a pair of component concepts. Degrees are
:class:`fractions.Fraction`.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Sequence

import numpy as np

from ._io import read_json, with_path
from .errors import CapacityError, ValidationError
from .pbit import PBit

MODES = ("crisp", "para", "fuzzy")
IMPLICATIONS = ("godel", "lukasiewicz")
MAX_BRUTE_OBJECTS = 20
MAX_BRUTE_STATES = 1 << 20
MAX_CONCEPTS = 200_000


@dataclass(frozen=True)
class FormalContext:
    """Objects x properties incidence table.

    ``incidence`` maps ``(object, property)`` to a bool (crisp), a
    :class:`PBit` (para) or a pair of grade indices ``(i+, i-)`` in
    ``0..grades`` (fuzzy). Missing entries are 0 / ``N`` / ``(0, 0)``.
    """

    objects: tuple
    properties: tuple
    incidence: Mapping[tuple, object]
    mode: str = "para"
    grades: int = 4
    implication: str = "godel"
    _rows: tuple = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValidationError(f"unknown mode {self.mode!r}; expected one of {MODES}")
        if self.implication not in IMPLICATIONS:
            raise ValidationError(f"unknown fuzzy implication {self.implication!r}")
        if self.grades < 1:
            raise ValidationError("the grade chain needs at least two grades")
        for seq, what in ((self.objects, "object"), (self.properties, "property")):
            if len(set(seq)) != len(seq):
                raise ValidationError(f"duplicate {what} ids")
        objs, props = set(self.objects), set(self.properties)
        for (o, p) in self.incidence:
            if o not in objs or p not in props:
                raise ValidationError(f"incidence ({o!r}, {p!r}) mentions an unknown id")
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(self, "properties", tuple(self.properties))
        object.__setattr__(self, "_rows", self._build_rows())

    def _build_rows(self):
        if self.mode == "fuzzy":
            pos = [[self.value(o, p)[0] for p in self.properties] for o in self.objects]
            neg = [[self.value(o, p)[1] for p in self.properties] for o in self.objects]
            return (pos, neg)
        masks = []
        for o in self.objects:
            m = 0
            for j, p in enumerate(self.properties):
                if self.has(o, p):
                    m |= 1 << j
            masks.append(m)
        return tuple(masks)

    def value(self, o, p):
        v = self.incidence.get((o, p))
        if self.mode == "crisp":
            return bool(v)
        if self.mode == "para":
            return PBit.N if v is None else v
        return (0, 0) if v is None else v

    def has(self, o, p) -> bool:
        """Positive (designated) incidence."""
        v = self.value(o, p)
        if self.mode == "crisp":
            return v
        if self.mode == "para":
            return v.pos == 1
        return v[0] == self.grades

    def grade(self, k: int) -> Fraction:
        return Fraction(k, self.grades)

    def positive_projection(self) -> "FormalContext":
        """Crisp context of designated incidences."""
        inc = {(o, p): True for o in self.objects for p in self.properties if self.has(o, p)}
        return FormalContext(self.objects, self.properties, inc, "crisp")


def _parse_grade(x, g: int, where) -> int:
    try:
        f = float(x)
    except (TypeError, ValueError):
        raise ValidationError(f"{where}: degree {x!r} is not a number") from None
    k = round(f * g)
    if not 0 <= k <= g or abs(k - f * g) > 1e-9:
        raise ValidationError(f"{where}: degree {x!r} is not on the grade chain with g={g}")
    return k


def make_context(
    objects: Sequence,
    properties: Sequence,
    entries: Iterable[Sequence],
    mode: str = "para",
    grades: int = 4,
    implication: str = "godel",
) -> FormalContext:
    """Build a context from JSON-style entries.

    crisp ``[o, p]`` or ``[o, p, 0/1/true/false/"T"/"F"]``; para
    ``[o, p, "B"]``; fuzzy ``[o, p, i+, i-]`` with degrees on the chain.
    """
    inc = {}
    for entry in entries:
        entry = list(entry)
        if len(entry) < 2:
            raise ValidationError(f"incidence entry {entry!r} is too short")
        key = (entry[0], entry[1])
        if mode == "crisp":
            v = entry[2] if len(entry) > 2 else True
            if isinstance(v, str):
                v = PBit.parse(v).pos == 1
            inc[key] = bool(v)
        elif mode == "para":
            if len(entry) != 3:
                raise ValidationError(f"para entry {entry!r} needs [object, property, value]")
            inc[key] = PBit.parse(entry[2])
        elif mode == "fuzzy":
            if len(entry) != 4:
                raise ValidationError(f"fuzzy entry {entry!r} needs [object, property, i+, i-]")
            inc[key] = (_parse_grade(entry[2], grades, key), _parse_grade(entry[3], grades, key))
        else:
            raise ValidationError(f"unknown mode {mode!r}")
    return FormalContext(tuple(objects), tuple(properties), inc, mode, grades, implication)


def context_from_json(data: Mapping) -> FormalContext:
    try:
        return make_context(
            data["objects"],
            data["properties"],
            data.get("incidence", []),
            data.get("mode", "para"),
            int(data.get("grades", 4)),
            data.get("implication", "godel"),
        )
    except KeyError as exc:
        raise ValidationError(f"context is missing key {exc}") from None


def load_context(path) -> FormalContext:
    return with_path(path, context_from_json, read_json(path))


# -- crisp / para derivations ------------------------------------------------


def _ids_to_mask(ids, universe: Sequence, what: str) -> int:
    pos = {x: i for i, x in enumerate(universe)}
    m = 0
    for x in ids:
        if x not in pos:
            raise ValidationError(f"unknown {what} {x!r}")
        m |= 1 << pos[x]
    return m


def _mask_to_ids(mask: int, universe: Sequence) -> frozenset:
    return frozenset(x for i, x in enumerate(universe) if mask >> i & 1)


def _up(rows: Sequence[int], ext: int, nprops: int) -> int:
    acc = (1 << nprops) - 1
    i = 0
    while ext:
        if ext & 1:
            acc &= rows[i]
        ext >>= 1
        i += 1
    return acc


def _down(rows: Sequence[int], intent: int) -> int:
    m = 0
    for i, r in enumerate(rows):
        if r & intent == intent:
            m |= 1 << i
    return m


def _down_literal(rows: Sequence[int], intent: int) -> int:
    m = 0
    for i, r in enumerate(rows):
        if r & intent == 0:
            m |= 1 << i
    return m


# -- fuzzy derivations -------------------------------------------------------


def _residuum(kind: str, g: int):
    if kind == "godel":
        return lambda a, b: g if a <= b else b
    return lambda a, b: min(g, g - a + b)


def _fuzzy_up(inc, ext, g, imp, nprops):
    out = [g] * nprops
    for o, a in enumerate(ext):
        if a == 0:
            continue  # 0 -> b is always g
        row = inc[o]
        for p in range(nprops):
            v = imp(a, row[p])
            if v < out[p]:
                out[p] = v
    return tuple(out)


def _fuzzy_down(inc, intent, g, imp):
    out = []
    for row in inc:
        acc = g
        for p, b in enumerate(intent):
            if b:
                v = imp(b, row[p])
                if v < acc:
                    acc = v
        out.append(acc)
    return tuple(out)


def _fuzzy_arg(ctx: FormalContext, degrees, universe, what):
    """Map/sequence of degree pairs -> (pos grades, neg grades)."""
    if isinstance(degrees, Mapping):
        unknown = [k for k in degrees if k not in universe]
        if unknown:
            raise ValidationError(f"unknown {what} ids {unknown}")
        seq = [degrees.get(x, (0, 0)) for x in universe]
    else:
        seq = list(degrees)
        if len(seq) != len(universe):
            raise ValidationError(f"expected {len(universe)} {what} degrees, got {len(seq)}")
    pos, neg = [], []
    for x, (a, b) in zip(universe, seq):
        pos.append(_parse_grade(a, ctx.grades, x))
        neg.append(_parse_grade(b, ctx.grades, x))
    return tuple(pos), tuple(neg)


def _fuzzy_pairs(ctx, pos, neg):
    return tuple((ctx.grade(a), ctx.grade(b)) for a, b in zip(pos, neg))


def derive_properties(ctx: FormalContext, extent):
    """Properties shared by ``extent``.

    crisp/para: ``extent`` is a collection of object ids, result a frozenset.
    fuzzy: ``extent`` maps objects to ``(deg+, deg-)`` (or is a sequence in
    object order); the result is a tuple of degree pairs in property order.
    """
    if ctx.mode == "fuzzy":
        pos, neg = _fuzzy_arg(ctx, extent, ctx.objects, "object")
        imp = _residuum(ctx.implication, ctx.grades)
        ipos, ineg = ctx._rows
        n = len(ctx.properties)
        return _fuzzy_pairs(
            ctx,
            _fuzzy_up(ipos, pos, ctx.grades, imp, n),
            _fuzzy_up(ineg, neg, ctx.grades, imp, n),
        )
    mask = _ids_to_mask(extent, ctx.objects, "object")
    return _mask_to_ids(_up(ctx._rows, mask, len(ctx.properties)), ctx.properties)


def derive_objects(ctx: FormalContext, intent, literal: bool = False):
    """Objects having every property in ``intent``; dual of :func:`derive_properties`."""
    if ctx.mode == "fuzzy":
        pos, neg = _fuzzy_arg(ctx, intent, ctx.properties, "property")
        imp = _residuum(ctx.implication, ctx.grades)
        ipos, ineg = ctx._rows
        return _fuzzy_pairs(
            ctx,
            _fuzzy_down(ipos, pos, ctx.grades, imp),
            _fuzzy_down(ineg, neg, ctx.grades, imp),
        )
    mask = _ids_to_mask(intent, ctx.properties, "property")
    if literal:
        if ctx.mode != "para":
            raise ValidationError("the literal operator is defined for para mode only")
        return _mask_to_ids(_down_literal(ctx._rows, mask), ctx.objects)
    return _mask_to_ids(_down(ctx._rows, mask), ctx.objects)


# -- concepts and lattices ---------------------------------------------------


@dataclass(frozen=True)
class Concept:
    """``extent``/``intent`` are frozensets (crisp, para) or tuples of degree pairs (fuzzy)."""

    extent: object
    intent: object


def _fuzzy_leq(a, b) -> bool:
    return all(x[0] <= y[0] and x[1] <= y[1] for x, y in zip(a, b))


def _fuzzy_min(a, b):
    return tuple((min(x[0], y[0]), min(x[1], y[1])) for x, y in zip(a, b))


@dataclass(frozen=True)
class ConceptLattice:
    concepts: tuple
    fuzzy: bool = False
    objects: tuple = ()
    properties: tuple = ()

    def __len__(self) -> int:
        return len(self.concepts)

    def __iter__(self):
        return iter(self.concepts)

    def leq(self, i: int, j: int) -> bool:
        a, b = self.concepts[i].extent, self.concepts[j].extent
        return _fuzzy_leq(a, b) if self.fuzzy else a <= b

    def covers(self) -> list[tuple[int, int]]:
        """Pairs ``(i, j)`` where concept ``j`` covers concept ``i``."""
        n = len(self.concepts)
        below = [[i != j and self.leq(i, j) for j in range(n)] for i in range(n)]
        out = []
        for i in range(n):
            for j in range(n):
                if below[i][j] and not any(below[i][k] and below[k][j] for k in range(n)):
                    out.append((i, j))
        return out

    def extents(self) -> set:
        return {c.extent for c in self.concepts}

    def intents(self) -> set:
        return {c.intent for c in self.concepts}


def _sort_key_crisp(universe):
    pos = {x: i for i, x in enumerate(universe)}
    return lambda c: tuple(sorted(pos[x] for x in c.extent))


def _closed_masks(rows, n_obj, n_prop, brute_force, limit):
    if brute_force:
        found = set()
        for ext in range(1 << n_obj):
            intent = _up(rows, ext, n_prop)
            if _down(rows, intent) == ext:
                found.add(ext)
        return found
    start = _down(rows, _up(rows, 0, n_prop))
    found = {start}
    queue = deque([start])
    while queue:
        ext = queue.popleft()
        for o in range(n_obj):
            if not ext >> o & 1:
                closed = _down(rows, _up(rows, ext | 1 << o, n_prop))
                if closed not in found:
                    found.add(closed)
                    if len(found) > limit:
                        raise CapacityError(f"more than {limit} concepts")
                    queue.append(closed)
    return found


def _closed_fuzzy(inc, n_obj, n_prop, g, imp, brute_force, limit):
    def close(ext):
        return _fuzzy_down(inc, _fuzzy_up(inc, ext, g, imp, n_prop), g, imp)

    if brute_force:
        found = set()
        for ext in itertools.product(range(g + 1), repeat=n_obj):
            if close(ext) == ext:
                found.add(ext)
        return found
    start = close((0,) * n_obj)
    found = {start}
    queue = deque([start])
    while queue:
        ext = queue.popleft()
        for o in range(n_obj):
            for a in range(ext[o] + 1, g + 1):
                grown = ext[:o] + (a,) + ext[o + 1 :]
                closed = close(grown)
                if closed not in found:
                    found.add(closed)
                    if len(found) > limit:
                        raise CapacityError(f"more than {limit} concepts")
                    queue.append(closed)
    return found


def enumerate_concepts(
    ctx: FormalContext, brute_force: bool = False, limit: int = MAX_CONCEPTS
) -> ConceptLattice:
    """All formal concepts, sorted by extent.

    The default search closes each concept's extent grown by one object (one
    grade step in fuzzy mode) until nothing new appears. ``brute_force``
    scans every extent instead and is capped in size.
    """
    n_obj, n_prop = len(ctx.objects), len(ctx.properties)
    if ctx.mode != "fuzzy":
        if brute_force and n_obj > MAX_BRUTE_OBJECTS:
            raise CapacityError(
                f"brute force is capped at {MAX_BRUTE_OBJECTS} objects, got {n_obj}; "
                "use brute_force=False"
            )
        masks = _closed_masks(ctx._rows, n_obj, n_prop, brute_force, limit)
        concepts = [
            Concept(
                _mask_to_ids(m, ctx.objects),
                _mask_to_ids(_up(ctx._rows, m, n_prop), ctx.properties),
            )
            for m in masks
        ]
        concepts.sort(key=_sort_key_crisp(ctx.objects))
        return ConceptLattice(tuple(concepts), False, ctx.objects, ctx.properties)

    g = ctx.grades
    if brute_force and (g + 1) ** n_obj > MAX_BRUTE_STATES:
        raise CapacityError(
            f"brute force would scan {(g + 1) ** n_obj} extents per component; "
            "use brute_force=False"
        )
    imp = _residuum(ctx.implication, g)
    ipos, ineg = ctx._rows
    pos_ext = _closed_fuzzy(ipos, n_obj, n_prop, g, imp, brute_force, limit)
    neg_ext = _closed_fuzzy(ineg, n_obj, n_prop, g, imp, brute_force, limit)
    if len(pos_ext) * len(neg_ext) > limit:
        raise CapacityError(f"more than {limit} concepts")
    concepts = []
    for ep in sorted(pos_ext):
        ip = _fuzzy_up(ipos, ep, g, imp, n_prop)
        for en in sorted(neg_ext):
            iN = _fuzzy_up(ineg, en, g, imp, n_prop)
            concepts.append(Concept(_fuzzy_pairs(ctx, ep, en), _fuzzy_pairs(ctx, ip, iN)))
    return ConceptLattice(tuple(concepts), True, ctx.objects, ctx.properties)


def positive_component(l: ConceptLattice) -> set:
    """Distinct ``(extent+, intent+)`` grade vectors of a fuzzy lattice."""
    return {
        (tuple(d[0] for d in c.extent), tuple(d[0] for d in c.intent)) for c in l.concepts
    }


def negative_component(l: ConceptLattice) -> set:
    return {
        (tuple(d[1] for d in c.extent), tuple(d[1] for d in c.intent)) for c in l.concepts
    }


class LatticeViolation(NamedTuple):
    kind: str
    witness: tuple
    detail: str = ""


def verify_lattice(l: ConceptLattice) -> list[LatticeViolation]:
    """Check that meets and joins of every pair are present.

    The meet's extent is the intersection of the two extents and the join's
    intent the intersection of the two intents (pointwise minimum in fuzzy
    mode); both must occur in ``l``. Also checks that the order is
    antisymmetric and that top and bottom exist.
    """
    out: list[LatticeViolation] = []
    cs = l.concepts
    if not cs:
        return [LatticeViolation("empty", (), "no concepts")]
    inter = _fuzzy_min if l.fuzzy else (lambda a, b: a & b)
    extents = {}
    intents = {}
    for i, c in enumerate(cs):
        if c.extent in extents:
            out.append(
                LatticeViolation("antisymmetry", (extents[c.extent], i), "duplicate extent")
            )
        extents.setdefault(c.extent, i)
        intents.setdefault(c.intent, i)
    for i, j in itertools.combinations(range(len(cs)), 2):
        if inter(cs[i].extent, cs[j].extent) not in extents:
            out.append(LatticeViolation("missing-meet", (i, j), "extent intersection absent"))
        if inter(cs[i].intent, cs[j].intent) not in intents:
            out.append(LatticeViolation("missing-join", (i, j), "intent intersection absent"))
    n = len(cs)
    if not any(all(l.leq(k, t) for k in range(n)) for t in range(n)):
        out.append(LatticeViolation("no-top", (), ""))
    if not any(all(l.leq(b, k) for k in range(n)) for b in range(n)):
        out.append(LatticeViolation("no-bottom", (), ""))
    return out


def _fmt_deg(x) -> str:
    return f"{float(x):g}"


def concept_label(l: ConceptLattice, c: Concept) -> str:
    if l.fuzzy:
        ext = ",".join(
            f"{o}:{_fmt_deg(a)}/{_fmt_deg(b)}" for o, (a, b) in zip(l.objects, c.extent) if a or b
        )
        itt = ",".join(
            f"{p}:{_fmt_deg(a)}/{_fmt_deg(b)}"
            for p, (a, b) in zip(l.properties, c.intent)
            if a or b
        )
        return f"{ext}|{itt}"
    ext = ",".join(o for o in l.objects if o in c.extent)
    itt = ",".join(p for p in l.properties if p in c.intent)
    return f"{ext}|{itt}"


def to_dot(l: ConceptLattice, name: str = "lattice") -> str:
    """DOT digraph: one node per concept, one edge per covering pair (lower -> upper)."""
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box];"]
    for i, c in enumerate(l.concepts):
        label = concept_label(l, c).replace("\\", "\\\\").replace('"', '\\"')
        lines.append(f'  c{i} [label="{label}"];')
    for i, j in l.covers():
        lines.append(f"  c{i} -> c{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- blending ----------------------------------------------------------------

BLEND_STRATEGIES = ("select_first", "select_second", "average", "sample")
_CD_VALUES = tuple(a.pair for a in (PBit.T, PBit.F, PBit.B, PBit.N))


def _pair(v, where) -> tuple[float, float]:
    if isinstance(v, str):
        return tuple(float(x) for x in PBit.parse(v).pair)
    try:
        a, b = v
        return (float(a), float(b))
    except (TypeError, ValueError):
        raise ValidationError(f"{where}: {v!r} is not a degree pair") from None


def blend(
    c1: Mapping[str, object],
    c2: Mapping[str, object],
    strategy: str,
    seed: int | None = None,
    weight: float = 0.5,
) -> dict[str, tuple[float, float]]:
    """Combine two property maps (property -> degree pair) into a blended map.

    ``average`` takes ``weight * c1 + (1 - weight) * c2``. ``sample`` gives a
    property that is ``(1,0)`` on one side and ``(0,1)`` on the other a
    uniformly drawn CD value; any other disagreement picks one side at
    random. Draws use ``Generator(PCG64(seed))`` in ``c1``'s key order.
    """
    if strategy not in BLEND_STRATEGIES:
        raise ValidationError(f"unknown strategy {strategy!r}; expected one of {BLEND_STRATEGIES}")
    if set(c1) != set(c2):
        diff = sorted(set(c1) ^ set(c2))
        raise ValidationError(f"property vocabularies differ on {diff}")
    a = {p: _pair(v, p) for p, v in c1.items()}
    b = {p: _pair(v, p) for p, v in c2.items()}
    if strategy == "select_first":
        return a
    if strategy == "select_second":
        return {p: b[p] for p in a}
    if strategy == "average":
        if not 0.0 <= weight <= 1.0:
            raise ValidationError(f"weight must lie in [0, 1], got {weight}")
        return {
            p: (weight * a[p][0] + (1 - weight) * b[p][0], weight * a[p][1] + (1 - weight) * b[p][1])
            for p in a
        }
    if seed is None:
        raise ValidationError("the sample strategy needs an explicit seed")
    rng = np.random.Generator(np.random.PCG64(seed))
    out = {}
    for p in a:
        x, y = a[p], b[p]
        if {x, y} == {(1.0, 0.0), (0.0, 1.0)}:
            v = _CD_VALUES[int(rng.integers(4))]
            out[p] = (float(v[0]), float(v[1]))
        elif x == y:
            out[p] = x
        else:
            out[p] = x if rng.integers(2) == 0 else y
    return out


def intent_map(l: ConceptLattice, c: Concept) -> dict[str, tuple[float, float]]:
    """Property map of a concept's intent, usable by :func:`blend`.

    crisp/para intents map members to ``(1, 0)`` and the rest to ``(0, 0)``.
    """
    if l.fuzzy:
        return {p: (float(a), float(b)) for p, (a, b) in zip(l.properties, c.intent)}
    return {p: ((1.0, 0.0) if p in c.intent else (0.0, 0.0)) for p in l.properties}


def load_property_map(path) -> dict:
    """``{"intent": {"p1": [1, 0], "p2": "B"}}``."""
    def build(data):
        if "intent" not in data or not isinstance(data["intent"], Mapping):
            raise ValidationError("expected an 'intent' object")
        return {p: _pair(v, p) for p, v in data["intent"].items()}

    return with_path(path, build, read_json(path))
