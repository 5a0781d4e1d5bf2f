"""Finite Heyting algebras and the pair algebra H x H^op.

Elements are dense integer ids ``0..n-1`` with a side table of labels.
Every operation is a precomputed table, so lookups are O(1) and the
exhaustive law checks in :func:`validate` stay cheap for small algebras.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Hashable, Iterable, NamedTuple, Sequence

from ._io import read_json, with_path
from .errors import CapacityError, ValidationError

MAX_ELEMENTS = 256


class Violation(NamedTuple):
    law: str
    witness: tuple
    detail: str = ""


@dataclass(frozen=True)
class Poset:
    """A finite partial order; ``leq[i][j]`` means ``labels[i] <= labels[j]``."""

    labels: tuple
    leq: tuple

    @property
    def size(self) -> int:
        return len(self.labels)


def _closure(n: int, pairs: Iterable[tuple[int, int]]) -> list[list[bool]]:
    rel = [[i == j for j in range(n)] for i in range(n)]
    for a, b in pairs:
        rel[a][b] = True
    # Warshall
    for k in range(n):
        for i in range(n):
            if rel[i][k]:
                row_k = rel[k]
                row_i = rel[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    return rel


def _index_map(elements: Sequence[Hashable]) -> dict:
    index = {}
    for i, e in enumerate(elements):
        if e in index:
            raise ValidationError(f"duplicate poset element {e!r}")
        index[e] = i
    return index


def poset_from_covers(elements: Sequence[Hashable], covers: Iterable[Sequence]) -> Poset:
    """Build a poset from covering pairs ``(a, b)`` meaning ``a < b``.

    The reflexive-transitive closure is taken; a cycle is reported as an
    antisymmetry violation naming the offending pair.
    """
    index = _index_map(elements)
    pairs = []
    for pair in covers:
        if len(pair) != 2:
            raise ValidationError(f"cover {pair!r} is not a pair")
        a, b = pair
        for x in (a, b):
            if x not in index:
                raise ValidationError(f"cover {pair!r} mentions unknown element {x!r}")
        if a == b:
            raise ValidationError(f"cover ({a!r}, {b!r}) is not strict")
        pairs.append((index[a], index[b]))
    rel = _closure(len(elements), pairs)
    n = len(elements)
    for i in range(n):
        for j in range(i + 1, n):
            if rel[i][j] and rel[j][i]:
                raise ValidationError(
                    f"covers contain a cycle through ({elements[i]!r}, {elements[j]!r})"
                )
    return Poset(tuple(elements), tuple(tuple(r) for r in rel))


def poset_from_relation(elements: Sequence[Hashable], leq_pairs: Iterable[Sequence]) -> Poset:
    """Build a poset from an explicit order relation, checking the poset laws."""
    index = _index_map(elements)
    n = len(elements)
    rel = [[False] * n for _ in range(n)]
    for pair in leq_pairs:
        a, b = pair
        if a not in index or b not in index:
            raise ValidationError(f"relation pair {tuple(pair)!r} mentions an unknown element")
        rel[index[a]][index[b]] = True
    for i in range(n):
        if not rel[i][i]:
            raise ValidationError(
                f"relation is not reflexive: missing ({elements[i]!r}, {elements[i]!r})"
            )
    for i in range(n):
        for j in range(n):
            if i != j and rel[i][j] and rel[j][i]:
                raise ValidationError(
                    f"relation is not antisymmetric: ({elements[i]!r}, {elements[j]!r}) "
                    "holds in both directions"
                )
            if rel[i][j]:
                for k in range(n):
                    if rel[j][k] and not rel[i][k]:
                        raise ValidationError(
                            "relation is not transitive: missing "
                            f"({elements[i]!r}, {elements[k]!r})"
                        )
    return Poset(tuple(elements), tuple(tuple(r) for r in rel))


def load_poset(path) -> Poset:
    """Read ``{"elements": [...], "covers": [[a, b], ...]}``."""
    def build(data):
        if "elements" not in data:
            raise ValidationError("missing key 'elements'")
        return poset_from_covers(data["elements"], data.get("covers", []))

    return with_path(path, build, read_json(path))


@dataclass(frozen=True)
class LatticeTables:
    """Candidate lattice data, not yet known to satisfy any law."""

    labels: tuple
    leq: tuple
    meet: tuple
    join: tuple
    imp: tuple
    bottom: int
    top: int

    @property
    def size(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class FiniteHeyting(LatticeTables):
    """A validated finite Heyting algebra. Immutable after construction."""

    _index: dict = field(default=None, compare=False, repr=False)

    def index(self, label) -> int:
        index = self._index
        if index is None:
            index = {lab: i for i, lab in enumerate(self.labels)}
            object.__setattr__(self, "_index", index)
        try:
            return index[label]
        except KeyError:
            raise ValidationError(f"unknown element label {label!r}") from None

    def check(self, a) -> int:
        if not isinstance(a, int) or isinstance(a, bool) or not 0 <= a < self.size:
            raise ValidationError(f"unknown element id {a!r} (algebra has {self.size} elements)")
        return a

    def le(self, a: int, b: int) -> bool:
        return self.leq[a][b]

    def implication(self, a: int, b: int) -> int:
        return self.imp[self.check(a)][self.check(b)]

    def complement(self, a: int) -> int:
        """Pseudo-complement ``a -> bottom``."""
        return self.imp[self.check(a)][self.bottom]

    @property
    def elements(self) -> range:
        return range(self.size)


def _bounds(n, leq):
    bottoms = [i for i in range(n) if all(leq[i][j] for j in range(n))]
    tops = [i for i in range(n) if all(leq[j][i] for j in range(n))]
    return bottoms, tops


def lattice_tables(labels: Sequence, leq) -> LatticeTables:
    """Compute meet/join/implication tables for a finite lattice order.

    ``imp[a][b]`` is the join of every ``c`` with ``c & a <= b``; that is the
    relative pseudo-complement exactly when the lattice is distributive, and
    :func:`validate` is what decides whether it is.
    """
    n = len(labels)
    if n == 0:
        raise ValidationError("a lattice needs at least one element")
    leq = tuple(tuple(bool(x) for x in row) for row in leq)

    def extreme(candidates, greatest):
        for c in candidates:
            if all((leq[d][c] if greatest else leq[c][d]) for d in candidates):
                return c
        return None

    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            lower = [c for c in range(n) if leq[c][a] and leq[c][b]]
            upper = [c for c in range(n) if leq[a][c] and leq[b][c]]
            m = extreme(lower, greatest=True)
            j = extreme(upper, greatest=False)
            if m is None or j is None:
                kind = "meet" if m is None else "join"
                raise ValidationError(
                    f"order is not a lattice: no {kind} for ({labels[a]!r}, {labels[b]!r})"
                )
            meet[a][b] = m
            join[a][b] = j
    bottoms, tops = _bounds(n, leq)
    if not bottoms or not tops:
        raise ValidationError("order has no global bottom or top")
    imp = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            acc = bottoms[0]
            for c in range(n):
                if leq[meet[c][a]][b]:
                    acc = join[acc][c]
            imp[a][b] = acc
    return LatticeTables(
        tuple(labels),
        leq,
        tuple(map(tuple, meet)),
        tuple(map(tuple, join)),
        tuple(map(tuple, imp)),
        bottoms[0],
        tops[0],
    )


def validate(h: LatticeTables) -> list[Violation]:
    """Exhaustively check lattice, distributivity and residuation laws.

    Returns every violated law with a witness; an empty list means ``h`` is
    a Heyting algebra. O(n^3), so the element count is capped.
    """
    n = h.size
    if n > MAX_ELEMENTS:
        raise CapacityError(f"validate is capped at {MAX_ELEMENTS} elements, got {n}")
    leq, meet, join, imp = h.leq, h.meet, h.join, h.imp
    lab = h.labels
    out: list[Violation] = []
    seen = set()

    def report(law, *witness, detail=""):
        # one witness per law keeps reports readable
        if law not in seen:
            seen.add(law)
            out.append(Violation(law, tuple(lab[w] for w in witness), detail))

    for a in range(n):
        if not leq[a][a]:
            report("reflexivity", a)
        if not leq[h.bottom][a]:
            report("bottom", a)
        if not leq[a][h.top]:
            report("top", a)
        for b in range(n):
            if a != b and leq[a][b] and leq[b][a]:
                report("antisymmetry", a, b)
            m, j = meet[a][b], join[a][b]
            if not (leq[m][a] and leq[m][b]):
                report("meet-lower-bound", a, b)
            if not (leq[a][j] and leq[b][j]):
                report("join-upper-bound", a, b)
            for c in range(n):
                if leq[a][b] and leq[b][c] and not leq[a][c]:
                    report("transitivity", a, b, c)
                if leq[c][a] and leq[c][b] and not leq[c][m]:
                    report("meet-greatest", a, b, c)
                if leq[a][c] and leq[b][c] and not leq[j][c]:
                    report("join-least", a, b, c)
                if meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]]:
                    report(
                        "distributivity",
                        a,
                        b,
                        c,
                        detail="a & (b | c) != (a & b) | (a & c)",
                    )
                if leq[c][imp[a][b]] != leq[meet[c][a]][b]:
                    report(
                        "residuation",
                        a,
                        b,
                        c,
                        detail="c <= (a -> b) disagrees with (c & a) <= b",
                    )
    return out


def from_lattice(labels: Sequence, leq) -> FiniteHeyting:
    """Validate a finite lattice order and return it as a Heyting algebra."""
    tables = lattice_tables(labels, leq)
    report = validate(tables)
    if report:
        detail = "; ".join(f"{v.law} fails at {v.witness}" for v in report)
        raise ValidationError(f"not a Heyting algebra: {detail}")
    return FiniteHeyting(**tables.__dict__)


def implication(h: FiniteHeyting, a: int, b: int) -> int:
    """Relative pseudo-complement ``max{c : c & a <= b}``."""
    return h.implication(a, b)


def downset_algebra(poset: Poset) -> FiniteHeyting:
    """Lattice of down-closed subsets of ``poset`` ordered by inclusion.

    Labels are frozensets of the poset's labels.
    """
    n = poset.size
    below = [frozenset(j for j in range(n) if poset.leq[j][i] and j != i) for i in range(n)]
    found = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        nxt = []
        for d in frontier:
            for e in range(n):
                if e not in d and below[e] <= d:
                    grown = d | {e}
                    if grown not in found:
                        found.add(grown)
                        nxt.append(grown)
                        if len(found) > MAX_ELEMENTS:
                            raise CapacityError(
                                f"poset has more than {MAX_ELEMENTS} downsets"
                            )
        frontier = nxt
    sets = sorted(found, key=lambda s: (len(s), sorted(s)))
    m = len(sets)
    pos = {s: i for i, s in enumerate(sets)}
    leq = tuple(tuple(x <= y for y in sets) for x in sets)
    meet = tuple(tuple(pos[x & y] for y in sets) for x in sets)
    join = tuple(tuple(pos[x | y] for y in sets) for x in sets)
    imp = []
    for a in sets:
        row = []
        for b in sets:
            # largest downset c with c & a <= b: union of all such (downsets are closed under union)
            acc = frozenset()
            for c in sets:
                if (c & a) <= b:
                    acc |= c
            row.append(pos[acc])
        imp.append(tuple(row))
    labels = tuple(frozenset(poset.labels[i] for i in s) for s in sets)
    return FiniteHeyting(labels, leq, meet, join, tuple(imp), 0, m - 1)


def chain(k: int) -> FiniteHeyting:
    """The ``k``-element chain ``0 < 1 < ... < k-1`` (labels are ints)."""
    if k < 1:
        raise ValidationError("a chain needs at least one element")
    leq = [[i <= j for j in range(k)] for i in range(k)]
    return from_lattice(tuple(range(k)), leq)


def boolean_algebra(atoms: int) -> FiniteHeyting:
    """Powerset algebra of an ``atoms``-element antichain."""
    elems = tuple(range(atoms))
    return downset_algebra(poset_from_covers(elems, []))


BOOLEAN = chain(2)


class PairAlgebra:
    """The product H x H^op carrying CD logic.

    An element is a pair ``(x, x')`` of base ids: truth content and falsity
    content. H^op is never materialised; the second coordinate simply reads
    the base tables dualised (meet where the first coordinate joins).

    ``literal`` swaps the implication's falsity coordinate from the
    twist form ``x & y'`` to ``x' & y'``.
    """

    def __init__(self, base: FiniteHeyting = BOOLEAN, literal: bool = False):
        self.base = base
        self.literal = literal
        bot, top = base.bottom, base.top
        self.unit1 = (top, bot)
        self.unit0 = (bot, top)
        self.unit_dash = (bot, bot)
        self.unit_i = (top, top)

    @property
    def elements(self) -> list[tuple[int, int]]:
        r = range(self.base.size)
        return list(itertools.product(r, r))

    def meet(self, a, b):
        h = self.base
        return (h.meet[a[0]][b[0]], h.join[a[1]][b[1]])

    def join(self, a, b):
        h = self.base
        return (h.join[a[0]][b[0]], h.meet[a[1]][b[1]])

    def neg(self, a):
        return (a[1], a[0])

    def arrow(self, a, b):
        h = self.base
        falsity = h.meet[a[1] if self.literal else a[0]][b[1]]
        return (h.imp[a[0]][b[0]], falsity)

    def strong_imp(self, a, b):
        return self.meet(self.arrow(a, b), self.arrow(self.neg(b), self.neg(a)))

    def tensor(self, a, b):
        return self.neg(self.strong_imp(a, self.neg(b)))

    def par(self, a, b):
        return self.neg(self.tensor(self.neg(a), self.neg(b)))

    def bang(self, a):
        return self.meet(a, self.unit_i)

    def gamma(self, a):
        return self.join(a, self.unit_i)

    def weak_bang(self, a):
        return self.meet(a, self.unit_dash)

    def weak_gamma(self, a):
        return self.join(a, self.unit_dash)

    def demi(self, a):
        return (self.base.complement(a[1]), a[0])

    def is_designated(self, a) -> bool:
        return a[0] == self.base.top
