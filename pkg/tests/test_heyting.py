import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from paralogic import heyting
from paralogic.errors import CapacityError, ValidationError
from paralogic.heyting import (
    BOOLEAN,
    PairAlgebra,
    boolean_algebra,
    chain,
    downset_algebra,
    lattice_tables,
    poset_from_covers,
    poset_from_relation,
    validate,
)


@st.composite
def posets(draw, max_size=5):
    """Random poset: covers only go from lower to higher index, so no cycles."""
    n = draw(st.integers(0, max_size))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    covers = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return poset_from_covers([f"e{i}" for i in range(n)], [(f"e{i}", f"e{j}") for i, j in covers])


def brute_imp(h, a, b):
    cands = [c for c in h.elements if h.leq[h.meet[c][a]][b]]
    tops = [c for c in cands if all(h.leq[d][c] for d in cands)]
    assert len(tops) == 1
    return tops[0]


def test_downsets_of_two_chain():
    h = downset_algebra(poset_from_covers([0, 1], [(0, 1)]))
    assert h.labels == (frozenset(), frozenset({0}), frozenset({0, 1}))
    assert validate(h) == []


def test_downsets_of_antichain_are_boolean():
    h = downset_algebra(poset_from_covers(["a", "b"], []))
    assert h.size == 4
    assert set(h.labels) == {frozenset(), frozenset("a"), frozenset("b"), frozenset("ab")}
    for a in h.elements:
        assert h.join[a][h.complement(a)] == h.top


def test_empty_poset():
    h = downset_algebra(poset_from_covers([], []))
    assert h.size == 1 and h.bottom == h.top


def test_chain_implications():
    assert BOOLEAN.implication(1, 0) == 0
    h = chain(3)
    assert h.implication(2, 1) == 1
    assert h.implication(1, 0) == 0
    for a in h.elements:
        assert h.implication(a, a) == h.top


def test_unknown_element():
    with pytest.raises(ValidationError):
        heyting.implication(BOOLEAN, 0, 5)
    with pytest.raises(ValidationError):
        BOOLEAN.index("x")


def test_validate_boolean_and_chain():
    assert validate(boolean_algebra(2)) == []
    assert validate(chain(3)) == []


def n5():
    # 0 < a < b < 1, 0 < c < 1
    labels = ["0", "a", "b", "c", "1"]
    p = poset_from_covers(labels, [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")])
    return lattice_tables(p.labels, p.leq)


def test_pentagon_is_not_distributive():
    report = validate(n5())
    laws = {v.law for v in report}
    assert "distributivity" in laws
    v = next(v for v in report if v.law == "distributivity")
    assert len(v.witness) == 3
    with pytest.raises(ValidationError, match="distributivity"):
        heyting.from_lattice(n5().labels, n5().leq)


def test_validate_reports_broken_tables():
    t = lattice_tables(BOOLEAN.labels, BOOLEAN.leq)
    broken = heyting.LatticeTables(t.labels, t.leq, t.meet, t.join, ((1, 1), (1, 1)), t.bottom, t.top)
    assert {v.law for v in validate(broken)} == {"residuation"}


def test_non_poset_inputs():
    with pytest.raises(ValidationError, match="cycle"):
        poset_from_covers(["a", "b"], [("a", "b"), ("b", "a")])
    with pytest.raises(ValidationError):
        poset_from_covers(["a"], [("a", "z")])
    with pytest.raises(ValidationError, match="reflexiv"):
        poset_from_relation(["a", "b"], [("a", "a")])
    with pytest.raises(ValidationError, match="antisymmetr"):
        poset_from_relation(["a", "b"], [("a", "a"), ("b", "b"), ("a", "b"), ("b", "a")])
    with pytest.raises(ValidationError, match="transitiv"):
        poset_from_relation(
            ["a", "b", "c"],
            [("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "c")],
        )


def test_capacity():
    with pytest.raises(CapacityError):
        boolean_algebra(9)


def test_load_poset(tmp_path):
    f = tmp_path / "p.json"
    f.write_text(json.dumps({"elements": ["x", "y"], "covers": [["x", "y"]]}))
    h = downset_algebra(heyting.load_poset(f))
    assert h.size == 3
    f.write_text("{")
    with pytest.raises(ValidationError, match="p.json"):
        heyting.load_poset(f)


@settings(max_examples=60, deadline=None)
@given(posets())
def test_downset_algebras_are_heyting(p):
    h = downset_algebra(p)
    assert validate(h) == []
    for a, b in itertools.product(h.elements, repeat=2):
        assert h.imp[a][b] == brute_imp(h, a, b)
        assert (h.imp[a][b] == h.top) == h.leq[a][b]
    if h.size <= 64:
        for a, b, c in itertools.product(h.elements, repeat=3):
            assert h.leq[c][h.imp[a][b]] == h.leq[h.meet[c][a]][b]


def test_pair_algebra_units():
    pa = PairAlgebra(chain(3))
    assert len(pa.elements) == 9
    units = {pa.unit1, pa.unit0, pa.unit_dash, pa.unit_i}
    assert len(units) == 4


@pytest.mark.parametrize("base", [BOOLEAN, chain(3), boolean_algebra(2)])
def test_pair_algebra_laws_over_larger_bases(base):
    pa = PairAlgebra(base)
    els = pa.elements
    for a in els:
        assert pa.neg(pa.neg(a)) == a
        assert pa.bang(pa.bang(a)) == pa.bang(a)
        assert pa.tensor(a, pa.unit_i) == a
        assert pa.is_designated(pa.strong_imp(pa.bang(a), a))
    for a, b in itertools.product(els, repeat=2):
        assert pa.arrow(a, b) == pa.strong_imp(pa.bang(a), b)
        assert pa.par(a, b) == pa.strong_imp(pa.neg(a), b)
