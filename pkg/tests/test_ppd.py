import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from paralogic import ppd
from paralogic.errors import SupportError, ValidationError
from paralogic.ppd import InstanceEvidence, Ppd


def test_entropy_examples():
    p = Ppd(("a", "b", "c", "d"), [0.5, 0.5, 0, 0], [0.25] * 4)
    assert ppd.entropy(p) == pytest.approx(3.0, abs=1e-15)
    assert ppd.entropy(Ppd(("a", "b"), [1, 0], [0, 1])) == 0.0
    p = Ppd(("a", "b"), [0.5, 0.5], [0.9, 0.1])
    h9 = -(0.9 * math.log2(0.9) + 0.1 * math.log2(0.1))
    assert ppd.entropy(p) == pytest.approx(1.0 + h9, abs=1e-15)
    assert ppd.entropy(p) == pytest.approx(1.468996, abs=1e-6)


def test_relative_entropy_examples():
    a = Ppd(("a", "b"), [1, 0], [0.9, 0.1])
    b = Ppd(("a", "b"), [0.5, 0.5], [0.9, 0.1])
    assert ppd.relative_entropy(a, a) == 0.0
    assert ppd.relative_entropy(a, b) == pytest.approx(1.0, abs=1e-15)
    flip = Ppd(("a", "b"), [0, 1], [0.9, 0.1])
    with pytest.raises(SupportError, match="'a'"):
        ppd.relative_entropy(a, flip)
    smoothed = ppd.relative_entropy(a, flip, epsilon=1e-3)
    assert math.isfinite(smoothed) and smoothed > 0


def test_validation():
    with pytest.raises(ValidationError):
        Ppd(("a", "b"), [0.5, 0.6], [0.5, 0.5])
    with pytest.raises(ValidationError):
        Ppd(("a", "b"), [1.5, -0.5], [0.5, 0.5])
    with pytest.raises(ValidationError):
        Ppd(("a",), [0.5, 0.5], [0.5, 0.5])
    with pytest.raises(ValidationError):
        Ppd(("a", "a"), [0.5, 0.5], [0.5, 0.5])
    a = Ppd(("a", "b"), [1, 0], [1, 0])
    with pytest.raises(ValidationError):
        ppd.relative_entropy(a, Ppd(("b", "a"), [1, 0], [1, 0]))
    with pytest.raises(ValidationError):
        ppd.relative_entropy(a, a, epsilon=-1)


def test_files(tmp_path):
    f = tmp_path / "p.json"
    f.write_text(json.dumps({"outcomes": ["o1", "o2"], "pos": [0.5, 0.5], "neg": [0.9, 0.1]}))
    assert ppd.load_ppd(f).outcomes == ("o1", "o2")
    f.write_text(json.dumps({"outcomes": ["o1"], "pos": [1]}))
    with pytest.raises(ValidationError, match="p.json.*neg"):
        ppd.load_ppd(f)
    g = tmp_path / "x.json"
    g.write_text(json.dumps({"instances": {"moby": [1, 0]}}))
    assert ppd.load_evidence(g).weights == {"moby": (1.0, 0.0)}


@st.composite
def ppds(draw, n=None):
    n = n or draw(st.integers(1, 6))
    def vec():
        raw = draw(st.lists(st.floats(0, 10), min_size=n, max_size=n).filter(lambda v: sum(v) > 1e-3))
        v = np.array(raw)
        return v / v.sum()
    return Ppd(tuple(f"o{i}" for i in range(n)), vec(), vec())


@settings(max_examples=200, deadline=None)
@given(ppds())
def test_componentwise_additivity(p):
    trivial = np.zeros(len(p.outcomes))
    trivial[0] = 1.0
    only_pos = Ppd(p.outcomes, p.pos, trivial)
    only_neg = Ppd(p.outcomes, trivial, p.neg)
    assert ppd.entropy(p) == ppd.entropy(only_pos) + ppd.entropy(only_neg)


@settings(max_examples=200, deadline=None)
@given(ppds(), st.permutations(range(6)))
def test_relabel_invariance(p, perm):
    order = [i for i in perm if i < len(p.outcomes)]
    q = p.relabel(order)
    assert ppd.entropy(q) == pytest.approx(ppd.entropy(p), abs=1e-12)
    assert ppd.relative_entropy(q, q.relabel(range(len(order)))) == 0.0


def test_entropy_matches_product_distribution_oracle():
    rng = np.random.default_rng(17)
    for i in range(100):
        n = int(rng.integers(1, 8))
        pos, neg = rng.random(n) ** 2, rng.random(n) ** 2
        if i % 4 == 0:
            pos[rng.random(n) < 0.5] = 0
            pos[0] += 0.1
        pos, neg = pos / pos.sum(), neg / neg.sum()
        joint = [a * b for a in pos for b in neg]
        got = ppd.entropy(Ppd(tuple(range(n)), pos, neg))
        assert got == pytest.approx(oracles.entropy_bits(joint), abs=1e-9)


def test_gibbs_on_random_pairs():
    rng = np.random.default_rng(23)
    for _ in range(100):
        n = int(rng.integers(1, 7))
        outs = tuple(range(n))
        def rand():
            v = rng.random(n) + 1e-3
            return v / v.sum()
        a, b = Ppd(outs, rand(), rand()), Ppd(outs, rand(), rand())
        d = ppd.relative_entropy(a, b)
        expected = oracles.kl_bits(a.pos, b.pos) + oracles.kl_bits(a.neg, b.neg)
        assert d == pytest.approx(expected, abs=1e-9)
        assert d >= -1e-9
        assert abs(ppd.relative_entropy(a, a)) <= 1e-9
        if not (np.allclose(a.pos, b.pos) and np.allclose(a.neg, b.neg)):
            assert d > 1e-9


# -- intension degrees -------------------------------------------------------

WHALES = InstanceEvidence({"moby": (1, 0), "willy": (1, 0), "shamu": (1, 0)})
ANIMALS = InstanceEvidence(
    {
        "moby": (1, 0), "willy": (1, 0), "shamu": (1, 0), "nemo": (1, 0), "flipper": (1, 0),
        "rex": (0, 1), "tom": (0.25, 0.75), "tweety": (0, 1), "duck": (0.5, 0.5), "frog": (0.75, 0.25),
    }
)


def test_intension_of_full_context_is_zero():
    c = InstanceEvidence({"a": (1, 2), "b": (3, 1), "c": (1, 1)})
    assert ppd.intension_degree(c, c, epsilon=0.0) == 0.0
    assert ppd.intension_degree(c, c) == pytest.approx(0.0, abs=1e-8)
    scaled = InstanceEvidence({k: (2 * a, 2 * b) for k, (a, b) in c.weights.items()})
    assert ppd.intension_degree(scaled, c, epsilon=0.0) == pytest.approx(0.0, abs=1e-12)


def test_whales():
    d = ppd.intension_degree(WHALES, ANIMALS)
    # x+ uniform over 3 whales, context+ gives each whale 1/6.5
    assert d > 0
    assert d == pytest.approx(math.log2(6.5 / 3), abs=1e-6)


def test_degenerate_instance_shrinks_with_epsilon():
    x = InstanceEvidence({"odd": (1, 0)})
    c = InstanceEvidence({"odd": (0, 0), "a": (1, 1), "b": (1, 1)})
    small = ppd.intension_degree(x, c, epsilon=1e-9)
    large = ppd.intension_degree(x, c, epsilon=1e-3)
    assert math.isfinite(small) and small > large > 0
    with pytest.raises(SupportError):
        ppd.intension_degree(x, c, epsilon=0.0)


def test_intension_errors():
    with pytest.raises(ValidationError, match="not in the context"):
        ppd.intension_degree(InstanceEvidence({"zed": (1, 0)}), ANIMALS)
    with pytest.raises(ValidationError):
        ppd.intension_degree(InstanceEvidence({"moby": (0, 0)}), ANIMALS)
    with pytest.raises(ValidationError):
        InstanceEvidence({"a": (-1, 0)})
    with pytest.raises(ValidationError, match="neg"):
        ppd.intension_degree(
            InstanceEvidence({"a": (0, 1)}), InstanceEvidence({"a": (1, 0), "b": (1, 0)}), epsilon=0.0
        )
