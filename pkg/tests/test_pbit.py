import itertools

import pytest

import oracles
from paralogic import pbit
from paralogic.errors import ValidationError
from paralogic.pbit import ALL, B, F, N, PBit, T

PAIRS = list(itertools.product(ALL, ALL))
TRIPLES = list(itertools.product(ALL, ALL, ALL))


ORACLE_BINARY = oracles.BINARY
ORACLE_UNARY = oracles.UNARY


@pytest.mark.parametrize("op", sorted(ORACLE_BINARY))
def test_binary_tables_match_formula_oracle(op):
    for a, b in PAIRS:
        assert pbit.apply_binary(op, a, b).pair == ORACLE_BINARY[op](a.pair, b.pair)


@pytest.mark.parametrize("op", sorted(ORACLE_UNARY))
def test_unary_tables_match_formula_oracle(op):
    for a in ALL:
        assert pbit.apply_unary(op, a).pair == ORACLE_UNARY[op](a.pair)


def test_encoding():
    assert T.pair == (1, 0) and F.pair == (0, 1) and B.pair == (1, 1) and N.pair == (0, 0)
    for a in ALL:
        assert PBit.from_bits(*a.pair) is a
        assert PBit.parse(a.name) is a
        assert PBit.parse(f"({a.pos},{a.neg})") is a
        assert PBit.parse(list(a.pair)) is a


@pytest.mark.parametrize("bad", ["X", "(2,0)", "", [1], None])
def test_parse_rejects(bad):
    with pytest.raises(ValidationError):
        PBit.parse(bad)


def test_demi_examples():
    assert pbit.demi(N) is T
    assert pbit.demi(T) is B
    assert pbit.demi(B) is F
    assert pbit.demi(F) is N


def test_unary_examples():
    assert pbit.neg(B) is B and pbit.neg(N) is N
    assert pbit.bang(T) is B
    assert pbit.gamma(F) is B


def test_binary_examples():
    assert pbit.tensor(T, B) is T
    assert pbit.tensor(F, B) is F
    assert pbit.tensor(N, B) is N
    assert pbit.tensor(B, B) is B
    assert pbit.arrow(T, F) is F
    assert pbit.meet(B, T) is B
    assert pbit.join(B, F) is B


def test_literal_arrow_differs_on_t_to_f():
    assert pbit.apply_binary("arrow", T, F, literal=True) is N
    # the literal variant breaks the tensor unit law somewhere
    broken = [
        a for a in ALL if pbit.apply_binary("tensor", a, B, literal=True) is not a
    ]
    assert broken


def test_involutions():
    for a in ALL:
        assert pbit.neg(pbit.neg(a)) is a
        d = a
        for _ in range(4):
            d = pbit.demi(d)
        assert d is a
    # demi is a 4-cycle, not of smaller order
    assert [pbit.demi(x) for x in (N, T, B, F)] == [T, B, F, N]


def test_demi_squares_to_negation_on_classical_values_only():
    for a in (T, F):
        assert pbit.demi(pbit.demi(a)) is pbit.neg(a)
    for a in (B, N):
        assert pbit.demi(pbit.demi(a)) is not pbit.neg(a)


def test_exponential_laws():
    for a in ALL:
        assert pbit.bang(pbit.bang(a)) is pbit.bang(a)
        assert pbit.gamma(pbit.gamma(a)) is pbit.gamma(a)
        assert pbit.is_designated(pbit.strong_imp(pbit.bang(a), a))
        assert pbit.gamma(a) is pbit.neg(pbit.bang(pbit.neg(a)))
    for a, b in PAIRS:
        assert pbit.arrow(a, b) is pbit.strong_imp(pbit.bang(a), b)


def test_bang_is_not_identity():
    # "!!A = A" does not hold; "!!A = !A" does
    assert any(pbit.bang(pbit.bang(a)) is not a for a in ALL)


def test_deduction_rule():
    for a, b, c in TRIPLES:
        assert pbit.strong_imp(pbit.tensor(a, b), c) is pbit.strong_imp(
            a, pbit.strong_imp(b, c)
        )


def test_de_morgan():
    for a, b in PAIRS:
        assert pbit.par(a, b) is pbit.neg(pbit.tensor(pbit.neg(a), pbit.neg(b)))
        assert pbit.par(a, b) is pbit.strong_imp(pbit.neg(a), b)


def test_tensor_unit():
    for a in ALL:
        assert pbit.tensor(a, B) is a
        assert pbit.tensor(B, a) is a


def test_modus_ponens_preserves_designation():
    for a, b in PAIRS:
        for imp in (pbit.arrow, pbit.strong_imp):
            if pbit.is_designated(a) and pbit.is_designated(imp(a, b)):
                assert pbit.is_designated(b)


def test_excluded_middle_fails():
    v = pbit.join(N, pbit.neg(N))
    assert v is N and not pbit.is_designated(v)


def test_designation():
    assert [a for a in ALL if pbit.is_designated(a)] == [T, B]


def test_orders():
    assert pbit.knowledge_leq(N, B)
    assert pbit.truth_leq(F, T)
    assert not pbit.truth_leq(B, N) and not pbit.truth_leq(N, B)
    for a, b in PAIRS:
        assert pbit.knowledge_leq(a, b) == (a.pos <= b.pos and a.neg <= b.neg)
        assert pbit.truth_leq(a, b) == (a.pos <= b.pos and a.neg >= b.neg)
    for a in ALL:
        assert pbit.knowledge_leq(N, a) and pbit.knowledge_leq(a, B)
        assert pbit.truth_leq(F, a) and pbit.truth_leq(a, T)


def test_kc_bijection():
    assert tuple(pbit.to_kc(B)) == (-1, 0)
    assert pbit.from_kc((0, -1)) is F
    assert tuple(pbit.to_kc(T)) == (1, 0)
    assert tuple(pbit.to_kc(N)) == (0, 1)
    for a in ALL:
        assert pbit.from_kc(pbit.to_kc(a)) is a
    with pytest.raises(ValidationError):
        pbit.from_kc((1, 1))


def test_trace_status():
    assert tuple(pbit.trace_status(T)) == (True, False)
    assert tuple(pbit.trace_status(F)) == (False, True)
    assert tuple(pbit.trace_status(N)) == (False, False)
    assert tuple(pbit.trace_status(B)) == (True, True)
    for a in ALL:
        assert pbit.from_trace_status(pbit.trace_status(a)) is a


def test_table_shapes():
    for op in pbit.BINARY_OPS:
        table = pbit.binary_table(op)
        assert set(table) == set(PAIRS)
        assert all(table[a, b] is pbit.apply_binary(op, a, b) for a, b in PAIRS)
    for op in pbit.UNARY_OPS:
        assert set(pbit.unary_table(op)) == set(ALL)


def test_unknown_operator():
    with pytest.raises(ValidationError):
        pbit.apply_binary("xor", T, F)
    with pytest.raises(ValidationError):
        pbit.apply_unary("not", T)
