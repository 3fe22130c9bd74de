import pickle

import hypothesis.strategies as st
from hypothesis import given

from ckwk import (
    BOT,
    TRUE,
    And,
    Bot,
    Box,
    Dia,
    Formula,
    Imp,
    Or,
    Var,
    free_vars,
    neg,
    subformulas,
    weight,
)

from conftest import formulas


def weight_oracle(f: Formula) -> int:
    if isinstance(f, (Bot, Var)):
        return 1
    if isinstance(f, And):
        return weight_oracle(f.lhs) + weight_oracle(f.rhs) + 2
    if isinstance(f, (Or, Imp)):
        return weight_oracle(f.lhs) + weight_oracle(f.rhs) + 1
    return weight_oracle(f.body) + 1


def free_vars_oracle(f: Formula) -> frozenset[str]:
    if isinstance(f, Bot):
        return frozenset()
    if isinstance(f, Var):
        return frozenset({f.name})
    if isinstance(f, (And, Or, Imp)):
        return free_vars_oracle(f.lhs) | free_vars_oracle(f.rhs)
    return free_vars_oracle(f.body)


def test_atomic_weights():
    p, q = Var("p"), Var("q")
    assert weight(BOT) == 1
    assert weight(p) == 1
    assert weight(And(p, q)) == 4
    assert weight(Or(p, q)) == 3
    assert weight(Imp(p, q)) == 3
    assert weight(Box(p)) == 2
    assert weight(Dia(p)) == 2
    assert weight(TRUE) == 3
    assert weight(neg(p)) == 3


def test_golden_interpolant_weight():
    q = Var("q")
    phi = Imp(And(q, Box(TRUE)), BOT)
    assert weight(phi) == 9


def test_true_and_neg_are_sugar():
    assert TRUE is Imp(BOT, BOT)
    assert neg(Var("p")) is Imp(Var("p"), BOT)


def test_hash_consing_identity():
    p, q = Var("p"), Var("q")
    assert And(p, q) is And(Var("p"), Var("q"))
    assert Box(Imp(p, q)) is Box(Imp(p, q))
    assert Var("p") is p
    assert And(p, q) is not And(q, p)


@given(formulas())
def test_weight_matches_oracle(f):
    assert f.weight == weight_oracle(f)
    assert weight(f) == f.weight


@given(formulas())
def test_free_vars_matches_oracle(f):
    assert free_vars(f) == free_vars_oracle(f)


@given(formulas(), formulas())
def test_equality_is_structural(f, g):
    same_shape = repr(f) == repr(g)
    assert (f is g) == same_shape
    assert (f == g) == same_shape


@given(formulas())
def test_pickle_reinterns(f):
    assert pickle.loads(pickle.dumps(f)) is f


@given(formulas(), formulas())
def test_sort_key_total_order(f, g):
    assert (f.key < g.key) or (g.key < f.key) or (f is g)
    if f.weight < g.weight:
        assert f.key < g.key


def test_subformulas_golden():
    p, q = Var("p"), Var("q")
    phi = Imp(Box(p), And(p, q))
    assert list(subformulas(phi)) == [phi, Box(p), p, And(p, q), p, q]


@given(formulas())
def test_subformulas_contains_self_and_atoms(f):
    subs = list(subformulas(f))
    assert subs[0] is f
    assert all(isinstance(s, Formula) for s in subs)
    for v in free_vars(f):
        assert Var(v) in subs
