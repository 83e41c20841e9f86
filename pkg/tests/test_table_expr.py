import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from helpers import fn, lattice_pairs
from latticepoly.errors import ArityError, BudgetError, ElementError, ParseError
from latticepoly.expr import (
    NODE_WEIGHTS,
    Const,
    Join,
    Med,
    Meet,
    Var,
    eval_expr,
    max_var,
    parse_expr,
    random_expr,
    tabulate,
    to_sexpr,
    walk,
)
from latticepoly.table import FnTable, decode, encode, format_subset, grid, mask_of, subset_of

PAIRS = lattice_pairs()


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 5), st.integers(0, 4), st.data())
def test_encode_decode(m, n, data):
    x = tuple(data.draw(st.integers(0, m - 1)) for _ in range(n))
    i = encode(m, x)
    assert decode(m, n, i) == x
    assert tuple(grid(m, n).coords[i]) == x


def test_grid_order_matches_oracle():
    assert [tuple(r) for r in grid(3, 2).coords.tolist()] == oracles.points(3, 2)


def test_grid_budget():
    with pytest.raises(BudgetError):
        grid(4, 11, budget=10**6)


def test_fntable_validation(chain2):
    with pytest.raises(ElementError):
        FnTable(chain2, 1, [0, 2])
    with pytest.raises(ArityError):
        FnTable(chain2, 2, [0, 1])
    f = FnTable(chain2, 2, [0, 1, 1, 1], name="or")
    assert f(1, 0) == 1 and f((0, 0)) == 0
    assert f.values.flags.writeable is False
    assert f.range() == frozenset({0, 1})
    with pytest.raises(ArityError):
        f(1)


def test_subsets():
    assert mask_of([1, 3]) == 0b101
    assert subset_of(0b101, 3) == (1, 3)
    assert format_subset(0, 2) == "empty" and format_subset(3, 2) == "full"
    assert format_subset(2, 3) == "2"


def test_parse_examples(chain3):
    e = parse_expr("(join x1 (meet x1 x2))", 2, chain3)
    assert e == Join(Var(1), Meet(Var(1), Var(2)))
    assert parse_expr("x1", 1, chain3) == Var(1)
    med = parse_expr("(med x1 x2 c:a)", 2, chain3)
    assert med == Med(Var(1), Var(2), Const(chain3.element("a")))
    assert parse_expr("(meet x1 x2 x3)", 3, chain3) == Meet(Meet(Var(1), Var(2)), Var(3))


@pytest.mark.parametrize("text", [
    "(join x1", "(join x1 x2))", "(med x1 x2)", "(foo x1 x2)", "x3", "c:z", "(join x1)", "x0", "",
])
def test_parse_errors(chain3, text):
    with pytest.raises(ParseError):
        parse_expr(text, 2, chain3)


def test_eval_examples(chain3, diamond):
    e = parse_expr("(join x1 (meet x1 x2))", 2, chain3)
    for p in chain3.elements:
        for q in chain3.elements:
            assert eval_expr(chain3, e, (p, q)) == p
    assert eval_expr(chain3, Const(1), (2, 0)) == 1
    a, b = diamond.element("a"), diamond.element("b")
    assert eval_expr(diamond, parse_expr("(join x1 x2)", 2, diamond), (a, b)) == diamond.top


def test_tabulate_examples(chain2, chain3):
    assert fn(chain2, "x1", 1).values.tolist() == [0, 1]
    assert fn(chain2, "(join x1 x2)", 2).values.tolist() == [0, 1, 1, 1]
    f = fn(chain3, "(med x1 x2 c:a)", 2)
    a = chain3.element("a")
    assert f(2, 0) == a
    ol = oracles.chain(3)
    assert f.values.tolist() == [ol.median(x1, x2, a) for x1, x2 in oracles.points(3, 2)]


@pytest.mark.parametrize("name", ["chain3", "diamond", "chain3xchain2"])
def test_tabulate_matches_scalar_and_oracle(name):
    L, ol = PAIRS[name]
    rng = random.Random(11)

    def oracle_eval(e, x):
        if isinstance(e, Var):
            return x[e.index - 1]
        if isinstance(e, Const):
            return e.element
        if isinstance(e, Meet):
            return ol.meet[oracle_eval(e.left, x)][oracle_eval(e.right, x)]
        if isinstance(e, Join):
            return ol.join[oracle_eval(e.left, x)][oracle_eval(e.right, x)]
        return ol.median(*(oracle_eval(c, x) for c in (e.a, e.b, e.c)))

    for _ in range(40):
        e = random_expr(L, 2, rng)
        t = tabulate(L, e, 2)
        pts = oracles.points(L.size, 2)
        assert t.values.tolist() == [oracle_eval(e, x) for x in pts]
        assert t.values.tolist() == [eval_expr(L, e, x) for x in pts]


def test_random_expr_is_seeded(chain3):
    a = [random_expr(chain3, 3, random.Random(5)) for _ in range(3)]
    b = [random_expr(chain3, 3, random.Random(5)) for _ in range(3)]
    assert a == b
    assert abs(sum(NODE_WEIGHTS.values()) - 1) < 1e-12


def test_random_expr_depth_and_vars(chain3):
    rng = random.Random(0)

    def depth(e):
        kids = [getattr(e, k) for k in ("left", "right") if hasattr(e, k)]
        return 1 + max((depth(k) for k in kids), default=0)

    for _ in range(200):
        e = random_expr(chain3, 2, rng)
        assert depth(e) <= 5
        assert max_var(e) <= 2
        assert all(not isinstance(node, Med) for node in walk(e))


@pytest.mark.parametrize("seed", range(5))
def test_sexpr_round_trip(chain3, seed):
    e = random_expr(chain3, 3, random.Random(seed))
    assert parse_expr(to_sexpr(e, chain3), 3, chain3) == e


def test_arity_checked_on_eval(chain3):
    with pytest.raises(ArityError):
        eval_expr(chain3, Var(2), (0,))


def test_coordinates_are_numpy(chain3):
    f = fn(chain3, "(meet x1 x2)", 2)
    assert isinstance(f.values, np.ndarray)
