"""Lattice polynomial expressions: variables, constants, meet, join, median.

Concrete syntax is a small s-expression language::

    (meet E E ...)   (join E E ...)   (med E E E)   x<k>   c:<element-name>

Meet and join accept two or more operands and fold to the left.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import ArityError, ElementError, ParseError
from .table import DEFAULT_TABLE_BUDGET, FnTable, grid


@dataclass(frozen=True)
class Var:
    index: int  # 1-based


@dataclass(frozen=True)
class Const:
    element: int


@dataclass(frozen=True)
class Meet:
    left: "PolyExpr"
    right: "PolyExpr"


@dataclass(frozen=True)
class Join:
    left: "PolyExpr"
    right: "PolyExpr"


@dataclass(frozen=True)
class Med:
    a: "PolyExpr"
    b: "PolyExpr"
    c: "PolyExpr"


PolyExpr = Union[Var, Const, Meet, Join, Med]


def children(e):
    if isinstance(e, (Meet, Join)):
        return (e.left, e.right)
    if isinstance(e, Med):
        return (e.a, e.b, e.c)
    return ()


def walk(e):
    yield e
    for child in children(e):
        yield from walk(child)


def max_var(e):
    return max((node.index for node in walk(e) if isinstance(node, Var)), default=0)


def to_sexpr(e, L):
    if isinstance(e, Var):
        return f"x{e.index}"
    if isinstance(e, Const):
        return f"c:{L.names[e.element]}"
    head = {Meet: "meet", Join: "join", Med: "med"}[type(e)]
    return "(" + head + " " + " ".join(to_sexpr(c, L) for c in children(e)) + ")"


_TOKEN = re.compile(r"\(|\)|[^\s()]+")


def _tokenize(text):
    return [(m.group(), m.start()) for m in _TOKEN.finditer(text)]


def parse_expr(text, arity, L):
    """Parse the s-expression syntax into a PolyExpr checked against ``arity`` and ``L``."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty expression", position=0)
    pos = 0

    def atom(tok, where):
        if re.fullmatch(r"x\d+", tok):
            k = int(tok[1:])
            if not 1 <= k <= arity:
                raise ParseError(f"variable {tok} outside arity {arity}", position=where)
            return Var(k)
        if tok.startswith("c:"):
            try:
                return Const(L.element(tok[2:]))
            except ElementError:
                raise ParseError(f"unknown constant {tok[2:]!r}", position=where) from None
        raise ParseError(f"unexpected token {tok!r}", position=where)

    def parse():
        nonlocal pos
        if pos >= len(tokens):
            raise ParseError("unexpected end of input", position=len(text))
        tok, where = tokens[pos]
        pos += 1
        if tok == ")":
            raise ParseError("unexpected ')'", position=where)
        if tok != "(":
            return atom(tok, where)
        if pos >= len(tokens):
            raise ParseError("unexpected end of input", position=len(text))
        head, head_at = tokens[pos]
        pos += 1
        args = []
        while True:
            if pos >= len(tokens):
                raise ParseError("missing ')'", position=len(text))
            if tokens[pos][0] == ")":
                pos += 1
                break
            args.append(parse())
        if head in ("meet", "join"):
            if len(args) < 2:
                raise ParseError(f"{head} needs at least two operands", position=head_at)
            node = Meet if head == "meet" else Join
            acc = args[0]
            for arg in args[1:]:
                acc = node(acc, arg)
            return acc
        if head == "med":
            if len(args) != 3:
                raise ParseError("med takes exactly three operands", position=head_at)
            return Med(*args)
        raise ParseError(f"unknown operator {head!r}", position=head_at)

    e = parse()
    if pos != len(tokens):
        raise ParseError("trailing input after expression", position=tokens[pos][1])
    return e


def eval_expr(L, e, x):
    """Evaluate at one tuple by direct recursion over the tree."""
    x = tuple(x)
    need = max_var(e)
    if need > len(x):
        raise ArityError(f"expression uses x{need} but only {len(x)} arguments given")
    L.check(*x)

    def ev(node):
        if isinstance(node, Var):
            return x[node.index - 1]
        if isinstance(node, Const):
            return node.element
        if isinstance(node, Meet):
            return L.meet(ev(node.left), ev(node.right))
        if isinstance(node, Join):
            return L.join(ev(node.left), ev(node.right))
        a, b, c = ev(node.a), ev(node.b), ev(node.c)
        return L.join(L.join(L.meet(a, b), L.meet(b, c)), L.meet(c, a))

    return ev(e)


def tabulate(L, e, n, name="f", *, budget=DEFAULT_TABLE_BUDGET):
    """Full table of ``e`` over ``L^n`` (vectorised over all tuples at once)."""
    if max_var(e) > n:
        raise ArityError(f"expression uses x{max_var(e)} but arity is {n}")
    g = grid(L.size, n, budget)
    M, J = L.meet_table, L.join_table

    def ev(node):
        if isinstance(node, Var):
            return g.coords[:, node.index - 1]
        if isinstance(node, Const):
            return np.full(g.count, node.element, dtype=np.int64)
        if isinstance(node, Meet):
            return M[ev(node.left), ev(node.right)]
        if isinstance(node, Join):
            return J[ev(node.left), ev(node.right)]
        return L.median_table[ev(node.a), ev(node.b), ev(node.c)]

    return FnTable(L, n, ev(e), name=name, budget=budget)


# Sampling distribution for random expressions: below the depth limit each
# node kind is equally likely; at the limit only leaves are drawn.
NODE_WEIGHTS = {"var": 0.25, "const": 0.25, "meet": 0.25, "join": 0.25}
LEAF_WEIGHTS = {"var": 0.5, "const": 0.5}


def random_expr(L, n, rng, max_depth=5):
    """Draw a random expression over variables x1..xn (n ≥ 0) and L's constants."""
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)

    def draw(depth):
        weights = NODE_WEIGHTS if depth < max_depth else LEAF_WEIGHTS
        kinds = [k for k in weights if not (k == "var" and n == 0)]
        kind = rng.choices(kinds, [weights[k] for k in kinds])[0]
        if kind == "var":
            return Var(rng.randint(1, n))
        if kind == "const":
            return Const(rng.randrange(L.size))
        node = Meet if kind == "meet" else Join
        return node(draw(depth + 1), draw(depth + 1))

    return draw(1)
