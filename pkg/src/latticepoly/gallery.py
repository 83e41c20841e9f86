"""Built-in counterexamples and boundary cases with their expected check outcomes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .classes import is_conservative, is_sugeno, is_term_function, is_weakly_conservative
from .expr import parse_expr, tabulate
from .lattice import build_chain, build_diamond, build_product
from .normal_forms import unique_cnf, unique_dnf
from .properties import PROPERTIES, is_idempotent_over, level_set
from .table import FnTable


def evaluate_check(name, f):
    """Outcome of a named check: a property name, optionally ``@range|hull|full``, or a class test."""
    L = f.lattice
    extra = {
        "sugeno": is_sugeno,
        "term": is_term_function,
        "conservative": is_conservative,
        "weakly-conservative": is_weakly_conservative,
        "unique-dnf": unique_dnf,
        "unique-cnf": unique_cnf,
        "bottom-idempotent": lambda g: is_idempotent_over(g, {L.bottom}).holds,
        "top-idempotent": lambda g: is_idempotent_over(g, {L.top}).holds,
    }
    if name in extra:
        return bool(extra[name](f))
    prop, _, mode = name.partition("@")
    p = PROPERTIES[prop]
    if p.uses_levels:
        return p(f, level_set(f, mode or "hull")).holds
    return p(f).holds


@dataclass(frozen=True)
class GalleryFixture:
    name: str
    source: str
    build: Callable      # () -> FnTable
    expected: dict       # check name -> bool

    def replay(self):
        """Mismatches as (check, expected, observed); empty when the fixture reproduces."""
        f = self.build()
        out = []
        for check, want in self.expected.items():
            got = evaluate_check(check, f)
            if got != want:
                out.append((check, want, got))
        return out


def _chain3():
    return build_chain(3, names=["0", "a", "1"], name="chain3")


def _remark_iib():
    L = build_product(_chain3(), build_chain(2), name="chain3xchain2")
    image = {"11": "a1", "10": "a1", "a1": "a1", "00": "01", "a0": "01", "01": "01"}
    return FnTable(L, 1, [L.element(image[s]) for s in L.names], name="remark-iib")


def _remark_iic():
    L = _chain3()
    zero, a, one = (L.element(s) for s in "0a1")

    def f(x1, x2):
        if zero in (x1, x2):
            return zero
        return a if x1 == a else one

    return FnTable(L, 2, [f(x1, x2) for x2 in L.elements for x1 in L.elements],
                   name="remark-iic")


def _remark_iii():
    L = build_chain(2, name="chain2")
    ones = {(1, 0, 0), (1, 1, 1)}
    return FnTable(L, 3, [int((x1, x2, x3) in ones)
                          for x3 in (0, 1) for x2 in (0, 1) for x1 in (0, 1)],
                   name="remark-iii")


def _remark_iv():
    L = build_chain(4, names=["0", "1/3", "2/3", "1"], name="chain4")
    return FnTable(L, 1, [0, 0, 3, 3], name="remark-iv")


def _expr(lattice, text, n, name):
    def build():
        L = lattice()
        return tabulate(L, parse_expr(text, n, L), n, name=name)
    return build


FIXTURES = [
    GalleryFixture(
        "remark-iib", "unary map on {0,a,1}x{0,1}: every local condition holds except the componentwise homomorphisms",
        _remark_iib,
        {"componentwise-meet-homomorphism": False, "componentwise-join-homomorphism": False,
         "strongly-idempotent": True, "convex-range": True, "componentwise-convex-range": True,
         "nondecreasing": True, "median-decomposable": False, "polynomial": False}),
    GalleryFixture(
        "remark-iic", "binary map on {0,a,1} lacking only a componentwise convex range",
        _remark_iic,
        {"componentwise-meet-homomorphism": True, "componentwise-join-homomorphism": True,
         "strongly-idempotent": True, "convex-range": True, "componentwise-convex-range": False,
         "median-decomposable": False, "polynomial": False}),
    GalleryFixture(
        "remark-iii", "Boolean map between f(0) and f(1) that is not nondecreasing",
        _remark_iii,
        {"meet-homogeneous@hull": True, "join-homogeneous@hull": True,
         "horizontally-meet-decomposable@hull": True, "horizontally-join-decomposable@hull": True,
         "idempotent@hull": True, "nondecreasing": False, "polynomial": False}),
    GalleryFixture(
        "remark-iv", "step map on {0,1/3,2/3,1}: R_f-homogeneous but not median decomposable",
        _remark_iv,
        {"meet-homogeneous@range": True, "join-homogeneous@range": True,
         "horizontally-meet-decomposable@range": True,
         "horizontally-join-decomposable@range": True,
         "meet-homogeneous@hull": False, "join-homogeneous@hull": False,
         "horizontally-meet-decomposable@full": True,
         "horizontally-join-decomposable@full": True,
         "convex-range": False, "median-decomposable": False, "polynomial": False}),
    GalleryFixture(
        "meet-with-d", "x ∧ a on a 3-chain: needs {1}-idempotency to be excluded",
        _expr(_chain3, "(meet x1 c:a)", 1, "meet-with-d"),
        {"meet-homogeneous@full": True, "horizontally-join-decomposable@full": True,
         "componentwise-join-homomorphism": True, "join-homogeneous@full": False,
         "top-idempotent": False, "sugeno": False, "polynomial": True}),
    GalleryFixture(
        "join-with-d", "x ∨ a on a 3-chain: needs {0}-idempotency to be excluded",
        _expr(_chain3, "(join x1 c:a)", 1, "join-with-d"),
        {"join-homogeneous@full": True, "horizontally-meet-decomposable@full": True,
         "componentwise-meet-homomorphism": True, "meet-homogeneous@full": False,
         "bottom-idempotent": False, "sugeno": False, "polynomial": True}),
    GalleryFixture(
        "diamond-join", "x1 ∨ x2 on the diamond: a term function that is not conservative",
        _expr(build_diamond, "(join x1 x2)", 2, "diamond-join"),
        {"conservative": False, "weakly-conservative": True, "term": True, "sugeno": True}),
    GalleryFixture(
        "chain-join", "x1 ∨ x2 on a 3-chain: term functions on chains are conservative",
        _expr(_chain3, "(join x1 x2)", 2, "chain-join"),
        {"conservative": True, "weakly-conservative": True, "term": True}),
    GalleryFixture(
        "absorption-dnf", "x1 ∨ (x1 ∧ x2) = x1: several DNF and CNF representations",
        _expr(lambda: build_chain(2, name="chain2"), "(join x1 (meet x1 x2))", 2,
              "absorption-dnf"),
        {"polynomial": True, "unique-dnf": False, "unique-cnf": False}),
    GalleryFixture(
        "diamond-dnf", "((a ∨ b) ∧ x) ∨ a = (b ∧ x) ∨ a on the diamond",
        _expr(build_diamond, "(join (meet (join c:a c:b) x1) c:a)", 1, "diamond-dnf"),
        {"polynomial": True, "unique-dnf": False}),
]


def run_gallery(fixtures=None):
    """Replay every fixture; returns a list of (fixture name, mismatches)."""
    return [(fx.name, fx.replay()) for fx in (fixtures or FIXTURES)]
