"""Shared constructors for the test-suite."""

import oracles
from latticepoly import build_chain, build_diamond, build_product
from latticepoly.expr import parse_expr, tabulate


def named_chain3():
    return build_chain(3, names=["0", "a", "1"], name="chain3")


def lattice_pairs():
    """(package lattice, oracle lattice) for every small lattice used in tests."""
    return {
        "chain1": (build_chain(1), oracles.chain(1)),
        "chain2": (build_chain(2), oracles.chain(2)),
        "chain3": (named_chain3(), oracles.chain(3)),
        "chain4": (build_chain(4), oracles.chain(4)),
        "diamond": (build_diamond(), oracles.diamond()),
        "chain3xchain2": (build_product(build_chain(3), build_chain(2)),
                          oracles.product_lattice(oracles.chain(3), oracles.chain(2))),
    }


def fn(L, text, n, name="f"):
    """Tabulate an s-expression."""
    return tabulate(L, parse_expr(text, n, L), n, name=name)
