"""Condition profiles for the two characterisation theorems and the harness
that checks they agree over a universe of function tables."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .classes import is_sugeno
from .errors import BudgetError
from .expr import random_expr, tabulate
from .normal_forms import is_polynomial
from .properties import (
    comp_join_homomorphism,
    comp_meet_homomorphism,
    has_componentwise_convex_range,
    has_convex_range,
    horiz_join_decomposable,
    horiz_meet_decomposable,
    is_idempotent_over,
    is_join_homogeneous,
    is_meet_homogeneous,
    is_median_decomposable,
    is_nondecreasing,
    is_strongly_idempotent,
    range_hull,
)
from .table import FnTable

CONDITIONS = ("i", "ii", "iii", "iv", "v", "vi", "vii")
DEFAULT_UNIVERSE_BUDGET = 10**6


@dataclass(frozen=True)
class Profile:
    kind: str                      # "main" or "sugeno"
    conditions: tuple              # one boolean per condition (i)..(vii)
    atoms: dict = field(compare=False)

    @property
    def agrees(self):
        return len(set(self.conditions)) == 1

    def __iter__(self):
        return iter(self.conditions)


class _Atoms(dict):
    """Lazily evaluated named property outcomes for one function."""

    def __init__(self, f, checks):
        super().__init__()
        self._f = f
        self._checks = checks

    def __missing__(self, key):
        value = bool(self._checks[key](self._f))
        self[key] = value
        return value


def theorem_profile(f):
    """Conditions (i)..(vii) of the polynomial-function characterisation, levels in co(R_f)."""
    hull = None

    def S(_f):
        nonlocal hull
        if hull is None:
            hull = range_hull(_f)
        return hull

    checks = {
        "polynomial": lambda g: is_polynomial(g).holds,
        "median-decomposable": lambda g: is_median_decomposable(g).holds,
        "P-meet": lambda g: comp_meet_homomorphism(g).holds,
        "P-join": lambda g: comp_join_homomorphism(g).holds,
        "strongly-idempotent": lambda g: is_strongly_idempotent(g).holds,
        "convex-range": lambda g: has_convex_range(g).holds,
        "componentwise-convex-range": lambda g: has_componentwise_convex_range(g).holds,
        "nondecreasing": lambda g: is_nondecreasing(g).holds,
        "meet-homogeneous": lambda g: is_meet_homogeneous(g, S(g)).holds,
        "join-homogeneous": lambda g: is_join_homogeneous(g, S(g)).holds,
        "horiz-meet": lambda g: horiz_meet_decomposable(g, S(g)).holds,
        "horiz-join": lambda g: horiz_join_decomposable(g, S(g)).holds,
        "idempotent": lambda g: is_idempotent_over(g, S(g)).holds,
    }
    a = _Atoms(f, checks)
    conditions = (
        a["polynomial"],
        a["median-decomposable"],
        a["P-meet"] and a["P-join"] and a["strongly-idempotent"]
        and a["convex-range"] and a["componentwise-convex-range"],
        a["nondecreasing"] and a["meet-homogeneous"] and a["join-homogeneous"],
        a["P-join"] and a["meet-homogeneous"] and a["horiz-join"],
        a["P-meet"] and a["horiz-meet"] and a["join-homogeneous"],
        a["P-meet"] and a["P-join"] and a["idempotent"] and a["horiz-meet"] and a["horiz-join"],
    )
    return Profile("main", conditions, a)


def sugeno_profile(f):
    """Conditions (i)..(vii) of the Sugeno-integral characterisation (levels in L)."""
    L = f.lattice
    full = frozenset(L.elements)
    checks = {
        "sugeno": is_sugeno,
        "median-decomposable": lambda g: is_median_decomposable(g).holds,
        "P-meet": lambda g: comp_meet_homomorphism(g).holds,
        "P-join": lambda g: comp_join_homomorphism(g).holds,
        "strongly-idempotent": lambda g: is_strongly_idempotent(g).holds,
        "range-is-L": lambda g: g.range() == full,
        "componentwise-convex-range": lambda g: has_componentwise_convex_range(g).holds,
        "nondecreasing": lambda g: is_nondecreasing(g).holds,
        "meet-homogeneous": lambda g: is_meet_homogeneous(g, full).holds,
        "join-homogeneous": lambda g: is_join_homogeneous(g, full).holds,
        "horiz-meet": lambda g: horiz_meet_decomposable(g, full).holds,
        "horiz-join": lambda g: horiz_join_decomposable(g, full).holds,
        "idempotent": lambda g: is_idempotent_over(g, full).holds,
        "bottom-idempotent": lambda g: is_idempotent_over(g, {L.bottom}).holds,
        "top-idempotent": lambda g: is_idempotent_over(g, {L.top}).holds,
    }
    a = _Atoms(f, checks)
    conditions = (
        a["sugeno"],
        a["bottom-idempotent"] and a["top-idempotent"] and a["median-decomposable"],
        a["P-meet"] and a["P-join"] and a["strongly-idempotent"]
        and a["range-is-L"] and a["componentwise-convex-range"],
        a["nondecreasing"] and a["meet-homogeneous"] and a["join-homogeneous"],
        a["P-join"] and a["top-idempotent"] and a["meet-homogeneous"] and a["horiz-join"],
        a["P-meet"] and a["bottom-idempotent"] and a["horiz-meet"] and a["join-homogeneous"],
        a["P-meet"] and a["P-join"] and a["idempotent"] and a["horiz-meet"] and a["horiz-join"],
    )
    return Profile("sugeno", conditions, a)


PROFILES = {"main": theorem_profile, "sugeno": sugeno_profile}


# -- universes -------------------------------------------------------------------

def universe_size(L, n):
    return L.size ** (L.size ** n)


def all_tables(L, n, budget=DEFAULT_UNIVERSE_BUDGET):
    """Every function L^n → L, in lexicographic order of the value vector (x=0̄ slowest)."""
    N = L.size ** n
    total = universe_size(L, n)
    if total > budget:
        raise BudgetError(f"{L.size}^{N} = {total} tables exceeds the universe budget "
                          f"{budget}; use sampling instead")
    place = L.size ** np.arange(N - 1, -1, -1, dtype=np.int64)
    chunk = 4096
    for start in range(0, total, chunk):
        ids = np.arange(start, min(total, start + chunk), dtype=np.int64)
        for row in (ids[:, None] // place[None, :]) % L.size:
            yield FnTable(L, n, row, name=f"t{start}")


def sampled_tables(L, n, samples, seed, max_depth=5):
    """Seeded mix: tabulated random expressions, each followed by a one-entry perturbation."""
    rng = random.Random(seed)
    for i in range(samples):
        f = tabulate(L, random_expr(L, n, rng, max_depth), n, name=f"e{i}")
        if i % 2 == 0:
            yield f
        else:
            values = f.values.copy()
            pos = rng.randrange(len(values))
            values[pos] = (values[pos] + rng.randrange(1, L.size)) % L.size if L.size > 1 else 0
            yield FnTable(L, n, values, name=f"p{i}")


@dataclass
class VerifyResult:
    kind: str
    lattice: str
    arity: int
    mode: str
    seed: int | None
    total: int = 0
    all_true: int = 0
    all_false: int = 0
    condition_true: Counter = field(default_factory=Counter)
    disagreements: list = field(default_factory=list)
    range_convexity_separating: int = 0

    @property
    def ok(self):
        return not self.disagreements

    def lines(self):
        yield f"theorem={self.kind}"
        yield f"lattice={self.lattice}"
        yield f"arity={self.arity}"
        yield f"mode={self.mode}"
        yield f"seed={self.seed if self.seed is not None else 'none'}"
        yield f"tables={self.total}"
        yield f"all_true={self.all_true}"
        yield f"all_false={self.all_false}"
        for c in CONDITIONS:
            yield f"condition_{c}_true={self.condition_true[c]}"
        yield f"disagreements={len(self.disagreements)}"
        if self.kind == "main":
            yield f"range_convexity_separating={self.range_convexity_separating}"


def verify_theorem(L, n, kind="main", *, exhaustive=True, samples=0, seed=0,
                   budget=DEFAULT_UNIVERSE_BUDGET):
    """Evaluate the chosen profile over the universe and collect disagreements."""
    profile = PROFILES[kind]
    if exhaustive:
        tables = all_tables(L, n, budget)
        result = VerifyResult(kind, L.name, n, "exhaustive", None)
    else:
        tables = sampled_tables(L, n, samples, seed)
        result = VerifyResult(kind, L.name, n, "samples", seed)
    for f in tables:
        p = profile(f)
        result.total += 1
        for name, value in zip(CONDITIONS, p.conditions):
            result.condition_true[name] += value
        if all(p.conditions):
            result.all_true += 1
        elif not any(p.conditions):
            result.all_false += 1
        else:
            result.disagreements.append((f, p))
        if kind == "main":
            a = p.atoms
            # would condition (iii) hold with range convexity dropped?
            if (a["P-meet"] and a["P-join"] and a["strongly-idempotent"]
                    and a["componentwise-convex-range"] and not a["convex-range"]):
                result.range_convexity_separating += 1
    return result
