"""Decidable checkers for the characterising properties of polynomial functions.

Every checker scans its whole domain (no sampling) and, on failure, reports
the first violation in canonical order: smallest tuple index first, then
coordinate, then level parameters. :func:`replay` re-evaluates a witness
through plain scalar lattice operations, independently of the vectorised scan.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import BudgetError, PreconditionError
from .lattice import convex_hull, interval
from .normal_forms import is_polynomial
from .report import PropertyReport, Witness
from .table import DEFAULT_TABLE_BUDGET, first_violation

LEVEL_MODES = ("range", "hull", "full")


def _tuple(row):
    return tuple(int(v) for v in row)


def _levels(f, S):
    if S is None:
        S = range_hull(f)
    S = np.array(sorted(int(c) for c in S), dtype=np.int64)
    if S.size == 0:
        raise PreconditionError("level set must be nonempty")
    f.lattice.check(*S.tolist())
    return S


def _budget(count, what):
    if count > DEFAULT_TABLE_BUDGET * 16:
        raise BudgetError(f"{what} scan needs {count} evaluations")


def range_hull(f):
    """co(R_f): the interval [f(0̄), f(1̄)] for nondecreasing f, else the hull of the range."""
    if is_nondecreasing(f).holds:
        return interval(f.lattice, f.bottom_value(), f.top_value())
    return convex_hull(f.lattice, f.range())


def level_set(f, mode):
    """Resolve a level-set mode name to a set of elements."""
    if mode == "range":
        return f.range()
    if mode == "hull":
        return range_hull(f)
    if mode == "full":
        return frozenset(f.lattice.elements)
    raise ValueError(f"unknown level-set mode {mode!r}; expected one of {LEVEL_MODES}")


def is_nondecreasing(f):
    L, g, v = f.lattice, f.grid, f.values
    if not L.covers or f.arity == 0:
        return PropertyReport("nondecreasing", True)
    U = np.array([u for u, _ in L.covers])
    V = np.array([w for _, w in L.covers])
    bad = np.zeros((g.count, f.arity, len(U)), dtype=bool)
    for k in range(f.arity):
        applies = g.coords[:, k:k + 1] == U[None, :]
        raised = v[g.substitute(k, V)]
        bad[:, k, :] = applies & ~L.leq_table[v[:, None], raised]
    hit = first_violation(bad)
    if hit is None:
        return PropertyReport("nondecreasing", True)
    i, k, c = hit
    return PropertyReport("nondecreasing", False,
                          Witness(x=_tuple(g.coords[i]), k=k + 1, levels=(int(V[c]),)))


def _homogeneous(f, S, table, name):
    g, v = f.grid, f.values
    S = _levels(f, S)
    cut = table[g.coords[:, :, None], S[None, None, :]]       # (N, n, |S|)
    lhs = v[np.einsum("nis,i->ns", cut, g.weights)]
    rhs = table[v[:, None], S[None, :]]
    hit = first_violation(lhs != rhs)
    if hit is None:
        return PropertyReport(name, True)
    i, c = hit
    return PropertyReport(name, False, Witness(x=_tuple(g.coords[i]), levels=(int(S[c]),)))


def is_meet_homogeneous(f, S=None):
    """``f(x ∧ c) = f(x) ∧ c`` for all x and all c in S."""
    return _homogeneous(f, S, f.lattice.meet_table, "meet-homogeneous")


def is_join_homogeneous(f, S=None):
    """``f(x ∨ c) = f(x) ∨ c`` for all x and all c in S."""
    return _homogeneous(f, S, f.lattice.join_table, "join-homogeneous")


def is_idempotent_over(f, S=None):
    g = f.grid
    S = _levels(f, S)
    for c in S:
        if f.values[g.constant(c)] != c:
            c = int(c)
            return PropertyReport("idempotent", False, Witness(x=(c,) * f.arity, levels=(c,)))
    return PropertyReport("idempotent", True)


def median_level_identity(f, S=None):
    """``f(median(r, x, s)) = median(r, f(x), s)`` for all x and r, s in S."""
    L, g, v = f.lattice, f.grid, f.values
    S = _levels(f, S)
    _budget(g.count * f.arity * len(S) ** 2, "median-level")
    med = L.median_table
    r = S[None, None, :, None]
    s = S[None, None, None, :]
    clamped = med[r, g.coords[:, :, None, None], s]            # (N, n, |S|, |S|)
    lhs = v[np.einsum("nirs,i->nrs", clamped, g.weights)]
    rhs = med[S[None, :, None], v[:, None, None], S[None, None, :]]
    hit = first_violation(lhs != rhs)
    if hit is None:
        return PropertyReport("median-level-identity", True)
    i, a, b = hit
    return PropertyReport("median-level-identity", False,
                          Witness(x=_tuple(g.coords[i]), levels=(int(S[a]), int(S[b]))))


def upper_cut(L, x, c):
    """``[x]^c``: coordinates at or above c become top."""
    return tuple(L.top if L.leq(c, xi) else xi for xi in x)


def lower_cut(L, x, c):
    """``[x]_c``: coordinates at or below c become bottom."""
    return tuple(L.bottom if L.leq(xi, c) else xi for xi in x)


def horiz_meet_decomposable(f, S=None):
    """``f(x) = f(x ∨ c) ∧ f([x]^c)`` for all x and c in S."""
    L, g, v = f.lattice, f.grid, f.values
    S = _levels(f, S)
    C = g.coords[:, :, None]
    raised = L.join_table[C, S[None, None, :]]
    cut = np.where(L.leq_table[S[None, None, :], C], L.top, C)
    rhs = L.meet_table[v[np.einsum("nis,i->ns", raised, g.weights)],
                       v[np.einsum("nis,i->ns", cut, g.weights)]]
    hit = first_violation(rhs != v[:, None])
    if hit is None:
        return PropertyReport("horizontally-meet-decomposable", True)
    i, c = hit
    return PropertyReport("horizontally-meet-decomposable", False,
                          Witness(x=_tuple(g.coords[i]), levels=(int(S[c]),)))


def horiz_join_decomposable(f, S=None):
    """``f(x) = f(x ∧ c) ∨ f([x]_c)`` for all x and c in S."""
    L, g, v = f.lattice, f.grid, f.values
    S = _levels(f, S)
    C = g.coords[:, :, None]
    lowered = L.meet_table[C, S[None, None, :]]
    cut = np.where(L.leq_table[C, S[None, None, :]], L.bottom, C)
    rhs = L.join_table[v[np.einsum("nis,i->ns", lowered, g.weights)],
                       v[np.einsum("nis,i->ns", cut, g.weights)]]
    hit = first_violation(rhs != v[:, None])
    if hit is None:
        return PropertyReport("horizontally-join-decomposable", True)
    i, c = hit
    return PropertyReport("horizontally-join-decomposable", False,
                          Witness(x=_tuple(g.coords[i]), levels=(int(S[c]),)))


def is_median_decomposable(f):
    """``f(x) = median(f(x_k^0), x_k, f(x_k^1))`` for every x and k."""
    L, g, v = f.lattice, f.grid, f.values
    bad = np.zeros((g.count, f.arity), dtype=bool)
    for k in range(f.arity):
        lo = v[g.substitute(k, [L.bottom])[:, 0]]
        hi = v[g.substitute(k, [L.top])[:, 0]]
        bad[:, k] = L.median_table[lo, g.coords[:, k], hi] != v
    hit = first_violation(bad)
    if hit is None:
        return PropertyReport("median-decomposable", True)
    i, k = hit
    return PropertyReport("median-decomposable", False, Witness(x=_tuple(g.coords[i]), k=k + 1))


def is_strongly_idempotent(f):
    """Replacing any argument by ``f(x)`` leaves the value unchanged."""
    g, v = f.grid, f.values
    bad = np.zeros((g.count, f.arity), dtype=bool)
    for k in range(f.arity):
        idx = np.arange(g.count) + (v - g.coords[:, k]) * g.weights[k]
        bad[:, k] = v[idx] != v
    hit = first_violation(bad)
    if hit is None:
        return PropertyReport("strongly-idempotent", True)
    i, k = hit
    return PropertyReport("strongly-idempotent", False, Witness(x=_tuple(g.coords[i]), k=k + 1))


def _componentwise_hom(f, table, name):
    L, g, v = f.lattice, f.grid, f.values
    m = L.size
    _budget(g.count * f.arity * m * m, name)
    bad = np.zeros((g.count, f.arity, m, m), dtype=bool)
    for k in range(f.arity):
        fa = v[g.substitute(k, np.arange(m))]                  # (N, m): f(x_k^a)
        lhs = fa[:, table]                                     # f(x_k^{a op b})
        rhs = table[fa[:, :, None], fa[:, None, :]]
        bad[:, k] = lhs != rhs
    hit = first_violation(bad)
    if hit is None:
        return PropertyReport(name, True)
    i, k, a, b = hit
    return PropertyReport(name, False, Witness(x=_tuple(g.coords[i]), k=k + 1, levels=(a, b)))


def comp_meet_homomorphism(f):
    """P∧: ``f(x_k^{a∧b}) = f(x_k^a) ∧ f(x_k^b)``."""
    return _componentwise_hom(f, f.lattice.meet_table, "componentwise-meet-homomorphism")


def comp_join_homomorphism(f):
    """P∨: ``f(x_k^{a∨b}) = f(x_k^a) ∨ f(x_k^b)``."""
    return _componentwise_hom(f, f.lattice.join_table, "componentwise-join-homomorphism")


def _hull_gaps(L, members):
    """For boolean membership rows (..., m): elements inside the hull but not members."""
    leq = L.leq_table.astype(np.int64)
    mem = members.astype(np.int64)
    has_below = (mem @ leq) > 0
    has_above = (mem @ leq.T) > 0
    return has_below & has_above & ~members


def has_convex_range(f):
    L, g, v = f.lattice, f.grid, f.values
    members = np.zeros(L.size, dtype=bool)
    members[v] = True
    gaps = np.flatnonzero(_hull_gaps(L, members))
    if not len(gaps):
        return PropertyReport("convex-range", True)
    c = int(gaps[0])
    lo = int(np.flatnonzero(L.leq_table[v, c])[0])
    hi = int(np.flatnonzero(L.leq_table[c, v])[0])
    return PropertyReport("convex-range", False,
                          Witness(x=_tuple(g.coords[lo]), levels=(c,), aux=_tuple(g.coords[hi]),
                                  note="level lies between f(x) and f(aux) but outside the range"))


def has_componentwise_convex_range(f):
    """Every unary section ``t ↦ f(a_k^t)`` has a convex range."""
    L, g, v = f.lattice, f.grid, f.values
    m = L.size
    bad = np.zeros((g.count, f.arity, m), dtype=bool)
    rows = np.arange(g.count)[:, None]
    for k in range(f.arity):
        section = v[g.substitute(k, np.arange(m))]
        members = np.zeros((g.count, m), dtype=bool)
        members[rows, section] = True
        bad[:, k, :] = _hull_gaps(L, members)
    hit = first_violation(bad)
    if hit is None:
        return PropertyReport("componentwise-convex-range", True)
    i, k, c = hit
    return PropertyReport("componentwise-convex-range", False,
                          Witness(x=_tuple(g.coords[i]), k=k + 1, levels=(c,)))


def _global_hom(f, table, name):
    g, v = f.grid, f.values
    _budget(g.count ** 2 * max(1, f.arity), name)
    combined = table[g.coords[:, None, :], g.coords[None, :, :]] @ g.weights
    bad = v[combined] != table[v[:, None], v[None, :]]
    hit = first_violation(bad)
    if hit is None:
        return PropertyReport(name, True)
    i, j = hit
    return PropertyReport(name, False, Witness(x=_tuple(g.coords[i]), aux=_tuple(g.coords[j])))


def global_meet_homomorphism(f):
    """``f(x ∧ y) = f(x) ∧ f(y)`` for all x, y."""
    return _global_hom(f, f.lattice.meet_table, "meet-homomorphism")


def global_join_homomorphism(f):
    return _global_hom(f, f.lattice.join_table, "join-homomorphism")


# -- scalar replays ---------------------------------------------------------

def _sub(x, k, c):
    x = list(x)
    x[k - 1] = c
    return tuple(x)


def _replay_nondecreasing(f, w, S):
    x = w.x
    y = _sub(x, w.k, w.levels[0])
    L = f.lattice
    return L.leq(x[w.k - 1], w.levels[0]) and not L.leq(f(x), f(y))


def _replay_meet_hom(f, w, S):
    L, (c,) = f.lattice, w.levels
    return f(tuple(L.meet(xi, c) for xi in w.x)) != L.meet(f(w.x), c)


def _replay_join_hom(f, w, S):
    L, (c,) = f.lattice, w.levels
    return f(tuple(L.join(xi, c) for xi in w.x)) != L.join(f(w.x), c)


def _replay_idempotent(f, w, S):
    return f(w.x) != w.levels[0]


def _replay_median_level(f, w, S):
    L, (r, s) = f.lattice, w.levels
    return f(tuple(L.median3(r, xi, s) for xi in w.x)) != L.median3(r, f(w.x), s)


def _replay_horiz_meet(f, w, S):
    L, (c,) = f.lattice, w.levels
    raised = tuple(L.join(xi, c) for xi in w.x)
    return f(w.x) != L.meet(f(raised), f(upper_cut(L, w.x, c)))


def _replay_horiz_join(f, w, S):
    L, (c,) = f.lattice, w.levels
    lowered = tuple(L.meet(xi, c) for xi in w.x)
    return f(w.x) != L.join(f(lowered), f(lower_cut(L, w.x, c)))


def _replay_median_dec(f, w, S):
    L, x, k = f.lattice, w.x, w.k
    return f(x) != L.median3(f(_sub(x, k, L.bottom)), x[k - 1], f(_sub(x, k, L.top)))


def _replay_strong(f, w, S):
    return f(_sub(w.x, w.k, f(w.x))) != f(w.x)


def _replay_comp_meet(f, w, S):
    L, (a, b) = f.lattice, w.levels
    return f(_sub(w.x, w.k, L.meet(a, b))) != L.meet(f(_sub(w.x, w.k, a)), f(_sub(w.x, w.k, b)))


def _replay_comp_join(f, w, S):
    L, (a, b) = f.lattice, w.levels
    return f(_sub(w.x, w.k, L.join(a, b))) != L.join(f(_sub(w.x, w.k, a)), f(_sub(w.x, w.k, b)))


def _replay_convex(f, w, S):
    L, (c,) = f.lattice, w.levels
    return L.leq(f(w.x), c) and L.leq(c, f(w.aux)) and c not in f.range()


def _replay_comp_convex(f, w, S):
    L, (c,) = f.lattice, w.levels
    values = {f(_sub(w.x, w.k, t)) for t in L.elements}
    inside = any(L.leq(a, c) for a in values) and any(L.leq(c, b) for b in values)
    return inside and c not in values


def _replay_global_meet(f, w, S):
    L = f.lattice
    return f(tuple(L.meet(a, b) for a, b in zip(w.x, w.aux))) != L.meet(f(w.x), f(w.aux))


def _replay_global_join(f, w, S):
    L = f.lattice
    return f(tuple(L.join(a, b) for a, b in zip(w.x, w.aux))) != L.join(f(w.x), f(w.aux))


def _replay_polynomial(f, w, S):
    from .normal_forms import alpha, dnf_table

    L = f.lattice
    if w.aux is not None:
        return not L.leq(f(w.x), f(w.aux))
    return dnf_table(L, alpha(f))(w.x) != f(w.x)


@dataclass(frozen=True)
class Property:
    name: str
    check: Callable
    replay: Callable
    uses_levels: bool = False

    def __call__(self, f, S=None):
        return self.check(f, S) if self.uses_levels else self.check(f)


PROPERTIES = {p.name: p for p in [
    Property("polynomial", is_polynomial, _replay_polynomial),
    Property("nondecreasing", is_nondecreasing, _replay_nondecreasing),
    Property("meet-homogeneous", is_meet_homogeneous, _replay_meet_hom, True),
    Property("join-homogeneous", is_join_homogeneous, _replay_join_hom, True),
    Property("idempotent", is_idempotent_over, _replay_idempotent, True),
    Property("median-level-identity", median_level_identity, _replay_median_level, True),
    Property("horizontally-meet-decomposable", horiz_meet_decomposable, _replay_horiz_meet, True),
    Property("horizontally-join-decomposable", horiz_join_decomposable, _replay_horiz_join, True),
    Property("median-decomposable", is_median_decomposable, _replay_median_dec),
    Property("strongly-idempotent", is_strongly_idempotent, _replay_strong),
    Property("componentwise-meet-homomorphism", comp_meet_homomorphism, _replay_comp_meet),
    Property("componentwise-join-homomorphism", comp_join_homomorphism, _replay_comp_join),
    Property("convex-range", has_convex_range, _replay_convex),
    Property("componentwise-convex-range", has_componentwise_convex_range, _replay_comp_convex),
    Property("meet-homomorphism", global_meet_homomorphism, _replay_global_meet),
    Property("join-homomorphism", global_join_homomorphism, _replay_global_join),
]}


def check_property(name, f, S=None):
    try:
        prop = PROPERTIES[name]
    except KeyError:
        raise ValueError(f"unknown property {name!r}; known: {', '.join(PROPERTIES)}") from None
    return prop(f, S)


def replay(report, f, S=None):
    """True when the report's witness really violates the property's defining equation."""
    if report.holds or report.witness is None:
        raise ValueError("only failing reports carry a witness to replay")
    return PROPERTIES[report.name].replay(f, report.witness, S)
