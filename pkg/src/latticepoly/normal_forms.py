"""Disjunctive and conjunctive normal forms of lattice polynomial functions.

A DNF coefficient map α represents ``x ↦ ⋁_I (α(I) ∧ ⋀_{i∈I} x_i)``; a CNF
map β represents ``x ↦ ⋀_I (β(I) ∨ ⋁_{i∈I} x_i)``. The empty meet is the
top element and the empty join is the bottom element.
"""

from __future__ import annotations

import numpy as np

from .errors import ArityError, BudgetError, NotExtendableError, PreconditionError
from .report import PropertyReport, Witness
from .table import (
    DEFAULT_TABLE_BUDGET,
    CoefficientMap,
    FnTable,
    cube_point,
    format_subset,
    grid,
    proper_subsets,
)

DEFAULT_ENUMERATION_BUDGET = 10**6


def cube_indices(L, n):
    """Table index of ``e_I`` for every bitmask I."""
    g = grid(L.size, n)
    out = np.empty(1 << n, dtype=np.int64)
    for mask in range(1 << n):
        out[mask] = g.index(np.array(cube_point(L, n, mask)))
    return out


def alpha(f):
    """``α_f(I) = f(e_I)``."""
    return CoefficientMap(f.arity, f.values[cube_indices(f.lattice, f.arity)])


def beta(f):
    """``β_f(I) = f(e_{[n]∖I})``."""
    n = f.arity
    full = (1 << n) - 1
    idx = cube_indices(f.lattice, n)
    return CoefficientMap(n, [f.values[idx[full ^ mask]] for mask in range(1 << n)])


def _proper_join(L, coeffs, mask):
    return L.join_all(coeffs[J] for J in proper_subsets(mask))


def _proper_meet(L, coeffs, mask):
    return L.meet_all(coeffs[J] for J in proper_subsets(mask))


def monotonicity_violation(L, coeffs, increasing=True):
    """First pair (I, I ∪ {i}) breaking isotonicity (antitonicity if not increasing)."""
    n = coeffs.arity
    for mask in range(1 << n):
        for i in range(n):
            if mask >> i & 1:
                continue
            bigger = mask | 1 << i
            lo, hi = coeffs[mask], coeffs[bigger]
            ok = L.leq(lo, hi) if increasing else L.leq(hi, lo)
            if not ok:
                return mask, bigger
    return None


def _require_monotone(L, coeffs, increasing, what):
    bad = monotonicity_violation(L, coeffs, increasing)
    if bad is not None:
        n = coeffs.arity
        word = "isotone" if increasing else "antitone"
        raise PreconditionError(f"{what} is not {word}: "
                                f"{format_subset(bad[0], n)} vs {format_subset(bad[1], n)}")


def alpha_star(f):
    """α_f with every coefficient already covered by its proper subsets zeroed out."""
    L = f.lattice
    a = alpha(f)
    _require_monotone(L, a, True, "alpha_f")
    out = []
    for mask in range(1 << f.arity):
        below = _proper_join(L, a, mask)
        out.append(a[mask] if L.lt(below, a[mask]) else L.bottom)
    return CoefficientMap(f.arity, out)


def beta_star(f):
    """Dual of :func:`alpha_star`: coefficients not strictly below their proper subsets go to top."""
    L = f.lattice
    b = beta(f)
    _require_monotone(L, b, False, "beta_f")
    out = []
    for mask in range(1 << f.arity):
        above = _proper_meet(L, b, mask)
        out.append(b[mask] if L.lt(b[mask], above) else L.top)
    return CoefficientMap(f.arity, out)


def _check_arity(coeffs, x):
    if len(x) != coeffs.arity:
        raise ArityError(f"coefficient map has arity {coeffs.arity}, got {len(x)} arguments")


def eval_dnf(L, coeffs, x):
    _check_arity(coeffs, x)
    L.check(*x)
    acc = L.bottom
    for mask, c in enumerate(coeffs):
        term = L.meet_all([c] + [x[i] for i in range(coeffs.arity) if mask >> i & 1])
        acc = L.join(acc, term)
    return acc


def eval_cnf(L, coeffs, x):
    _check_arity(coeffs, x)
    L.check(*x)
    acc = L.top
    for mask, c in enumerate(coeffs):
        term = L.join_all([c] + [x[i] for i in range(coeffs.arity) if mask >> i & 1])
        acc = L.meet(acc, term)
    return acc


def _batch_dnf(L, coeff_rows, n):
    """DNF tables for many coefficient maps at once: rows (K, 2^n) -> (K, N)."""
    g = grid(L.size, n)
    M, J = L.meet_table, L.join_table
    rows = np.asarray(coeff_rows, dtype=np.int64)
    out = np.full((rows.shape[0], g.count), L.bottom, dtype=np.int64)
    for mask in range(1 << n):
        term = np.broadcast_to(rows[:, mask:mask + 1], out.shape)
        for i in range(n):
            if mask >> i & 1:
                term = M[term, g.coords[None, :, i]]
        out = J[out, term]
    return out


def _batch_cnf(L, coeff_rows, n):
    g = grid(L.size, n)
    M, J = L.meet_table, L.join_table
    rows = np.asarray(coeff_rows, dtype=np.int64)
    out = np.full((rows.shape[0], g.count), L.top, dtype=np.int64)
    for mask in range(1 << n):
        term = np.broadcast_to(rows[:, mask:mask + 1], out.shape)
        for i in range(n):
            if mask >> i & 1:
                term = J[term, g.coords[None, :, i]]
        out = M[out, term]
    return out


def dnf_table(L, coeffs, name="f"):
    return FnTable(L, coeffs.arity, _batch_dnf(L, [coeffs.values], coeffs.arity)[0], name=name)


def cnf_table(L, coeffs, name="f"):
    return FnTable(L, coeffs.arity, _batch_cnf(L, [coeffs.values], coeffs.arity)[0], name=name)


def is_polynomial(f):
    """Cube-restriction test: α_f isotone and its DNF reproduces the whole table."""
    L, n = f.lattice, f.arity
    a = alpha(f)
    bad = monotonicity_violation(L, a)
    if bad is not None:
        return PropertyReport("polynomial", False,
                              Witness(x=cube_point(L, n, bad[0]), aux=cube_point(L, n, bad[1]),
                                      note="cube restriction not nondecreasing"))
    rebuilt = _batch_dnf(L, [a.values], n)[0]
    diff = np.flatnonzero(rebuilt != f.values)
    if len(diff):
        x = tuple(int(v) for v in f.grid.coords[diff[0]])
        return PropertyReport("polynomial", False,
                              Witness(x=x, note="differs from the extension of its cube restriction"))
    return PropertyReport("polynomial", True)


def _require_polynomial(f):
    report = is_polynomial(f)
    if not report.holds:
        raise PreconditionError(f"{f.name} is not a polynomial function "
                                f"({report.witness.describe(f.lattice)})")


def in_dnf_set(f, coeffs):
    """Membership of α in DNF(f), decided through the characterising set A(f)."""
    _require_polynomial(f)
    if coeffs.arity != f.arity:
        raise ArityError("coefficient map and function arities differ")
    L = f.lattice
    a = alpha(f)
    for mask in range(1 << f.arity):
        if not L.leq(coeffs[mask], a[mask]):
            return False
        if L.lt(_proper_join(L, a, mask), a[mask]):
            if L.join(coeffs[mask], _proper_join(L, coeffs, mask)) != a[mask]:
                return False
    return True


def in_cnf_set(f, coeffs):
    """Membership of β in CNF(f), decided through the characterising set B(f)."""
    _require_polynomial(f)
    if coeffs.arity != f.arity:
        raise ArityError("coefficient map and function arities differ")
    L = f.lattice
    b = beta(f)
    for mask in range(1 << f.arity):
        if not L.leq(b[mask], coeffs[mask]):
            return False
        if L.lt(b[mask], _proper_meet(L, b, mask)):
            if L.meet(coeffs[mask], _proper_meet(L, coeffs, mask)) != b[mask]:
                return False
    return True


def _enumerate(f, batch, budget):
    L, n = f.lattice, f.arity
    width = 1 << n
    total = L.size ** width
    if total > budget:
        raise BudgetError(f"{L.size}^{width} = {total} coefficient maps exceeds budget {budget}")
    place = L.size ** np.arange(width - 1, -1, -1, dtype=np.int64)
    chunk = max(1, 2**16 // max(1, L.size ** n))
    found = []
    for start in range(0, total, chunk):
        ids = np.arange(start, min(total, start + chunk), dtype=np.int64)
        rows = (ids[:, None] // place[None, :]) % L.size
        tables = batch(L, rows, n)
        hits = np.flatnonzero((tables == f.values[None, :]).all(axis=1))
        found.extend(CoefficientMap(n, rows[h]) for h in hits)
    return found


def enumerate_dnf_set(f, budget=DEFAULT_ENUMERATION_BUDGET):
    """Every α whose DNF equals f, in lexicographic order of (α(∅), α({1}), ...)."""
    return _enumerate(f, _batch_dnf, budget)


def enumerate_cnf_set(f, budget=DEFAULT_ENUMERATION_BUDGET):
    return _enumerate(f, _batch_cnf, budget)


def unique_dnf(f):
    """Whether DNF(f) is a singleton.

    A coefficient equal to the join of its proper-subset coefficients can be
    lowered to bottom, which yields a second representation unless it is
    already bottom; a strictly larger coefficient stays unique when no other
    element b satisfies ``α_f(I) = b ∨ ⋁_{J⊊I} α_f(J)``.
    """
    _require_polynomial(f)
    L = f.lattice
    a = alpha(f)
    for mask in range(1 << f.arity):
        below = _proper_join(L, a, mask)
        if below == a[mask]:
            if a[mask] != L.bottom:
                return False
            continue
        for b in L.elements:
            if b != a[mask] and L.join(b, below) == a[mask]:
                return False
    return True


def unique_cnf(f):
    _require_polynomial(f)
    L = f.lattice
    b = beta(f)
    for mask in range(1 << f.arity):
        above = _proper_meet(L, b, mask)
        if above == b[mask]:
            if b[mask] != L.top:
                return False
            continue
        for c in L.elements:
            if c != b[mask] and L.meet(c, above) == b[mask]:
                return False
    return True


def extend_from_cube(L, g, name="f"):
    """The unique polynomial function whose restriction to {0,1}^n is g."""
    bad = monotonicity_violation(L, g)
    if bad is not None:
        n = g.arity
        raise NotExtendableError(
            f"cube map not nondecreasing: g({format_subset(bad[0], n)})={L.names[g[bad[0]]]} "
            f"is not below g({format_subset(bad[1], n)})={L.names[g[bad[1]]]}", pair=bad)
    return dnf_table(L, g, name=name)


def join_maps(L, a, b):
    return CoefficientMap(a.arity, [L.join(x, y) for x, y in zip(a, b)])


def meet_maps(L, a, b):
    return CoefficientMap(a.arity, [L.meet(x, y) for x, y in zip(a, b)])


def diagonal(f):
    """``δ_f(x) = f(x, ..., x)`` as a unary table."""
    L = f.lattice
    g = grid(L.size, f.arity)
    return FnTable(L, 1, [f.values[g.constant(c)] for c in L.elements], name=f"diag({f.name})")


def clamp_range(f, x):
    """Componentwise ``median(f(0̄), x_i, f(1̄))``."""
    lo, hi = f.bottom_value(), f.top_value()
    return tuple(f.lattice.median3(lo, xi, hi) for xi in x)


def all_monotone_cube_maps(L, n, budget=DEFAULT_TABLE_BUDGET):
    """Every isotone map 2^[n] → L, built subset by subset with pruning."""
    width = 1 << n
    order = sorted(range(width), key=lambda m: (bin(m).count("1"), m))
    maps = []
    current = [0] * width
    steps = 0

    def extend(pos):
        nonlocal steps
        if pos == width:
            maps.append(CoefficientMap(n, current))
            return
        mask = order[pos]
        lower = [mask & ~(1 << i) for i in range(n) if mask >> i & 1]
        floor = L.join_all(current[J] for J in lower)
        for v in L.elements:
            steps += 1
            if steps > budget:
                raise BudgetError(f"monotone map enumeration exceeds budget {budget}")
            if L.leq_table[floor, v]:
                current[mask] = v
                extend(pos + 1)

    extend(0)
    return maps


def all_polynomials(L, n, budget=DEFAULT_TABLE_BUDGET):
    """Every polynomial function of arity n over L (one per monotone cube map)."""
    return [extend_from_cube(L, g, name=f"p{i}")
            for i, g in enumerate(all_monotone_cube_maps(L, n, budget))]

