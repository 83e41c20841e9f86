"""Subclasses of polynomial functions: Sugeno integrals, term functions,
symmetric functions, weighted infima/suprema, and nested-median normal forms."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

import numpy as np

from .errors import ArityError, MeasureError, PreconditionError, VerificationError
from .expr import Const, Med, Var
from .normal_forms import alpha, beta, is_polynomial
from .properties import global_join_homomorphism, global_meet_homomorphism
from .table import CoefficientMap, FnTable, format_subset, grid


def _require_polynomial(f):
    if not is_polynomial(f).holds:
        raise PreconditionError(f"{f.name} is not a polynomial function")


# -- fuzzy measures and Sugeno integrals ------------------------------------

def validate_measure(L, mu):
    """Raise MeasureError unless mu(∅)=0, mu([n])=1 and mu is isotone."""
    n = mu.arity
    full = (1 << n) - 1
    if mu[0] != L.bottom:
        raise MeasureError(f"mu(empty) = {L.names[mu[0]]}, must be {L.names[L.bottom]}",
                           witness=(0,))
    if mu[full] != L.top:
        raise MeasureError(f"mu(full) = {L.names[mu[full]]}, must be {L.names[L.top]}",
                           witness=(full,))
    for mask in range(1 << n):
        for i in range(n):
            if not mask >> i & 1:
                bigger = mask | 1 << i
                if not L.leq(mu[mask], mu[bigger]):
                    raise MeasureError(
                        f"mu({format_subset(mask, n)}) = {L.names[mu[mask]]} is not below "
                        f"mu({format_subset(bigger, n)}) = {L.names[mu[bigger]]}",
                        witness=(mask, bigger))


def sugeno_eval(L, mu, x):
    """``⋁_I (mu(I) ∧ ⋀_{i∈I} x_i)``; the I=∅ term is mu(∅) ∧ top = bottom."""
    if len(x) != mu.arity:
        raise ArityError(f"measure has arity {mu.arity}, got {len(x)} arguments")
    validate_measure(L, mu)
    L.check(*x)
    acc = L.bottom
    for mask in range(1 << mu.arity):
        members = [x[i] for i in range(mu.arity) if mask >> i & 1]
        acc = L.join(acc, L.meet(mu[mask], L.meet_all(members)))
    return acc


def sugeno_table(L, mu, name="S"):
    validate_measure(L, mu)
    g = grid(L.size, mu.arity)
    return FnTable(L, mu.arity, [sugeno_eval(L, mu, tuple(row)) for row in g.coords.tolist()],
                   name=name)


def is_sugeno(f):
    """Polynomial with ``f(0̄) = 0`` and ``f(1̄) = 1``."""
    L = f.lattice
    return (is_polynomial(f).holds and f.bottom_value() == L.bottom
            and f.top_value() == L.top)


def measure_from_polynomial(f):
    """A fuzzy measure mu with ``f(x) = median(f(0̄), S_mu(x), f(1̄))``.

    mu agrees with α_f on proper nonempty subsets and is pinned to bottom and
    top at ∅ and [n]. The identity is checked at every point before returning.
    """
    _require_polynomial(f)
    L, n = f.lattice, f.arity
    a = alpha(f)
    full = (1 << n) - 1
    values = list(a.values)
    values[0] = L.bottom
    values[full] = L.top
    mu = CoefficientMap(n, values)
    validate_measure(L, mu)
    lo, hi = f.bottom_value(), f.top_value()
    S = sugeno_table(L, mu)
    clamped = L.median_table[lo, S.values, hi]
    if not np.array_equal(clamped, f.values):
        i = int(np.flatnonzero(clamped != f.values)[0])
        raise VerificationError(f"median identity fails at tuple index {i}")
    return mu, (lo, hi)


# -- conservativeness and term functions --------------------------------------

def _conservative_mask(f, coords, values):
    return (coords == values[:, None]).any(axis=1) if f.arity else np.zeros(len(values), bool)


def is_conservative(f):
    g = f.grid
    return bool(_conservative_mask(f, g.coords, f.values).all())


def is_weakly_conservative(f):
    """Conservative on the cube {0,1}^n only."""
    L, g = f.lattice, f.grid
    on_cube = np.isin(g.coords, [L.bottom, L.top]).all(axis=1)
    ok = _conservative_mask(f, g.coords[on_cube], f.values[on_cube])
    return bool(ok.all())


def is_term_function(f):
    return is_sugeno(f) and is_weakly_conservative(f)


# -- symmetry ------------------------------------------------------------------

def is_cardinality_based(coeffs):
    by_size = {}
    for mask, v in enumerate(coeffs):
        if by_size.setdefault(bin(mask).count("1"), v) != v:
            return False
    return True


def is_symmetric_by_permutation(f):
    """All n! coordinate permutations leave the table unchanged."""
    g = f.grid
    for perm in permutations(range(f.arity)):
        if f.values[g.index(g.coords[:, list(perm)])].tolist() != f.values.tolist():
            return False
    return True


def is_symmetric(f):
    if is_polynomial(f).holds:
        return is_cardinality_based(alpha(f))
    return is_symmetric_by_permutation(f)


@dataclass(frozen=True)
class SymmetricWeights:
    w: tuple   # isotone, w(k) = α_f(I) for |I| = k
    v: tuple   # antitone, v(k) = β_f(I) for |I| = k


def _by_cardinality(coeffs):
    n = coeffs.arity
    return tuple(coeffs[(1 << k) - 1] for k in range(n + 1))


def symmetric_weights(f):
    _require_polynomial(f)
    a, b = alpha(f), beta(f)
    if not is_cardinality_based(a):
        raise PreconditionError(f"{f.name} is not symmetric")
    w, v = _by_cardinality(a), _by_cardinality(b)
    n = f.arity
    if not is_cardinality_based(b) or any(v[i] != w[n - i] for i in range(n + 1)):
        raise VerificationError("v(i) = w(n - i) fails")
    return SymmetricWeights(w, v)


def order_statistic(L, n, k, x):
    """``os_k(x) = ⋁_{|I| = n-k+1} ⋀_{i∈I} x_i`` with os_0 = bottom, os_{n+1} = top."""
    if len(x) != n:
        raise ArityError(f"expected {n} arguments, got {len(x)}")
    if not 0 <= k <= n + 1:
        raise ValueError(f"order statistic index {k} outside 0..{n + 1}")
    if k == 0:
        return L.bottom
    if k == n + 1:
        return L.top
    return L.join_all(L.meet_all(c) for c in combinations(x, n - k + 1))


def order_statistic_dual(L, n, k, x):
    """``os_k(x) = ⋀_{|I| = k} ⋁_{i∈I} x_i``."""
    if len(x) != n:
        raise ArityError(f"expected {n} arguments, got {len(x)}")
    if not 1 <= k <= n:
        raise ValueError(f"dual form defined for 1 ≤ k ≤ n, got {k}")
    return L.meet_all(L.join_all(c) for c in combinations(x, k))


def order_statistic_table(L, n, k):
    g = grid(L.size, n)
    return FnTable(L, n, [order_statistic(L, n, k, row) for row in g.coords.tolist()],
                   name=f"os{k}")


def eval_median_k(L, args):
    """Median of an odd number of arguments, ``os_{m+1}`` of the 2m+1 inputs."""
    if len(args) % 2 == 0:
        raise ArityError(f"median needs an odd number of arguments, got {len(args)}")
    return order_statistic(L, len(args), (len(args) + 1) // 2, tuple(args))


def _compare(f, rebuilt, what):
    rebuilt = np.asarray(rebuilt)
    if not np.array_equal(rebuilt, f.values):
        i = int(np.flatnonzero(rebuilt != f.values)[0])
        raise VerificationError(f"{what} reconstruction differs at tuple index {i}")


def symmetric_os_form(f):
    """Weights (w, v) with f = ⋁_k (w(n-k) ∧ os_{k+1}) = ⋀_k (v(k) ∨ os_k), both verified."""
    weights = symmetric_weights(f)
    L, n = f.lattice, f.arity
    w, v = weights.w, weights.v
    rows = f.grid.coords.tolist()
    joined = [L.join_all(L.meet(w[n - k], order_statistic(L, n, k + 1, x))
                         for k in range(n + 1)) for x in rows]
    _compare(f, joined, "order-statistic (join)")
    met = [L.meet_all(L.join(v[k], order_statistic(L, n, k, x)) for k in range(n + 1))
           for x in rows]
    _compare(f, met, "order-statistic (meet)")
    return weights


def symmetric_median_form(f, sugeno=False):
    """Constants c with ``f(x) = median(x_1, ..., x_n, c...)``.

    General symmetric polynomials append w(0..n); Sugeno integrals append
    w(1..n-1), which is empty for n = 1 (the function is then the identity).
    """
    weights = symmetric_weights(f)
    if sugeno and not is_sugeno(f):
        raise PreconditionError(f"{f.name} is not a Sugeno integral")
    n = f.arity
    consts = weights.w[1:n] if sugeno else weights.w
    L = f.lattice
    rebuilt = [eval_median_k(L, tuple(x) + tuple(consts)) for x in f.grid.coords.tolist()]
    _compare(f, rebuilt, "median")
    return list(consts)


# -- weighted infimum / supremum --------------------------------------------------

@dataclass(frozen=True)
class WeightVector:
    kind: str        # "inf" or "sup"
    w0: int
    weights: tuple   # w_1..w_n
    verified: bool

    def evaluate(self, L, x):
        if self.kind == "inf":
            return L.meet(self.w0, L.meet_all(L.join(w, xi) for w, xi in zip(self.weights, x)))
        return L.join(self.w0, L.join_all(L.meet(w, xi) for w, xi in zip(self.weights, x)))


def _extract(f, kind):
    _require_polynomial(f)
    L, n = f.lattice, f.arity
    fill, hole = (L.top, L.bottom) if kind == "inf" else (L.bottom, L.top)
    w0 = f(*([fill] * n))
    ws = []
    for i in range(n):
        x = [fill] * n
        x[i] = hole
        ws.append(f(*x))
    vec = WeightVector(kind, w0, tuple(ws), False)
    rebuilt = [vec.evaluate(L, x) for x in f.grid.coords.tolist()]
    return WeightVector(kind, w0, tuple(ws), bool(np.array_equal(rebuilt, f.values)))


def extract_inf_weights(f):
    """``w0 = f(1̄)``, ``w_i = f(1̄ with 0 at i)``; verified flag says whether they rebuild f."""
    return _extract(f, "inf")


def extract_sup_weights(f):
    """``v0 = f(0̄)``, ``v_i = f(0̄ with 1 at i)``."""
    return _extract(f, "sup")


def is_weighted_infimum(f):
    by_hom = global_meet_homomorphism(f).holds
    by_weights = extract_inf_weights(f).verified
    if by_hom != by_weights:
        raise VerificationError(f"{f.name}: meet-homomorphism={by_hom} "
                                f"but weight reconstruction={by_weights}")
    return by_hom


def is_weighted_supremum(f):
    by_hom = global_join_homomorphism(f).holds
    by_weights = extract_sup_weights(f).verified
    if by_hom != by_weights:
        raise VerificationError(f"{f.name}: join-homomorphism={by_hom} "
                                f"but weight reconstruction={by_weights}")
    return by_hom


# -- nested median normal form ----------------------------------------------------

def median_normal_form(f):
    """Nested Med/Var/Const expression obtained by decomposing x1, x2, ... in turn."""
    _require_polynomial(f)
    L = f.lattice
    n = f.arity

    def build(values, k):
        # values: residual table over x_k..x_n, x_k fastest
        if k > n:
            return Const(int(values[0]))
        lo = values[L.bottom::L.size]
        hi = values[L.top::L.size]
        if np.array_equal(lo, hi):
            return build(lo, k + 1)
        low, high = build(lo, k + 1), build(hi, k + 1)
        if low == Const(L.bottom) and high == Const(L.top):
            return Var(k)
        return Med(low, Var(k), high)

    return build(f.values, 1)
