"""Slow reference implementations used to cross-check the package.

Nothing here imports latticepoly. Lattices are given by an explicit order
relation and every operation is computed from first principles. Element ids
and tuple order match the package conventions (x1 varies fastest).
"""

from itertools import combinations, product


class OrderLattice:
    def __init__(self, size, leq):
        self.size = size
        self._leq = [[bool(leq(a, b)) for b in range(size)] for a in range(size)]
        self.meet = [[self._bound(a, b, lower=True) for b in range(size)] for a in range(size)]
        self.join = [[self._bound(a, b, lower=False) for b in range(size)] for a in range(size)]
        self.bottom = next(a for a in range(size) if all(self._leq[a]))
        self.top = next(a for a in range(size) if all(self._leq[b][a] for b in range(size)))

    def leq(self, a, b):
        return self._leq[a][b]

    def _bound(self, a, b, lower):
        if lower:
            cands = [c for c in range(self.size) if self._leq[c][a] and self._leq[c][b]]
            best = [c for c in cands if all(self._leq[d][c] for d in cands)]
        else:
            cands = [c for c in range(self.size) if self._leq[a][c] and self._leq[b][c]]
            best = [c for c in cands if all(self._leq[c][d] for d in cands)]
        assert len(best) == 1
        return best[0]

    def meet_all(self, xs, start=None):
        acc = self.top if start is None else start
        for x in xs:
            acc = self.meet[acc][x]
        return acc

    def join_all(self, xs, start=None):
        acc = self.bottom if start is None else start
        for x in xs:
            acc = self.join[acc][x]
        return acc

    def median(self, a, b, c):
        m = self.meet
        return self.join_all([m[a][b], m[b][c], m[a][c]])


def chain(m):
    return OrderLattice(m, lambda a, b: a <= b)


def diamond():
    # 0, a, b, 1 with a and b incomparable
    rel = {(0, 0), (0, 1), (0, 2), (0, 3), (1, 1), (1, 3), (2, 2), (2, 3), (3, 3)}
    return OrderLattice(4, lambda a, b: (a, b) in rel)


def product_lattice(A, B):
    def leq(p, q):
        return A.leq(p // B.size, q // B.size) and B.leq(p % B.size, q % B.size)
    return OrderLattice(A.size * B.size, leq)


def points(m, n):
    """All n-tuples over range(m) with x1 varying fastest."""
    return [tuple(reversed(p)) for p in product(range(m), repeat=n)]


def all_tables(ol, n, limit=10**6):
    N = ol.size ** n
    if ol.size ** N > limit:
        raise ValueError(f"{ol.size}^{N} tables is too many to list")
    return list(product(range(ol.size), repeat=N))


def random_tables(ol, n, count, rng):
    N = ol.size ** n
    return [tuple(rng.randrange(ol.size) for _ in range(N)) for _ in range(count)]


def _close(ol, seeds):
    """Close a set of tables under pointwise meet and join."""
    seen = set(seeds)
    frontier = list(seen)
    while frontier:
        new = []
        current = list(seen)
        for f in frontier:
            for g in current:
                for op in (ol.meet, ol.join):
                    h = tuple(op[a][b] for a, b in zip(f, g))
                    if h not in seen:
                        seen.add(h)
                        new.append(h)
        frontier = new
    return seen


def polynomial_tables(ol, n):
    """Every polynomial table: projections and constants closed under ∧ and ∨."""
    pts = points(ol.size, n)
    seeds = {tuple(x[i] for x in pts) for i in range(n)}
    seeds |= {tuple(c for _ in pts) for c in range(ol.size)}
    return _close(ol, seeds)


def term_tables(ol, n):
    pts = points(ol.size, n)
    return _close(ol, {tuple(x[i] for x in pts) for i in range(n)})


def is_monotone_table(ol, n, table):
    pts = points(ol.size, n)
    for i, x in enumerate(pts):
        for j, y in enumerate(pts):
            if all(ol.leq(a, b) for a, b in zip(x, y)) and not ol.leq(table[i], table[j]):
                return False
    return True


def sugeno_integral(ol, mu, x):
    """Direct ⋁_I (mu(I) ∧ ⋀_{i∈I} x_i) with mu indexed by bitmask."""
    n = len(x)
    terms = []
    for mask in range(1 << n):
        members = [x[i] for i in range(n) if mask >> i & 1]
        terms.append(ol.meet[mu[mask]][ol.meet_all(members)])
    return ol.join_all(terms)


def sugeno_on_chain(mu, x):
    """Sorting formula, valid on chains only: ⋁_i min(x_(i), mu({j : x_j ≥ x_(i)}))."""
    best = 0
    for xi in x:
        mask = sum(1 << j for j, xj in enumerate(x) if xj >= xi)
        best = max(best, min(xi, mu[mask]))
    return best


def order_statistic_sorted(x, k):
    """k-th smallest on a chain (1-based)."""
    return sorted(x)[k - 1]


def order_statistic_by_formula(ol, x, k):
    n = len(x)
    return ol.join_all(ol.meet_all(c) for c in combinations(x, n - k + 1))


# -- properties from their defining equations --------------------------------

class Table:
    """A function table over an OrderLattice with tuple lookup."""

    def __init__(self, ol, n, values):
        self.ol, self.n, self.values = ol, n, tuple(values)
        self.pts = points(ol.size, n)
        self.index = {x: i for i, x in enumerate(self.pts)}

    def __call__(self, x):
        return self.values[self.index[tuple(x)]]

    def sub(self, x, k, c):
        y = list(x)
        y[k] = c
        return self(y)


def nondecreasing(t):
    return is_monotone_table(t.ol, t.n, t.values)


def meet_homogeneous(t, S):
    m = t.ol.meet
    return all(t([m[xi][c] for xi in x]) == m[t(x)][c] for x in t.pts for c in S)


def join_homogeneous(t, S):
    j = t.ol.join
    return all(t([j[xi][c] for xi in x]) == j[t(x)][c] for x in t.pts for c in S)


def idempotent_over(t, S):
    return all(t([c] * t.n) == c for c in S)


def median_level(t, S):
    med = t.ol.median
    return all(t([med(r, xi, s) for xi in x]) == med(r, t(x), s)
               for x in t.pts for r in S for s in S)


def horiz_meet(t, S):
    ol = t.ol
    for x in t.pts:
        for c in S:
            up = [ol.join[xi][c] for xi in x]
            cut = [ol.top if ol.leq(c, xi) else xi for xi in x]
            if t(x) != ol.meet[t(up)][t(cut)]:
                return False
    return True


def horiz_join(t, S):
    ol = t.ol
    for x in t.pts:
        for c in S:
            down = [ol.meet[xi][c] for xi in x]
            cut = [ol.bottom if ol.leq(xi, c) else xi for xi in x]
            if t(x) != ol.join[t(down)][t(cut)]:
                return False
    return True


def median_decomposable(t):
    ol = t.ol
    return all(t(x) == ol.median(t.sub(x, k, ol.bottom), x[k], t.sub(x, k, ol.top))
               for x in t.pts for k in range(t.n))


def strongly_idempotent(t):
    return all(t.sub(x, k, t(x)) == t(x) for x in t.pts for k in range(t.n))


def componentwise_hom(t, op):
    ol = t.ol
    table = ol.meet if op == "meet" else ol.join
    return all(t.sub(x, k, table[a][b]) == table[t.sub(x, k, a)][t.sub(x, k, b)]
               for x in t.pts for k in range(t.n)
               for a in range(ol.size) for b in range(ol.size))


def convex(ol, S):
    S = set(S)
    return all(c in S for a in S for b in S for c in range(ol.size)
               if ol.leq(a, c) and ol.leq(c, b))


def convex_range(t):
    return convex(t.ol, set(t.values))


def componentwise_convex_range(t):
    return all(convex(t.ol, {t.sub(x, k, c) for c in range(t.ol.size)})
               for x in t.pts for k in range(t.n))


def global_hom(t, op):
    ol = t.ol
    table = ol.meet if op == "meet" else ol.join
    return all(t([table[a][b] for a, b in zip(x, y)]) == table[t(x)][t(y)]
               for x in t.pts for y in t.pts)


def hull(ol, S):
    S = set(S)
    return {c for c in range(ol.size) if any(ol.leq(a, c) and ol.leq(c, b) for a in S for b in S)}
