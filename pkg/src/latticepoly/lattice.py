"""Finite bounded distributive lattices stored as dense operation tables.

Elements are small integer ids ``0 .. size-1``. Every constructor validates
the lattice axioms and distributivity before returning; a :class:`Lattice`
is immutable afterwards.
"""

from __future__ import annotations

from functools import cached_property
from itertools import permutations, product as _cartesian

import numpy as np

from .errors import (
    BoundsError,
    BudgetError,
    ElementError,
    InvalidSizeError,
    NotALatticeError,
    NotDistributiveError,
    OrderError,
)

DEFAULT_MAX_SIZE = 64
DEFAULT_BOOLEAN_CAP = 6


def _frozen(array):
    array = np.ascontiguousarray(array)
    array.setflags(write=False)
    return array


class Lattice:
    """A validated finite bounded distributive lattice.

    Use the ``build_*`` functions rather than calling the constructor with
    hand-made tables; the constructor trusts that ``meet``, ``join`` and
    ``leq`` are consistent and only runs the axiom checks when
    ``validate=True``.
    """

    def __init__(self, names, meet, join, name="L", *, validate=True,
                 max_size=DEFAULT_MAX_SIZE):
        names = tuple(str(s) for s in names)
        size = len(names)
        if size == 0:
            raise InvalidSizeError("a lattice needs at least one element")
        if size > max_size:
            raise BudgetError(f"lattice has {size} elements, cap is {max_size}")
        if len(set(names)) != size:
            raise ElementError(f"element names are not distinct: {names}")
        self.name = str(name)
        self.names = names
        self.size = size
        self.meet_table = _frozen(np.asarray(meet, dtype=np.int64))
        self.join_table = _frozen(np.asarray(join, dtype=np.int64))
        if self.meet_table.shape != (size, size) or self.join_table.shape != (size, size):
            raise InvalidSizeError("operation tables must be size x size")
        ids = np.arange(size)
        self.leq_table = _frozen(self.meet_table == ids[:, None])
        self._index = {s: i for i, s in enumerate(names)}
        if validate:
            check_lattice_axioms(self)
        below = self.leq_table.all(axis=1)
        above = self.leq_table.all(axis=0)
        if not below.any() or not above.any():
            raise BoundsError("lattice has no bottom or no top")
        self.bottom = int(np.flatnonzero(below)[0])
        self.top = int(np.flatnonzero(above)[0])
        if validate:
            check_distributive(self)

    def __repr__(self):
        return f"Lattice({self.name!r}, size={self.size})"

    def __len__(self):
        return self.size

    @property
    def elements(self):
        return range(self.size)

    def element(self, name):
        """Element id for a display name (ints are passed through after a range check)."""
        if isinstance(name, (int, np.integer)):
            self.check(name)
            return int(name)
        try:
            return self._index[str(name)]
        except KeyError:
            raise ElementError(f"unknown element {name!r} in lattice {self.name}") from None

    def check(self, *elements):
        for a in elements:
            if not 0 <= a < self.size:
                raise ElementError(f"element id {a} out of range for lattice of size {self.size}")

    def meet(self, a, b):
        self.check(a, b)
        return int(self.meet_table[a, b])

    def join(self, a, b):
        self.check(a, b)
        return int(self.join_table[a, b])

    def leq(self, a, b):
        self.check(a, b)
        return bool(self.leq_table[a, b])

    def lt(self, a, b):
        return a != b and self.leq(a, b)

    def meet_all(self, items):
        acc = self.top
        for a in items:
            acc = int(self.meet_table[acc, a])
        return acc

    def join_all(self, items):
        acc = self.bottom
        for a in items:
            acc = int(self.join_table[acc, a])
        return acc

    def median3(self, a, b, c):
        """``(a∧b) ∨ (b∧c) ∨ (c∧a)``."""
        self.check(a, b, c)
        return int(self.median_table[a, b, c])

    @cached_property
    def median_table(self):
        m, j = self.meet_table, self.join_table
        a = np.arange(self.size)[:, None, None]
        b = np.arange(self.size)[None, :, None]
        c = np.arange(self.size)[None, None, :]
        return _frozen(j[j[m[a, b], m[b, c]], m[c, a]])

    @cached_property
    def covers(self):
        """Cover pairs ``(u, v)``, u ⋖ v, in lexicographic id order."""
        lt = self.leq_table & ~np.eye(self.size, dtype=bool)
        # v covers u iff u < v and nothing lies strictly between
        between = (lt.astype(np.int64) @ lt.astype(np.int64)) > 0
        cov = lt & ~between
        return tuple((int(u), int(v)) for u, v in zip(*np.nonzero(cov)))

    @cached_property
    def topological_order(self):
        """Elements sorted by height (longest chain from bottom), ties by id."""
        height = [0] * self.size
        for u in sorted(self.elements, key=lambda e: int(self.leq_table[:, e].sum())):
            for v in self.elements:
                if u != v and self.leq_table[u, v]:
                    height[v] = max(height[v], height[u] + 1)
        return tuple(sorted(self.elements, key=lambda e: (height[e], e)))

    def is_chain(self):
        return bool((self.leq_table | self.leq_table.T).all())

    def format_set(self, elements):
        return "{" + ", ".join(self.names[e] for e in sorted(elements)) + "}"


def check_lattice_axioms(L):
    """Exhaustive scan of the semilattice and absorption laws."""
    m, j = L.meet_table, L.join_table
    ids = np.arange(L.size)
    if m.min() < 0 or m.max() >= L.size or j.min() < 0 or j.max() >= L.size:
        raise NotALatticeError("operation table contains an invalid element id")
    for table, op in ((m, "meet"), (j, "join")):
        bad = np.argwhere(table != table.T)
        if len(bad):
            a, b = bad[0]
            raise NotALatticeError(f"{op} is not commutative at ({L.names[a]}, {L.names[b]})",
                                   pair=(int(a), int(b)))
        bad = np.flatnonzero(table[ids, ids] != ids)
        if len(bad):
            a = bad[0]
            raise NotALatticeError(f"{op} is not idempotent at {L.names[a]}", pair=(int(a), int(a)))
        a, b, c = ids[:, None, None], ids[None, :, None], ids[None, None, :]
        bad = np.argwhere(table[table[a, b], c] != table[a, table[b, c]])
        if len(bad):
            x, y, z = bad[0]
            raise NotALatticeError(
                f"{op} is not associative at ({L.names[x]}, {L.names[y]}, {L.names[z]})",
                pair=(int(x), int(y)))
    a, b = ids[:, None], ids[None, :]
    bad = np.argwhere((j[a, m[a, b]] != a) | (m[a, j[a, b]] != a))
    if len(bad):
        x, y = bad[0]
        raise NotALatticeError(f"absorption fails at ({L.names[x]}, {L.names[y]})",
                               pair=(int(x), int(y)))


def find_distributivity_violation(L):
    """First triple (a, b, c) with a∧(b∨c) ≠ (a∧b)∨(a∧c), or None."""
    m, j = L.meet_table, L.join_table
    ids = np.arange(L.size)
    a, b, c = ids[:, None, None], ids[None, :, None], ids[None, None, :]
    bad = np.argwhere(m[a, j[b, c]] != j[m[a, b], m[a, c]])
    if len(bad):
        return tuple(int(v) for v in bad[0])
    return None


def check_distributive(L):
    triple = find_distributivity_violation(L)
    if triple is not None:
        names = tuple(L.names[t] for t in triple)
        raise NotDistributiveError(f"lattice {L.name} is not distributive at ({', '.join(names)})",
                                   triple=triple, names=names)


def build_chain(m, names=None, name=None, *, max_size=DEFAULT_MAX_SIZE):
    """The m-element chain ``0 < 1 < ... < m-1`` (meet=min, join=max)."""
    if m < 1:
        raise InvalidSizeError(f"chain size must be positive, got {m}")
    if names is None:
        names = [str(i) for i in range(m)]
    elif len(names) != m:
        raise InvalidSizeError(f"chain of size {m} given {len(names)} names")
    ids = np.arange(m)
    return Lattice(names, np.minimum.outer(ids, ids), np.maximum.outer(ids, ids),
                   name=name or f"chain{m}", max_size=max_size)


def _pair_names(A, B):
    if all(len(s) == 1 for s in A.names + B.names):
        return [a + b for a in A.names for b in B.names]
    return [f"{a}.{b}" for a in A.names for b in B.names]


def build_product(A, B, name=None, *, max_size=DEFAULT_MAX_SIZE):
    """Cartesian product with componentwise operations; id = i_A * |B| + i_B."""
    nb = B.size
    ia = np.repeat(np.arange(A.size), nb)
    ib = np.tile(np.arange(nb), A.size)
    meet = A.meet_table[ia[:, None], ia[None, :]] * nb + B.meet_table[ib[:, None], ib[None, :]]
    join = A.join_table[ia[:, None], ia[None, :]] * nb + B.join_table[ib[:, None], ib[None, :]]
    return Lattice(_pair_names(A, B), meet, join, name=name or f"{A.name}x{B.name}",
                   max_size=max_size)


def build_boolean(k, name=None, *, cap=DEFAULT_BOOLEAN_CAP, max_size=DEFAULT_MAX_SIZE):
    """Power set of [k] under inclusion; element id is the subset bitmask."""
    if k < 0:
        raise InvalidSizeError(f"negative Boolean rank {k}")
    if k > cap:
        raise BudgetError(f"boolean({k}) exceeds the cap of {cap}")
    masks = np.arange(1 << k)
    names = ["{" + ",".join(str(i + 1) for i in range(k) if s >> i & 1) + "}" for s in masks]
    return Lattice(names, masks[:, None] & masks[None, :], masks[:, None] | masks[None, :],
                   name=name or f"boolean{k}", max_size=max_size)


def build_diamond(name="diamond"):
    """``{0, a, b, 1}`` with a∧b=0 and a∨b=1."""
    return build_from_covers(["0", "a", "b", "1"],
                             [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
                             "0", "1", name=name)


def build_from_covers(names, covers, bottom, top, name="L", *, max_size=DEFAULT_MAX_SIZE):
    """Lattice from a Hasse diagram given as (lower, upper) name pairs."""
    names = [str(s) for s in names]
    size = len(names)
    if size == 0:
        raise InvalidSizeError("a lattice needs at least one element")
    if size > max_size:
        raise BudgetError(f"lattice has {size} elements, cap is {max_size}")
    if len(set(names)) != size:
        raise ElementError(f"element names are not distinct: {names}")
    index = {s: i for i, s in enumerate(names)}

    def lookup(s):
        try:
            return index[str(s)]
        except KeyError:
            raise ElementError(f"unknown element {s!r}") from None

    leq = np.eye(size, dtype=bool)
    for lo, hi in covers:
        leq[lookup(lo), lookup(hi)] = True
    # reflexive-transitive closure (Warshall)
    for k in range(size):
        leq |= leq[:, k:k + 1] & leq[k:k + 1, :]
    cyc = np.argwhere(leq & leq.T & ~np.eye(size, dtype=bool))
    if len(cyc):
        a, b = cyc[0]
        raise NotALatticeError(f"cover relation has a cycle through {names[a]} and {names[b]}",
                               pair=(int(a), int(b)))
    b_id, t_id = lookup(bottom), lookup(top)
    if not leq[b_id, :].all():
        raise BoundsError(f"declared bottom {bottom} is not below every element")
    if not leq[:, t_id].all():
        raise BoundsError(f"declared top {top} is not above every element")

    meet = np.empty((size, size), dtype=np.int64)
    join = np.empty((size, size), dtype=np.int64)
    for a, b in _cartesian(range(size), repeat=2):
        for table, rel, word in ((meet, leq, "glb"), (join, leq.T, "lub")):
            bounds = np.flatnonzero(rel[:, a] & rel[:, b])
            best = [g for g in bounds if rel[bounds, g].all()]
            if len(best) != 1:
                raise NotALatticeError(f"({names[a]}, {names[b]}) has no unique {word}",
                                       pair=(a, b))
            table[a, b] = best[0]
    return Lattice(names, meet, join, name=name, max_size=max_size)


def build_from_tables(names, meet_triples, join_triples, name="L", *,
                      max_size=DEFAULT_MAX_SIZE):
    """Lattice from complete ``(a, b, a∧b)`` and ``(a, b, a∨b)`` triples given by name."""
    names = [str(s) for s in names]
    index = {s: i for i, s in enumerate(names)}
    size = len(names)

    def fill(triples, word):
        table = np.full((size, size), -1, dtype=np.int64)
        for a, b, c in triples:
            try:
                ia, ib, ic = index[str(a)], index[str(b)], index[str(c)]
            except KeyError as exc:
                raise ElementError(f"unknown element {exc.args[0]!r} in {word} table") from None
            for x, y in ((ia, ib), (ib, ia)):
                if table[x, y] not in (-1, ic):
                    raise NotALatticeError(f"conflicting {word} entries for "
                                           f"({names[x]}, {names[y]})", pair=(x, y))
                table[x, y] = ic
        missing = np.argwhere(table < 0)
        if len(missing):
            x, y = missing[0]
            raise NotALatticeError(f"{word} table incomplete at ({names[x]}, {names[y]})",
                                   pair=(int(x), int(y)))
        return table

    return Lattice(names, fill(meet_triples, "meet"), fill(join_triples, "join"),
                   name=name, max_size=max_size)


def relabel(L, names, name=None):
    """Same lattice with new display names."""
    if len(names) != L.size:
        raise InvalidSizeError(f"need {L.size} names, got {len(names)}")
    return Lattice(names, L.meet_table, L.join_table, name=name or L.name, validate=False)


def is_isomorphic(A, B):
    """Brute-force search for an order isomorphism (small lattices only)."""
    if A.size != B.size:
        return False
    if A.size > 8:
        raise BudgetError("isomorphism search limited to 8 elements")
    for perm in permutations(range(B.size)):
        p = np.array(perm)
        if (B.leq_table[p[:, None], p[None, :]] == A.leq_table).all():
            return True
    return False


def interval(L, a, b):
    """``[a, b] = {c : a ≤ c ≤ b}``."""
    if not L.leq(a, b):
        raise OrderError(f"interval needs {L.names[a]} ≤ {L.names[b]}")
    return frozenset(int(c) for c in np.flatnonzero(L.leq_table[a, :] & L.leq_table[:, b]))


def convex_hull(L, S):
    """Smallest convex superset of S, as a fixpoint of filling in between-elements."""
    hull = set(int(s) for s in S)
    L.check(*hull)
    while True:
        grown = set(hull)
        for a in hull:
            for b in hull:
                if L.leq_table[a, b]:
                    grown.update(int(c) for c in
                                 np.flatnonzero(L.leq_table[a, :] & L.leq_table[:, b]))
        if grown == hull:
            return frozenset(hull)
        hull = grown


def is_convex(L, S):
    S = frozenset(int(s) for s in S)
    return convex_hull(L, S) == S
