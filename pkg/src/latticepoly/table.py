"""Explicit function tables ``L^n → L`` and set functions ``2^[n] → L``.

Tuples are encoded mixed-radix little-endian: for a lattice of size m the
tuple ``(x1, ..., xn)`` sits at index ``x1 + m*x2 + ... + m^(n-1)*xn``, so
x1 varies fastest. Subsets ``I ⊆ [n]`` are bitmasks with bit ``i-1`` set
when ``i ∈ I``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ArityError, BudgetError, ElementError

DEFAULT_TABLE_BUDGET = 10**6


@dataclass(frozen=True)
class Grid:
    """All tuples of ``L^n`` in canonical order, plus the index arithmetic."""

    size: int
    arity: int
    coords: np.ndarray   # (N, n) element ids
    weights: np.ndarray  # (n,) radix place values

    @property
    def count(self):
        return self.size ** self.arity

    def index(self, coords):
        """Canonical index of tuples given along the last axis."""
        return np.asarray(coords) @ self.weights

    def substitute(self, k, values):
        """Indices of ``x_k^c`` for every x (rows) and every c in values (columns)."""
        base = np.arange(self.count) - self.coords[:, k] * self.weights[k]
        return base[:, None] + np.asarray(values)[None, :] * self.weights[k]

    def constant(self, c):
        return int(c * self.weights.sum())


@lru_cache(maxsize=64)
def grid(size, arity, budget=DEFAULT_TABLE_BUDGET):
    count = size ** arity
    if count > budget:
        raise BudgetError(f"{size}^{arity} = {count} table entries exceeds budget {budget}")
    idx = np.arange(count)
    weights = size ** np.arange(arity, dtype=np.int64)
    coords = (idx[:, None] // weights[None, :]) % size if arity else np.zeros((1, 0), np.int64)
    coords.setflags(write=False)
    weights.setflags(write=False)
    return Grid(size, arity, coords, weights)


def encode(size, x):
    return sum(int(v) * size**i for i, v in enumerate(x))


def decode(size, arity, index):
    return tuple((index // size**i) % size for i in range(arity))


class FnTable:
    """A function ``L^n → L`` stored densely in canonical tuple order."""

    def __init__(self, lattice, arity, values, name="f", *, budget=DEFAULT_TABLE_BUDGET):
        if arity < 0:
            raise ArityError(f"negative arity {arity}")
        count = lattice.size ** arity
        if count > budget:
            raise BudgetError(f"{lattice.size}^{arity} = {count} table entries exceeds budget {budget}")
        values = np.array(values, dtype=np.int64).reshape(-1)
        if values.shape != (count,):
            raise ArityError(f"expected {count} values for arity {arity}, got {values.size}")
        if count and (values.min() < 0 or values.max() >= lattice.size):
            raise ElementError("function table contains an invalid element id")
        values.setflags(write=False)
        self.lattice = lattice
        self.arity = arity
        self.values = values
        self.name = name

    def __repr__(self):
        return f"FnTable({self.name!r}, arity={self.arity}, over={self.lattice.name!r})"

    def __eq__(self, other):
        if not isinstance(other, FnTable):
            return NotImplemented
        return (self.lattice is other.lattice and self.arity == other.arity
                and np.array_equal(self.values, other.values))

    def __hash__(self):
        return hash((id(self.lattice), self.arity, self.values.tobytes()))

    @property
    def grid(self):
        return grid(self.lattice.size, self.arity)

    def __call__(self, *x):
        if len(x) == 1 and isinstance(x[0], (tuple, list)):
            x = tuple(x[0])
        if len(x) != self.arity:
            raise ArityError(f"{self.name} has arity {self.arity}, called with {len(x)} arguments")
        self.lattice.check(*x)
        return int(self.values[encode(self.lattice.size, x)])

    def at_index(self, index):
        return int(self.values[index])

    def bottom_value(self):
        """``f(0, ..., 0)``."""
        return self(*([self.lattice.bottom] * self.arity))

    def top_value(self):
        """``f(1, ..., 1)``."""
        return self(*([self.lattice.top] * self.arity))

    def range(self):
        return frozenset(int(v) for v in np.unique(self.values))

    def restrict_first(self, c):
        """Residual function of x2..xn with x1 fixed to c."""
        if self.arity == 0:
            raise ArityError("cannot fix a variable of a nullary function")
        return FnTable(self.lattice, self.arity - 1, self.values[c::self.lattice.size],
                       name=self.name)

    def tuples(self):
        """Iterate ``(x, f(x))`` in canonical order."""
        g = self.grid
        for i in range(g.count):
            yield tuple(int(v) for v in g.coords[i]), int(self.values[i])


def cube_point(lattice, arity, mask):
    """``e_I``: top on coordinates in I, bottom elsewhere."""
    return tuple(lattice.top if mask >> i & 1 else lattice.bottom for i in range(arity))


def subset_of(mask, arity):
    return tuple(i + 1 for i in range(arity) if mask >> i & 1)


def mask_of(indices):
    mask = 0
    for i in indices:
        mask |= 1 << (i - 1)
    return mask


def format_subset(mask, arity):
    if mask == 0:
        return "empty"
    if mask == (1 << arity) - 1:
        return "full"
    return ",".join(str(i) for i in subset_of(mask, arity))


@dataclass(frozen=True)
class CoefficientMap:
    """A set function ``2^[n] → L`` indexed by subset bitmask."""

    arity: int
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if len(self.values) != 1 << self.arity:
            raise ArityError(f"coefficient map of arity {self.arity} needs "
                             f"{1 << self.arity} values, got {len(self.values)}")

    def __getitem__(self, mask):
        return self.values[mask]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def replace(self, mask, value):
        vals = list(self.values)
        vals[mask] = value
        return CoefficientMap(self.arity, vals)

    def describe(self, lattice):
        return ", ".join(f"{format_subset(I, self.arity)}->{lattice.names[v]}"
                         for I, v in enumerate(self.values))


def proper_subsets(mask):
    """All J ⊊ mask."""
    sub = (mask - 1) & mask
    while True:
        if sub != mask:
            yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def first_violation(mask):
    """Row of the first True entry of ``mask`` in C order, or None."""
    flat = np.flatnonzero(np.asarray(mask).reshape(-1))
    if not len(flat):
        return None
    return tuple(int(v) for v in np.unravel_index(flat[0], np.shape(mask)))
