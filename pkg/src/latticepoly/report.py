from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Witness:
    """Where a defining equation fails. Unused fields stay None."""

    x: tuple | None = None       # main tuple
    k: int | None = None         # 1-based coordinate
    levels: tuple = ()           # level elements (c, or r and s, or a and b)
    aux: tuple | None = None     # auxiliary tuple (second argument, cube mask, ...)
    note: str = ""

    def describe(self, L):
        parts = []
        if self.x is not None:
            parts.append("x=(" + ",".join(L.names[v] for v in self.x) + ")")
        if self.k is not None:
            parts.append(f"k={self.k}")
        if self.levels:
            parts.append("levels=" + ",".join(L.names[v] for v in self.levels))
        if self.aux is not None:
            parts.append("aux=(" + ",".join(L.names[v] for v in self.aux) + ")")
        if self.note:
            parts.append(self.note)
        return " ".join(parts)


@dataclass(frozen=True)
class PropertyReport:
    name: str
    holds: bool
    witness: Witness | None = field(default=None)

    def __bool__(self):
        return self.holds
