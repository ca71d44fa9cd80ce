"""Linear algebra over F2 with vectors packed into Python integers."""
from __future__ import annotations

from typing import Iterable


def f2_rank(rows: Iterable[int]) -> int:
    return len(EchelonBasis(rows))


class EchelonBasis:
    """Incrementally built row-echelon basis of a subspace of F2^n.

    Each stored vector has a distinct leading (highest) bit.  When
    ``track=True`` every stored vector also remembers which inserted vectors
    it is the sum of, so membership queries can return a certificate.
    """

    def __init__(self, rows: Iterable[int] = (), track: bool = False):
        self._pivots: dict[int, tuple[int, int]] = {}
        self._track = track
        self._count = 0
        for r in rows:
            self.insert(r)

    def __len__(self) -> int:
        return len(self._pivots)

    def reduce(self, v: int) -> tuple[int, int]:
        """Return (residue, combination) with v = residue + sum of combination's inputs."""
        combo = 0
        while v:
            top = v.bit_length() - 1
            hit = self._pivots.get(top)
            if hit is None:
                break
            v ^= hit[0]
            combo ^= hit[1]
        return v, combo

    def residue(self, v: int) -> int:
        """Fully reduced representative of ``v`` modulo the span."""
        out = 0
        while v:
            top = v.bit_length() - 1
            hit = self._pivots.get(top)
            if hit is None:
                out |= 1 << top
                v ^= 1 << top
            else:
                v ^= hit[0]
        return out

    def insert(self, v: int) -> bool:
        """Add ``v``; return True if it enlarged the span."""
        tag = (1 << self._count) if self._track else 0
        self._count += 1
        while v:
            top = v.bit_length() - 1
            hit = self._pivots.get(top)
            if hit is None:
                self._pivots[top] = (v, tag)
                return True
            v ^= hit[0]
            tag ^= hit[1]
        return False

    def contains(self, v: int) -> bool:
        return self.residue(v) == 0

    def solve(self, v: int) -> int | None:
        """Bitmask of inserted vectors summing to ``v`` (requires ``track=True``)."""
        if not self._track:
            raise ValueError("solve needs a basis built with track=True")
        residue, combo = self.reduce(v)
        return combo if residue == 0 else None

    def vectors(self) -> list[int]:
        return [v for v, _ in self._pivots.values()]


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def kernel(columns: list[int]) -> list[int]:
    """Basis of the kernel of the map sending basis vector k to ``columns[k]``.

    Kernel vectors are returned as bitmasks over the column indices.
    """
    pivots: dict[int, tuple[int, int]] = {}
    out = []
    for k, col in enumerate(columns):
        combo = 1 << k
        while col:
            top = col.bit_length() - 1
            hit = pivots.get(top)
            if hit is None:
                pivots[top] = (col, combo)
                break
            col ^= hit[0]
            combo ^= hit[1]
        else:
            out.append(combo)
    return out
