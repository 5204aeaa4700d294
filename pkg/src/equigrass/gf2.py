"""GF(2) linear algebra on Python int bitsets."""

from __future__ import annotations

from typing import Iterable


class EchelonBasis:
    """Incrementally grown row space, kept reduced by leading bit.

    Each stored row has a distinct highest set bit, so reducing a vector
    walks its bits from the top down.
    """

    def __init__(self, rows: Iterable[int] = ()):
        self.pivots: dict[int, int] = {}
        for r in rows:
            self.add(r)

    def __len__(self) -> int:
        return len(self.pivots)

    def reduce(self, v: int) -> int:
        while v:
            top = v.bit_length() - 1
            row = self.pivots.get(top)
            if row is None:
                return v
            v ^= row
        return 0

    def add(self, v: int) -> bool:
        """Insert ``v``; True if it enlarged the span."""
        v = self.reduce(v)
        if not v:
            return False
        self.pivots[v.bit_length() - 1] = v
        return True

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rank(rows: Iterable[int]) -> int:
    return EchelonBasis(rows).rank


def in_span(v: int, rows: Iterable[int]) -> bool:
    return EchelonBasis(rows).contains(v)


def to_bits(indices: Iterable[int]) -> int:
    v = 0
    for i in indices:
        v ^= 1 << i
    return v


def from_bits(v: int) -> list[int]:
    out = []
    while v:
        low = v & -v
        out.append(low.bit_length() - 1)
        v ^= low
    return out


def complement_basis(space: EchelonBasis, candidates: Iterable[int]) -> list[int]:
    """Indices of candidates that extend ``space`` greedily (space is not changed)."""
    work = EchelonBasis()
    work.pivots = dict(space.pivots)
    return [i for i, v in enumerate(candidates) if work.add(v)]
