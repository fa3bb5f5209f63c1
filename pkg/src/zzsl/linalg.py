"""Exact linear algebra over the rationals; just enough for rank checks."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class RationalRowSpace:
    """Row space maintained by incremental Gaussian elimination over Fraction."""

    def __init__(self, width: int) -> None:
        if width < 0:
            raise ValueError("width must be nonnegative")
        self.width = width
        self._rows: list[list[Fraction]] = []
        self._pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _reduce(self, vector: Sequence) -> list[Fraction]:
        v = [Fraction(x) for x in vector]
        if len(v) != self.width:
            raise ValueError(f"expected width {self.width}, got {len(v)}")
        for row, piv in zip(self._rows, self._pivots):
            c = v[piv]
            if c:
                v = [a - c * b for a, b in zip(v, row)]
        return v

    def add(self, vector: Sequence) -> bool:
        """Insert a vector; returns True when it enlarges the span."""
        v = self._reduce(vector)
        for idx, c in enumerate(v):
            if c:
                inv = Fraction(1) / c
                self._rows.append([a * inv for a in v])
                self._pivots.append(idx)
                return True
        return False

    def contains(self, vector: Sequence) -> bool:
        return not any(self._reduce(vector))


def rational_rank(vectors: Iterable[Sequence], width: int) -> int:
    space = RationalRowSpace(width)
    for v in vectors:
        space.add(v)
    return space.rank
