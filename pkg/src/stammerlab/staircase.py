"""Rook placements in the double staircase 2δ_n.

Rows are numbered 1..n from the bottom, row ``r`` having length
``2(n - r + 1)``; columns are numbered 1..2n from the left and are shared by
all rows, so truncating or extending a placement never renumbers columns.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from ._common import VALID, Validity


def row_length(n: int, r: int) -> int:
    return 2 * (n - r + 1)


def column_height(n: int, c: int) -> int:
    """Number of rows of 2δ_n that reach column ``c``."""
    return n - (c + 1) // 2 + 1


def in_staircase(n: int, c: int, r: int) -> bool:
    return 1 <= r <= n and 1 <= c <= row_length(n, r)


@dataclass(frozen=True)
class RookPlacement:
    """``dots[r - 1]`` is the column of the dot in row ``r``."""

    n: int
    dots: tuple[int, ...]

    @classmethod
    def of(cls, dots: Sequence[int]) -> "RookPlacement":
        rp = cls(len(dots), tuple(int(d) for d in dots))
        report = validate(rp)
        if not report:
            raise ValueError(f"invalid rook placement, row {report.index}: {report.rule}")
        return rp

    def cells(self) -> set[tuple[int, int]]:
        """Dotted cells as (column, row) pairs."""
        return {(c, r) for r, c in enumerate(self.dots, start=1)}

    def columns(self) -> set[int]:
        return set(self.dots)

    def row_of_column(self, c: int) -> int | None:
        for r, d in enumerate(self.dots, start=1):
            if d == c:
                return r
        return None


@dataclass(frozen=True)
class PartialRookPlacement:
    """At most one dot per row and column; ``None`` marks an empty row."""

    n: int
    dots: tuple[Optional[int], ...]

    @classmethod
    def of(cls, dots: Sequence[Optional[int]]) -> "PartialRookPlacement":
        rp = cls(len(dots), tuple(None if d is None else int(d) for d in dots))
        report = validate(rp)
        if not report:
            raise ValueError(f"invalid partial rook placement, row {report.index}: {report.rule}")
        return rp

    @property
    def k(self) -> int:
        """Number of dots."""
        return sum(1 for d in self.dots if d is not None)

    def cells(self) -> set[tuple[int, int]]:
        return {(c, r) for r, c in enumerate(self.dots, start=1) if c is not None}


def validate(rp: RookPlacement | PartialRookPlacement) -> Validity:
    partial = isinstance(rp, PartialRookPlacement)
    if len(rp.dots) != rp.n:
        return Validity(False, None, f"expected {rp.n} rows, got {len(rp.dots)}")
    seen: set[int] = set()
    for r, c in enumerate(rp.dots, start=1):
        if c is None:
            if partial:
                continue
            return Validity(False, r, "row has no dot")
        if not 1 <= c <= row_length(rp.n, r):
            return Validity(False, r, f"column {c} outside a row of length {row_length(rp.n, r)}")
        if c in seen:
            return Validity(False, r, f"column {c} already holds a dot")
        seen.add(c)
    return VALID


EMPTY_PLACEMENT = RookPlacement(0, ())


def extensions(rp: RookPlacement) -> list[RookPlacement]:
    """The n+1 placements of size n whose top n-1 rows are ``rp``, by new dot column."""
    n = rp.n + 1
    used = rp.columns()
    return [RookPlacement(n, (c,) + rp.dots) for c in range(1, 2 * n + 1) if c not in used]


def enumerate_placements(n: int) -> Iterator[RookPlacement]:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield EMPTY_PLACEMENT
        return
    for rp in enumerate_placements(n - 1):
        yield from extensions(rp)


def enumerate_partial(n: int, k: int | None = None) -> Iterator[PartialRookPlacement]:
    """All partial placements of 2δ_n (with exactly ``k`` dots when given)."""
    choices = [[None] + list(range(1, row_length(n, r) + 1)) for r in range(1, n + 1)]
    for dots in itertools.product(*choices):
        used = [c for c in dots if c is not None]
        if len(set(used)) != len(used):
            continue
        if k is not None and len(used) != k:
            continue
        yield PartialRookPlacement(n, dots)


def top_rows(rp: RookPlacement, i: int) -> RookPlacement:
    """Keep the ``i`` topmost rows, as a placement in 2δ_i."""
    if not 0 <= i <= rp.n:
        raise ValueError(f"i must lie in 0..{rp.n}")
    return RookPlacement(i, rp.dots[rp.n - i:])


def random_placement(n: int, rng: random.Random) -> RookPlacement:
    """Uniform random placement, built by uniform random extensions."""
    rp = EMPTY_PLACEMENT
    for _ in range(n):
        rp = rng.choice(extensions(rp))
    return rp
