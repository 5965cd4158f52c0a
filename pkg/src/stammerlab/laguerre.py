"""Laguerre histories, Dyck tableaux and the column bijection κ between them.

Both fillings are stored as a shape word plus ``(column, index)`` pairs,
columns 1-based and indices counted from the bottom cell of the column.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .dyck import (
    DOWN,
    UP,
    Chain,
    cell_at,
    cell_index,
    column_size,
    dyck_paths,
    heights,
    is_dyck,
    up_columns,
)

Dots = tuple[tuple[int, int], ...]


def _normalize(dots: Iterable[Iterable[int]]) -> Dots:
    return tuple(sorted((int(c), int(i)) for c, i in dots))


def _check_filling(shape: str, dots: Dots, columns: list[int], what: str) -> None:
    if not is_dyck(shape) or not shape:
        raise ValueError(f"{what} shape must be a non-empty Dyck path, got {shape!r}")
    cols = [c for c, _ in dots]
    if sorted(cols) != sorted(columns):
        raise ValueError(f"{what} needs one dot in each of columns {columns}, got {cols}")
    for c, i in dots:
        if not 1 <= i <= column_size(shape, c):
            raise ValueError(f"column {c} of {shape!r} has {column_size(shape, c)} cells, no cell {i}")


@dataclass(frozen=True)
class LaguerreHistory:
    """One dot in each column below an up-step."""

    shape: str
    dots: Dots

    def __post_init__(self):
        object.__setattr__(self, "dots", _normalize(self.dots))
        _check_filling(self.shape, self.dots, up_columns(self.shape), "Laguerre history")

    def dot_map(self) -> dict[int, int]:
        return dict(self.dots)


@dataclass(frozen=True)
class DyckTableau:
    """One dot in each odd column."""

    shape: str
    dots: Dots

    def __post_init__(self):
        object.__setattr__(self, "dots", _normalize(self.dots))
        _check_filling(self.shape, self.dots, odd_columns(self.shape), "Dyck tableau")

    def dot_map(self) -> dict[int, int]:
        return dict(self.dots)


def odd_columns(shape: str) -> list[int]:
    return list(range(1, len(shape), 2))


# --- chains <-> histories --------------------------------------------------

def history_from_chain(chain: Chain) -> LaguerreHistory:
    """Dot the leftmost cell of every ribbon."""
    dots = [(x + 1, cell_index((x, y))) for x, y in (min(r) for r in chain.ribbons())]
    return LaguerreHistory(chain.shape, tuple(dots))


def chain_from_history(h: LaguerreHistory) -> Chain:
    """Peel ribbons off the right end, each stopping at the first dotted top cell."""
    shape = h.shape
    dots = h.dot_map()
    paths = [shape]
    while len(shape) > 2:
        hs = heights(shape)
        k = None
        for col in range(len(shape) - 1, 0, -1):
            top = hs[col] - 1  # top cell of column col sits at height h_col - 1
            if dots.get(col) is not None and cell_at(col, dots[col]) == (col - 1, top):
                k = col
                break
        if k is None or shape[k - 1] != UP:
            raise ValueError(f"no ribbon can be peeled from {shape!r} with dots {sorted(dots.items())}")
        del dots[k]
        flipped = shape[: k - 1] + DOWN + shape[k:]
        if not flipped.endswith(DOWN + DOWN):
            raise ValueError(f"peeling column {k} of {shape!r} does not leave a Dyck shape")
        shape = flipped[:-2]
        if not is_dyck(shape):
            raise ValueError(f"peeling column {k} leaves {shape!r}, not a Dyck path")
        paths.append(shape)
    if shape != "UD" or list(dots) != [1] or dots[1] != 1:
        raise ValueError("history does not reduce to the single-cell shape with its dot")
    return Chain(tuple(reversed(paths)))


# --- κ ---------------------------------------------------------------------

@lru_cache(maxsize=None)
def kappa(shape: str) -> dict[int, int]:
    """Map each column below an up-step to an odd column holding as many cells."""
    hs = heights(shape)
    out = {}
    for k in up_columns(shape):
        if k % 2 == 1:
            out[k] = k
            continue
        y = hs[k - 1]
        # facing step: first down-step from height y+1 to y after step k
        facing = next(s for s in range(k + 1, len(shape) + 1) if shape[s - 1] == DOWN and hs[s - 1] == y + 1)
        out[k] = facing
    return out


def kappa_inverse(shape: str) -> dict[int, int]:
    return {v: k for k, v in kappa(shape).items()}


def to_dyck_tableau(h: LaguerreHistory) -> DyckTableau:
    kp = kappa(h.shape)
    return DyckTableau(h.shape, tuple((kp[c], i) for c, i in h.dots))


def from_dyck_tableau(t: DyckTableau) -> LaguerreHistory:
    inv = kappa_inverse(t.shape)
    return LaguerreHistory(t.shape, tuple((inv[c], i) for c, i in t.dots))


# --- enumeration -----------------------------------------------------------

def histories_of_shape(shape: str) -> Iterator[LaguerreHistory]:
    cols = up_columns(shape)
    for idx in itertools.product(*(range(1, column_size(shape, c) + 1) for c in cols)):
        yield LaguerreHistory(shape, tuple(zip(cols, idx)))


def dyck_tableaux_of_shape(shape: str) -> Iterator[DyckTableau]:
    cols = odd_columns(shape)
    for idx in itertools.product(*(range(1, column_size(shape, c) + 1) for c in cols)):
        yield DyckTableau(shape, tuple(zip(cols, idx)))


def enumerate_histories(n: int) -> Iterator[LaguerreHistory]:
    for shape in dyck_paths(n):
        yield from histories_of_shape(shape)


def enumerate_dyck_tableaux(n: int) -> Iterator[DyckTableau]:
    for shape in dyck_paths(n):
        yield from dyck_tableaux_of_shape(shape)


def random_history(n: int, rng) -> LaguerreHistory:
    shape = rng.choice(dyck_paths(n))
    cols = up_columns(shape)
    return LaguerreHistory(shape, tuple((c, rng.randint(1, column_size(shape, c))) for c in cols))


def random_dyck_tableau(n: int, rng) -> DyckTableau:
    shape = rng.choice(dyck_paths(n))
    cols = odd_columns(shape)
    return DyckTableau(shape, tuple((c, rng.randint(1, column_size(shape, c))) for c in cols))
