"""Dyck paths, Dyck shapes, ribbons and chains of Dyck shapes.

A Dyck path is a string over ``U`` (up) and ``D`` (down).  Its shape is a
set of diamond cells ``(x, y)`` with ``x + y`` even: cell ``(0, 0)`` is the
bottom-left one and ``(2m - 2, 0)`` the bottom-right one for a path of rank
``m``.  Cell ``(x, y)`` belongs to column ``x + 1``; column ``k`` sits below
the ``k``-th step of the path.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .staircase import EMPTY_PLACEMENT, RookPlacement, top_rows

UP, DOWN = "U", "D"
Cell = tuple[int, int]
Ribbon = frozenset[Cell]


def is_dyck(word: str) -> bool:
    h = 0
    for s in word:
        if s == UP:
            h += 1
        elif s == DOWN:
            h -= 1
            if h < 0:
                return False
        else:
            return False
    return h == 0


def check_dyck(word: str) -> str:
    if not is_dyck(word):
        raise ValueError(f"not a Dyck path: {word!r}")
    return word


def rank(word: str) -> int:
    return word.count(UP)


def heights(word: str) -> list[int]:
    """Heights h_0..h_len after each prefix."""
    out = [0]
    for s in word:
        out.append(out[-1] + (1 if s == UP else -1))
    return out


@lru_cache(maxsize=None)
def dyck_paths(m: int) -> tuple[str, ...]:
    """All Dyck paths of rank ``m`` in lexicographic order (U < D)."""
    out = []

    def rec(prefix: str, ups: int, h: int):
        if len(prefix) == 2 * m:
            out.append(prefix)
            return
        if ups < m:
            rec(prefix + UP, ups + 1, h + 1)
        if h > 0:
            rec(prefix + DOWN, ups, h - 1)

    rec("", 0, 0)
    return tuple(out)


# --- shape view ------------------------------------------------------------

@lru_cache(maxsize=None)
def cells(word: str) -> frozenset[Cell]:
    """Cells of the Dyck shape under ``word``."""
    h = heights(word)
    out = set()
    for x in range(max(len(word) - 1, 0)):
        for y in range(x % 2, h[x + 1], 2):
            out.add((x, y))
    return frozenset(out)


def column_cells(word: str, k: int) -> list[Cell]:
    """Cells of column ``k`` (1-based), bottom to top."""
    h = heights(word)
    if not 1 <= k <= len(word):
        return []
    x = k - 1
    return [(x, y) for y in range(x % 2, h[k], 2)]


def column_size(word: str, k: int) -> int:
    return len(column_cells(word, k))


def cell_index(cell: Cell) -> int:
    """Position of a cell within its column, 1 = bottom."""
    x, y = cell
    return (y - x % 2) // 2 + 1


def cell_at(k: int, index: int) -> Cell:
    x = k - 1
    return (x, x % 2 + 2 * (index - 1))


def up_columns(word: str) -> list[int]:
    return [k for k, s in enumerate(word, start=1) if s == UP]


def is_ribbon(cs: frozenset[Cell] | set[Cell]) -> bool:
    """Connected (edge-adjacent diamonds) and free of 2×2 squares."""
    cs = set(cs)
    if not cs:
        return False
    for x, y in cs:
        if {(x + 1, y + 1), (x + 1, y - 1), (x + 2, y)} <= cs:
            return False
    seen = {min(cs)}
    stack = [min(cs)]
    while stack:
        x, y = stack.pop()
        for nb in ((x + 1, y + 1), (x + 1, y - 1), (x - 1, y + 1), (x - 1, y - 1)):
            if nb in cs and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cs)


def diagonals(cs) -> int:
    """Number of ⟋-diagonals (constant x - y) met by a set of cells."""
    return len({x - y for x, y in cs})


# --- ribbon addition -------------------------------------------------------

def ribbon_successors(word: str) -> list[tuple[str, Ribbon]]:
    """All E with ``word`` ⊏ E and the ribbon E / word, by ribbon diagonal count 1..m+1."""
    padded = word + DOWN + DOWN
    base = cells(word)
    out = []
    for p in range(len(padded) - 1):
        if padded[p] == DOWN:
            succ = padded[:p] + UP + padded[p + 1:]
            out.append((succ, frozenset(cells(succ) - base)))
    out.sort(key=lambda e: diagonals(e[1]))
    return out


def add_ribbon(word: str, i: int) -> str:
    succ = ribbon_successors(word)
    if not 1 <= i <= len(succ):
        raise ValueError(f"diagonal count must lie in 1..{len(succ)}")
    return succ[i - 1][0]


def flipped_step(small: str, big: str) -> int:
    """1-based index of the step changed from ``small``+DD to ``big``; raise unless small ⊏ big."""
    padded = small + DOWN + DOWN
    if len(big) != len(padded):
        raise ValueError(f"{big!r} is not one rank above {small!r}")
    diff = [i for i, (a, b) in enumerate(zip(padded, big)) if a != b]
    if len(diff) != 1 or padded[diff[0]] != DOWN or diff[0] == len(padded) - 1:
        raise ValueError(f"{big!r} is not obtained from {small!r} by adding a ribbon")
    return diff[0] + 1


def covers(small: str, big: str) -> bool:
    """small ⊏ big."""
    try:
        flipped_step(small, big)
    except ValueError:
        return False
    return True


# --- chains ----------------------------------------------------------------

@dataclass(frozen=True)
class Chain:
    """An n-chain D_1 ⊏ ... ⊏ D_n, D_i of rank i."""

    paths: tuple[str, ...]

    def __post_init__(self):
        for i, p in enumerate(self.paths, start=1):
            if not is_dyck(p) or rank(p) != i:
                raise ValueError(f"D_{i} = {p!r} is not a Dyck path of rank {i}")
        for a, b in zip(self.paths, self.paths[1:]):
            if not covers(a, b):
                raise ValueError(f"{a!r} ⊏ {b!r} fails")

    @classmethod
    def of(cls, paths: Sequence[str]) -> "Chain":
        return cls(tuple(paths))

    @property
    def n(self) -> int:
        return len(self.paths)

    @property
    def shape(self) -> str:
        return self.paths[-1] if self.paths else ""

    def ribbons(self) -> list[Ribbon]:
        prev: frozenset[Cell] = frozenset()
        out = []
        for p in self.paths:
            cur = cells(p)
            out.append(frozenset(cur - prev))
            prev = cur
        return out

    def leftmost_columns(self) -> list[int]:
        """Column (1-based) of the leftmost cell of each ribbon."""
        return [min(r)[0] + 1 for r in self.ribbons()]


def enumerate_chains(n: int) -> Iterator[Chain]:
    """Every n-chain, ribbons added in increasing diagonal count."""
    if n <= 0:
        yield Chain(())
        return

    def rec(paths: list[str]):
        if len(paths) == n:
            yield Chain(tuple(paths))
            return
        for succ, _ in ribbon_successors(paths[-1]):
            paths.append(succ)
            yield from rec(paths)
            paths.pop()

    yield from rec(["UD"])


def random_chain(n: int, rng) -> Chain:
    paths = ["UD"]
    while len(paths) < n:
        paths.append(rng.choice(ribbon_successors(paths[-1]))[0])
    return Chain(tuple(paths[:n]))


# --- rook placements -------------------------------------------------------

def path_from_rook(rp: RookPlacement) -> str:
    """d(R): U, then U/D for each column 1..2n (dot or not), then D."""
    used = rp.columns()
    middle = "".join(UP if c in used else DOWN for c in range(1, 2 * rp.n + 1))
    return UP + middle + DOWN


def chain_from_rook(rp: RookPlacement) -> Chain:
    """(d(R_0), ..., d(R_N)) for R in 2δ_N, an (N+1)-chain."""
    return Chain(tuple(path_from_rook(top_rows(rp, i)) for i in range(rp.n + 1)))


def rook_from_chain(chain: Chain) -> RookPlacement:
    if chain.n == 0:
        raise ValueError("a chain needs at least one path")
    big_n = chain.n - 1
    dots = [0] * big_n
    for i in range(1, chain.n):
        prev, cur = chain.paths[i - 1], chain.paths[i]
        j = next((s for s, (a, b) in enumerate(zip(prev, cur), start=1) if a != b), 2 * i + 1)
        # the i-th row from the top is row big_n - i + 1 from the bottom
        dots[big_n - i] = j - 1
    if big_n == 0:
        return EMPTY_PLACEMENT
    return RookPlacement.of(dots)
