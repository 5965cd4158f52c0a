"""Stammering tableaux: walks in Young's lattice with the (up-or-stay, up-or-stay, down) pattern."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from ._common import VALID, Validity
from .partitions import EMPTY, Partition, covers, covers_above, covers_below, partition, size


@dataclass(frozen=True)
class StammeringTableau:
    """Sequence λ^(0), ..., λ^(3n); endpoints may be arbitrary (generalized form)."""

    steps: tuple[Partition, ...]
    n: int

    def __post_init__(self):
        if len(self.steps) != 3 * self.n + 1:
            raise ValueError(f"size {self.n} needs {3 * self.n + 1} steps, got {len(self.steps)}")

    @classmethod
    def of(cls, steps: Sequence[Sequence[int]]) -> "StammeringTableau":
        """Build from raw part lists and check the step pattern (endpoints unchecked)."""
        seq = tuple(partition(p) for p in steps)
        if len(seq) % 3 != 1:
            raise ValueError(f"length {len(seq)} is not 1 mod 3")
        report = validate(seq, seq[0], seq[-1])
        if not report:
            raise ValueError(f"invalid stammering tableau at index {report.index}: {report.rule}")
        return cls(seq, (len(seq) - 1) // 3)

    @property
    def start(self) -> Partition:
        return self.steps[0]

    @property
    def end(self) -> Partition:
        return self.steps[-1]

    @property
    def is_plain(self) -> bool:
        return self.start == EMPTY and self.end == EMPTY

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)


def validate(seq: Sequence[Partition], mu: Partition = EMPTY, nu: Partition = EMPTY) -> Validity:
    """Check the mod-3 step pattern and the endpoints ``mu``, ``nu``."""
    if len(seq) % 3 != 1:
        return Validity(False, len(seq), "length must be 1 mod 3")
    if tuple(seq[0]) != tuple(mu):
        return Validity(False, 0, "first partition differs from the start endpoint")
    for i in range(len(seq) - 1):
        a, b = tuple(seq[i]), tuple(seq[i + 1])
        if i % 3 == 2:
            if not covers(b, a):
                return Validity(False, i, "step i ≡ 2 mod 3 must remove exactly one cell")
        elif a != b and not covers(a, b):
            return Validity(False, i, "step i ≡ 0, 1 mod 3 must add one cell or stay")
    if tuple(seq[-1]) != tuple(nu):
        return Validity(False, len(seq) - 1, "last partition differs from the end endpoint")
    return VALID


def _options(i: int, lam: Partition) -> list[Partition]:
    if i % 3 == 2:
        return covers_below(lam)
    return [lam] + covers_above(lam)


def _reachable(i: int, cur: int, n: int, target: int) -> bool:
    # Size window still reachable from position i: each remaining triple may
    # add at most 2 cells and always removes exactly 1.
    remaining = 3 * n - i
    downs = sum(1 for j in range(i, 3 * n) if j % 3 == 2)
    ups = remaining - downs
    return cur - downs <= target <= cur - downs + ups


def enumerate_tableaux(n: int, mu: Partition = EMPTY, nu: Partition = EMPTY) -> Iterator[StammeringTableau]:
    """Every (generalized) stammering tableau of size ``n`` from ``mu`` to ``nu``.

    Depth first, trying "stay" before the covers in row order, so the output
    order is deterministic.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    mu, nu = partition(mu), partition(nu)
    target = size(nu)
    path = [mu]

    def rec(i: int) -> Iterator[StammeringTableau]:
        if i == 3 * n:
            if path[-1] == nu:
                yield StammeringTableau(tuple(path), n)
            return
        for nxt in _options(i, path[-1]):
            if _reachable(i + 1, size(nxt), n, target):
                path.append(nxt)
                yield from rec(i + 1)
                path.pop()

    if _reachable(0, size(mu), n, target):
        yield from rec(0)


def count(n: int, mu: Partition = EMPTY, nu: Partition = EMPTY) -> int:
    return sum(1 for _ in enumerate_tableaux(n, mu, nu))


def random_tableau(n: int, rng: random.Random) -> StammeringTableau:
    """A random plain stammering tableau (random walk with restarts; not uniform)."""
    while True:
        path = [EMPTY]
        for i in range(3 * n):
            opts = [p for p in _options(i, path[-1]) if _reachable(i + 1, size(p), n, 0)]
            if not opts:
                break
            path.append(rng.choice(opts))
        else:
            return StammeringTableau(tuple(path), n)
