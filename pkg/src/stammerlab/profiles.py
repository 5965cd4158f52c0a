"""Permutation profiles and the bijection between permutations and chains of Dyck shapes.

Permutations are tuples in one-line notation.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from .dyck import Chain

Permutation = tuple[int, ...]

PEAK = "peak"
VALLEY = "valley"
DOUBLE_ASCENT = "double ascent"
DOUBLE_DESCENT = "double descent"

_STEPS = {VALLEY: "UU", PEAK: "DD", DOUBLE_ASCENT: "UD", DOUBLE_DESCENT: "DU"}


def permutation(values: Sequence[int]) -> Permutation:
    p = tuple(int(v) for v in values)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation: {p!r}")
    return p


def classify(s: Permutation) -> dict[int, str]:
    """Tag each value of ``s``, with the conventions s_0 = 0 and s_{n+1} = n+1."""
    n = len(s)
    ext = (0,) + tuple(s) + (n + 1,)
    tags = {}
    for i in range(1, n + 1):
        before, here, after = ext[i - 1], ext[i], ext[i + 1]
        if before < here > after:
            tags[here] = PEAK
        elif before > here < after:
            tags[here] = VALLEY
        elif before < here < after:
            tags[here] = DOUBLE_ASCENT
        else:
            tags[here] = DOUBLE_DESCENT
    return tags


def profile(s: Permutation) -> str:
    tags = classify(s)
    return "".join(_STEPS[tags[v]] for v in range(1, len(s) + 1))


def delete_max(s: Permutation) -> Permutation:
    if not s:
        raise ValueError("cannot delete from the empty permutation")
    n = len(s)
    return tuple(v for v in s if v != n)


def chain_of(s: Permutation) -> Chain:
    paths = []
    cur = tuple(s)
    while cur:
        paths.append(profile(cur))
        cur = delete_max(cur)
    return Chain(tuple(reversed(paths)))


def permutation_of(chain: Chain) -> Permutation:
    """Insert 2, ..., n one at a time, steered by each ribbon's leftmost column."""
    if chain.n == 0:
        return ()
    columns = chain.leftmost_columns()
    s = [1]
    for j in range(1, chain.n):
        i = columns[j]
        if i == 2 * j + 1:
            s.append(j + 1)
        elif i % 2 == 0:
            s.insert(s.index(i // 2), j + 1)
        else:
            s.insert(s.index((i + 1) // 2) + 1, j + 1)
    return tuple(s)


def permutations(n: int) -> Iterator[Permutation]:
    return itertools.permutations(range(1, n + 1))
