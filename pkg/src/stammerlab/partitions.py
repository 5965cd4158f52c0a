"""Integer partitions, Young's lattice and incomplete standard tableaux.

A partition is a plain tuple of positive integers in weakly decreasing order,
``()`` being the empty diagram.  Tableaux are tuples of rows, bottom row first
(French convention), each row a strictly increasing tuple of integers.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]

EMPTY: Partition = ()


def partition(parts: Iterable[int]) -> Partition:
    """Normalize ``parts`` to a partition, dropping trailing zeros."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if not is_partition(p):
        raise ValueError(f"not a partition: {p!r}")
    return p


def is_partition(p: Sequence[int]) -> bool:
    return all(x > 0 for x in p) and all(p[i] >= p[i + 1] for i in range(len(p) - 1))


def size(p: Partition) -> int:
    return sum(p)


def contains(big: Partition, small: Partition) -> bool:
    """True iff the diagram of ``small`` is a subset of that of ``big``."""
    if len(small) > len(big):
        return False
    return all(s <= b for s, b in zip(small, big))


def union(p: Partition, q: Partition) -> Partition:
    n = max(len(p), len(q))
    p2 = p + (0,) * (n - len(p))
    q2 = q + (0,) * (n - len(q))
    return tuple(max(a, b) for a, b in zip(p2, q2))


def intersection(p: Partition, q: Partition) -> Partition:
    return tuple(min(a, b) for a, b in zip(p, q) if min(a, b) > 0)


def add_cell(p: Partition, row: int) -> Partition:
    """Add a cell at the end of ``row`` (0-based); raise if the result is not a partition."""
    parts = list(p)
    if row == len(parts):
        parts.append(1)
    elif 0 <= row < len(parts):
        parts[row] += 1
    else:
        raise ValueError(f"cannot add a cell in row {row} of {p!r}")
    if row > 0 and parts[row] > parts[row - 1]:
        raise ValueError(f"cannot add a cell in row {row} of {p!r}")
    return tuple(parts)


def remove_cell(p: Partition, row: int) -> Partition:
    """Remove the last cell of ``row`` (0-based); raise if the result is not a partition."""
    if not 0 <= row < len(p):
        raise ValueError(f"cannot remove a cell from row {row} of {p!r}")
    if row + 1 < len(p) and p[row + 1] == p[row]:
        raise ValueError(f"cannot remove a cell from row {row} of {p!r}")
    parts = list(p)
    parts[row] -= 1
    return partition(parts)


def covered_row(small: Partition, big: Partition) -> int | None:
    """Row index of the single cell of ``big / small`` when ``small`` ⋖ ``big``, else None."""
    if size(big) != size(small) + 1 or not contains(big, small):
        return None
    for r, b in enumerate(big):
        if r >= len(small) or small[r] != b:
            return r
    return None  # pragma: no cover - unreachable for valid input


def covers(small: Partition, big: Partition) -> bool:
    return covered_row(small, big) is not None


def covers_above(p: Partition) -> list[Partition]:
    """Partitions obtained by adding one cell, ordered by the changed row."""
    out = []
    for r in range(len(p) + 1):
        if r == 0 or p[r - 1] > (p[r] if r < len(p) else 0):
            out.append(add_cell(p, r))
    return out


def covers_below(p: Partition) -> list[Partition]:
    """Partitions obtained by removing one corner cell, ordered by the changed row."""
    out = []
    for r in range(len(p)):
        if r + 1 == len(p) or p[r + 1] < p[r]:
            out.append(remove_cell(p, r))
    return out


@lru_cache(maxsize=None)
def count_standard_tableaux(p: Partition) -> int:
    """Number of saturated chains from the empty partition up to ``p``."""
    if not p:
        return 1
    return sum(count_standard_tableaux(q) for q in covers_below(p))


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""

    def rec(rest: int, cap: int) -> Iterator[Partition]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    yield from rec(n, n)


def conjugate(p: Partition) -> Partition:
    return tuple(sum(1 for x in p if x > j) for j in range(p[0])) if p else ()


# --- tableaux ---------------------------------------------------------------

def tableau(rows: Iterable[Iterable[int]]) -> Tableau:
    t = tuple(tuple(int(x) for x in row) for row in rows)
    t = tuple(row for row in t if row)
    if not is_incomplete_standard(t):
        raise ValueError(f"not an incomplete standard tableau: {t!r}")
    return t


def shape(t: Tableau) -> Partition:
    return tuple(len(row) for row in t)


def entries(t: Tableau) -> list[int]:
    return [x for row in t for x in row]


def is_incomplete_standard(t: Tableau) -> bool:
    if any(not row for row in t) or not is_partition(shape(t)):
        return False
    vals = entries(t)
    if len(set(vals)) != len(vals) or any(v <= 0 for v in vals):
        return False
    for r, row in enumerate(t):
        if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
            return False
        if r > 0 and any(t[r - 1][i] >= row[i] for i in range(len(row))):
            return False
    return True


def is_standard(t: Tableau) -> bool:
    return is_incomplete_standard(t) and sorted(entries(t)) == list(range(1, len(entries(t)) + 1))


def row_insert(t: Tableau, k: int) -> Tableau:
    """Schensted row insertion ``t ← k`` (bottom row first)."""
    if k in entries(t):
        raise ValueError(f"{k} is already an entry of {t!r}")
    rows = [list(row) for row in t]
    x = k
    for row in rows:
        bumped = next((i for i, v in enumerate(row) if v > x), None)
        if bumped is None:
            row.append(x)
            return tuple(tuple(r) for r in rows)
        row[bumped], x = x, row[bumped]
    rows.append([x])
    return tuple(tuple(r) for r in rows)


def corner_remove(t: Tableau, k: int) -> Tableau:
    """Delete the entry ``k`` sitting at a removable corner (``t → k``)."""
    for r, row in enumerate(t):
        if k in row:
            if row[-1] != k or (r + 1 < len(t) and len(t[r + 1]) == len(row)):
                raise ValueError(f"{k} is not at a corner of {t!r}")
            rows = list(t)
            rows[r] = row[:-1]
            return tuple(x for x in rows if x)
    raise ValueError(f"{k} is not an entry of {t!r}")


def standard_tableau_of_chain(chain: Sequence[Partition]) -> Tableau:
    """Record a saturated chain ∅ ⋖ p1 ⋖ ... as a standard tableau (entry m at the m-th new cell)."""
    rows: list[list[int]] = []
    prev: Partition = EMPTY
    if chain and chain[0] != EMPTY:
        raise ValueError("chain must start at the empty partition")
    for m, p in enumerate(chain[1:], start=1):
        r = covered_row(prev, p)
        if r is None:
            raise ValueError(f"{prev!r} is not covered by {p!r}")
        if r == len(rows):
            rows.append([])
        rows[r].append(m)
        prev = p
    return tuple(tuple(row) for row in rows)


def chain_of_standard_tableau(t: Tableau) -> list[Partition]:
    """Inverse of :func:`standard_tableau_of_chain`."""
    if not is_standard(t):
        raise ValueError(f"not a standard tableau: {t!r}")
    where = {v: r for r, row in enumerate(t) for v in row}
    chain = [EMPTY]
    for m in range(1, len(where) + 1):
        chain.append(add_cell(chain[-1], where[m]))
    return chain


def format_partition(p: Partition) -> str:
    """Compact text form: ``21`` for (2,1), ``∅`` for the empty partition."""
    if not p:
        return "∅"
    sep = "," if any(x >= 10 for x in p) else ""
    return sep.join(str(x) for x in p)
