"""Closed-form counts for partial rook placements and one-sided stammering tableaux.

Each closed form comes with a brute-force oracle; the CLI exposes both.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial

from .partitions import EMPTY, Partition, count_standard_tableaux, partition, size
from .staircase import enumerate_partial
from .stammering import count as count_stammering


def a(n: int, k: int) -> int:
    """Fillings of 2δ_n by ``k`` non-attacking dots (at most one per row and column)."""
    if n < 0 or k < 0 or k > n:
        return 0
    return factorial(n + 1) // factorial(n - k + 1) * comb(n, k)


@lru_cache(maxsize=None)
def a_recursive(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    if n == 0:
        return 1
    # the new bottom row is empty, or holds a dot in one of its 2n - (k - 1) free columns
    return a_recursive(n - 1, k) + (2 * n - k + 1) * a_recursive(n - 1, k - 1)


def a_brute(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    return sum(1 for _ in enumerate_partial(n, k))


def t_empty_to(n: int, lam: Partition) -> int:
    """Number of stammering tableaux of size ``n`` from ∅ to ``lam``."""
    lam = partition(lam)
    k = size(lam)
    if k > n:
        return 0
    return factorial(n + 1) * comb(n, k) * count_standard_tableaux(lam)


def t_to_empty(n: int, lam: Partition) -> int:
    """Number of stammering tableaux of size ``n`` from ``lam`` to ∅."""
    lam = partition(lam)
    k = size(lam)
    if k > n:
        return 0
    return factorial(n + 1) // factorial(k + 1) * comb(n, k) * count_standard_tableaux(lam)


def t_brute(n: int, mu: Partition, nu: Partition) -> int:
    """Exhaustive count for arbitrary endpoints (no closed form is known in general)."""
    return count_stammering(n, partition(mu), partition(nu))


def t_empty_to_brute(n: int, lam: Partition) -> int:
    return t_brute(n, EMPTY, lam)


def t_to_empty_brute(n: int, lam: Partition) -> int:
    return t_brute(n, lam, EMPTY)
