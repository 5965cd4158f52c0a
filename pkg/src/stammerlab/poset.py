"""The lattice of Dyck paths of all ranks, ordered by iterated ribbon addition.

Comparisons use the Dyck word (U → 1, D → 0) padded with zeros on the right.
"""

from __future__ import annotations

from .dyck import DOWN, UP, check_dyck


def _bits(word: str, length: int) -> list[int]:
    return [1 if s == UP else 0 for s in word] + [0] * (length - len(word))


def _pad(d: str, e: str) -> int:
    # beyond both words every digit is 0, so two extra digits are enough
    return max(len(d), len(e)) + 2


def leq(d: str, e: str) -> bool:
    check_dyck(d), check_dyck(e)
    n = _pad(d, e)
    return all(a <= b for a, b in zip(_bits(d, n), _bits(e, n)))


def _word(bits: list[int]) -> str:
    return "".join(UP if b else DOWN for b in bits)


def join(d: str, e: str) -> str:
    check_dyck(d), check_dyck(e)
    n = _pad(d, e)
    c = [max(a, b) for a, b in zip(_bits(d, n), _bits(e, n))]
    k = sum(c)
    # rank k needs 2k steps, which may be more than either input supplies
    c += [0] * (2 * k - len(c))
    assert not any(c[2 * k:]), "pointwise maximum has ones past its rank"
    return check_dyck(_word(c[: 2 * k]))


def meet(d: str, e: str) -> str:
    check_dyck(d), check_dyck(e)
    n = _pad(d, e)
    c = [min(a, b) for a, b in zip(_bits(d, n), _bits(e, n))]
    h = 0
    for i, b in enumerate(c):
        h += 1 if b else -1
        if h < 0:
            # c[:i] is the prefix just before the first excess zero
            return check_dyck(_word(c[:i]))
    raise AssertionError("padded word never dips below zero")  # pragma: no cover
