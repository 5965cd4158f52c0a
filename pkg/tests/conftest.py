import random

import pytest

from stammerlab.partitions import partition


def young(rows: str):
    """Tableau from LaTeX-style rows listed top row first, e.g. ``"4,23"``."""
    if not rows:
        return ()
    return tuple(tuple(int(ch) for ch in row) for row in reversed(rows.split(",")))


def parts(text: str):
    """Partitions from compact words: ``"∅ 1 2 21"``."""
    return tuple(() if w == "∅" else partition(int(ch) for ch in w) for w in text.split())


LAMBDA_1 = parts("∅ 1 2 1 2 21 2 2 21 11 11 11 1 1 1 ∅")
LAMBDA_2 = parts("∅ 1 2 1 2 2 1 1 11 1 2 2 1 1 2 1 1 1 ∅")
ROOK_1 = (6, 1, 4, 3, 2)
ROOK_2 = (6, 10, 7, 1, 3, 2)

CHAIN_1 = ("UD", "UDUD", "UDUUDD", "UDUUUDDD", "UUUUUDDDDD", "UUUUUDUDDDDD")
CHAIN_2 = ("UD", "UDUD", "UDUUDD", "UUUUDDDD", "UUUUDDDUDD", "UUUUDDDUDDUD", "UUUUDDUUDDUDDD")

HISTORY_1 = ("UUUUUDUDDDDD", ((1, 1), (2, 1), (3, 1), (4, 1), (5, 2), (7, 3)))
HISTORY_2 = ("UUUUDDUUDDUDDD", ((1, 1), (2, 1), (3, 1), (4, 1), (7, 2), (8, 1), (11, 1)))
TABLEAU_1 = ("UUUUUDUDDDDD", ((1, 1), (3, 1), (5, 2), (7, 3), (9, 1), (11, 1)))
TABLEAU_2 = ("UUUUDDUUDDUDDD", ((1, 1), (3, 1), (5, 1), (7, 2), (9, 1), (11, 1), (13, 1)))


@pytest.fixture
def rng():
    return random.Random(20240611)


_ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def acceptance_log(request):
    return request.config.stash.setdefault(_ACCEPTANCE, [])


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
