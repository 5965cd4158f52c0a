from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from stammerlab import dyck as D
from stammerlab.staircase import EMPTY_PLACEMENT, RookPlacement, enumerate_placements, random_placement
from conftest import CHAIN_1, CHAIN_2, ROOK_1, ROOK_2

SHAPE_3111 = "UUDUUDDDUD"  # δ_5 / (3,1,1,1)


def test_dyck_words():
    assert D.is_dyck("") and D.is_dyck("UUDD") and not D.is_dyck("DU") and not D.is_dyck("UUD")
    assert D.rank("UDUD") == 2
    assert D.heights("UUD") == [0, 1, 2, 1]
    with pytest.raises(ValueError):
        D.check_dyck("UDD")


@pytest.mark.parametrize("m", range(8))
def test_catalan_counts(m):
    paths = D.dyck_paths(m)
    assert len(paths) == comb(2 * m, m) // (m + 1) == len(set(paths))
    assert list(paths) == sorted(paths, key=lambda w: w.replace("U", "0").replace("D", "1"))


def test_shape_cells():
    cs = D.cells(SHAPE_3111)
    assert len(cs) == 15 - 6
    sizes = [D.column_size(SHAPE_3111, k) for k in range(1, 11)]
    assert sum(1 for s in sizes if s) == 8 and sizes.count(2) == 1
    assert {y for _, y in cs} == {0, 1, 2}
    assert D.up_columns(SHAPE_3111) == [1, 2, 4, 5, 9]


def test_cell_indexing_round_trip():
    for w in D.dyck_paths(5):
        for x, y in D.cells(w):
            assert D.cell_at(x + 1, D.cell_index((x, y))) == (x, y)


def test_rook_paths():
    assert D.path_from_rook(RookPlacement(5, ROOK_1)) == "UUUUUDUDDDDD"
    assert D.path_from_rook(RookPlacement(6, ROOK_2)) == "UUUUDDUUDDUDDD"
    assert D.path_from_rook(EMPTY_PLACEMENT) == "UD"


def test_successors_of_skew_shape():
    succ = D.ribbon_successors(SHAPE_3111)
    assert len(succ) == 6
    assert [D.diagonals(r) for _, r in succ] == [1, 2, 3, 4, 5, 6]
    assert D.add_ribbon(SHAPE_3111, 1) == SHAPE_3111 + "UD"
    assert D.add_ribbon(SHAPE_3111, 6) == "UUUUUDDDUDDD"
    assert all(D.is_ribbon(r) for _, r in succ)


def test_successors_of_single_cell():
    assert [w for w, _ in D.ribbon_successors("UD")] == ["UDUD", "UUDD"]
    assert D.add_ribbon("UD", 1) == "UDUD"
    with pytest.raises(ValueError):
        D.add_ribbon("UD", 3)


@pytest.mark.parametrize("m", range(6))
def test_one_ribbon_per_diagonal_count(m):
    for w in D.dyck_paths(m):
        succ = D.ribbon_successors(w)
        assert len(succ) == m + 1
        assert sorted(D.diagonals(r) for _, r in succ) == list(range(1, m + 2))
        for big, rib in succ:
            assert D.covers(w, big)
            assert D.cells(big) - D.cells(w) == rib and D.cells(w) <= D.cells(big)


def test_ribbon_leftmost_column_is_flipped_step():
    for w in D.dyck_paths(4):
        for big, rib in D.ribbon_successors(w):
            assert min(rib)[0] + 1 == D.flipped_step(w, big)


def test_is_ribbon():
    assert D.is_ribbon({(0, 0)})
    assert not D.is_ribbon({(0, 0), (4, 0)})
    assert not D.is_ribbon({(2, 0), (1, 1), (3, 1), (2, 2)})


def test_chains_of_running_examples():
    assert D.chain_from_rook(RookPlacement(5, ROOK_1)).paths == CHAIN_1
    assert D.chain_from_rook(RookPlacement(6, ROOK_2)).paths == CHAIN_2
    assert D.rook_from_chain(D.Chain(CHAIN_1)).dots == ROOK_1
    assert D.rook_from_chain(D.Chain(CHAIN_2)).dots == ROOK_2
    assert D.chain_from_rook(EMPTY_PLACEMENT).paths == ("UD",)
    assert D.rook_from_chain(D.Chain(("UD",))) == EMPTY_PLACEMENT


def test_chain_validation():
    with pytest.raises(ValueError):
        D.Chain(("UD", "UUDDUD"))
    with pytest.raises(ValueError):
        D.Chain(("UUDD",))


def test_ribbons_partition_the_shape():
    ch = D.Chain(CHAIN_1)
    ribs = ch.ribbons()
    assert sum(len(r) for r in ribs) == len(D.cells(ch.shape))
    assert frozenset().union(*ribs) == D.cells(ch.shape)
    assert ch.leftmost_columns() == [1, 3, 4, 5, 2, 7]
    # right ends of the ribbons are the bottom cells
    assert {max(r, key=lambda c: (c[0], -c[1])) for r in ribs} == {c for c in D.cells(ch.shape) if c[1] == 0}


@pytest.mark.parametrize("n", range(1, 7))
def test_chain_counts(n):
    chains = list(D.enumerate_chains(n))
    assert len(chains) == factorial(n) == len(set(chains))


@pytest.mark.parametrize("n", range(5))
def test_rook_chain_round_trip(n):
    for rp in enumerate_placements(n):
        assert D.rook_from_chain(D.chain_from_rook(rp)) == rp
    for ch in D.enumerate_chains(n + 1):
        assert D.chain_from_rook(D.rook_from_chain(ch)) == ch


@given(st.integers(0, 2**32 - 1))
def test_rook_chain_round_trip_random(seed):
    import random

    rp = random_placement(6, random.Random(seed))
    ch = D.chain_from_rook(rp)
    assert ch.shape == D.path_from_rook(rp)
    assert D.rook_from_chain(ch) == rp
