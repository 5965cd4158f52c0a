from math import factorial

import pytest
from hypothesis import given, strategies as st

from stammerlab import profiles as P
from stammerlab.dyck import Chain
from conftest import CHAIN_1, CHAIN_2


def test_classify():
    tags = P.classify((4, 2, 1, 3, 5))
    assert tags == {
        1: P.VALLEY,
        2: P.DOUBLE_DESCENT,
        3: P.DOUBLE_ASCENT,
        4: P.PEAK,
        5: P.DOUBLE_ASCENT,
    }
    assert P.classify((1,)) == {1: P.DOUBLE_ASCENT}
    assert P.classify((2, 1)) == {2: P.PEAK, 1: P.VALLEY}


@pytest.mark.parametrize(
    "perm, path",
    [
        ((4, 2, 1, 3, 5), "UUDUUDDDUD"),
        ((5, 1, 3, 4, 6, 2), "UUUUUDUDDDDD"),
        ((5, 1, 3, 4, 2), "UUUUUDDDDD"),
        ((1, 3, 4, 2), "UDUUUDDD"),
        ((1, 3, 2), "UDUUDD"),
        ((1, 2), "UDUD"),
        ((1,), "UD"),
    ],
)
def test_profile(perm, path):
    assert P.profile(perm) == path


def test_delete_max():
    assert P.delete_max((1, 4, 5, 7, 2, 3, 6)) == (1, 4, 5, 2, 3, 6)
    assert P.delete_max((1,)) == ()
    assert P.delete_max((5, 1, 3, 4, 6, 2)) == (5, 1, 3, 4, 2)
    with pytest.raises(ValueError):
        P.delete_max(())


def test_chains_of_running_examples():
    assert P.chain_of((5, 1, 3, 4, 6, 2)).paths == CHAIN_1
    assert P.chain_of((5, 4, 7, 1, 3, 2, 6)).paths == CHAIN_2
    assert P.chain_of((1,)).paths == ("UD",)


def test_insertion_trace():
    ch = Chain(CHAIN_1)
    assert ch.leftmost_columns() == [1, 3, 4, 5, 2, 7]
    trace = [P.permutation_of(Chain(CHAIN_1[:k])) for k in range(1, 7)]
    assert trace == [(1,), (1, 2), (1, 3, 2), (1, 3, 4, 2), (5, 1, 3, 4, 2), (5, 1, 3, 4, 6, 2)]
    assert P.permutation_of(Chain(CHAIN_2)) == (5, 4, 7, 1, 3, 2, 6)
    assert P.permutation_of(Chain(("UD",))) == (1,)


@pytest.mark.parametrize("n", range(1, 7))
def test_bijection(n):
    chains = set()
    for s in P.permutations(n):
        ch = P.chain_of(s)
        assert P.permutation_of(ch) == s
        chains.add(ch)
    assert len(chains) == factorial(n)


@given(st.permutations(range(1, 10)))
def test_round_trip_large(perm):
    s = tuple(perm)
    assert P.permutation_of(P.chain_of(s)) == s


def test_permutation_validation():
    with pytest.raises(ValueError):
        P.permutation([1, 1, 2])
