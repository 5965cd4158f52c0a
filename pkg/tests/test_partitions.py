import itertools

import pytest
from hypothesis import given, strategies as st

from stammerlab import partitions as P
from conftest import young


def test_partition_normalizes_and_rejects():
    assert P.partition([2, 1, 0, 0]) == (2, 1)
    assert P.partition([]) == P.EMPTY
    with pytest.raises(ValueError):
        P.partition([1, 2])
    with pytest.raises(ValueError):
        P.partition([2, -1])


@pytest.mark.parametrize(
    "p, above",
    [((), [(1,)]), ((2, 1), [(3, 1), (2, 2), (2, 1, 1)]), ((1,), [(2,), (1, 1)])],
)
def test_covers_above(p, above):
    assert P.covers_above(p) == above


@pytest.mark.parametrize("p, below", [((), []), ((2, 1), [(1, 1), (2,)]), ((2, 2), [(2, 1)])])
def test_covers_below(p, below):
    assert P.covers_below(p) == below


@pytest.mark.parametrize("p, f", [((), 1), ((2, 1), 2), ((3, 2), 5), ((3, 2, 1), 16), ((4,), 1)])
def test_count_standard_tableaux(p, f):
    assert P.count_standard_tableaux(p) == f


def _brute_syt(p):
    # count linear extensions by removing corners
    if not p:
        return 1
    return sum(_brute_syt(q) for q in P.covers_below(p))


@pytest.mark.parametrize("n", range(7))
def test_count_standard_tableaux_matches_corner_recursion(n):
    for p in P.partitions_of(n):
        assert P.count_standard_tableaux(p) == _brute_syt(p)


def test_partitions_of_counts():
    assert [sum(1 for _ in P.partitions_of(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


def test_union_intersection_contains():
    assert P.union((2,), (1, 1)) == (2, 1)
    assert P.intersection((2,), (1, 1)) == (1,)
    assert P.contains((2, 1), (1, 1))
    assert not P.contains((2,), (1, 1))


def test_conjugate():
    assert P.conjugate((3, 1)) == (2, 1, 1)
    assert P.conjugate(()) == ()


@pytest.mark.parametrize(
    "before, k, after",
    [("24", 3, "4,23"), ("", 5, "5"), ("25", 4, "5,24"), ("2", 5, "25")],
)
def test_row_insert(before, k, after):
    assert P.row_insert(young(before), k) == young(after)


@pytest.mark.parametrize("before, k, after", [("4,23", 4, "23"), ("1", 1, ""), ("2,13", 3, "2,1")])
def test_corner_remove(before, k, after):
    assert P.corner_remove(young(before), k) == young(after)


def test_corner_remove_rejects_non_corner():
    with pytest.raises(ValueError):
        P.corner_remove(young("4,23"), 2)
    with pytest.raises(ValueError):
        P.corner_remove(young("23"), 7)


def test_row_insert_rejects_duplicate():
    with pytest.raises(ValueError):
        P.row_insert(young("23"), 3)


@given(st.permutations(range(1, 8)))
def test_insertion_keeps_standardness_and_grows_one_cell(word):
    t = ()
    for k, x in enumerate(word, start=1):
        t2 = P.row_insert(t, x)
        assert P.is_incomplete_standard(t2)
        assert P.covers(P.shape(t), P.shape(t2))
        t = t2
    assert P.is_standard(t)


@pytest.mark.parametrize("n", range(6))
def test_tableau_chain_round_trip(n):
    for p in P.partitions_of(n):
        seen = set()

        def chains(q):
            if not q:
                yield [()]
                return
            for r in P.covers_below(q):
                for c in chains(r):
                    yield c + [q]

        for chain in chains(p):
            t = P.standard_tableau_of_chain(chain)
            assert P.is_standard(t) and P.shape(t) == p
            assert P.chain_of_standard_tableau(t) == chain
            seen.add(t)
        assert len(seen) == P.count_standard_tableaux(p)


def test_tableau_validation():
    assert P.tableau([[1, 3], [2]]) == ((1, 3), (2,))
    with pytest.raises(ValueError):
        P.tableau([[3, 1]])
    with pytest.raises(ValueError):
        P.tableau([[1], [2, 3]])


def test_format_partition():
    assert P.format_partition(()) == "∅"
    assert P.format_partition((2, 1)) == "21"
    assert P.format_partition((12, 3)) == "12,3"


def test_add_and_remove_cell_are_inverse():
    for p in itertools.chain.from_iterable(P.partitions_of(n) for n in range(6)):
        for q in P.covers_above(p):
            r = P.covered_row(p, q)
            assert P.add_cell(p, r) == q
            assert P.remove_cell(q, r) == p
