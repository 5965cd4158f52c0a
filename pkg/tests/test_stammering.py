import itertools
from math import factorial

import pytest

from stammerlab import stammering as S
from stammerlab.partitions import covers, partitions_of
from conftest import LAMBDA_1, LAMBDA_2, parts


def test_running_examples_are_valid():
    assert S.validate(LAMBDA_1)
    assert S.validate(LAMBDA_2)
    assert S.StammeringTableau.of(LAMBDA_1).n == 5
    assert S.StammeringTableau.of(LAMBDA_2).n == 6


def test_small_valid_and_invalid():
    assert S.validate(parts("∅ 1 1 ∅"))
    bad = S.validate(parts("∅ 1 2 2"), (), (2,))
    assert not bad and bad.index == 2


def test_validate_reports_endpoint_and_length():
    assert not S.validate(parts("∅ 1 1"))
    assert S.validate(parts("1 1 1 ∅"), (1,), ()).ok
    assert S.validate(parts("1 1 1 ∅")).index == 0
    assert not S.validate(parts("∅ 1 2 1"))
    # a jump by two cells breaks the pattern
    assert not S.validate(parts("∅ 2 2 1"), (), (1,))


def test_enumerate_n1():
    got = {t.steps for t in S.enumerate_tableaux(1)}
    assert got == {parts("∅ ∅ 1 ∅"), parts("∅ 1 1 ∅")}


def test_enumerate_n1_to_single_cell():
    got = {t.steps for t in S.enumerate_tableaux(1, (), (1,))}
    assert got == {parts("∅ 1 2 1"), parts("∅ 1 11 1")}


@pytest.mark.parametrize("n", range(6))
def test_counts_are_factorials(n):
    assert S.count(n) == factorial(n + 1)


def _brute(n, mu, nu):
    # every sequence of partitions of the right sizes, filtered by the pattern
    pool = [p for k in range(2 * n + len(mu) + 1) for p in partitions_of(k)]
    out = set()

    def rec(seq):
        i = len(seq) - 1
        if i == 3 * n:
            if seq[-1] == nu:
                out.add(tuple(seq))
            return
        for q in pool:
            a = seq[-1]
            ok = covers(q, a) if i % 3 == 2 else (q == a or covers(a, q))
            if ok:
                rec(seq + [q])

    rec([mu])
    return out


@pytest.mark.parametrize("n, mu, nu", [(2, (), ()), (2, (), (1, 1)), (2, (2,), ()), (3, (1,), (1,))])
def test_enumeration_matches_unpruned_search(n, mu, nu):
    got = [t.steps for t in S.enumerate_tableaux(n, mu, nu)]
    assert len(got) == len(set(got))
    assert set(got) == _brute(n, mu, nu)


def test_enumeration_is_deterministic():
    a = [t.steps for t in S.enumerate_tableaux(3)]
    b = [t.steps for t in S.enumerate_tableaux(3)]
    assert a == b


def test_every_enumerated_tableau_validates():
    for t in S.enumerate_tableaux(4):
        assert S.validate(t.steps)


def test_size_mismatch_rejected():
    with pytest.raises(ValueError):
        S.StammeringTableau(parts("∅ 1 1 ∅"), 2)
    with pytest.raises(ValueError):
        S.StammeringTableau.of(parts("∅ 1 1"))


def test_random_tableau_is_valid(rng):
    for n in range(7):
        t = S.random_tableau(n, rng)
        assert t.is_plain and S.validate(t.steps)
