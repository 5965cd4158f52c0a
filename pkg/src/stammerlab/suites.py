"""Invariant suites behind ``stammerlab verify``.

Every check enumerates objects exhaustively up to ``max_n`` and compares
against an independent computation, reporting the first counterexample.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import factorial, prod
from typing import Any, Callable, Iterable

from . import ansatz, counting, dyck, growth, kinds, laguerre, poset, profiles, staircase, stammering
from .partitions import partitions_of

SUITES = ("roundtrips", "counts", "constructions", "lattice", "ansatz")


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    detail: str = ""
    counterexample: Any = None


@dataclass
class Report:
    suite: str
    max_n: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "max_n": self.max_n,
            "passed": self.passed,
            "checks": [asdict(c) for c in self.checks],
        }


def _scan(name: str, items: Iterable, ok: Callable[[Any], bool], show: Callable[[Any], Any] = repr) -> CheckResult:
    cases = 0
    for item in items:
        cases += 1
        try:
            good = ok(item)
        except (AssertionError, ValueError) as exc:
            return CheckResult(name, False, cases, f"{type(exc).__name__}: {exc}", show(item))
        if not good:
            return CheckResult(name, False, cases, "mismatch", show(item))
    return CheckResult(name, True, cases)


def _equal(name: str, got: dict, want: dict) -> CheckResult:
    bad = {k: (got[k], want[k]) for k in want if got[k] != want[k]}
    detail = ", ".join(f"{k}: {got[k]}" for k in want)
    if bad:
        k = next(iter(bad))
        return CheckResult(name, False, len(want), detail, {"at": k, "got": bad[k][0], "want": bad[k][1]})
    return CheckResult(name, True, len(want), detail)


# --- roundtrips ------------------------------------------------------------

def _roundtrip_pairs(max_n: int):
    K = kinds
    yield "stammering<->rook", K.ROOK, K.STAMMERING, lambda n: staircase.enumerate_placements(n), range(max_n + 1)
    yield "rook<->chain", K.ROOK, K.CHAIN, lambda n: staircase.enumerate_placements(n), range(max_n + 1)
    yield "chain<->permutation", K.CHAIN, K.PERMUTATION, dyck.enumerate_chains, range(1, max_n + 1)
    yield "chain<->laguerre", K.CHAIN, K.LAGUERRE, dyck.enumerate_chains, range(1, max_n + 1)
    yield "laguerre<->dyck-tableau", K.LAGUERRE, K.DYCK_TABLEAU, laguerre.enumerate_histories, range(1, max_n + 1)


def roundtrip_checks(max_n: int) -> list[CheckResult]:
    out = []
    for name, a, b, gen, sizes in _roundtrip_pairs(max_n):
        there = _scan(
            f"{name} forward",
            (x for n in sizes for x in gen(n)),
            lambda x: kinds.convert(b, kinds.convert(a, x, b), a) == x,
            lambda x: kinds.to_json(a, x),
        )
        out.append(there)
    # the other direction: start from the second kind's own enumeration
    backs = [
        ("stammering->rook->stammering", kinds.STAMMERING, kinds.ROOK, stammering.enumerate_tableaux, range(max_n + 1)),
        ("permutation->chain->permutation", kinds.PERMUTATION, kinds.CHAIN, profiles.permutations, range(1, max_n + 1)),
        ("dyck-tableau->laguerre->dyck-tableau", kinds.DYCK_TABLEAU, kinds.LAGUERRE, laguerre.enumerate_dyck_tableaux, range(1, max_n + 1)),
    ]
    for name, a, b, gen, sizes in backs:
        out.append(_scan(
            name,
            (x for n in sizes for x in gen(n)),
            lambda x: kinds.convert(b, kinds.convert(a, x, b), a) == x,
            lambda x: kinds.to_json(a, x),
        ))
    out.append(_scan(
        "history->chain->history",
        (h for n in range(1, max_n + 1) for h in laguerre.enumerate_histories(n)),
        lambda h: kinds.convert(kinds.CHAIN, kinds.convert(kinds.LAGUERRE, h, kinds.CHAIN), kinds.LAGUERRE) == h,
        lambda h: kinds.to_json(kinds.LAGUERRE, h),
    ))
    return out


def random_roundtrip_checks(size: int, samples: int, seed: int = 0) -> list[CheckResult]:
    """Round trips on ``samples`` random objects; ``size`` is the rook size (chains have size + 1)."""
    rng = random.Random(seed)
    objs = {
        kinds.ROOK: [staircase.random_placement(size, rng) for _ in range(samples)],
        kinds.STAMMERING: [stammering.random_tableau(size, rng) for _ in range(samples)],
        kinds.CHAIN: [dyck.random_chain(size + 1, rng) for _ in range(samples)],
        kinds.PERMUTATION: [tuple(rng.sample(range(1, size + 2), size + 1)) for _ in range(samples)],
        kinds.LAGUERRE: [laguerre.random_history(size + 1, rng) for _ in range(samples)],
        kinds.DYCK_TABLEAU: [laguerre.random_dyck_tableau(size + 1, rng) for _ in range(samples)],
    }
    partner = {
        kinds.ROOK: kinds.STAMMERING,
        kinds.STAMMERING: kinds.ROOK,
        kinds.CHAIN: kinds.PERMUTATION,
        kinds.PERMUTATION: kinds.CHAIN,
        kinds.LAGUERRE: kinds.DYCK_TABLEAU,
        kinds.DYCK_TABLEAU: kinds.LAGUERRE,
    }
    out = []
    for a, items in objs.items():
        for b in (partner[a], kinds.CHAIN if a != kinds.CHAIN else kinds.ROOK):
            out.append(_scan(
                f"random {a}->{b}->{a}",
                items,
                lambda x, a=a, b=b: kinds.convert(b, kinds.convert(a, x, b), a) == x,
                lambda x, a=a: kinds.to_json(a, x),
            ))
    return out


# --- counts ----------------------------------------------------------------

def profile_product(shape: str) -> int:
    hs = dyck.heights(shape)
    return prod(hs[k - 1] // 2 + 1 for k in dyck.up_columns(shape))


def count_checks(max_n: int) -> list[CheckResult]:
    out = [
        _equal(
            "stammering tableaux of size n = (n+1)!",
            {n: stammering.count(n) for n in range(max_n + 1)},
            {n: factorial(n + 1) for n in range(max_n + 1)},
        ),
        _equal(
            "n-chains = n!",
            {n: sum(1 for _ in dyck.enumerate_chains(n)) for n in range(1, max_n + 1)},
            {n: factorial(n) for n in range(1, max_n + 1)},
        ),
        _equal(
            "Laguerre histories of length 2n = n!",
            {n: sum(1 for _ in laguerre.enumerate_histories(n)) for n in range(1, max_n + 1)},
            {n: factorial(n) for n in range(1, max_n + 1)},
        ),
        _equal(
            "Dyck tableaux of length 2n = n!",
            {n: sum(1 for _ in laguerre.enumerate_dyck_tableaux(n)) for n in range(1, max_n + 1)},
            {n: factorial(n) for n in range(1, max_n + 1)},
        ),
    ]
    nk = [(n, k) for n in range(max_n + 1) for k in range(n + 1)]
    out.append(_equal(
        "a(n,k) closed form = brute force",
        {f"{n},{k}": counting.a(n, k) for n, k in nk},
        {f"{n},{k}": counting.a_brute(n, k) for n, k in nk},
    ))
    out.append(_equal(
        "a(n,k) closed form = recurrence",
        {f"{n},{k}": counting.a(n, k) for n, k in nk},
        {f"{n},{k}": counting.a_recursive(n, k) for n, k in nk},
    ))
    shapes = [(n, lam) for n in range(max_n + 1) for k in range(n + 1) for lam in partitions_of(k)]
    out.append(_equal(
        "t(n; ∅ → λ) closed form = brute force",
        {f"{n};{lam}": counting.t_empty_to(n, lam) for n, lam in shapes},
        {f"{n};{lam}": counting.t_empty_to_brute(n, lam) for n, lam in shapes},
    ))
    out.append(_equal(
        "t(n; λ → ∅) closed form = brute force",
        {f"{n};{lam}": counting.t_to_empty(n, lam) for n, lam in shapes},
        {f"{n};{lam}": counting.t_to_empty_brute(n, lam) for n, lam in shapes},
    ))
    out.append(profile_check(max_n))
    return out


def profile_check(max_rank: int) -> CheckResult:
    """Permutations per profile = product formula = Laguerre histories per shape."""
    cases = 0
    for m in range(1, max_rank + 1):
        tally: dict[str, int] = {}
        for s in profiles.permutations(m):
            d = profiles.profile(s)
            tally[d] = tally.get(d, 0) + 1
        for shape in dyck.dyck_paths(m):
            cases += 1
            want = profile_product(shape)
            histories = sum(1 for _ in laguerre.histories_of_shape(shape))
            if tally.get(shape, 0) != want or histories != want:
                return CheckResult(
                    "permutations per profile = ∏(⌊h/2⌋+1) = histories per shape",
                    False,
                    cases,
                    "mismatch",
                    {"shape": shape, "permutations": tally.get(shape, 0), "formula": want, "histories": histories},
                )
    return CheckResult("permutations per profile = ∏(⌊h/2⌋+1) = histories per shape", True, cases)


# --- constructions ---------------------------------------------------------

def constructions_agree(rp) -> bool:
    by_growth = growth.rook_to_stammering(rp)
    by_schensted, _ = growth.rook_to_stammering_via_schensted(rp)
    by_shadows = growth.rook_to_stammering_via_shadows(rp)
    return by_growth == by_schensted == by_shadows


def construction_checks(max_n: int, samples: int = 0, sample_size: int = 6, seed: int = 0) -> list[CheckResult]:
    out = [_scan(
        "growth = Schensted = shadow lines",
        (rp for n in range(max_n + 1) for rp in staircase.enumerate_placements(n)),
        constructions_agree,
        lambda rp: kinds.to_json(kinds.ROOK, rp),
    )]
    out.append(_scan(
        "forward rules in row order = column order",
        (rp for n in range(max_n + 1) for rp in staircase.enumerate_placements(n)),
        lambda rp: growth.grow(rp.n, rp.cells(), order="row").labels == growth.growth_diagram(rp).labels,
        lambda rp: kinds.to_json(kinds.ROOK, rp),
    ))
    if samples:
        rng = random.Random(seed)
        out.append(_scan(
            f"growth = Schensted = shadow lines, {samples} random at n = {sample_size}",
            (staircase.random_placement(sample_size, rng) for _ in range(samples)),
            constructions_agree,
            lambda rp: kinds.to_json(kinds.ROOK, rp),
        ))
    return out


# --- lattice ---------------------------------------------------------------

class RibbonOrder:
    """Reflexive-transitive closure of ⊏ on Dyck paths of rank ≤ ``top``, as bitmasks."""

    def __init__(self, top: int):
        self.paths = [p for m in range(top + 1) for p in dyck.dyck_paths(m)]
        self.index = {p: i for i, p in enumerate(self.paths)}
        self.up = [1 << i for i in range(len(self.paths))]
        # ranks decrease, so every successor's up-set is complete before it is read
        for p in reversed(self.paths):
            i = self.index[p]
            if dyck.rank(p) < top:
                for succ, _ in dyck.ribbon_successors(p):
                    self.up[i] |= self.up[self.index[succ]]

    def leq(self, d: str, e: str) -> bool:
        return bool(self.up[self.index[d]] >> self.index[e] & 1)

    def _members(self, mask: int) -> list[str]:
        return [p for i, p in enumerate(self.paths) if mask >> i & 1]

    def lub(self, d: str, e: str) -> str | None:
        common = self.up[self.index[d]] & self.up[self.index[e]]
        least = [u for u in self._members(common) if self.up[self.index[u]] & common == common]
        return least[0] if len(least) == 1 else None

    def glb(self, d: str, e: str) -> str | None:
        below = [p for p in self.paths if self.leq(p, d) and self.leq(p, e)]
        greatest = [g for g in below if all(self.leq(p, g) for p in below)]
        return greatest[0] if len(greatest) == 1 else None


def lattice_checks(max_rank: int) -> list[CheckResult]:
    # a join of ranks r and s has rank at most r + s, so that window holds every least upper bound
    order = RibbonOrder(2 * max_rank)
    small = [p for m in range(max_rank + 1) for p in dyck.dyck_paths(m)]
    pairs = list(itertools.product(small, small))
    out = [
        _scan("leq = closure of ⊏", pairs, lambda de: poset.leq(*de) == order.leq(*de)),
        _scan("join = brute-force least upper bound", pairs, lambda de: poset.join(*de) == order.lub(*de)),
        _scan("meet = brute-force greatest lower bound", pairs, lambda de: poset.meet(*de) == order.glb(*de)),
        _scan(
            "idempotence and commutativity",
            pairs,
            lambda de: poset.join(de[0], de[0]) == de[0] == poset.meet(de[0], de[0])
            and poset.join(*de) == poset.join(de[1], de[0])
            and poset.meet(*de) == poset.meet(de[1], de[0]),
        ),
        _scan(
            "absorption",
            pairs,
            lambda de: poset.join(de[0], poset.meet(*de)) == de[0] == poset.meet(de[0], poset.join(*de)),
        ),
        _scan(
            "associativity",
            itertools.product(small, repeat=3),
            lambda t: poset.join(poset.join(t[0], t[1]), t[2]) == poset.join(t[0], poset.join(t[1], t[2]))
            and poset.meet(poset.meet(t[0], t[1]), t[2]) == poset.meet(t[0], poset.meet(t[1], t[2])),
        ),
    ]
    return out


# --- ansatz ----------------------------------------------------------------

def random_word(rng: random.Random, max_len: int = 8) -> str:
    return "".join(rng.choice("EF") for _ in range(rng.randint(0, max_len)))


def ansatz_checks(max_n: int, words: int = 200, seed: int = 0) -> list[CheckResult]:
    rng = random.Random(seed)
    sample = [random_word(rng) for _ in range(words)]
    out = [
        _equal(
            "Z_N(1,1,1) = (N+1)!",
            {n: int(ansatz.evaluate(ansatz.partition_function(n), 1, 1, 1)) for n in range(max_n + 1)},
            {n: factorial(n + 1) for n in range(max_n + 1)},
        ),
        _scan(
            f"normal form independent of rewrite order ({words} random words)",
            sample,
            lambda w: all(
                ansatz.normal_order(w) == ansatz.normal_order_by_rewriting(w, random.Random(s)) for s in range(3)
            ),
        ),
        _scan("coefficients nonnegative", sample, lambda w: ansatz.is_nonnegative(ansatz.normal_order(w))),
        _scan(
            "Z_2 = a²+b²+(1+q)ab+a+b",
            [2],
            lambda n: ansatz.partition_function(n)
            == ansatz.poly_from_terms([(0, 2, 0, 1), (0, 0, 2, 1), (0, 1, 1, 1), (1, 1, 1, 1), (0, 1, 0, 1), (0, 0, 1, 1)]),
        ),
        _scan(
            "Z_N = sum of the state weights",
            range(max_n + 1),
            lambda n: ansatz.partition_function(n) == _sum_polys(
                ansatz.unnormalized_prob("".join(t)) for t in itertools.product("ox", repeat=n)
            ),
        ),
        _scan(
            "normal forms agree with a truncated matrix realization",
            sample[:50],
            lambda w: realization_agrees(w),
        ),
    ]
    return out


def _sum_polys(polys) -> dict:
    out: dict = {}
    for p in polys:
        for k, c in p.items():
            out[k] = out.get(k, 0) + c
    return {k: v for k, v in sorted(out.items()) if v}


def realization_agrees(word: str, q=Fraction(2, 3)) -> bool:
    """Compare on basis vectors far enough from the truncation edge."""
    m = 2 * len(word) + 4
    real = ansatz.TruncatedRealization(m, q)
    nf = ansatz.normal_order(word)
    # E contributes two raisings per letter, and so does its normal form
    for k in range(m - 2 * len(word)):
        v = {k: Fraction(1)}
        if real.apply_word(word, v) != real.apply_normal_form(nf, v):
            return False
    return True


# --- driver ----------------------------------------------------------------

def run(suite: str, max_n: int, samples: int = 0, sample_size: int = 6) -> list[Report]:
    names = SUITES if suite == "all" else (suite,)
    reports = []
    for name in names:
        rep = Report(name, max_n)
        if name == "roundtrips":
            rep.checks = roundtrip_checks(max_n)
            if samples:
                rep.checks += random_roundtrip_checks(sample_size, samples)
        elif name == "counts":
            rep.checks = count_checks(max_n)
        elif name == "constructions":
            rep.checks = construction_checks(max_n, samples, sample_size)
        elif name == "lattice":
            rep.checks = lattice_checks(max_n)
        elif name == "ansatz":
            rep.checks = ansatz_checks(max_n)
        else:
            raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES + ('all',))}")
        reports.append(rep)
    return reports
