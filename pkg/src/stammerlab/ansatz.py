"""Matrix Ansatz calculator: normal ordering under FE - qEF = F + E.

A normal form maps ``(i, j)`` to a polynomial in q (``{q_exp: coeff}``) and
stands for the sum of ``c_ij E^i F^j``.  Weights are trivariate polynomials
``{(q_exp, a_exp, b_exp): coeff}`` with ``a = 1/alpha`` and ``b = 1/beta``.
"""

from __future__ import annotations

import random
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

QPoly = dict[int, int]
NormalForm = dict[tuple[int, int], QPoly]
Poly = dict[tuple[int, int, int], int]

PARTICLE, HOLE = "x", "o"
_STATE_LETTER = {"x": "F", "•": "F", "o": "E", "◦": "E"}


def _add_into(target: QPoly, src: Mapping[int, int], shift: int = 0) -> None:
    for e, c in src.items():
        v = target.get(e + shift, 0) + c
        if v:
            target[e + shift] = v
        else:
            target.pop(e + shift, None)


def _clean(nf: Mapping[tuple[int, int], QPoly]) -> NormalForm:
    return {k: dict(sorted(v.items())) for k, v in sorted(nf.items()) if v}


@lru_cache(maxsize=None)
def _f_power_times_e(j: int) -> tuple[tuple[tuple[int, int], tuple[tuple[int, int], ...]], ...]:
    # F^j E = q (F^{j-1} E) F + F^j + F^{j-1} E
    if j == 0:
        return (((1, 0), ((0, 1),)),)
    prev = {k: dict(v) for k, v in _f_power_times_e(j - 1)}
    out: dict[tuple[int, int], QPoly] = defaultdict(dict)
    for (a, b), poly in prev.items():
        _add_into(out[(a, b + 1)], poly, shift=1)
        _add_into(out[(a, b)], poly)
    _add_into(out[(0, j)], {0: 1})
    return tuple((k, tuple(sorted(v.items()))) for k, v in sorted(out.items()) if v)


def times_letter(nf: NormalForm, letter: str) -> NormalForm:
    """Right-multiply a normal form by ``E`` or ``F``."""
    out: dict[tuple[int, int], QPoly] = defaultdict(dict)
    for (i, j), poly in nf.items():
        if letter == "F":
            _add_into(out[(i, j + 1)], poly)
        elif letter == "E":
            for (a, b), inner in _f_power_times_e(j):
                for e1, c1 in inner:
                    _add_into(out[(i + a, b)], {e + e1: c * c1 for e, c in poly.items()})
        else:
            raise ValueError(f"unknown letter {letter!r}")
    return _clean(out)


def normal_order(word: str) -> NormalForm:
    """Normal form of a word over ``E`` and ``F``."""
    nf: NormalForm = {(0, 0): {0: 1}}
    for letter in word:
        nf = times_letter(nf, letter)
    assert is_nonnegative(nf), f"negative coefficient in the normal form of {word!r}"
    return nf


def add(x: NormalForm, y: NormalForm) -> NormalForm:
    out: dict[tuple[int, int], QPoly] = defaultdict(dict)
    for nf in (x, y):
        for k, poly in nf.items():
            _add_into(out[k], poly)
    return _clean(out)


def normal_order_by_rewriting(word: str, rng: random.Random | None = None) -> NormalForm:
    """Reference normal ordering: rewrite one random ``FE`` factor at a time.

    Exponential in the word length; used as an independent check.
    """
    rng = rng or random.Random(0)
    terms: dict[str, QPoly] = {word: {0: 1}}
    while True:
        dirty = sorted(w for w in terms if "FE" in w)
        if not dirty:
            break
        w = rng.choice(dirty)
        poly = terms.pop(w)
        spots = [i for i in range(len(w) - 1) if w[i : i + 2] == "FE"]
        i = rng.choice(spots)
        for repl, shift in (("EF", 1), ("F", 0), ("E", 0)):
            nw = w[:i] + repl + w[i + 2 :]
            _add_into(terms.setdefault(nw, {}), poly, shift)
            if not terms[nw]:
                del terms[nw]
    return _clean({(w.count("E"), w.count("F")): p for w, p in terms.items()})


def is_nonnegative(nf: NormalForm) -> bool:
    return all(c >= 0 for poly in nf.values() for c in poly.values())


# --- weights ---------------------------------------------------------------

def state_word(tau: str) -> str:
    """Map a state (``x``/``•`` particle, ``o``/``◦`` hole) to a word in F and E."""
    try:
        return "".join(_STATE_LETTER[s] for s in tau)
    except KeyError as exc:
        raise ValueError(f"state letters must be x/o (or •/◦), got {exc.args[0]!r}") from None


def substitute(nf: NormalForm) -> Poly:
    """E^i F^j → a^i b^j."""
    out: Poly = {}
    for (i, j), poly in nf.items():
        for e, c in poly.items():
            out[(e, i, j)] = out.get((e, i, j), 0) + c
    return {k: v for k, v in sorted(out.items()) if v}


def unnormalized_prob(tau: str) -> Poly:
    return substitute(normal_order(state_word(tau)))


def partition_function(n: int) -> Poly:
    """Normal form of (E + F)^N with E^i F^j → a^i b^j."""
    if n < 0:
        raise ValueError("N must be nonnegative")
    nf: NormalForm = {(0, 0): {0: 1}}
    for _ in range(n):
        nf = add(times_letter(nf, "E"), times_letter(nf, "F"))
    return substitute(nf)


def evaluate(p: Mapping[tuple[int, int, int], int], q, a, b) -> Fraction:
    q, a, b = Fraction(q), Fraction(a), Fraction(b)
    return sum((c * q**e * a**i * b**j for (e, i, j), c in p.items()), Fraction(0))


def poly_from_terms(terms: Iterable[tuple[int, int, int, int]]) -> Poly:
    """Build from ``(q_exp, a_exp, b_exp, coeff)`` tuples."""
    out: Poly = {}
    for e, i, j, c in terms:
        out[(e, i, j)] = out.get((e, i, j), 0) + c
    return {k: v for k, v in sorted(out.items()) if v}


def poly_to_json(p: Poly) -> list[dict]:
    return [{"q_exp": e, "a_exp": i, "b_exp": j, "coeff": c} for (e, i, j), c in sorted(p.items())]


def poly_from_json(items: Iterable[Mapping]) -> Poly:
    return poly_from_terms((d["q_exp"], d["a_exp"], d["b_exp"], d["coeff"]) for d in items)


def format_poly(p: Poly) -> str:
    """Human-readable form, highest total degree in (a, b) first."""
    if not p:
        return "0"

    def mono(e, i, j):
        parts = []
        for var, k in (("q", e), ("a", i), ("b", j)):
            if k == 1:
                parts.append(var)
            elif k:
                parts.append(f"{var}^{k}")
        return "*".join(parts)

    keys = sorted(p, key=lambda t: (-(t[1] + t[2]), -t[1], t[0]))
    out = []
    for e, i, j in keys:
        c, m = p[(e, i, j)], mono(e, i, j)
        out.append(str(c) if not m else m if c == 1 else f"{c}*{m}")
    return " + ".join(out)


# --- truncated realization -------------------------------------------------

class TruncatedRealization:
    """D and U with DU - qUD = I on span(e_0, ..., e_{m-1}).

    ``U e_k = e_{k+1}`` (dropped past the truncation) and ``D e_k = [k]_q e_{k-1}``.
    Then ``F = D(U + I)`` and ``E = D(U + I)U``.  A word with ``u`` raising
    operators is exact on ``e_k`` whenever ``k + u < m``.
    """

    def __init__(self, m: int, q):
        self.m = m
        self.q = Fraction(q)

    def _qint(self, k: int) -> Fraction:
        return sum((self.q**i for i in range(k)), Fraction(0))

    def U(self, v: dict[int, Fraction]) -> dict[int, Fraction]:
        return {k + 1: c for k, c in v.items() if k + 1 < self.m}

    def D(self, v: dict[int, Fraction]) -> dict[int, Fraction]:
        return {k - 1: c * self._qint(k) for k, c in v.items() if k > 0}

    @staticmethod
    def _plus(x: dict, y: dict, s=1) -> dict:
        out = dict(x)
        for k, c in y.items():
            out[k] = out.get(k, 0) + s * c
        return {k: c for k, c in out.items() if c}

    def F(self, v):
        return self.D(self._plus(self.U(v), v))

    def E(self, v):
        return self.F(self.U(v))

    def apply_word(self, word: str, v: dict[int, Fraction]) -> dict[int, Fraction]:
        """Apply a word, rightmost letter first (operator composition)."""
        ops = {"E": self.E, "F": self.F, "U": self.U, "D": self.D}
        for letter in reversed(word):
            v = ops[letter](v)
        return v

    def apply_normal_form(self, nf: NormalForm, v: dict[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for (i, j), poly in nf.items():
            coeff = sum((c * self.q**e for e, c in poly.items()), Fraction(0))
            term = self.apply_word("E" * i + "F" * j, v)
            out = self._plus(out, {k: coeff * c for k, c in term.items()})
        return out
