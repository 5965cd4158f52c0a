"""Object kinds handled by the CLI: JSON parsing, serialization, conversion and enumeration.

Sizes line up as follows (``n`` is the rook placement size)::

    stammering tableau of size n  <->  rook placement in 2δ_n
    <->  (n+1)-chain  <->  permutation of n+1
    <->  Laguerre history / Dyck tableau of length 2(n+1)

``dyck-path`` is a conversion target only: every object maps to its
underlying Dyck path (the last path of its chain).
"""

from __future__ import annotations

from typing import Any, Callable, Iterator

from . import dyck, growth, laguerre, profiles, staircase, stammering
from .dyck import Chain
from .laguerre import DyckTableau, LaguerreHistory
from .partitions import format_partition, partition
from .stammering import StammeringTableau
from .staircase import PartialRookPlacement, RookPlacement

STAMMERING = "stammering"
ROOK = "rook"
CHAIN = "chain"
PERMUTATION = "permutation"
LAGUERRE = "laguerre"
DYCK_TABLEAU = "dyck-tableau"
DYCK_PATH = "dyck-path"

KINDS = (STAMMERING, ROOK, CHAIN, PERMUTATION, LAGUERRE, DYCK_TABLEAU, DYCK_PATH)
SOURCE_KINDS = KINDS[:-1]


class KindError(ValueError):
    """Input that does not parse or validate as the requested kind."""


# --- parsing ---------------------------------------------------------------

def _filling(data: Any) -> tuple[str, list]:
    if not isinstance(data, dict) or "shape" not in data or "dots" not in data:
        raise KindError('expected {"shape": ..., "dots": [[column, index], ...]}')
    return str(data["shape"]), [tuple(d) for d in data["dots"]]


def parse(kind: str, data: Any):
    """Build a validated object of ``kind`` from decoded JSON."""
    try:
        if kind == STAMMERING:
            return StammeringTableau.of([partition(p) for p in data])
        if kind == ROOK:
            dots = data["dots"] if isinstance(data, dict) else data
            if any(d is None for d in dots):
                rp = PartialRookPlacement.of(dots)
            else:
                rp = RookPlacement.of(dots)
            if isinstance(data, dict) and data.get("n", rp.n) != rp.n:
                raise KindError(f"n = {data['n']} but {rp.n} rows were given")
            return rp
        if kind == CHAIN:
            return Chain.of([str(p) for p in data])
        if kind == PERMUTATION:
            if isinstance(data, str):
                data = [int(ch) for ch in data]
            return profiles.permutation(data)
        if kind == LAGUERRE:
            return LaguerreHistory(*_filling(data))
        if kind == DYCK_TABLEAU:
            return DyckTableau(*_filling(data))
        if kind == DYCK_PATH:
            return dyck.check_dyck(str(data))
    except KindError:
        raise
    except (ValueError, TypeError, KeyError) as exc:
        raise KindError(f"invalid {kind}: {exc}") from exc
    raise KindError(f"unknown kind {kind!r}")


def to_json(kind: str, obj) -> Any:
    if kind == STAMMERING:
        return [list(p) for p in obj.steps]
    if kind == ROOK:
        return {"n": obj.n, "dots": list(obj.dots)}
    if kind == CHAIN:
        return list(obj.paths)
    if kind == PERMUTATION:
        return list(obj)
    if kind in (LAGUERRE, DYCK_TABLEAU):
        return {"shape": obj.shape, "dots": [list(d) for d in obj.dots]}
    if kind == DYCK_PATH:
        return obj
    raise KindError(f"unknown kind {kind!r}")


def to_text(kind: str, obj) -> str:
    """One-line human-readable form."""
    if kind == STAMMERING:
        return " ".join(format_partition(p) for p in obj.steps)
    if kind == ROOK:
        return " ".join("-" if d is None else str(d) for d in obj.dots) or "(empty)"
    if kind == CHAIN:
        return " ".join(obj.paths) or "(empty)"
    if kind == PERMUTATION:
        return " ".join(map(str, obj)) or "(empty)"
    if kind in (LAGUERRE, DYCK_TABLEAU):
        return obj.shape + " " + " ".join(f"{c}:{i}" for c, i in obj.dots)
    if kind == DYCK_PATH:
        return obj or "(empty)"
    raise KindError(f"unknown kind {kind!r}")


# --- conversion through chains ---------------------------------------------

def _rook_to_chain(rp) -> Chain:
    if not isinstance(rp, RookPlacement):
        raise KindError("only full rook placements convert to other kinds")
    return dyck.chain_from_rook(rp)


def _stammering_to_rook(st: StammeringTableau) -> RookPlacement:
    try:
        return growth.stammering_to_rook(st)
    except growth.GrowthError as exc:
        raise KindError(str(exc)) from exc


_TO_CHAIN: dict[str, Callable[[Any], Chain]] = {
    STAMMERING: lambda st: _rook_to_chain(_stammering_to_rook(st)),
    ROOK: _rook_to_chain,
    CHAIN: lambda ch: ch,
    PERMUTATION: profiles.chain_of,
    LAGUERRE: laguerre.chain_from_history,
    DYCK_TABLEAU: lambda t: laguerre.chain_from_history(laguerre.from_dyck_tableau(t)),
}


def _chain_to_rook(ch: Chain) -> RookPlacement:
    if ch.n == 0:
        raise KindError("the empty chain has no rook placement")
    return dyck.rook_from_chain(ch)


_FROM_CHAIN: dict[str, Callable[[Chain], Any]] = {
    STAMMERING: lambda ch: growth.rook_to_stammering(_chain_to_rook(ch)),
    ROOK: _chain_to_rook,
    CHAIN: lambda ch: ch,
    PERMUTATION: profiles.permutation_of,
    LAGUERRE: laguerre.history_from_chain,
    DYCK_TABLEAU: lambda ch: laguerre.to_dyck_tableau(laguerre.history_from_chain(ch)),
    DYCK_PATH: lambda ch: ch.shape,
}


def convert(source: str, obj, target: str):
    """Image of ``obj`` under the composed bijection; the identity when the kinds agree."""
    try:
        return _convert(source, obj, target)
    except KindError:
        raise
    except ValueError as exc:
        raise KindError(str(exc)) from exc


def _convert(source: str, obj, target: str):
    if source not in KINDS or target not in KINDS:
        raise KindError(f"kinds must be among {', '.join(KINDS)}")
    if source == target:
        return obj
    if source == DYCK_PATH:
        raise KindError("a bare Dyck path carries no filling; it is a conversion target only")
    # a direct edge avoids the round trip through chains
    if (source, target) == (ROOK, STAMMERING):
        if not isinstance(obj, RookPlacement):
            raise KindError("only full rook placements convert to stammering tableaux")
        return growth.rook_to_stammering(obj)
    if (source, target) == (STAMMERING, ROOK):
        return _stammering_to_rook(obj)
    if (source, target) == (LAGUERRE, DYCK_TABLEAU):
        return laguerre.to_dyck_tableau(obj)
    if (source, target) == (DYCK_TABLEAU, LAGUERRE):
        return laguerre.from_dyck_tableau(obj)
    return _FROM_CHAIN[target](_TO_CHAIN[source](obj))


# --- enumeration -----------------------------------------------------------

def enumerate_kind(kind: str, n: int) -> Iterator:
    """Canonical enumeration; ``n`` is the natural size of the kind.

    stammering and rook: n; chain and permutation: n; laguerre, dyck-tableau
    and dyck-path: rank n (length 2n).
    """
    if kind == STAMMERING:
        return stammering.enumerate_tableaux(n)
    if kind == ROOK:
        return staircase.enumerate_placements(n)
    if kind == CHAIN:
        return dyck.enumerate_chains(n)
    if kind == PERMUTATION:
        return profiles.permutations(n)
    if kind == LAGUERRE:
        return laguerre.enumerate_histories(n)
    if kind == DYCK_TABLEAU:
        return laguerre.enumerate_dyck_tableaux(n)
    if kind == DYCK_PATH:
        return iter(dyck.dyck_paths(n))
    raise KindError(f"unknown kind {kind!r}")
