"""Fomin growth diagrams on the double staircase.

Vertices are integer points ``(x, y)`` with ``0 <= y <= n``; the cell with
column ``c`` and row ``r`` is the unit square ``[c-1, c] x [r-1, r]``.  In a
cell, ``lam`` sits at the South-West corner, ``mu`` at the North-West, ``nu``
at the South-East and ``rho`` at the North-East.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Literal, Optional, Sequence

from .partitions import (
    EMPTY,
    Partition,
    Tableau,
    add_cell,
    chain_of_standard_tableau,
    corner_remove,
    covered_row,
    intersection,
    remove_cell,
    row_insert,
    standard_tableau_of_chain,
    union,
)
from .staircase import PartialRookPlacement, RookPlacement, column_height, in_staircase, row_length
from .stammering import StammeringTableau, validate as validate_stammering

Vertex = tuple[int, int]
Cell = tuple[int, int]


class GrowthError(ValueError):
    """A corner configuration no valid growth diagram can contain."""


def _step_ok(small: Partition, big: Partition) -> bool:
    return small == big or covered_row(small, big) is not None


def forward_cell(lam: Partition, mu: Partition, nu: Partition, dotted: bool = False) -> Partition:
    """North-East label of a cell from the other three corners and its dot."""
    if not (_step_ok(lam, mu) and _step_ok(lam, nu)):
        raise GrowthError(f"corners {lam!r}, {mu!r}, {nu!r} do not grow from the South-West")
    if dotted and not (lam == mu == nu):
        raise GrowthError("a dotted cell needs equal South-West, North-West and South-East labels")
    if mu != nu:
        return union(mu, nu)
    if lam == mu:
        return add_cell(lam, 0) if dotted else lam
    # lam ⋖ mu = nu: grow mu in the row just above the first row where lam and mu differ
    k = covered_row(lam, mu)
    return add_cell(mu, k + 1)


def reverse_cell(mu: Partition, nu: Partition, rho: Partition) -> tuple[Partition, bool]:
    """Recover ``(lam, dotted)`` from the North-West, South-East and North-East labels."""
    if not (_step_ok(mu, rho) and _step_ok(nu, rho)):
        raise GrowthError(f"{rho!r} does not cover both {mu!r} and {nu!r}")
    if mu != nu:
        if rho != union(mu, nu):
            raise GrowthError(f"{rho!r} is not the union of {mu!r} and {nu!r}")
        return intersection(mu, nu), False
    if rho == mu:
        return mu, False
    j = covered_row(mu, rho)
    if j == 0:
        return mu, True
    try:
        lam = remove_cell(mu, j - 1)
    except ValueError:
        raise GrowthError(f"no South-West label produces {rho!r} from {mu!r}") from None
    return lam, False


def vertices(n: int) -> list[Vertex]:
    """All vertices in row-major order, top row first."""
    out = []
    for y in range(n, -1, -1):
        width = 2 * n if y == 0 else row_length(n, y)
        out.extend((x, y) for x in range(width + 1))
    return out


def boundary_vertices(n: int) -> list[Vertex]:
    """The 3n+1 vertices of the North-East border, top-left to bottom-right."""
    out = [(0, n)]
    for r in range(n, 0, -1):
        x0 = 2 * (n - r)
        out += [(x0 + 1, r), (x0 + 2, r), (x0 + 2, r - 1)]
    return out


def _cells_column_major(n: int) -> list[Cell]:
    return [(c, r) for c in range(1, 2 * n + 1) for r in range(1, column_height(n, c) + 1)]


def _cells_row_major(n: int) -> list[Cell]:
    return [(c, r) for r in range(1, n + 1) for c in range(1, row_length(n, r) + 1)]


@dataclass(frozen=True, eq=True)
class GrowthDiagram:
    n: int
    labels: dict[Vertex, Partition] = field(hash=False)
    dots: frozenset[Cell]

    def label(self, x: int, y: int) -> Partition:
        return self.labels[(x, y)]

    def boundary(self) -> tuple[Partition, ...]:
        return tuple(self.labels[v] for v in boundary_vertices(self.n))

    def west(self) -> tuple[Partition, ...]:
        """Left border, bottom to top."""
        return tuple(self.labels[(0, y)] for y in range(self.n + 1))

    def south(self) -> tuple[Partition, ...]:
        """Bottom border, left to right."""
        return tuple(self.labels[(x, 0)] for x in range(2 * self.n + 1))

    def check(self) -> bool:
        """True iff every cell obeys the forward local rule."""
        for c, r in _cells_row_major(self.n):
            lam = self.labels[(c - 1, r - 1)]
            try:
                rho = forward_cell(lam, self.labels[(c - 1, r)], self.labels[(c, r - 1)], (c, r) in self.dots)
            except GrowthError:
                return False
            if rho != self.labels[(c, r)]:
                return False
        return True

    def to_json(self) -> dict:
        rows = []
        for y in range(self.n, -1, -1):
            width = 2 * self.n if y == 0 else row_length(self.n, y)
            rows.append([list(self.labels[(x, y)]) for x in range(width + 1)])
        dots = [[(c, r) in self.dots for c in range(1, row_length(self.n, r) + 1)] for r in range(self.n, 0, -1)]
        return {"n": self.n, "labels": rows, "dots": dots}


def grow(
    n: int,
    dots: Iterable[Cell],
    west: Optional[Sequence[Partition]] = None,
    south: Optional[Sequence[Partition]] = None,
    order: Literal["column", "row"] = "column",
) -> GrowthDiagram:
    """Fill a diagram by the forward rules from its West and South borders (∅ by default)."""
    dots = frozenset(dots)
    for c, r in dots:
        if not in_staircase(n, c, r):
            raise GrowthError(f"dot ({c}, {r}) lies outside 2δ_{n}")
    west = [EMPTY] * (n + 1) if west is None else [tuple(p) for p in west]
    south = [EMPTY] * (2 * n + 1) if south is None else [tuple(p) for p in south]
    if len(west) != n + 1 or len(south) != 2 * n + 1 or west[0] != south[0]:
        raise GrowthError("border sequences have the wrong length or disagree at the corner")
    labels: dict[Vertex, Partition] = {}
    for y, p in enumerate(west):
        labels[(0, y)] = p
    for x, p in enumerate(south):
        labels[(x, 0)] = p
    cells = _cells_column_major(n) if order == "column" else _cells_row_major(n)
    for c, r in cells:
        labels[(c, r)] = forward_cell(labels[(c - 1, r - 1)], labels[(c - 1, r)], labels[(c, r - 1)], (c, r) in dots)
    return GrowthDiagram(n, labels, dots)


def fill_from_boundary(steps: Sequence[Partition]) -> GrowthDiagram:
    """Complete a diagram from its North-East border using the reverse local rules."""
    if len(steps) % 3 != 1:
        raise GrowthError("border length must be 1 mod 3")
    n = (len(steps) - 1) // 3
    labels = dict(zip(boundary_vertices(n), (tuple(p) for p in steps)))
    dots = set()
    # top row first, right to left: the North-West and South-East corners are always known
    for r in range(n, 0, -1):
        for c in range(row_length(n, r), 0, -1):
            lam, dotted = reverse_cell(labels[(c - 1, r)], labels[(c, r - 1)], labels[(c, r)])
            labels[(c - 1, r - 1)] = lam
            if dotted:
                dots.add((c, r))
    return GrowthDiagram(n, labels, frozenset(dots))


def growth_diagram(rp: RookPlacement) -> GrowthDiagram:
    return grow(rp.n, rp.cells())


def rook_to_stammering(rp: RookPlacement) -> StammeringTableau:
    return StammeringTableau(growth_diagram(rp).boundary(), rp.n)


def stammering_to_rook(st: StammeringTableau) -> RookPlacement:
    if not st.is_plain:
        raise GrowthError("a plain stammering tableau must start and end at ∅")
    report = validate_stammering(st.steps)
    if not report:
        raise GrowthError(f"invalid stammering tableau at index {report.index}: {report.rule}")
    gd = fill_from_boundary(st.steps)
    if any(p != EMPTY for p in gd.west() + gd.south()):
        raise GrowthError("reverse rules did not reach empty West and South borders")
    by_row = {r: c for c, r in gd.dots}
    if len(by_row) != st.n or len(gd.dots) != st.n:
        raise GrowthError("reverse rules did not produce one dot per row")
    return RookPlacement(st.n, tuple(by_row[r] for r in range(1, st.n + 1)))


# --- Schensted insertion ---------------------------------------------------

def rook_to_stammering_via_schensted(rp: RookPlacement) -> tuple[StammeringTableau, list[Tableau]]:
    """Walk the North-East border inserting (horizontal steps) and removing (vertical steps) dot labels.

    The dot of row ``k`` carries label ``k``.
    """
    n = rp.n
    label_of_column = {c: r for r, c in enumerate(rp.dots, start=1)}
    t: Tableau = ()
    seq = [t]
    for r in range(n, 0, -1):
        x0 = 2 * (n - r)
        for c in (x0 + 1, x0 + 2):
            if c in label_of_column:
                t = row_insert(t, label_of_column[c])
            seq.append(t)
        try:
            t = corner_remove(t, r)
        except ValueError as exc:
            raise AssertionError(f"Schensted walk broke at row {r}: {exc}") from exc
        seq.append(t)
    shapes = tuple(tuple(len(row) for row in s) for s in seq)
    return StammeringTableau(shapes, n), seq


# --- shadow lines ----------------------------------------------------------

ShadowLine = list[Cell]


def shadow_lines(points: Iterable[Cell]) -> list[ShadowLine]:
    """Split points into successive shadow lines (layers of South-West-minimal points).

    Each line is sorted by column, so its rows decrease along it.
    """
    rest = set(points)
    lines = []
    while rest:
        minimal = [p for p in rest if not any(q[0] < p[0] and q[1] < p[1] for q in rest)]
        line = sorted(minimal)
        lines.append(line)
        rest.difference_update(line)
    return lines


def shadow_corners(line: ShadowLine) -> list[Cell]:
    """Points where the line runs right and then turns down (ℸ-shaped corners)."""
    return [(line[i + 1][0], line[i][1]) for i in range(len(line) - 1)]


def shadow_families(rp: RookPlacement | PartialRookPlacement) -> list[list[ShadowLine]]:
    """Family 1 from the dots; family j+1 from the corners of family j inside the staircase."""
    n = rp.n
    families = []
    points = set(rp.cells())
    while points:
        lines = shadow_lines(points)
        families.append(lines)
        points = {p for line in lines for p in shadow_corners(line) if in_staircase(n, *p)}
    return families


def _crossings_horizontal(line: ShadowLine, c: int, y: int) -> int:
    # vertical pieces: at column line[i][0], from row line[i][1] up to row line[i-1][1] (open-ended for i = 0)
    hits = 0
    for i, (lc, lr) in enumerate(line):
        top = line[i - 1][1] if i else None
        if lc == c and lr <= y and (top is None or y < top):
            hits += 1
    return hits


def _crossings_vertical(line: ShadowLine, x: int, r: int) -> int:
    # horizontal pieces: at row line[i][1], from column line[i][0] to line[i+1][0] (open-ended for the last)
    hits = 0
    for i, (lc, lr) in enumerate(line):
        right = line[i + 1][0] if i + 1 < len(line) else None
        if lr == r and lc <= x and (right is None or x < right):
            hits += 1
    return hits


def rook_to_stammering_via_shadows(rp: RookPlacement) -> StammeringTableau:
    """Row j of every partition is the signed count of crossings with family-j shadow lines."""
    n = rp.n
    families = shadow_families(rp)
    tally = [0] * len(families)
    seq = [EMPTY]

    def record():
        parts = tuple(v for v in tally if v)
        if list(parts) != tally[: len(parts)] or any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise AssertionError(f"shadow tallies {tally} do not form a partition")
        seq.append(parts)

    for r in range(n, 0, -1):
        x0 = 2 * (n - r)
        for c in (x0 + 1, x0 + 2):
            for j, lines in enumerate(families):
                hits = sum(_crossings_horizontal(line, c, r) for line in lines)
                assert hits <= 1, "one family crossed twice by a single step"
                tally[j] += hits
            record()
        for j, lines in enumerate(families):
            hits = sum(_crossings_vertical(line, x0 + 2, r) for line in lines)
            assert hits <= 1, "one family crossed twice by a single step"
            tally[j] -= hits
        record()
    return StammeringTableau(tuple(seq), n)


# --- generalized endpoints -------------------------------------------------

@dataclass(frozen=True)
class GeneralizedDecoding:
    """Data equivalent to a stammering tableau with one empty endpoint.

    ``from_empty`` (∅ → λ): a full placement, the standard tableau recording
    the bottom border, and the columns where the bottom border grows.
    ``to_empty`` (λ → ∅): a partial placement and the standard tableau
    recording the left border; ``columns`` is None.
    """

    direction: Literal["from_empty", "to_empty"]
    placement: RookPlacement | PartialRookPlacement
    tableau: Tableau
    columns: Optional[frozenset[int]] = None


def _growth_steps(border: Sequence[Partition]) -> tuple[list[Partition], list[int]]:
    chain, where = [EMPTY], []
    for i in range(1, len(border)):
        if border[i] != border[i - 1]:
            if covered_row(border[i - 1], border[i]) is None:
                raise GrowthError(f"border step {i} is not a cover")
            chain.append(border[i])
            where.append(i)
    return chain, where


def decode_generalized(st: StammeringTableau) -> GeneralizedDecoding:
    if st.start == EMPTY:
        direction = "from_empty"
    elif st.end == EMPTY:
        direction = "to_empty"
    else:
        raise GrowthError("one endpoint must be the empty partition")
    report = validate_stammering(st.steps, st.start, st.end)
    if not report:
        raise GrowthError(f"invalid stammering tableau at index {report.index}: {report.rule}")
    n = st.n
    gd = fill_from_boundary(st.steps)
    if direction == "from_empty":
        if any(p != EMPTY for p in gd.west()):
            raise GrowthError("West border is not empty")
        by_row = {r: c for c, r in gd.dots}
        if len(by_row) != n:
            raise GrowthError("reverse rules did not produce one dot per row")
        chain, cols = _growth_steps(gd.south())
        return GeneralizedDecoding(
            direction,
            RookPlacement(n, tuple(by_row[r] for r in range(1, n + 1))),
            standard_tableau_of_chain(chain),
            frozenset(cols),
        )
    if any(p != EMPTY for p in gd.south()):
        raise GrowthError("South border is not empty")
    by_row = {r: c for c, r in gd.dots}
    chain, _ = _growth_steps(gd.west())
    return GeneralizedDecoding(
        direction,
        PartialRookPlacement(n, tuple(by_row.get(r) for r in range(1, n + 1))),
        standard_tableau_of_chain(chain),
    )


def encode_generalized(dec: GeneralizedDecoding) -> StammeringTableau:
    """Inverse of :func:`decode_generalized`."""
    n = dec.placement.n
    chain = chain_of_standard_tableau(dec.tableau)
    k = len(chain) - 1
    dotted_cols = {c for c, _ in dec.placement.cells()}
    dotted_rows = {r for _, r in dec.placement.cells()}
    if dec.direction == "from_empty":
        cols = sorted(dec.columns or ())
        if len(cols) != k or any(c in dotted_cols or not 1 <= c <= 2 * n for c in cols):
            raise GrowthError(f"need {k} distinct undotted columns in 1..{2 * n}")
        south, step = [EMPTY], 0
        for x in range(1, 2 * n + 1):
            if x in cols:
                step += 1
            south.append(chain[step])
        gd = grow(n, dec.placement.cells(), south=south)
    else:
        free_rows = [r for r in range(1, n + 1) if r not in dotted_rows]
        if len(free_rows) != k:
            raise GrowthError(f"need exactly {k} rows without a dot")
        west, step = [EMPTY], 0
        for y in range(1, n + 1):
            if y in free_rows:
                step += 1
            west.append(chain[step])
        gd = grow(n, dec.placement.cells(), west=west)
    return StammeringTableau(gd.boundary(), n)


__all__ = [
    "GeneralizedDecoding",
    "GrowthDiagram",
    "GrowthError",
    "boundary_vertices",
    "decode_generalized",
    "encode_generalized",
    "fill_from_boundary",
    "forward_cell",
    "grow",
    "growth_diagram",
    "reverse_cell",
    "rook_to_stammering",
    "rook_to_stammering_via_schensted",
    "rook_to_stammering_via_shadows",
    "shadow_corners",
    "shadow_families",
    "shadow_lines",
    "stammering_to_rook",
    "vertices",
]
