"""Text and SVG pictures of growth diagrams, placements, shadow lines and Dyck shapes.

SVG output goes through matplotlib with a fixed hash salt and no date stamp,
so identical inputs give identical bytes.
"""

from __future__ import annotations

import io
from typing import Sequence

from . import dyck, growth, kinds, profiles
from .partitions import format_partition
from .staircase import row_length

VIEWS = ("default", "growth", "shadows", "ribbons")
_LABELS = "123456789abcdefghijklmnopqrstuvwxyz"


def _ribbon_label(i: int) -> str:
    return _LABELS[i] if i < len(_LABELS) else "#"


# --- ascii -----------------------------------------------------------------

def growth_ascii(gd: growth.GrowthDiagram) -> str:
    """Vertex labels row by row from the top, with ``*`` on dotted cells."""
    n = gd.n
    width = max(len(format_partition(p)) for p in gd.labels.values()) + 2
    lines = []
    for y in range(n, -1, -1):
        length = 2 * n if y == 0 else row_length(n, y)
        lines.append("".join(format_partition(gd.label(x, y)).center(width) for x in range(length + 1)).rstrip())
        if y:
            # cell c of row y sits between vertices c-1 and c
            cells = [("*" if (c, y) in gd.dots else ".").center(width) for c in range(1, row_length(n, y) + 1)]
            lines.append((" " * (width // 2) + "".join(cells)).rstrip())
    return "\n".join(lines) + "\n"


def shadows_ascii(rp) -> str:
    """Staircase cells, ``*`` for dots and ``j`` for corners of shadow family ``j``."""
    n = rp.n
    marks = {p: "*" for p in rp.cells()}
    for j, lines in enumerate(growth.shadow_families(rp)[1:], start=2):
        for line in lines:
            for p in line:
                marks.setdefault(p, _ribbon_label(j - 1))
    rows = []
    for r in range(n, 0, -1):
        rows.append(" ".join(marks.get((c, r), ".") for c in range(1, row_length(n, r) + 1)))
    return "\n".join(rows) + "\n" if rows else "(empty)\n"


def path_ascii(word: str) -> str:
    """A Dyck path drawn one character per step: ``UD`` becomes ``/\\``."""
    if not word:
        return "\n"
    hs = dyck.heights(word)
    top = max(hs)
    grid = [[" "] * len(word) for _ in range(top)]
    for k, s in enumerate(word):
        band = hs[k] if s == dyck.UP else hs[k + 1]
        grid[band][k] = "/" if s == dyck.UP else "\\"
    return "\n".join("".join(row).rstrip() for row in reversed(grid)) + "\n"


def shape_ascii(word: str, labels: dict[tuple[int, int], str]) -> str:
    """A Dyck shape two characters per step, each cell labelled at its upper half."""
    hs = dyck.heights(word)
    top = max(hs) if hs else 0
    grid = [[" "] * (2 * len(word) + 1) for _ in range(top)]
    for k, s in enumerate(word):
        band = hs[k] if s == dyck.UP else hs[k + 1]
        grid[band][2 * k + 1] = "/" if s == dyck.UP else "\\"
    for (x, y), text in labels.items():
        grid[y][2 * x + 2] = text
    return "\n".join("".join(row).rstrip() for row in reversed(grid)) + "\n"


def chain_labels(chain: dyck.Chain) -> dict[tuple[int, int], str]:
    return {cell: _ribbon_label(i) for i, rib in enumerate(chain.ribbons()) for cell in rib}


def filling_labels(shape: str, dots) -> dict[tuple[int, int], str]:
    labels = {cell: "o" for cell in dyck.cells(shape)}
    for c, i in dots:
        labels[dyck.cell_at(c, i)] = "*"
    return labels


# --- svg -------------------------------------------------------------------

def _figure(width: float, height: float):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    matplotlib.rcParams["svg.hashsalt"] = "stammerlab"
    matplotlib.rcParams["svg.fonttype"] = "none"
    fig, ax = plt.subplots(figsize=(width, height))
    ax.set_aspect("equal")
    ax.axis("off")
    return fig, ax


def _svg(fig) -> str:
    import matplotlib.pyplot as plt

    buf = io.StringIO()
    fig.savefig(buf, format="svg", metadata={"Date": None}, bbox_inches="tight")
    plt.close(fig)
    return buf.getvalue()


def _draw_staircase(ax, n: int):
    for r in range(1, n + 1):
        for c in range(1, row_length(n, r) + 1):
            ax.add_patch(_rect(c - 1, r - 1, 1, 1, fill=False, lw=0.6, ec="0.6"))


def _rect(*args, **kw):
    from matplotlib.patches import Rectangle

    return Rectangle((args[0], args[1]), args[2], args[3], **kw)


def growth_svg(gd: growth.GrowthDiagram) -> str:
    n = gd.n
    fig, ax = _figure(max(2.0, 1.1 * n + 1), max(1.5, 0.6 * n + 1))
    _draw_staircase(ax, n)
    for c, r in sorted(gd.dots):
        ax.plot([c - 0.5], [r - 0.5], "o", color="black", ms=6)
    for (x, y), p in sorted(gd.labels.items()):
        ax.text(x, y, format_partition(p), ha="center", va="center", fontsize=7, color="tab:blue",
                bbox={"fc": "white", "ec": "none", "pad": 0.5})
    ax.set_xlim(-0.5, 2 * n + 0.5)
    ax.set_ylim(-0.5, n + 0.5)
    return _svg(fig)


def shadows_svg(rp) -> str:
    n = rp.n
    fig, ax = _figure(max(2.0, 0.9 * n + 1), max(1.5, 0.5 * n + 1))
    _draw_staircase(ax, n)
    colors = ["tab:red", "tab:blue", "tab:green", "tab:orange", "tab:purple", "tab:brown"]
    for j, lines in enumerate(growth.shadow_families(rp)):
        color = colors[j % len(colors)]
        for line in lines:
            # each line comes down from the top, steps right and down through its points, then runs off to the right
            xs, ys = [line[0][0] - 0.5], [n + 0.3]
            for i, (c, r) in enumerate(line):
                xs += [c - 0.5, c - 0.5]
                ys += [ys[-1], r - 0.5]
                nxt = line[i + 1][0] - 0.5 if i + 1 < len(line) else 2 * n + 0.3
                xs.append(nxt)
                ys.append(r - 0.5)
            ax.plot(xs, ys, color=color, lw=1.2)
            for c, r in line:
                ax.plot([c - 0.5], [r - 0.5], "o" if j == 0 else "s", color=color, ms=5 if j == 0 else 3)
    ax.set_xlim(-0.3, 2 * n + 0.5)
    ax.set_ylim(-0.3, n + 0.5)
    return _svg(fig)


def _diamond(x: int, y: int) -> list[tuple[int, int]]:
    # cell (x, y) has its left corner at (x, y) and its right corner at (x + 2, y)
    return [(x, y), (x + 1, y + 1), (x + 2, y), (x + 1, y - 1)]


def shape_svg(word: str, fills: dict[tuple[int, int], str], marks: dict[tuple[int, int], str]) -> str:
    from matplotlib.patches import Polygon

    m = max(len(word), 2)
    fig, ax = _figure(max(2.0, 0.45 * m), max(1.2, 0.3 * m))
    for cell in sorted(dyck.cells(word)):
        ax.add_patch(Polygon(_diamond(*cell), closed=True, fc=fills.get(cell, "white"), ec="0.4", lw=0.6))
        if cell in marks:
            ax.text(cell[0] + 1, cell[1], marks[cell], ha="center", va="center", fontsize=8)
    hs = dyck.heights(word)
    ax.plot(range(len(word) + 1), hs, color="black", lw=1.5)
    ax.set_xlim(-0.5, len(word) + 0.5)
    ax.set_ylim(-1.5, (max(hs) if hs else 0) + 0.5)
    return _svg(fig)


def _chain_fills(chain: dyck.Chain) -> dict:
    import matplotlib

    cmap = matplotlib.colormaps["tab20"]
    fills = {}
    for i, rib in enumerate(chain.ribbons()):
        r, g, b, _ = cmap(i % 20)
        for cell in rib:
            fills[cell] = f"#{int(r * 255):02x}{int(g * 255):02x}{int(b * 255):02x}"
    return fills


# --- dispatch --------------------------------------------------------------

def render(kind: str, obj, fmt: str = "ascii", view: str = "default") -> str:
    """Picture of an object; the view picks among growth diagram, shadow lines and ribbons."""
    if fmt not in ("ascii", "svg"):
        raise ValueError(f"unknown format {fmt!r}")
    if kind in (kinds.ROOK, kinds.STAMMERING):
        if view == "ribbons":
            chain = kinds.convert(kind, obj, kinds.CHAIN)
            return _render_chain(chain, fmt)
        if view == "shadows":
            rp = obj if kind == kinds.ROOK else kinds.convert(kind, obj, kinds.ROOK)
            return shadows_ascii(rp) if fmt == "ascii" else shadows_svg(rp)
        if kind == kinds.ROOK:
            gd = growth.grow(obj.n, obj.cells())
        else:
            gd = growth.fill_from_boundary(obj.steps)
        return growth_ascii(gd) if fmt == "ascii" else growth_svg(gd)
    if kind == kinds.CHAIN:
        return _render_chain(obj, fmt)
    if kind == kinds.PERMUTATION:
        return _render_chain(profiles.chain_of(obj), fmt)
    if kind in (kinds.LAGUERRE, kinds.DYCK_TABLEAU):
        if fmt == "ascii":
            return shape_ascii(obj.shape, filling_labels(obj.shape, obj.dots))
        marks = {dyck.cell_at(c, i): "●" for c, i in obj.dots}
        return shape_svg(obj.shape, {}, marks)
    if kind == kinds.DYCK_PATH:
        if fmt == "ascii":
            return path_ascii(obj)
        return shape_svg(obj, {}, {})
    raise ValueError(f"cannot render kind {kind!r}")


def _render_chain(chain: dyck.Chain, fmt: str) -> str:
    if fmt == "ascii":
        return shape_ascii(chain.shape, chain_labels(chain))
    return shape_svg(chain.shape, _chain_fills(chain), {c: str(i + 1) for i, rib in enumerate(chain.ribbons()) for c in rib})


def bar_chart_svg(names: Sequence[str], cases: Sequence[int], passed: Sequence[bool], title: str) -> str:
    """Cases checked per check, green for pass and red for fail."""
    fig, ax = _figure(6.0, 0.35 * len(names) + 1)
    ax.set_aspect("auto")
    ax.axis("on")
    ys = list(range(len(names)))[::-1]
    ax.barh(ys, [max(c, 1) for c in cases], color=["tab:green" if p else "tab:red" for p in passed])
    ax.set_yticks(ys, names, fontsize=7)
    ax.set_xscale("log")
    ax.set_xlabel("cases checked")
    ax.set_title(title, fontsize=9)
    return _svg(fig)
