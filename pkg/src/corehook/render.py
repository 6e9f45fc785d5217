"""Text renderings: ASCII Young diagrams and Graphviz DOT for the gap poset."""

from __future__ import annotations

from typing import Iterable, Sequence

from .core_poset import CoreParams, bottom_edge, gap_poset
from .partitions import hook_length_grid

PALETTE = (
    "red", "green", "blue", "orange", "purple", "brown", "cyan", "magenta",
    "gold", "gray", "pink", "olive",
)


def young_ascii(parts: Sequence[int]) -> str:
    """Young diagram with each cell showing its hook length.

    >>> print(young_ascii((2, 1)))
    +-+-+
    |3|1|
    +-+-+
    |1|
    +-+
    """
    grid = hook_length_grid(parts)
    if not grid:
        return ""
    width = len(str(grid[0][0]))

    def border(n: int) -> str:
        return "+" + ("-" * width + "+") * n

    lines = [border(len(grid[0]))]
    for row in grid:
        lines.append("|" + "|".join(str(h).rjust(width) for h in row) + "|")
        lines.append(border(len(row)))
    return "\n".join(lines)


def _attrs(**kw) -> str:
    return "[" + ", ".join(f'{k}="{v}"' for k, v in kw.items()) + "]"


def hasse_dot(params: CoreParams, marked: Iterable[int] = ()) -> str:
    """DOT digraph of the gap poset, edges pointing from ``x`` down to ``x - s`` and ``x - t``."""
    poset = gap_poset(params)
    marked = frozenset(marked)
    lines = [f'digraph "P_{params.s}_{params.t}" {{', "  rankdir=TB;"]
    for x in sorted(poset.elements, reverse=True):
        if x in marked:
            lines.append(f'  "{x}" [style=filled, fillcolor="lightblue"];')
        else:
            lines.append(f'  "{x}";')
    for x, y in poset.covers():
        lines.append(f'  "{x}" -> "{y}";')
    lines.append("}")
    return "\n".join(lines)


def edge_dot(params: CoreParams, marked: Iterable[int] = ()) -> str:
    """DOT path through the bottom edge in its order, colored by residue mod ``k``."""
    edge = bottom_edge(params)
    marked = frozenset(marked)
    lines = [f'digraph "E_{params.s}_{params.t}" {{', "  rankdir=LR;"]
    for x in edge.ordered:
        extra = {"style": "filled", "fillcolor": "lightblue"} if x in marked else {}
        color = PALETTE[(x % params.k) % len(PALETTE)]
        lines.append(f'  "{x}" ' + _attrs(color=color, label=f"{x} (L{x % params.k})", **extra) + ";")
    for x, y in zip(edge.ordered, edge.ordered[1:]):
        lines.append(f'  "{x}" -> "{y}";')
    lines.append("}")
    return "\n".join(lines)
