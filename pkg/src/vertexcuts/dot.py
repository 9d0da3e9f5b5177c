"""DOT rendering of graphs with highlighted cuts or wheels."""

from __future__ import annotations

from typing import Sequence

from .graph import Graph, VertexSet, components_after_removal

_SIDE_COLORS = (
    "lightblue",
    "palegreen",
    "lightyellow",
    "plum",
    "lightsalmon",
    "lightcyan",
)


def graph_to_dot(
    g: Graph,
    labels: Sequence[str] | None = None,
    cut: VertexSet | None = None,
    wheel_center: VertexSet | None = None,
    wheel_spokes: Sequence[VertexSet] | None = None,
) -> str:
    lab = labels if labels is not None else [str(i) for i in range(g.n)]
    fill = {}
    if cut is not None:
        part = components_after_removal(g, cut)
        for v in cut:
            fill[v] = "tomato"
        for i, side in enumerate(part.sides):
            for v in side:
                fill[v] = _SIDE_COLORS[i % len(_SIDE_COLORS)]
    if wheel_center is not None or wheel_spokes is not None:
        for v in wheel_center or ():
            fill[v] = "gold"
        for i, spoke in enumerate(wheel_spokes or ()):
            for v in spoke:
                fill[v] = _SIDE_COLORS[i % len(_SIDE_COLORS)]
    lines = ["graph G {", "  node [style=filled, fillcolor=white];"]
    for v in range(g.n):
        color = fill.get(v)
        attr = f' [fillcolor="{color}"]' if color else ""
        lines.append(f'  "{lab[v]}"{attr};')
    for u, v in sorted(g.edges):
        lines.append(f'  "{lab[u]}" -- "{lab[v]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
