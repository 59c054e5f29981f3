"""Graphviz DOT export."""

from __future__ import annotations

from typing import Optional

from .graph import Multigraph
from .spiral import SpiralDecomposition

DOT_COLORS = {1: "red", 2: "orange", 3: "green"}


def export_dot(
    g: Multigraph,
    coloring: Optional[dict[int, int]] = None,
    decomposition: Optional[SpiralDecomposition] = None,
    name: str = "G",
) -> str:
    """Undirected DOT text; edges in id order, colors and bold backbones as attributes."""
    backbone = set()
    if decomposition is not None:
        for ch in decomposition.chains:
            backbone.update(ch.edges)
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    lines += [f"  {v};" for v in range(g.n)]
    for e, (a, b) in enumerate(g.edges):
        attrs = [f'label="{e}"']
        if coloring is not None and e in coloring:
            attrs.append(f"color={DOT_COLORS[coloring[e]]}")
        if e in backbone:
            attrs.append("style=bold")
            attrs.append("penwidth=3")
        lines.append(f"  {a} -- {b} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
