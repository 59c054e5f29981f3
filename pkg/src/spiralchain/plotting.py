"""Matplotlib figures: colored embeddings and fuzz summaries."""

from __future__ import annotations

import math
from collections import defaultdict
from typing import Optional

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .export import DOT_COLORS  # noqa: E402
from .graph import PlaneGraph  # noqa: E402
from .spiral import SpiralDecomposition  # noqa: E402

UNCOLORED = "0.6"


def tutte_layout(g: PlaneGraph) -> np.ndarray:
    """Barycentric (Tutte) drawing: outer face pinned to a circle, every
    other vertex at the mean of its neighbours."""
    outer = g.outer_boundary()
    pos = np.zeros((g.n, 2))
    k = len(outer)
    for i, v in enumerate(outer):
        ang = math.pi / 2 - 2 * math.pi * i / k  # clockwise from the top
        pos[v] = (math.cos(ang), math.sin(ang))
    inner = [v for v in range(g.n) if v not in set(outer)]
    if not inner:
        return pos
    idx = {v: i for i, v in enumerate(inner)}
    a = np.zeros((len(inner), len(inner)))
    rhs = np.zeros((len(inner), 2))
    for v in inner:
        i = idx[v]
        for e in g.incident(v):
            w = g.other(e, v)
            a[i, i] += 1
            if w in idx:
                a[i, idx[w]] -= 1
            else:
                rhs[i] += pos[w]
    pos[inner] = np.linalg.solve(a, rhs)
    return pos


def draw_graph(
    g: PlaneGraph,
    path: str,
    coloring: Optional[dict[int, int]] = None,
    decomposition: Optional[SpiralDecomposition] = None,
    title: str = "",
) -> None:
    pos = tutte_layout(g)
    backbone = set()
    if decomposition is not None:
        for ch in decomposition.chains:
            backbone.update(ch.edges)
    fig, ax = plt.subplots(figsize=(6, 6))
    seen = defaultdict(int)
    for e, (a, b) in enumerate(g.edges):
        color = DOT_COLORS.get((coloring or {}).get(e), UNCOLORED)
        width = 3.5 if e in backbone else 1.5
        # fan out parallel edges so each stays visible
        k = seen[frozenset((a, b))]
        seen[frozenset((a, b))] += 1
        p, q = pos[a], pos[b]
        if k == 0:
            ax.plot([p[0], q[0]], [p[1], q[1]], color=color, lw=width, zorder=1)
        else:
            mid = (p + q) / 2
            normal = np.array([q[1] - p[1], p[0] - q[0]])
            mid = mid + 0.15 * (-1) ** k * math.ceil(k / 2) * normal
            ax.plot([p[0], mid[0], q[0]], [p[1], mid[1], q[1]], color=color, lw=width, zorder=1)
    ax.scatter(pos[:, 0], pos[:, 1], s=140, c="white", edgecolors="black", zorder=2)
    for v in range(g.n):
        ax.annotate(str(v), pos[v], ha="center", va="center", fontsize=7, zorder=3)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title)
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)


def plot_fuzz(summary, path: str) -> None:
    """Outcome counts per graph size."""
    by_n: dict[int, dict[str, int]] = defaultdict(lambda: defaultdict(int))
    for rec in summary.records:
        for o in rec.outcomes:
            by_n[rec.n][o] += 1
    sizes = sorted(by_n)
    fig, ax = plt.subplots(figsize=(8, 4))
    bottom = np.zeros(len(sizes))
    for outcome, color in (("success", "tab:green"), ("fallback", "tab:orange"), ("fail", "tab:red")):
        vals = np.array([by_n[n][outcome] for n in sizes], dtype=float)
        ax.bar(sizes, vals, bottom=bottom, color=color, label=outcome, width=1.6)
        bottom += vals
    ax.set_xlabel("vertices")
    ax.set_ylabel("runs")
    ax.set_title(f"spiral-only rate {summary.spiral_rate:.1%} over {summary.runs} runs")
    ax.legend()
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)
