"""Random cubic planar bridgeless graphs grown from K4.

Each step adds two vertices, either by blowing a vertex up into a triangle
or by drawing a new edge across a face between two subdivided boundary
edges.  Both moves keep the graph cubic, planar and bridgeless.  The
sequence of moves depends only on the seed, so the graph for a smaller
``n`` with the same seed is an earlier stage of the same run.
"""

from __future__ import annotations

import random

from .errors import GraphError
from .graph import CubicGraph
from .triangles import expand_vertex_to_triangle

K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
K4_ROTATION = [[0, 2, 1], [0, 3, 4], [3, 1, 5], [5, 2, 4]]


def k4() -> CubicGraph:
    return CubicGraph(4, K4_EDGES, K4_ROTATION, outer_hint=[0, 1, 2])


def add_handle(g: CubicGraph, d1: int, d2: int) -> CubicGraph:
    """Subdivide the edges of darts ``d1`` and ``d2`` (same face, distinct
    edges) and join the two new vertices through that face."""
    e1, e2 = d1 >> 1, d2 >> 1
    if e1 == e2:
        raise ValueError("darts must lie on distinct edges")
    a, b = g.tail(d1), g.head(d1)
    c, d = g.tail(d2), g.head(d2)
    n, m = g.n, g.m
    x, y = n, n + 1
    e1b, e2b, j = m, m + 1, m + 2
    edges = [tuple(p) for p in g.edges]
    edges[e1] = (a, x)
    edges[e2] = (c, y)
    edges += [(x, b), (y, d), (x, y)]
    rotation = [list(r) for r in g.rotation]
    rotation[b] = [e1b if e == e1 else e for e in rotation[b]]
    rotation[d] = [e2b if e == e2 else e for e in rotation[d]]
    # the face lies left of each dart, so the join sits between the two halves
    rotation += [[e1, j, e1b], [e2, j, e2b]]
    return CubicGraph(n + 2, edges, rotation)


def grow(g: CubicGraph, rng: random.Random) -> CubicGraph:
    """One random growth step (+2 vertices); retried until it validates."""
    while True:
        try:
            if rng.random() < 0.5:
                return expand_vertex_to_triangle(g, rng.randrange(g.n))
            face = g.faces[rng.randrange(len(g.faces))]
            i, j = rng.sample(range(len(face.darts)), 2)
            return add_handle(g, face.darts[i], face.darts[j])
        except (GraphError, ValueError):
            continue


def gen_random(n: int, seed: int) -> CubicGraph:
    """Random cubic planar bridgeless graph on ``n`` vertices (even, >= 4)."""
    if n < 4 or n % 2:
        raise ValueError(f"n must be even and at least 4, got {n}")
    rng = random.Random(seed)
    g = k4()
    while g.n < n:
        g = grow(g, rng)
    return g


def size_for_seed(seed: int, n_min: int, n_max: int) -> int:
    """Deterministic even size in ``[n_min, n_max]`` drawn from ``seed``."""
    lo, hi = max(4, n_min + n_min % 2), n_max - n_max % 2
    if lo > hi:
        raise ValueError(f"no even size in [{n_min}, {n_max}]")
    return 2 * random.Random(f"size-{seed}").randint(lo // 2, hi // 2)
