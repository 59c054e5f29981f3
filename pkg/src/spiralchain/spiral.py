"""Spiral-chain decomposition and comb (caterpillar) presentation.

The walk starts on the outer face and always leaves the current vertex by
the first edge, clockwise after the arrival edge, whose far end is still
unvisited.  Walking the outer boundary this way peels it off; when the ring
closes the walk drops onto the next inner ring.  When no unvisited neighbour
is left the chain ends and a new one starts next to the earliest traversed
vertex that still has an unvisited neighbour.

Vertices listed in ``through`` (crossing dummies of a planarized drawing) are
never visited: the walk passes straight across them, and every such pass
flips the turning direction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, Iterable, Optional

from .graph import PlaneGraph

CW = "cw"
ACW = "acw"


def _flip(direction: str) -> str:
    return ACW if direction == CW else CW


@dataclass(frozen=True)
class SpiralChain:
    vertices: tuple[int, ...]
    edges: tuple[int, ...]  # backbone, edges[i] joins vertices[i] and vertices[i+1]
    segments: tuple[int, ...]  # positions where a new peeling ring starts; always begins with 0
    direction: str
    entry_edge: Optional[int] = None  # edge from an earlier chain into vertices[0]

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class SpiralDecomposition:
    chains: tuple[SpiralChain, ...]
    start: int
    direction: str
    switches: int = 0

    @property
    def order(self) -> list[int]:
        return [v for ch in self.chains for v in ch.vertices]

    def summary(self) -> dict:
        return {
            "chains": len(self.chains),
            "lengths": [len(ch) for ch in self.chains],
            "start": self.start,
            "direction": self.direction,
            "switches": self.switches,
        }


@dataclass(frozen=True)
class Hair:
    vertex: int
    edge: int
    real: bool


@dataclass(frozen=True)
class Comb:
    chain: SpiralChain
    backbone: tuple[int, ...]
    hairs: tuple[Hair, ...]

    def hairs_at(self, v: int) -> list[Hair]:
        return [h for h in self.hairs if h.vertex == v]

    @property
    def edge_set(self) -> frozenset[int]:
        return frozenset(self.backbone) | frozenset(h.edge for h in self.hairs)


def _cross(g: PlaneGraph, v: int, e: int, through: AbstractSet[int]) -> tuple[int, int, int]:
    """Follow ``e`` out of ``v`` across any dummies.

    Returns the real far end, the edge used to arrive there, and how many
    dummies were crossed.
    """
    w = g.other(e, v)
    crossed = 0
    while w in through:
        e = g.rot_next(w, e, 2)
        w = g.other(e, w)
        crossed += 1
    return w, e, crossed


def _candidates(g: PlaneGraph, v: int, via: Optional[int], direction: str) -> list[int]:
    rot = g.rotation[v]
    k = len(rot)
    step = 1 if direction == CW else -1
    if via is None:
        return [rot[(step * i) % k] for i in range(k)]
    i0 = g.rot_index(v, via)
    return [rot[(i0 + step * i) % k] for i in range(1, k)]


def next_rightmost(
    g: PlaneGraph,
    arrived_at: int,
    via: Optional[int],
    visited: AbstractSet[int],
    direction: str = CW,
    through: AbstractSet[int] = frozenset(),
) -> Optional[int]:
    """First edge after ``via`` in the turning direction whose far end is unvisited."""
    for e in _candidates(g, arrived_at, via, direction):
        w, _, _ = _cross(g, arrived_at, e, through)
        if w not in visited and w != arrived_at:
            return e
    return None


def _initial_via(g: PlaneGraph, s: int, direction: str) -> Optional[int]:
    """Arrival edge that makes the first step run along the outer boundary."""
    darts = g.faces[g.outer_face].darts
    k = len(darts)
    for i, d in enumerate(darts):
        if g.tail(d) == s:
            prev_edge = darts[(i - 1) % k] >> 1
            out_edge = d >> 1
            return prev_edge if direction == CW else out_edge
    return None


def build_decomposition(
    g: PlaneGraph,
    start: Optional[int] = None,
    direction: str = CW,
    through: Iterable[int] = (),
) -> SpiralDecomposition:
    """Partition the vertices into spiral chains.

    Args:
        g: embedded graph.
        start: first vertex; defaults to the lowest-id real vertex of the outer face.
        direction: ``"cw"`` or ``"acw"``.
        through: dummy vertices to pass across (planarized crossings).
    """
    if direction not in (CW, ACW):
        raise ValueError(f"direction must be {CW!r} or {ACW!r}")
    through = frozenset(through)
    real = [v for v in range(g.n) if v not in through]
    if start is None:
        outer = [v for v in g.outer_vertices() if v not in through]
        start = min(outer) if outer else min(real)
    if start in through or not 0 <= start < g.n:
        raise ValueError(f"start vertex {start} is not a real vertex")

    visited: set[int] = set()
    order: list[int] = []
    chains: list[SpiralChain] = []
    switches = 0
    cur_dir = direction
    scan = 0

    s, via, entry = start, _initial_via(g, start, direction), None
    while True:
        chain_dir = cur_dir
        visited.add(s)
        order.append(s)
        vs, es, segs = [s], [], [0]
        seg_start = s
        cur = s
        while True:
            cands = _candidates(g, cur, via, cur_dir)
            chosen = None
            for e in cands:
                w, arrive, crossed = _cross(g, cur, e, through)
                if w not in visited and w != cur:
                    chosen = (e, w, arrive, crossed)
                    break
            if chosen is None:
                break
            e, w, arrive, crossed = chosen
            if cands and e != cands[0] and _cross(g, cur, cands[0], through)[0] == seg_start:
                segs.append(len(vs))
                seg_start = w
            if crossed % 2:
                cur_dir = _flip(cur_dir)
            switches += crossed
            es.append(e)
            vs.append(w)
            visited.add(w)
            order.append(w)
            cur, via = w, arrive
        chains.append(SpiralChain(tuple(vs), tuple(es), tuple(segs), chain_dir, entry))
        if len(visited) == len(real):
            break
        # earliest traversed vertex with an unvisited neighbour; lowest edge id on ties
        nxt = None
        while nxt is None:
            u = order[scan]
            for e in sorted(g.incident(u)):
                w, arrive, crossed = _cross(g, u, e, through)
                if w not in visited:
                    nxt = (w, arrive, e, crossed)
                    break
            else:
                scan += 1
        s, via, entry, crossed = nxt
        if crossed % 2:
            cur_dir = _flip(cur_dir)
        switches += crossed
    return SpiralDecomposition(tuple(chains), start, direction, switches)


def build_comb(g: PlaneGraph, chain: SpiralChain, seen: AbstractSet[int] = frozenset()) -> Comb:
    """Backbone plus hair occurrences of one chain.

    ``seen`` holds the vertices of earlier chains.  A hair is real when its
    far end has not been reached yet in the global traversal, imaginary when
    it has (the edge was already met from the other side).  Hairs at a vertex
    are listed in rotation order, clockwise from the arrival edge; at the very
    first vertex the outer edge closing the boundary stands in for it.
    """
    reached = set(seen)
    hairs = []
    vs, es = chain.vertices, chain.edges
    for i, v in enumerate(vs):
        reached.add(v)
        backbone_here = set()
        if i > 0:
            backbone_here.add(es[i - 1])
        if i < len(es):
            backbone_here.add(es[i])
        rot = g.rotation[v]
        if i > 0:
            k = g.rot_index(v, es[i - 1])
            rot = rot[k + 1:] + rot[: k + 1]
        elif chain.entry_edge is not None and chain.entry_edge in g.rotation[v]:
            k = g.rot_index(v, chain.entry_edge)
            rot = rot[k:] + rot[:k]
        elif es:
            # first vertex of the walk: the closing outer edge acts as the arrival
            step = -1 if chain.direction == CW else 1
            k = (g.rot_index(v, es[0]) + step) % len(rot)
            rot = rot[k:] + rot[:k]
        for e in rot:
            if e in backbone_here:
                continue
            w = g.other(e, v)
            hairs.append(Hair(v, e, real=w not in reached))
    return Comb(chain, tuple(es), tuple(hairs))


def build_combs(g: PlaneGraph, dec: SpiralDecomposition) -> list[Comb]:
    seen: set[int] = set()
    combs = []
    for ch in dec.chains:
        combs.append(build_comb(g, ch, seen))
        seen.update(ch.vertices)
    return combs
