"""Triangle reduction and reinsertion, vertex expansion, and triangle signs.

A cubic planar graph with triangles is reduced to a triangle-free one (or to
K4, or to the 2-vertex triple-edge graph) by two moves:

* an isolated triangle is contracted to a single vertex;
* a twin (two triangles sharing one edge, forming a 4-vertex gadget with two
  external edges) is deleted and its two external neighbours are joined.

Every move is recorded so a coloring of the reduced graph can be pushed back
to the original graph, where the triangle and gadget colors are forced.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Union

from .errors import ImproperInput, NeighborsNotDistinct, NotATriangle, ReductionError, V5EqualsV6
from .graph import CubicGraph, PlaneGraph
from .oracle import verify

ISOLATED = "isolated"
TWIN_MEMBER = "twin"
K4_WHOLE = "k4"
OVERLAPPING = "overlapping"


@dataclass(frozen=True)
class Triangle:
    vertices: tuple[int, int, int]
    edges: tuple[int, int, int]  # (v1v2, v2v3, v3v1)


@dataclass(frozen=True)
class TriangleKind:
    triangle: Triangle
    kind: str
    partner_edge: Optional[int] = None
    partner: Optional[Triangle] = None


@dataclass(frozen=True)
class Twin:
    """Two triangles v1v2v3 and v2v3v4 sharing edge v2v3.

    ``x1`` joins v1 to v5 and ``x4`` joins v4 to v6; those are the only
    edges leaving the gadget.
    """

    v1: int
    v2: int
    v3: int
    v4: int
    e12: int
    e13: int
    e23: int
    e24: int
    e34: int
    x1: int
    x4: int
    v5: int
    v6: int

    @property
    def vertices(self) -> tuple[int, int, int, int]:
        return (self.v1, self.v2, self.v3, self.v4)

    @property
    def internal_edges(self) -> tuple[int, ...]:
        return (self.e12, self.e13, self.e23, self.e24, self.e34)


def is_k4(g: PlaneGraph) -> bool:
    if g.n != 4 or g.m != 6:
        return False
    return all(len(g.edges_between(a, b)) == 1 for a in range(4) for b in range(a + 1, 4))


def is_theta(g: PlaneGraph) -> bool:
    """The 2-vertex graph with three parallel edges."""
    return g.n == 2 and g.m == 3


def find_triangles(g: PlaneGraph) -> list[Triangle]:
    out = []
    for a in range(g.n):
        for eab in g.incident(a):
            b = g.other(eab, a)
            if b <= a:
                continue
            for ebc in g.incident(b):
                c = g.other(ebc, b)
                if c <= b:
                    continue
                for eca in g.edges_between(c, a):
                    out.append(Triangle((a, b, c), (eab, ebc, eca)))
    return out


def enumerate_triangles(g: PlaneGraph) -> list[TriangleKind]:
    tris = find_triangles(g)
    if is_k4(g):
        return [TriangleKind(t, K4_WHOLE) for t in tris]
    by_edge: dict[int, list[int]] = {}
    for i, t in enumerate(tris):
        for e in t.edges:
            by_edge.setdefault(e, []).append(i)
    kinds = []
    for i, t in enumerate(tris):
        shared: dict[int, list[int]] = {}
        for e in t.edges:
            for j in by_edge[e]:
                if j != i:
                    shared.setdefault(j, []).append(e)
        if not shared:
            kinds.append(TriangleKind(t, ISOLATED))
        elif len(shared) == 1 and len(next(iter(shared.values()))) == 1:
            (j, (e,)), = shared.items()
            kinds.append(TriangleKind(t, TWIN_MEMBER, partner_edge=e, partner=tris[j]))
        else:
            kinds.append(TriangleKind(t, OVERLAPPING))
    return kinds


def find_twins(g: PlaneGraph) -> list[Twin]:
    """Every twin gadget once, ordered by the id of the shared edge."""
    twins = {}
    for k in enumerate_triangles(g):
        if k.kind != TWIN_MEMBER or k.partner_edge in twins:
            continue
        twins[k.partner_edge] = _twin_from(g, k.triangle, k.partner, k.partner_edge)
    return [twins[e] for e in sorted(twins)]


def _edge_in(t: Triangle, a: int, b: int) -> int:
    (v1, v2, v3), (e12, e23, e31) = t.vertices, t.edges
    pairs = {frozenset((v1, v2)): e12, frozenset((v2, v3)): e23, frozenset((v3, v1)): e31}
    return pairs[frozenset((a, b))]


def _twin_from(g: PlaneGraph, t: Triangle, u: Triangle, shared: int) -> Twin:
    v2, v3 = sorted(g.edges[shared])
    v1 = next(v for v in t.vertices if v not in (v2, v3))
    v4 = next(v for v in u.vertices if v not in (v2, v3))
    if v4 < v1:
        v1, v4 = v4, v1
        t, u = u, t
    e12, e13 = _edge_in(t, v1, v2), _edge_in(t, v1, v3)
    e24, e34 = _edge_in(u, v2, v4), _edge_in(u, v3, v4)
    (x1,) = [e for e in g.incident(v1) if e not in (e12, e13)]
    (x4,) = [e for e in g.incident(v4) if e not in (e24, e34)]
    return Twin(v1, v2, v3, v4, e12, e13, shared, e24, e34, x1, x4, g.other(x1, v1), g.other(x4, v4))


# events ------------------------------------------------------------------------


@dataclass(frozen=True)
class _Event:
    vertex_map: tuple[int, ...]  # old id -> new id, -1 if removed
    edge_map: tuple[int, ...]
    old_ends: dict = field(repr=False)  # old edge id -> ends, for removed/rewired edges
    old_rotation: dict = field(repr=False)  # old vertex id -> rotation, for removed/rewired vertices
    old_outer_face: int

    def undo_graph(self, after: PlaneGraph) -> CubicGraph:
        inv_v = {new: old for old, new in enumerate(self.vertex_map) if new >= 0}
        inv_e = {new: old for old, new in enumerate(self.edge_map) if new >= 0}
        edges = []
        for e, new in enumerate(self.edge_map):
            if e in self.old_ends:
                edges.append(self.old_ends[e])
            else:
                a, b = after.edges[new]
                edges.append((inv_v[a], inv_v[b]))
        rotation = []
        for v, new in enumerate(self.vertex_map):
            if v in self.old_rotation:
                rotation.append(self.old_rotation[v])
            else:
                rotation.append(tuple(inv_e[x] for x in after.rotation[new]))
        return CubicGraph(len(self.vertex_map), edges, rotation, outer_face=self.old_outer_face)

    def _carry(self, after: dict[int, int]) -> dict[int, int]:
        return {e: after[new] for e, new in enumerate(self.edge_map) if new >= 0}


@dataclass(frozen=True)
class ContractTriangle(_Event):
    u: int = -1  # id of the contracted vertex in the reduced graph
    triangle: Optional[Triangle] = None
    pendants: tuple[int, int, int] = (-1, -1, -1)  # old ids of the edges leaving v1, v2, v3

    def vertex_image(self, v: int) -> int:
        new = self.vertex_map[v]
        return self.u if new < 0 else new

    def undo_coloring(self, after: dict[int, int]) -> dict[int, int]:
        c = self._carry(after)
        i, j, k = (c[p] for p in self.pendants)
        if len({i, j, k}) != 3:
            raise ImproperInput(f"pendant colors {i},{j},{k} at contracted vertex {self.u} are not distinct")
        e12, e23, e31 = self.triangle.edges
        c[e12], c[e23], c[e31] = k, i, j
        return c


@dataclass(frozen=True)
class ReduceTwin(_Event):
    new_edge: int = -1  # id of the joining edge v5-v6 in the reduced graph
    twin: Optional[Twin] = None

    def vertex_image(self, v: int) -> int:
        new = self.vertex_map[v]
        return self.vertex_map[self.twin.v5] if new < 0 else new

    def undo_coloring(self, after: dict[int, int]) -> dict[int, int]:
        t = self.twin
        c = self._carry(after)
        x = after[self.new_edge]
        y, z = (k for k in (1, 2, 3) if k != x)
        c[t.x1] = c[t.x4] = c[t.e23] = x
        c[t.e12], c[t.e13], c[t.e24], c[t.e34] = y, z, z, y
        return c


Event = Union[ContractTriangle, ReduceTwin]


@dataclass
class ReductionTrace:
    original: CubicGraph
    reduced: CubicGraph
    events: list = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.events)

    def replay(self) -> list[CubicGraph]:
        """Graphs from the reduced one back to the original, rebuilt from the events alone."""
        graphs = [self.reduced]
        for ev in reversed(self.events):
            graphs.append(ev.undo_graph(graphs[-1]))
        return graphs

    def vertex_image(self, v: int) -> int:
        for ev in self.events:
            v = ev.vertex_image(v)
        return v


def _rebuild(
    g: PlaneGraph,
    drop_v: set[int],
    drop_e: set[int],
    new_ends: dict[int, tuple[int, int]],
    new_rot: dict[int, tuple[int, ...]],
):
    vmap, emap = [], []
    k = 0
    for v in range(g.n):
        vmap.append(-1 if v in drop_v else k)
        k += v not in drop_v
    j = 0
    for e in range(g.m):
        emap.append(-1 if e in drop_e else j)
        j += e not in drop_e
    edges = []
    for e in range(g.m):
        if e in drop_e:
            continue
        a, b = new_ends.get(e, g.edges[e])
        edges.append((vmap[a], vmap[b]))
    rotation = [
        tuple(emap[x] for x in new_rot.get(v, g.rotation[v])) for v in range(g.n) if v not in drop_v
    ]
    out = CubicGraph(k, edges, rotation)
    for d in g.faces[g.outer_face].darts:
        e = d >> 1
        if e in drop_e or e in new_ends:
            continue
        out.outer_face = out.face_of_dart[2 * emap[e] + (d & 1)]
        break
    return out, tuple(vmap), tuple(emap)


def _splice(rx: tuple[int, ...], ry: tuple[int, ...], e: int) -> tuple[int, ...]:
    """Rotation of the vertex obtained by contracting edge ``e`` between x and y."""
    i, j = rx.index(e), ry.index(e)
    return rx[i + 1:] + rx[:i] + ry[j + 1:] + ry[:j]


def _as_triangle(t: Union[Triangle, TriangleKind]) -> Triangle:
    return t.triangle if isinstance(t, TriangleKind) else t


def contract_triangle(
    g: CubicGraph, t: Union[Triangle, TriangleKind], *, allow_k4: bool = False
) -> tuple[CubicGraph, ContractTriangle]:
    """Shrink triangle ``t`` to one vertex carrying its three pendant edges.

    The triangle's outward neighbours must be pairwise distinct.  The one
    exception is K4 itself when ``allow_k4`` is set: its last triangle then
    contracts to the 2-vertex triple-edge graph.  ``make_triangle_free`` uses
    this when a batch of isolated triangles turns the graph into K4 midway.

    Raises:
        NotATriangle: ``t`` is not a 3-cycle of ``g``.
        NeighborsNotDistinct: outward neighbours coincide.
    """
    t = _as_triangle(t)
    v1, v2, v3 = t.vertices
    e12, e23, e31 = t.edges
    for e, (a, b) in zip(t.edges, ((v1, v2), (v2, v3), (v3, v1))):
        if not 0 <= e < g.m or set(g.edges[e]) != {a, b}:
            raise NotATriangle(f"edge {e} does not join {a} and {b}")
    if len(set(t.edges)) != 3:
        raise NotATriangle("triangle edges are not distinct")
    pend = []
    for v in t.vertices:
        rest = [e for e in g.incident(v) if e not in t.edges]
        if len(rest) != 1:
            raise NotATriangle(f"vertex {v} has {len(rest)} edges leaving the triangle")
        pend.append(rest[0])
    outward = [g.other(p, v) for p, v in zip(pend, t.vertices)]
    if any(w in t.vertices for w in outward):
        raise NeighborsNotDistinct(f"triangle {t.vertices} has a doubled edge")
    if len(set(outward)) != 3:
        if not (allow_k4 and is_k4(g)):
            raise NeighborsNotDistinct(f"outward neighbours {outward} of triangle {t.vertices} coincide")
    u = min(t.vertices)
    merged = _splice(g.rotation[v1], g.rotation[v2], e12)
    merged = _splice(merged, g.rotation[v3], e23)
    rot_u = tuple(e for e in merged if e != e31)
    new_ends = {}
    for p, v in zip(pend, t.vertices):
        if v != u:
            a, b = g.edges[p]
            new_ends[p] = (u, b) if a == v else (a, u)
    drop_v = set(t.vertices) - {u}
    out, vmap, emap = _rebuild(g, drop_v, set(t.edges), new_ends, {u: rot_u})
    old_ends = {e: g.edges[e] for e in (*t.edges, *new_ends)}
    old_rot = {v: g.rotation[v] for v in t.vertices}
    ev = ContractTriangle(vmap, emap, old_ends, old_rot, g.outer_face, u=vmap[u], triangle=t, pendants=tuple(pend))
    return out, ev


def reduce_twin(g: CubicGraph, twin: Twin) -> tuple[CubicGraph, ReduceTwin]:
    """Delete a twin gadget and join its two external neighbours by a new edge.

    The new edge reuses the smaller of the two external edge ids.

    Raises:
        V5EqualsV6: both external edges meet the same vertex (that vertex's
            third edge would be a bridge).
    """
    t = twin
    if t.v5 == t.v6:
        raise V5EqualsV6(f"external edges of the twin at {t.vertices} meet the same vertex {t.v5}")
    if t.v5 in t.vertices or t.v6 in t.vertices:
        raise ReductionError("twin gadget is the whole of K4")
    keep, drop = min(t.x1, t.x4), max(t.x1, t.x4)
    a, b = g.edges[keep]
    gadget_end = t.v1 if keep == t.x1 else t.v4
    far = t.v6 if keep == t.x1 else t.v5
    new_ends = {keep: (far, b) if a == gadget_end else (a, far)}
    # v5's slot for x1 and v6's slot for x4 both become the kept edge id
    rot = {}
    for v, x in ((t.v5, t.x1), (t.v6, t.x4)):
        rot[v] = tuple(keep if e == x else e for e in g.rotation[v])
    drop_e = set(t.internal_edges) | {drop}
    out, vmap, emap = _rebuild(g, set(t.vertices), drop_e, new_ends, rot)
    old_ends = {e: g.edges[e] for e in (*drop_e, keep)}
    old_rot = {v: g.rotation[v] for v in (*t.vertices, t.v5, t.v6)}
    ev = ReduceTwin(vmap, emap, old_ends, old_rot, g.outer_face, new_edge=emap[keep], twin=t)
    return out, ev


def make_triangle_free(g: CubicGraph) -> tuple[CubicGraph, ReductionTrace]:
    """Apply contractions and twin reductions until no 3-cycle is left.

    Each round classifies the current triangles.  All isolated triangles of
    the round are contracted in turn (each re-checked on the current graph);
    if there are none, the first twin is reduced.  Stops at a triangle-free
    graph, at K4, or at the triple-edge graph.
    """
    trace = ReductionTrace(original=g, reduced=g)
    while not (is_k4(g) or is_theta(g)):
        kinds = enumerate_triangles(g)
        if not kinds:
            break
        batch = [k.triangle for k in kinds if k.kind == ISOLATED]
        if batch:
            start_events = len(trace.events)
            for tri in batch:
                for ev in trace.events[start_events:]:
                    tri = _map_triangle(tri, ev)
                if not _still_isolated(g, tri):
                    continue
                g, ev = contract_triangle(g, tri, allow_k4=True)
                trace.events.append(ev)
            continue
        twins = find_twins(g)
        if not twins:
            break
        g, ev = reduce_twin(g, twins[0])
        trace.events.append(ev)
    trace.reduced = g
    return g, trace


def _map_triangle(t: Triangle, ev: _Event) -> Triangle:
    vs = tuple(ev.vertex_map[v] for v in t.vertices)
    es = tuple(ev.edge_map[e] for e in t.edges)
    return Triangle(vs, es)


def _still_isolated(g: CubicGraph, t: Triangle) -> bool:
    if min(t.vertices) < 0 or min(t.edges) < 0:
        return False
    if is_k4(g):
        return True
    return any(k.kind == ISOLATED and set(k.triangle.edges) == set(t.edges) for k in enumerate_triangles(g))


def reinsert(coloring: dict[int, int], trace: ReductionTrace) -> dict[int, int]:
    """Push a proper coloring of ``trace.reduced`` back to ``trace.original``.

    Raises:
        ImproperInput: the input coloring is not proper on the reduced graph.
    """
    if not verify(trace.reduced, coloring):
        raise ImproperInput("coloring of the reduced graph is not proper")
    c = dict(coloring)
    for ev in reversed(trace.events):
        c = ev.undo_coloring(c)
    return c


def expand_vertex_to_triangle(g: CubicGraph, v: int) -> CubicGraph:
    """Replace ``v`` by a triangle; exact inverse of :func:`contract_triangle`.

    ``v`` keeps its id and the first edge of its rotation; the other two
    incidences move to new vertices ``n`` and ``n+1``.  The triangle edges get
    ids ``m, m+1, m+2`` for ``v-n, n-(n+1), (n+1)-v``.
    """
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range 0..{g.n - 1}")
    n, m = g.n, g.m
    e0, e1, e2 = g.rotation[v]
    b, c = n, n + 1
    ab, bc, ca = m, m + 1, m + 2
    edges = list(g.edges)
    for e, w in ((e1, b), (e2, c)):
        x, y = edges[e]
        edges[e] = (w, y) if x == v else (x, w)
    edges += [(v, b), (b, c), (c, v)]
    rotation = list(g.rotation)
    rotation[v] = (e0, ab, ca)
    rotation += [(e1, bc, ab), (e2, ca, bc)]
    out = CubicGraph(n + 2, edges, rotation)
    out.outer_face = out.face_of_dart[g.faces[g.outer_face].darts[0]]
    return out


# signs and maturity -------------------------------------------------------------


class Maturity(str, Enum):
    MATURE = "mature"
    IMMATURE = "immature"


def vertex_maturity(g: PlaneGraph, v: int) -> Maturity:
    for t in find_triangles(g):
        if v in t.vertices:
            return Maturity.MATURE
    return Maturity.IMMATURE


def is_complete(g: PlaneGraph) -> bool:
    """Every vertex is a triangle corner."""
    corners = {v for t in find_triangles(g) for v in t.vertices}
    return len(corners) == g.n


def clockwise_edges(g: PlaneGraph, t: Triangle) -> tuple[int, int, int]:
    """Triangle edges in clockwise order around the bounded side of the cycle.

    Walking v1->v2->v3 is clockwise exactly when the outer face lies on the
    walker's left, i.e. is reachable in the dual from the face left of dart
    v1->v2 without crossing a triangle edge.
    """
    v1, v2, v3 = t.vertices
    e12, e23, e31 = t.edges
    start = g.face_of_dart[g.dart(e12, v1)]
    blocked = set(t.edges)
    seen = {start}
    queue = deque([start])
    while queue:
        f = queue.popleft()
        if f == g.outer_face:
            return (e12, e23, e31)
        for d in g.faces[f].darts:
            if d >> 1 in blocked:
                continue
            h = g.face_of_dart[d ^ 1]
            if h not in seen:
                seen.add(h)
                queue.append(h)
    return (e31, e23, e12)


_POSITIVE = {(1, 2, 3), (2, 3, 1), (3, 1, 2)}


def triangle_sign(c: dict[int, int], t: Triangle, g: PlaneGraph) -> int:
    """+1 when the colors read clockwise around ``t`` are a rotation of 1,2,3."""
    t = _as_triangle(t)
    cols = []
    for e in clockwise_edges(g, t):
        if e not in c:
            raise ImproperInput(f"triangle edge {e} is uncolored")
        cols.append(c[e])
    if sorted(cols) != [1, 2, 3]:
        raise ImproperInput(f"triangle {t.vertices} carries colors {cols}")
    return 1 if tuple(cols) in _POSITIVE else -1


def peeling_depths(g: PlaneGraph) -> list[int]:
    """Onion-layer index of each vertex: 0 on the outer face, then faces
    touching layer k contribute layer k+1."""
    depth = [-1] * g.n
    face_seen = {g.outer_face}
    frontier = [g.outer_face]
    k = 0
    while frontier:
        layer = {v for f in frontier for v in g.faces[f].vertices if depth[v] < 0}
        for v in layer:
            depth[v] = k
        nxt = []
        for f in g.faces:
            if f.id not in face_seen and any(v in layer for v in f.vertices):
                face_seen.add(f.id)
                nxt.append(f.id)
        frontier = nxt
        k += 1
    return depth


def shell_sign_report(g: PlaneGraph, c: dict[int, int]) -> dict[int, list[int]]:
    """Triangle signs grouped by the peeling depth of the triangle's shallowest corner.

    Diagnostic only: the alternating-shell pattern is measured, not assumed.
    """
    depth = peeling_depths(g)
    report: dict[int, list[int]] = {}
    for t in find_triangles(g):
        d = min(depth[v] for v in t.vertices)
        report.setdefault(d, []).append(triangle_sign(c, t, g))
    return dict(sorted(report.items()))
