"""Apex and doublecross cubic graphs.

Nothing is searched for: the document declares an apex vertex or up to two
crossing edge pairs, and :func:`classify` only verifies the declaration.

* Apex: deleting the apex leaves a plane graph (degree-2 vertices allowed).
  That part is spiral-colored, then the three apex edges are patched.
* Doublecross: each crossing becomes a degree-4 dummy vertex.  The spiral
  walk passes straight through dummies and flips its turning direction on
  every pass; colors land on the original edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .coloring import (
    FAIL,
    FALLBACK,
    SUCCESS,
    ColorReport,
    _fill,
    _Stats,
    color_graph,
    extend_coloring,
    oracle_fallback,
    spiral_color,
)
from .errors import BadDeclaration, GraphError, NotCubic, StepExhausted
from .graph import CubicGraph, Multigraph, PlaneGraph, find_bridges
from .oracle import verify
from .spiral import CW, SpiralChain, SpiralDecomposition, build_comb, build_decomposition

APEX = "apex"
DOUBLECROSS = "doublecross"
PLANAR = "planar"
UNSUPPORTED = "unsupported"

MAX_CROSSINGS = 2


@dataclass
class NearPlanarSpec:
    n: int
    edges: list[tuple[int, int]]
    rotation: list[Optional[list[int]]]
    apex: Optional[int] = None
    crossings: list[tuple[int, int]] = field(default_factory=list)
    outer: Optional[list[int]] = None

    @classmethod
    def from_document(cls, doc) -> "NearPlanarSpec":
        return cls(
            n=doc.n,
            edges=[tuple(e) for e in doc.edges],
            rotation=[None if r is None else list(r) for r in doc.rotation],
            apex=doc.apex,
            crossings=[tuple(c) for c in doc.crossings],
            outer=None if doc.outer is None else list(doc.outer),
        )

    @classmethod
    def from_graph(cls, g: PlaneGraph) -> "NearPlanarSpec":
        return cls(g.n, list(g.edges), [list(r) for r in g.rotation], outer=g.outer_boundary())

    def multigraph(self) -> Multigraph:
        return Multigraph(self.n, self.edges)


@dataclass
class Classification:
    kind: str
    graph: Optional[PlaneGraph] = None  # plane part: the graph itself, G minus apex, or the planarization
    vertex_map: tuple[int, ...] = ()  # plane-part vertex -> original vertex (apex route)
    edge_map: tuple[int, ...] = ()  # plane-part edge -> original edge
    dummies: tuple[int, ...] = ()
    reason: str = ""

    def __eq__(self, other: object) -> bool:
        if isinstance(other, str):
            return self.kind == other
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]


def _check_cubic(spec: NearPlanarSpec) -> Multigraph:
    g = spec.multigraph()
    for v in range(g.n):
        if g.degree(v) != 3:
            raise NotCubic(f"vertex {v} has degree {g.degree(v)}")
    if not g.is_connected():
        raise BadDeclaration("graph is not connected")
    return g


def _full_rotation(spec: NearPlanarSpec, skip: Optional[int] = None) -> list[list[int]]:
    out = []
    for v, r in enumerate(spec.rotation):
        if r is None and v != skip:
            raise BadDeclaration(f"no rotation given for vertex {v}")
        out.append(list(r or []))
    return out


def classify(spec: NearPlanarSpec) -> Classification:
    """Verify the declared structure and say which route colors it.

    Raises:
        BadDeclaration: apex plus crossings, malformed crossings, or a
            declared plane part that is not genus 0.
        NotCubic, HasLoop: the underlying graph is not cubic.
    """
    g = _check_cubic(spec)
    if spec.apex is not None and spec.crossings:
        raise BadDeclaration("apex and crossings cannot both be declared")
    if spec.apex is not None:
        return _classify_apex(spec, g)
    if spec.crossings:
        if len(spec.crossings) > MAX_CROSSINGS:
            return Classification(UNSUPPORTED, reason=f"{len(spec.crossings)} crossings declared")
        return _classify_doublecross(spec, g)
    try:
        rot = _full_rotation(spec)
        plane = CubicGraph(spec.n, spec.edges, rot, outer_hint=spec.outer)
    except (GraphError, BadDeclaration, ValueError) as ex:
        return Classification(UNSUPPORTED, reason=str(ex))
    return Classification(PLANAR, plane, tuple(range(spec.n)), tuple(range(plane.m)))


def _classify_apex(spec: NearPlanarSpec, g: Multigraph) -> Classification:
    v = spec.apex
    if not 0 <= v < spec.n:
        raise BadDeclaration(f"apex {v} is not a vertex")
    if find_bridges(g):
        raise BadDeclaration("graph has a bridge")
    rot = _full_rotation(spec, skip=v)
    keep_v = [u for u in range(spec.n) if u != v]
    vnew = {u: i for i, u in enumerate(keep_v)}
    keep_e = [e for e in range(g.m) if v not in g.edges[e]]
    enew = {e: i for i, e in enumerate(keep_e)}
    edges = [(vnew[g.edges[e][0]], vnew[g.edges[e][1]]) for e in keep_e]
    rotation = [[enew[e] for e in rot[u] if e in enew] for u in keep_v]
    try:
        plane = PlaneGraph(len(keep_v), edges, rotation)
    except GraphError as ex:
        raise BadDeclaration(f"graph minus apex {v} is not a valid plane graph: {ex}") from ex
    return Classification(APEX, plane, tuple(keep_v), tuple(keep_e))


def _classify_doublecross(spec: NearPlanarSpec, g: Multigraph) -> Classification:
    if find_bridges(g):
        raise BadDeclaration("graph has a bridge")
    used: set[int] = set()
    for e, f in spec.crossings:
        for x in (e, f):
            if not 0 <= x < g.m:
                raise BadDeclaration(f"crossing names unknown edge {x}")
            if x in used:
                raise BadDeclaration(f"edge {x} appears in two crossings")
            used.add(x)
        if set(g.edges[e]) & set(g.edges[f]):
            raise BadDeclaration(f"crossing edges {e} and {f} share an endpoint")
    rot = _full_rotation(spec)
    k = len(spec.crossings)
    last = None
    # each dummy has two cyclic orders consistent with a transversal crossing
    for mask in range(1 << k):
        try:
            return _planarize(spec, g, rot, mask)
        except (GraphError, BadDeclaration) as ex:
            last = ex
    raise BadDeclaration(f"no planarization of the declared crossings has genus 0: {last}")


def _planarize(spec: NearPlanarSpec, g: Multigraph, rot: list[list[int]], mask: int) -> Classification:
    edges = [tuple(x) for x in g.edges]
    rotation = [list(r) for r in rot]
    emap = list(range(g.m))
    dummies = []
    for i, (e, f) in enumerate(spec.crossings):
        x = spec.n + i
        dummies.append(x)
        rotation.append([])
        a, b = edges[e]
        c, d = edges[f]
        e2, f2 = len(edges), len(edges) + 1
        edges[e] = (a, x)
        edges.append((x, b))
        edges[f] = (c, x)
        edges.append((x, d))
        emap += [e, f]
        rotation[b] = [e2 if y == e else y for y in rotation[b]]
        rotation[d] = [f2 if y == f else y for y in rotation[d]]
        rotation[x] = [e, f, e2, f2] if not mask >> i & 1 else [e, f2, e2, f]
    plane = PlaneGraph(spec.n + len(dummies), edges, rotation)
    common = [fc for fc in plane.faces if all(x in fc.vertices for x in dummies)]
    if not common:
        raise BadDeclaration("crossings do not share a face")
    outer = max(common, key=lambda fc: (len(fc), -fc.id)).id
    plane = plane.with_outer_face(outer)
    return Classification(DOUBLECROSS, plane, tuple(range(spec.n)), tuple(emap), tuple(dummies))


# coloring -----------------------------------------------------------------------


class _OriginalView:
    """Rotation lookups on real vertices, expressed in original edge ids."""

    def __init__(self, plane: PlaneGraph, g: Multigraph, emap: tuple[int, ...], n: int):
        self.rotation = [tuple(emap[e] for e in plane.rotation[v]) for v in range(n)]
        self._pos = [{e: i for i, e in enumerate(r)} for r in self.rotation]
        self._g = g

    def rot_index(self, v: int, e: int) -> int:
        return self._pos[v][e]

    def other(self, e: int, v: int) -> int:
        return self._g.other(e, v)


def _map_chain(ch: SpiralChain, emap: tuple[int, ...]) -> SpiralChain:
    return SpiralChain(
        ch.vertices,
        tuple(emap[e] for e in ch.edges),
        ch.segments,
        ch.direction,
        None if ch.entry_edge is None else emap[ch.entry_edge],
    )


def color_nonplanar(
    spec: NearPlanarSpec,
    start: Optional[int] = None,
    direction: str = CW,
    fallback: bool = True,
) -> tuple[dict[int, int], ColorReport]:
    """Color a declared apex/doublecross graph, or a planar one via :func:`color_graph`.

    Results are verified on the original graph.  Unsupported specs go
    straight to the exhaustive solver when ``fallback`` is set.

    Raises:
        BadDeclaration, Unsatisfiable.
    """
    cls = classify(spec)
    g = spec.multigraph()
    if cls.kind == PLANAR:
        return color_graph(cls.graph, start=start, direction=direction, fallback=fallback)  # type: ignore[arg-type]
    if cls.kind == UNSUPPORTED:
        if not fallback:
            raise BadDeclaration(f"unsupported input: {cls.reason}")
        return oracle_fallback(g), ColorReport(outcome=FALLBACK, method="oracle")

    plane = cls.graph
    assert plane is not None
    if cls.kind == APEX:
        inv = {u: i for i, u in enumerate(cls.vertex_map)}
        pstart = None if start is None or start == spec.apex else inv[start]
        dec = build_decomposition(plane, pstart, direction)
    else:
        dec = build_decomposition(plane, start, direction, through=cls.dummies)
    report = ColorReport(outcome=SUCCESS, method="spiral", decomposition=dec.summary())

    stats = _Stats()
    try:
        if cls.kind == APEX:
            csub, _ = spiral_color(plane, dec, stats=stats)
            c = {cls.edge_map[e]: k for e, k in csub.items()}
            c = extend_coloring(g, c, sorted(g.incident(spec.apex)), spec.apex, stats)
        else:
            # dummies sit above every real id, so real vertex ids are unchanged
            view = _OriginalView(plane, g, cls.edge_map, spec.n)
            combs, seen = [], set()
            for ch in dec.chains:
                mc = _map_chain(ch, cls.edge_map)
                combs.append(build_comb(view, mc, seen))  # type: ignore[arg-type]
                seen.update(mc.vertices)
            mapped = SpiralDecomposition(tuple(cb.chain for cb in combs), dec.start, dec.direction, dec.switches)
            c, _ = spiral_color(g, mapped, combs, stats=stats)
    except StepExhausted as ex:
        _fill(report, stats)
        # apex-route failures inside the plane part use plane ids
        at_apex = cls.kind == APEX and ex.vertex == spec.apex and ex.edge in g.incident(spec.apex)
        report.failure_vertex = ex.vertex if cls.kind != APEX or at_apex else cls.vertex_map[ex.vertex]
        report.failure_edge = ex.edge if cls.kind != APEX or at_apex else cls.edge_map[ex.edge]
        if not fallback:
            report.outcome, report.method = FAIL, "spiral+kempe"
            return {}, report
        report.outcome, report.method = FALLBACK, "oracle"
        return oracle_fallback(g), report
    _fill(report, stats)
    report.method = "spiral+kempe" if stats.switches else "spiral"
    if not verify(g, c):
        report.outcome = FALLBACK if fallback else FAIL
        if fallback:
            report.method = "oracle"
            return oracle_fallback(g), report
        return {}, report
    return c, report


__all__ = [
    "NearPlanarSpec",
    "Classification",
    "classify",
    "color_nonplanar",
    "APEX",
    "DOUBLECROSS",
    "PLANAR",
    "UNSUPPORTED",
]
