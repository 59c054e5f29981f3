"""Spiral-chain 3-edge-coloring with Kempe-chain repair.

Colors are 1 (red), 2 (orange), 3 (green).  Each comb is walked in chain
order: the backbone alternates green/orange starting from green, hairs take
red when they can, and an edge with no legal color is unblocked by swapping
a two-colored Kempe component.  Components confined to the current comb are
tried first; one escalation to whole-graph components is allowed before the
step is declared exhausted.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Optional

from .errors import (
    NotHamiltonianCycle,
    OddCycle,
    ReductionError,
    SeedUncolored,
    SeedWrongColor,
    StepExhausted,
    Unsatisfiable,
)
from .graph import CubicGraph, Multigraph
from .oracle import COLORS, hamiltonian_cycle_edges, is_proper_partial, solve, verify
from .spiral import CW, Comb, SpiralDecomposition, build_combs, build_decomposition
from .triangles import find_triangles, make_triangle_free, reinsert

RED, ORANGE, GREEN = 1, 2, 3
COLOR_NAMES = {RED: "red", ORANGE: "orange", GREEN: "green"}

SUCCESS, FALLBACK, FAIL = "success", "fallback", "fail"


@dataclass(frozen=True)
class KempeComponent:
    pair: tuple[int, int]
    edges: tuple[int, ...]  # in path (or cycle) order
    cycle: bool


@dataclass
class ColorReport:
    outcome: str
    method: str
    kempe_switches: int = 0
    escalations: int = 0
    failure_vertex: Optional[int] = None
    failure_edge: Optional[int] = None
    reductions: int = 0
    switch_pairs: dict = field(default_factory=dict)
    decomposition: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class _Stats:
    switches: int = 0
    escalations: int = 0
    pairs: dict = field(default_factory=dict)


class _State:
    """Partial coloring with per-vertex color -> edge lookup."""

    def __init__(self, g: Multigraph, c: Optional[dict[int, int]] = None):
        self.g = g
        self.c: dict[int, int] = {}
        self.at: list[dict[int, int]] = [{} for _ in range(g.n)]
        for e, k in (c or {}).items():
            self.set(e, k)

    def set(self, e: int, k: int) -> None:
        a, b = self.g.edges[e]
        old = self.c.get(e)
        if old is not None:
            del self.at[a][old]
            del self.at[b][old]
        assert k not in self.at[a] and k not in self.at[b], f"color {k} clash on edge {e}"
        self.c[e] = k
        self.at[a][k] = e
        self.at[b][k] = e

    def legal(self, e: int) -> list[int]:
        a, b = self.g.edges[e]
        return [k for k in COLORS if k not in self.at[a] and k not in self.at[b]]

    def missing(self, v: int) -> list[int]:
        return [k for k in COLORS if k not in self.at[v]]

    def component(self, seed: int, pair: tuple[int, int]) -> KempeComponent:
        i, j = pair
        g, c, at = self.g, self.c, self.at

        def walk(v: int, e: int):
            out = []
            while True:
                nxt = at[v].get(j if c[e] == i else i)
                if nxt is None:
                    return out, False
                if nxt == seed:
                    return out, True
                out.append(nxt)
                v, e = g.other(nxt, v), nxt

        a, b = g.edges[seed]
        right, closed = walk(b, seed)
        if closed:
            return KempeComponent(pair, (seed, *right), True)
        left, _ = walk(a, seed)
        return KempeComponent(pair, (*reversed(left), seed, *right), False)

    def switch(self, comp: KempeComponent) -> None:
        i, j = comp.pair
        g = self.g
        for e in comp.edges:
            a, b = g.edges[e]
            k = self.c[e]
            del self.at[a][k]
            del self.at[b][k]
        for e in comp.edges:
            a, b = g.edges[e]
            k = j if self.c[e] == i else i
            self.c[e] = k
            self.at[a][k] = e
            self.at[b][k] = e

    def count_components(self, pair: tuple[int, int]) -> int:
        seen: set[int] = set()
        count = 0
        for e, k in self.c.items():
            if k in pair and e not in seen:
                seen.update(self.component(e, pair).edges)
                count += 1
        return count


# public Kempe operations ---------------------------------------------------------


def _pair(pair) -> tuple[int, int]:
    i, j = sorted(pair)
    if i == j or i not in COLORS or j not in COLORS:
        raise ValueError(f"bad color pair {pair}")
    return i, j


def kempe_component(g: Multigraph, c: dict[int, int], seed: int, pair) -> KempeComponent:
    """Maximal two-colored path or cycle through ``seed``.

    Raises:
        SeedUncolored, SeedWrongColor.
    """
    pair = _pair(pair)
    if seed not in c:
        raise SeedUncolored(f"edge {seed} has no color")
    if c[seed] not in pair:
        raise SeedWrongColor(f"edge {seed} has color {c[seed]}, not in {pair}")
    return _State(g, c).component(seed, pair)


def kempe_switch(c: dict[int, int], comp: KempeComponent) -> dict[int, int]:
    """Exchange the two colors of ``comp`` on exactly its edges."""
    i, j = comp.pair
    out = dict(c)
    for e in comp.edges:
        out[e] = j if c[e] == i else i
    return out


# comb coloring ---------------------------------------------------------------------


def _find_switch(st: _State, e: int, v: int, local: Optional[frozenset[int]]) -> Optional[KempeComponent]:
    """A Kempe component whose swap frees a color for ``e = (v, w)``.

    For c missing at v and b missing at w, swapping the (b, c) component at
    w's c-edge frees c at w, and swapping the one at v's b-edge frees b at v;
    either works unless the component links v and w.
    """
    g = st.g
    w = g.other(e, v)
    budgets: dict[tuple[int, int], int] = {}
    tried: dict[tuple[int, int], int] = {}
    for c in st.missing(v):
        for b in st.missing(w):
            if b == c:
                continue
            pair = _pair((b, c))
            for seed, blocker in ((st.at[w].get(c), st.at[v].get(b)), (st.at[v].get(b), st.at[w].get(c))):
                if seed is None:
                    continue
                if pair not in budgets:
                    budgets[pair] = st.count_components(pair)
                if tried.get(pair, 0) >= budgets[pair]:
                    continue
                tried[pair] = tried.get(pair, 0) + 1
                comp = st.component(seed, pair)
                if blocker is not None and blocker in comp.edges:
                    continue
                if local is not None and not local.issuperset(comp.edges):
                    continue
                return comp
    return None


def _assign(st: _State, e: int, v: int, prefs: tuple[int, ...], local, stats: _Stats, escalate: bool) -> None:
    legal = st.legal(e)
    for k in prefs:
        if k in legal:
            st.set(e, k)
            return
    scopes = (local, None) if escalate else (local,)
    for level, scope in enumerate(scopes):
        comp = _find_switch(st, e, v, scope)
        if comp is None:
            continue
        st.switch(comp)
        stats.switches += 1
        stats.escalations += level
        key = f"{comp.pair[0]}-{comp.pair[1]}"
        stats.pairs[key] = stats.pairs.get(key, 0) + 1
        legal = st.legal(e)
        for k in prefs:
            if k in legal:
                st.set(e, k)
                return
    raise StepExhausted(v, e)


def _color_comb(st: _State, comb: Comb, primary: int, stats: _Stats, escalate: bool) -> None:
    g = st.g
    secondary = ORANGE if primary == GREEN else GREEN
    local = comb.edge_set
    ch = comb.chain
    for i, v in enumerate(ch.vertices):
        arrival = ch.edges[i - 1] if i > 0 else ch.entry_edge
        if i < len(ch.edges):
            e = ch.edges[i]
            if e not in st.c:
                target = secondary if st.c.get(arrival) == primary else primary
                prefs = (target, secondary if target == primary else primary, RED)
                _assign(st, e, v, prefs, local, stats, escalate)
        for h in comb.hairs_at(v):
            if h.edge not in st.c:
                _assign(st, h.edge, v, (RED, ORANGE, GREEN), local, stats, escalate)
        for e in g.incident(v):
            if e not in st.c:
                _assign(st, e, v, (RED, ORANGE, GREEN), local, stats, escalate)


def color_comb(
    g: Multigraph,
    comb: Comb,
    coloring: Optional[dict[int, int]] = None,
    primary: int = GREEN,
    escalate: bool = True,
) -> dict[int, int]:
    """Color every edge at the vertices of one comb, extending ``coloring``.

    Raises:
        StepExhausted: no legal color even after Kempe repair.
    """
    st = _State(g, coloring)
    _color_comb(st, comb, primary, _Stats(), escalate)
    return st.c


def spiral_color(
    g: Multigraph,
    dec: SpiralDecomposition,
    combs: Optional[list[Comb]] = None,
    primary: int = GREEN,
    escalate: bool = True,
    stats: Optional[_Stats] = None,
) -> tuple[dict[int, int], _Stats]:
    """Color the combs of ``dec`` in chain order, green as primary for each.

    ``stats`` (if given) is updated in place, so counts survive a
    :class:`StepExhausted` escaping from here.
    """
    if combs is None:
        combs = build_combs(g, dec)  # type: ignore[arg-type]
    st = _State(g)
    stats = stats if stats is not None else _Stats()
    for comb in combs:
        _color_comb(st, comb, primary, stats, escalate)
    assert is_proper_partial(g, st.c)
    return st.c, stats


def extend_coloring(
    g: Multigraph,
    coloring: dict[int, int],
    edges: list[int],
    at: int,
    stats: Optional[_Stats] = None,
) -> dict[int, int]:
    """Greedily color ``edges`` (all incident to ``at``), one whole-graph
    Kempe repair allowed per edge.

    Raises:
        StepExhausted.
    """
    st = _State(g, coloring)
    stats = stats if stats is not None else _Stats()
    for e in edges:
        if e not in st.c:
            _assign(st, e, at, (RED, ORANGE, GREEN), None, stats, False)
    return st.c


def _fill(report: ColorReport, stats: _Stats) -> None:
    report.kempe_switches = stats.switches
    report.escalations = stats.escalations
    report.switch_pairs = dict(sorted(stats.pairs.items()))


def oracle_fallback(g: Multigraph) -> dict[int, int]:
    result = solve(g)
    if not result.colorable:
        raise Unsatisfiable(f"no proper 3-edge-coloring exists ({result.nodes_explored} nodes searched)")
    return result.witness


def color_graph(
    g: CubicGraph,
    start: Optional[int] = None,
    direction: str = CW,
    fallback: bool = True,
    reduce_triangles: bool = True,
) -> tuple[dict[int, int], ColorReport]:
    """Reduce triangles, spiral-color, reinsert, verify.

    ``start`` names a vertex of ``g``; after reduction its image is used.  If
    the spiral step is exhausted, the exhaustive solver colors ``g`` and the
    outcome is ``fallback`` (or ``fail`` with ``fallback=False``, returning an
    empty coloring).

    Raises:
        Unsatisfiable: only reachable through the fallback solver.
    """
    h, trace = g, None
    if reduce_triangles and find_triangles(g):
        try:
            h, trace = make_triangle_free(g)
        except ReductionError:
            h, trace = g, None
    if start is not None and trace is not None:
        start = trace.vertex_image(start)
    dec = build_decomposition(h, start, direction)
    report = ColorReport(
        outcome=SUCCESS,
        method="spiral",
        reductions=len(trace) if trace else 0,
        decomposition=dec.summary(),
    )
    stats = _Stats()
    try:
        ch, _ = spiral_color(h, dec, stats=stats)
    except StepExhausted as ex:
        _fill(report, stats)
        report.failure_vertex, report.failure_edge = ex.vertex, ex.edge
        if not fallback:
            report.outcome, report.method = FAIL, "spiral+kempe"
            return {}, report
        report.outcome, report.method = FALLBACK, "oracle"
        return oracle_fallback(g), report
    c = reinsert(ch, trace) if trace else ch
    _fill(report, stats)
    report.method = "spiral+kempe" if stats.switches else "spiral"
    if not verify(g, c):
        # the pipeline checks every step, so this means a bug, not a heuristic miss
        report.outcome = FAIL if not fallback else FALLBACK
        if fallback:
            report.method = "oracle"
            return oracle_fallback(g), report
        return {}, report
    return c, report


def hamiltonian_coloring(g: Multigraph, cycle: list[int]) -> dict[int, int]:
    """Cycle edges alternate 1, 2; every chord gets 3.

    Raises:
        NotHamiltonianCycle, OddCycle.
    """
    if len(cycle) % 2:
        raise OddCycle(f"cycle has odd length {len(cycle)}")
    path = hamiltonian_cycle_edges(g, list(cycle))
    c = {e: 1 + i % 2 for i, e in enumerate(path)}
    for e in range(g.m):
        c.setdefault(e, 3)
    if not verify(g, c):
        raise NotHamiltonianCycle("chords do not form a perfect matching")
    return c


__all__ = [
    "KempeComponent",
    "ColorReport",
    "kempe_component",
    "kempe_switch",
    "color_comb",
    "spiral_color",
    "extend_coloring",
    "color_graph",
    "hamiltonian_coloring",
    "SUCCESS",
    "FALLBACK",
    "FAIL",
]
