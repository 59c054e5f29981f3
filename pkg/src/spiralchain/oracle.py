"""Ground truth: verification, exhaustive 3-edge-coloring, Hamiltonian
cycles, and the Tait correspondence between edge and face colorings.

Nothing here depends on the spiral machinery, so these routines can serve as
an independent check on it.
"""

from __future__ import annotations

import sys
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .errors import ImproperInput, PartialColoring
from .graph import Multigraph, PlaneGraph, bfs_order

COLORS = (1, 2, 3)


def is_proper_partial(g: Multigraph, c: dict[int, int]) -> bool:
    """Colored edges at every vertex carry distinct colors."""
    for v in range(g.n):
        seen = set()
        for e in g.incident(v):
            x = c.get(e)
            if x is None:
                continue
            if x in seen:
                return False
            seen.add(x)
    return True


def verify(g: Multigraph, c: dict[int, int]) -> bool:
    """True iff ``c`` is a proper 3-edge-coloring of ``g``.

    Raises:
        PartialColoring: some edge has no color.
    """
    missing = [e for e in range(g.m) if e not in c]
    if missing:
        raise PartialColoring(f"{len(missing)} edges uncolored, first {missing[0]}")
    if any(c[e] not in COLORS for e in range(g.m)):
        return False
    return is_proper_partial(g, c)


def color_classes_are_perfect_matchings(g: Multigraph, c: dict[int, int]) -> bool:
    """Independent restatement of :func:`verify` used by the tests."""
    for k in COLORS:
        covered = [0] * g.n
        for e in range(g.m):
            if c.get(e) == k:
                a, b = g.edges[e]
                covered[a] += 1
                covered[b] += 1
        if any(x != 1 for x in covered):
            return False
    return True


# exhaustive solver ------------------------------------------------------------


@dataclass
class SolveResult:
    colorable: bool
    witness: Optional[dict[int, int]] = None
    count: Optional[int] = None
    nodes_explored: int = 0

    @property
    def status(self) -> str:
        return "colorable" if self.colorable else "unsatisfiable"


def solve(g: Multigraph, mode: str = "witness") -> SolveResult:
    """Exhaustive backtracking 3-edge-coloring.

    Edges are assigned in BFS order from vertex 0 (lowest id first).  After
    each assignment every still-uncolored edge sharing an endpoint is
    forward-checked for a remaining legal color.  ``mode="count"`` enumerates
    every proper coloring.  Works on any loopless multigraph; planarity is
    not used.
    """
    if mode not in ("witness", "count"):
        raise ValueError(f"unknown mode {mode!r}")
    order = bfs_order(g)
    m = g.m
    # used[v] is a bitmask of colors present at v (bit k for color k)
    used = [0] * g.n
    color = [0] * m
    nbrs = []
    for e in range(m):
        a, b = g.edges[e]
        nbrs.append(sorted((set(g.incident(a)) | set(g.incident(b))) - {e}))
    nodes = 0
    count = 0
    witness = None
    counting = mode == "count"

    def free(e: int) -> int:
        a, b = g.edges[e]
        return 0b1110 & ~(used[a] | used[b])

    def rec(i: int) -> bool:
        nonlocal nodes, count, witness
        if i == m:
            count += 1
            if witness is None:
                witness = {e: color[e] for e in range(m)}
            return not counting
        e = order[i]
        a, b = g.edges[e]
        avail = free(e)
        for k in COLORS:
            if not avail >> k & 1:
                continue
            nodes += 1
            bit = 1 << k
            used[a] |= bit
            used[b] |= bit
            color[e] = k
            ok = all(color[f] or free(f) for f in nbrs[e])
            if ok and rec(i + 1):
                return True
            used[a] &= ~bit
            used[b] &= ~bit
            color[e] = 0
        return False

    limit = sys.getrecursionlimit()
    if m + 100 > limit:
        sys.setrecursionlimit(m + 100)
    try:
        rec(0)
    finally:
        sys.setrecursionlimit(limit)
    return SolveResult(
        colorable=witness is not None,
        witness=witness,
        count=count if counting else None,
        nodes_explored=nodes,
    )


def count_colorings(g: Multigraph) -> int:
    return solve(g, "count").count or 0


def is_uniquely_colorable(g: Multigraph) -> bool:
    """Exactly one coloring up to permuting the three colors (count == 6)."""
    return count_colorings(g) == 6


# Hamiltonian cycles -------------------------------------------------------------


def find_hamiltonian_cycle(g: Multigraph) -> Optional[list[int]]:
    """Vertex sequence of a Hamiltonian cycle, or ``None``.

    Searches over edge states (in/out of the cycle) with degree propagation:
    a vertex with two chosen edges excludes the rest, a vertex that can no
    longer reach degree 2 forces its remaining edges in, and any closed cycle
    shorter than ``n`` is pruned.
    """
    n, m = g.n, g.m
    if n == 0:
        return None
    if n == 1 or any(g.degree(v) < 2 for v in range(n)):
        return None
    UNK, IN, OUT = 0, 1, 2

    def propagate(state: list[int], queue: list[int]) -> bool:
        while queue:
            v = queue.pop()
            inc = g.incident(v)
            n_in = sum(1 for e in inc if state[e] == IN)
            unk = [e for e in inc if state[e] == UNK]
            if n_in > 2 or n_in + len(unk) < 2:
                return False
            if n_in == 2 and unk:
                for e in unk:
                    state[e] = OUT
                    queue.append(g.other(e, v))
            elif n_in + len(unk) == 2 and unk:
                for e in unk:
                    state[e] = IN
                    queue.append(g.other(e, v))
        return not _closes_short_cycle(g, state, IN)

    def rec(state: list[int]) -> Optional[list[int]]:
        try:
            e = state.index(UNK)
        except ValueError:
            return _cycle_from(g, state, IN) if _is_hamiltonian(g, state, IN) else None
        # prefer an undecided edge next to a vertex that already has a chosen edge
        for f in range(m):
            if state[f] == UNK and any(
                state[x] == IN for v in g.edges[f] for x in g.incident(v)
            ):
                e = f
                break
        for val in (IN, OUT):
            s = state[:]
            s[e] = val
            if propagate(s, list(g.edges[e])):
                found = rec(s)
                if found:
                    return found
        return None

    state = [UNK] * m
    if not propagate(state, list(range(n))):
        return None
    return rec(state)


def _closes_short_cycle(g: Multigraph, state: list[int], IN: int) -> bool:
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for e in range(g.m):
        if state[e] == IN:
            a, b = g.edges[e]
            adj[a].append(e)
            adj[b].append(e)
    seen = [False] * g.n
    for s in range(g.n):
        if seen[s] or len(adj[s]) != 2:
            continue
        # walk the component; a cycle means every vertex on it has degree 2
        length, closed = 0, True
        stack = [s]
        seen[s] = True
        while stack:
            v = stack.pop()
            length += 1
            if len(adj[v]) != 2:
                closed = False
            for e in adj[v]:
                w = g.other(e, v)
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        if closed and length < g.n:
            return True
    return False


def _is_hamiltonian(g: Multigraph, state: list[int], IN: int) -> bool:
    chosen = [e for e in range(g.m) if state[e] == IN]
    if len(chosen) != g.n:
        return False
    deg = [0] * g.n
    for e in chosen:
        a, b = g.edges[e]
        deg[a] += 1
        deg[b] += 1
    return all(d == 2 for d in deg) and not _closes_short_cycle(g, state, IN)


def _cycle_from(g: Multigraph, state: list[int], IN: int) -> list[int]:
    chosen = {e for e in range(g.m) if state[e] == IN}
    cycle = [0]
    prev_e = None
    v = 0
    while True:
        e = next(x for x in g.incident(v) if x in chosen and x != prev_e)
        w = g.other(e, v)
        if w == 0:
            return cycle
        cycle.append(w)
        prev_e, v = e, w


def hamiltonian_cycle_edges(g: Multigraph, cycle: list[int]) -> list[int]:
    """Edge ids along a vertex cycle; parallel edges resolved lowest-id first."""
    from .errors import NotHamiltonianCycle

    n = len(cycle)
    if n != g.n or sorted(cycle) != list(range(g.n)):
        raise NotHamiltonianCycle("cycle does not visit every vertex exactly once")
    used: set[int] = set()
    out = []
    for i in range(n):
        a, b = cycle[i], cycle[(i + 1) % n]
        cand = [e for e in g.edges_between(a, b) if e not in used]
        if not cand:
            raise NotHamiltonianCycle(f"{a} and {b} are not adjacent")
        used.add(cand[0])
        out.append(cand[0])
    return out


# Tait correspondence -----------------------------------------------------------
#
# Faces take values in the Klein four-group {0, a, b, ab} encoded as 0..3 with
# XOR as the group operation; color k maps to group element k (1=a, 2=b, 3=ab).


def edge_to_face(g: PlaneGraph, c: dict[int, int]) -> dict[int, int]:
    """Four-color the faces from a proper 3-edge-coloring.

    Walks a spanning tree of the dual from the outer face (value 0); crossing
    an edge of color k XORs in k.  Every dual edge is then re-checked.
    """
    if not verify(g, c):
        raise ImproperInput("edge coloring is not proper")
    value = {g.outer_face: 0}
    queue = deque([g.outer_face])
    while queue:
        f = queue.popleft()
        for d in g.faces[f].darts:
            other = g.face_of_dart[d ^ 1]
            if other not in value:
                value[other] = value[f] ^ c[d >> 1]
                queue.append(other)
    for e in range(g.m):
        f1, f2 = g.face_sides(e)
        if value[f1] ^ value[f2] != c[e]:
            raise ImproperInput(f"face values inconsistent across edge {e}")
    return value


def face_to_edge(g: PlaneGraph, f: dict[int, int]) -> dict[int, int]:
    """Inverse of :func:`edge_to_face`: each edge gets the XOR of its two faces."""
    c = {}
    for e in range(g.m):
        f1, f2 = g.face_sides(e)
        if f1 not in f or f2 not in f:
            raise ImproperInput(f"face coloring misses a face next to edge {e}")
        x = f[f1] ^ f[f2]
        if x == 0 or not (0 <= f[f1] <= 3 and 0 <= f[f2] <= 3):
            raise ImproperInput(f"faces {f1} and {f2} share edge {e} and are not distinct")
        c[e] = x
    return c


def is_proper_face_coloring(g: PlaneGraph, f: dict[int, int]) -> bool:
    for e in range(g.m):
        a, b = g.face_sides(e)
        if f[a] == f[b]:
            return False
    return all(0 <= v <= 3 for v in f.values())


__all__ = [
    "SolveResult",
    "verify",
    "is_proper_partial",
    "solve",
    "count_colorings",
    "is_uniquely_colorable",
    "find_hamiltonian_cycle",
    "hamiltonian_cycle_edges",
    "edge_to_face",
    "face_to_edge",
    "is_proper_face_coloring",
]
