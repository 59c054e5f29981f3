"""Embedded cubic multigraphs.

A graph is stored as a dense edge list (edge ids are list positions) plus a
rotation system: for every vertex the clockwise cyclic order of its incident
edge ids.  Edges carry their own ids so parallel edges are first class;
triangle contraction produces them routinely.

Darts (directed edge sides) are numbered ``2*e + s`` where ``s`` selects the
tail: dart ``2*e`` runs ``ends[e][0] -> ends[e][1]``.  Faces are traced with
``next(d) = rotation successor of reverse(d) at head(d)``, which keeps the
traced face on the left of each dart.  Bounded faces therefore come out
anticlockwise and the outer face clockwise.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import (
    BadRotation,
    Disconnected,
    HasBridge,
    HasLoop,
    NotCubic,
    NotGenusZero,
)

Edge = tuple[int, int]


@dataclass(frozen=True)
class Face:
    id: int
    darts: tuple[int, ...]
    boundary: tuple[tuple[int, int], ...]  # (vertex, edge) incidences in walk order

    @property
    def vertices(self) -> list[int]:
        return [v for v, _ in self.boundary]

    @property
    def edges(self) -> list[int]:
        return [e for _, e in self.boundary]

    def __len__(self) -> int:
        return len(self.darts)


class Multigraph:
    """Loopless multigraph with dense ids and no embedding."""

    def __init__(self, n: int, edges: Iterable[Sequence[int]]):
        edges = tuple((int(a), int(b)) for a, b in edges)
        if n < 0:
            raise ValueError("negative vertex count")
        inc: list[list[int]] = [[] for _ in range(n)]
        for e, (a, b) in enumerate(edges):
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge {e} has an endpoint outside 0..{n - 1}")
            if a == b:
                raise HasLoop(f"edge {e} is a loop at vertex {a}")
            inc[a].append(e)
            inc[b].append(e)
        self.n = n
        self.edges: tuple[Edge, ...] = edges
        self._incident = tuple(tuple(x) for x in inc)

    @property
    def m(self) -> int:
        return len(self.edges)

    def incident(self, v: int) -> tuple[int, ...]:
        """Edge ids at ``v`` in ascending order."""
        return self._incident[v]

    def degree(self, v: int) -> int:
        return len(self._incident[v])

    def other(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if a == v else a

    def neighbors(self, v: int) -> list[int]:
        return [self.other(e, v) for e in self._incident[v]]

    def edges_between(self, u: int, v: int) -> list[int]:
        return [e for e in self._incident[u] if self.other(e, u) == v]

    def is_connected(self) -> bool:
        return self.n == 0 or len(_reach(self, 0)) == self.n

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, m={self.m})"


def _reach(g: Multigraph, s: int, skip_edge: int = -1) -> set[int]:
    seen = {s}
    stack = [s]
    while stack:
        v = stack.pop()
        for e in g.incident(v):
            if e == skip_edge:
                continue
            w = g.other(e, v)
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def find_bridges(g: Multigraph) -> list[int]:
    """Ids of all cut-edges, found by an iterative low-link DFS.

    Parallel edges are told apart by id, so a doubled edge is never a bridge.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    bridges: list[int] = []
    t = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = t
        t += 1
        stack = [(root, -1, iter(g.incident(root)))]
        while stack:
            v, via, it = stack[-1]
            advanced = False
            for e in it:
                if e == via:
                    continue
                w = g.other(e, v)
                if disc[w] == -1:
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, e, iter(g.incident(w))))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                parent = stack[-1][0]
                low[parent] = min(low[parent], low[v])
                if low[v] > disc[parent]:
                    bridges.append(via)
    return sorted(bridges)


def is_bridgeless(g: Multigraph) -> bool:
    return not find_bridges(g)


class PlaneGraph(Multigraph):
    """Connected multigraph with a genus-0 rotation system.

    Vertex degrees are unconstrained here; :class:`CubicGraph` adds the
    3-regular and bridgeless requirements.  Degree-2 and degree-4 vertices
    show up when an apex vertex is deleted or crossings are planarized.
    """

    def __init__(
        self,
        n: int,
        edges: Iterable[Sequence[int]],
        rotation: Sequence[Sequence[int]],
        outer_face: Optional[int] = None,
        outer_hint: Optional[Sequence[int]] = None,
    ):
        super().__init__(n, edges)
        self._check_degrees()
        if len(rotation) != n:
            raise BadRotation(f"rotation lists {len(rotation)} vertices, expected {n}")
        rot = tuple(tuple(int(e) for e in r) for r in rotation)
        for v, r in enumerate(rot):
            if sorted(r) != list(self.incident(v)):
                raise BadRotation(
                    f"rotation at vertex {v} is {list(r)}, incident edges are {list(self.incident(v))}"
                )
        self.rotation = rot
        self._pos = tuple({e: i for i, e in enumerate(r)} for r in rot)
        if not self.is_connected():
            raise Disconnected("graph is not connected")
        self._check_structure()
        self.faces = self._trace_faces()
        if self.n - self.m + len(self.faces) != 2:
            raise NotGenusZero(
                f"rotation system has Euler characteristic {self.n - self.m + len(self.faces)}, not 2"
            )
        face_of = [0] * (2 * self.m)
        for f in self.faces:
            for d in f.darts:
                face_of[d] = f.id
        self.face_of_dart = tuple(face_of)
        if outer_face is not None:
            if not 0 <= outer_face < len(self.faces):
                raise ValueError(f"outer face {outer_face} does not exist")
            self.outer_face = outer_face
        elif outer_hint is not None:
            self.outer_face = self._match_face(outer_hint)
        else:
            self.outer_face = default_outer_face(self.faces)

    def _check_degrees(self) -> None:
        pass

    def _check_structure(self) -> None:
        pass

    # darts -----------------------------------------------------------------

    def tail(self, d: int) -> int:
        return self.edges[d >> 1][d & 1]

    def head(self, d: int) -> int:
        return self.edges[d >> 1][1 - (d & 1)]

    def dart(self, e: int, tail: int) -> int:
        return 2 * e + (0 if self.edges[e][0] == tail else 1)

    def rot_next(self, v: int, e: int, step: int = 1) -> int:
        """Edge ``step`` places clockwise after ``e`` in the rotation at ``v``."""
        r = self.rotation[v]
        return r[(self._pos[v][e] + step) % len(r)]

    def rot_index(self, v: int, e: int) -> int:
        return self._pos[v][e]

    def next_dart(self, d: int) -> int:
        v = self.head(d)
        return self.dart(self.rot_next(v, d >> 1), v)

    def _trace_faces(self) -> list[Face]:
        used = [False] * (2 * self.m)
        faces = []
        for start in range(2 * self.m):
            if used[start]:
                continue
            darts = []
            d = start
            while not used[d]:
                used[d] = True
                darts.append(d)
                d = self.next_dart(d)
            if d != start:
                raise BadRotation("face walk did not close")
            faces.append(
                Face(len(faces), tuple(darts), tuple((self.tail(x), x >> 1) for x in darts))
            )
        return faces

    def _match_face(self, hint: Sequence[int]) -> int:
        hint = [int(v) for v in hint]
        fallback = None
        for f in self.faces:
            cyc = f.vertices
            if len(cyc) != len(hint):
                continue
            if _cyclic_equal(cyc, hint):
                return f.id
            if fallback is None and _cyclic_equal(cyc[::-1], hint):
                fallback = f.id
        if fallback is None:
            raise ValueError(f"no face has boundary cycle {hint}")
        return fallback

    # faces -----------------------------------------------------------------

    def face_sides(self, e: int) -> tuple[int, int]:
        """Faces on the left of dart ``2e`` and of dart ``2e+1``."""
        return self.face_of_dart[2 * e], self.face_of_dart[2 * e + 1]

    def outer_boundary(self) -> list[int]:
        """Vertex cycle of the outer face, clockwise, starting at its smallest vertex."""
        cyc = self.faces[self.outer_face].vertices
        i = cyc.index(min(cyc))
        return cyc[i:] + cyc[:i]

    def outer_vertices(self) -> list[int]:
        return sorted(set(self.faces[self.outer_face].vertices))

    # identity --------------------------------------------------------------

    def canonical_key(self) -> tuple:
        rot = []
        for r in self.rotation:
            if r:
                i = r.index(min(r))
                r = r[i:] + r[:i]
            rot.append(r)
        return (self.n, self.edges, tuple(rot), self.outer_face)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlaneGraph):
            return NotImplemented
        return self.canonical_key() == other.canonical_key()

    def __hash__(self) -> int:
        return hash(self.canonical_key())

    def with_outer_face(self, face: int) -> "PlaneGraph":
        return type(self)(self.n, self.edges, self.rotation, outer_face=face)

    def mirrored(self) -> "PlaneGraph":
        """Same graph with every rotation reversed (the mirror-image drawing)."""
        g = type(self)(self.n, self.edges, [tuple(reversed(r)) for r in self.rotation])
        outer = self.faces[self.outer_face].vertices
        return g.with_outer_face(g._match_face(outer))


class CubicGraph(PlaneGraph):
    """3-regular, connected, bridgeless multigraph embedded in the plane."""

    def _check_degrees(self) -> None:
        for v in range(self.n):
            if self.degree(v) != 3:
                raise NotCubic(f"vertex {v} has degree {self.degree(v)}")

    def _check_structure(self) -> None:
        bridges = find_bridges(self)
        if bridges:
            raise HasBridge(f"edge {bridges[0]} is a bridge")


def _cyclic_equal(a: Sequence[int], b: Sequence[int]) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    n = len(a)
    for s in range(n):
        if all(a[(s + i) % n] == b[i] for i in range(n)):
            return True
    return False


def default_outer_face(faces: Sequence[Face]) -> int:
    """Longest face, lowest id on ties."""
    best = max(faces, key=lambda f: (len(f), -f.id))
    return best.id


def build_graph(
    edge_list: Iterable[Sequence[int]],
    rotation: Sequence[Sequence[int]],
    outer_face_hint: Optional[Sequence[int]] = None,
    n: Optional[int] = None,
) -> CubicGraph:
    """Validate an edge list plus rotation system and return a :class:`CubicGraph`.

    Args:
        edge_list: endpoint pairs; position in the list is the edge id.
        rotation: per vertex, the clockwise cyclic order of incident edge ids.
        outer_face_hint: vertex cycle naming the outer face.  Without it the
            longest face is used.
        n: vertex count; defaults to ``len(rotation)``.

    Raises:
        HasLoop, NotCubic, BadRotation, Disconnected, HasBridge, NotGenusZero.
    """
    edge_list = [tuple(e) for e in edge_list]
    if n is None:
        n = len(rotation)
    return CubicGraph(n, edge_list, rotation, outer_hint=outer_face_hint)


def trace_faces(g: PlaneGraph) -> list[Face]:
    return list(g.faces)


def outer_boundary(g: PlaneGraph) -> list[int]:
    return g.outer_boundary()


def bfs_order(g: Multigraph, root: int = 0) -> list[int]:
    """Edge ids in BFS discovery order from ``root``, lowest edge id first."""
    seen_v = {root}
    seen_e: set[int] = set()
    order = []
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for e in g.incident(v):
            if e in seen_e:
                continue
            seen_e.add(e)
            order.append(e)
            w = g.other(e, v)
            if w not in seen_v:
                seen_v.add(w)
                queue.append(w)
    for e in range(g.m):
        if e not in seen_e:
            order.append(e)
    return order
