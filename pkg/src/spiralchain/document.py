"""Line-oriented text formats for graphs, colorings and face colorings.

Graph document (``cubic-embedding-v1``)::

    format cubic-embedding-v1
    vertices 4
    edge 0 0 1
    ...
    rotation 0 0 2 1        # vertex, then clockwise edge ids
    ...
    outer 0 1 2             # optional outer-face vertex cycle
    apex 3                  # optional
    crossing 1 4            # optional, at most two lines

Blank lines and ``#`` comments are ignored.  Serialization writes the
fields in exactly the order above, one space between tokens.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Optional, Union

from .errors import BadRotation, DocumentSyntaxError, GraphError
from .graph import CubicGraph, Multigraph, PlaneGraph

if TYPE_CHECKING:
    from .nonplanar import NearPlanarSpec

GRAPH_FORMAT = "cubic-embedding-v1"
COLORING_FORMAT = "edge-coloring-v1"
FACES_FORMAT = "face-coloring-v1"


@dataclass
class GraphDocument:
    n: int
    edges: list[tuple[int, int]]
    rotation: list[Optional[list[int]]]
    outer: Optional[list[int]] = None
    apex: Optional[int] = None
    crossings: list[tuple[int, int]] = field(default_factory=list)

    @property
    def declares_nonplanar(self) -> bool:
        return self.apex is not None or bool(self.crossings)

    def multigraph(self) -> Multigraph:
        return Multigraph(self.n, self.edges)

    def full_rotation(self) -> list[list[int]]:
        for v, r in enumerate(self.rotation):
            if r is None:
                raise BadRotation(f"no rotation given for vertex {v}")
        return [list(r) for r in self.rotation]  # type: ignore[arg-type]

    def cubic_graph(self) -> CubicGraph:
        return CubicGraph(self.n, self.edges, self.full_rotation(), outer_hint=self.outer)

    @classmethod
    def from_graph(cls, g: PlaneGraph, *, with_outer: bool = True) -> "GraphDocument":
        return cls(
            n=g.n,
            edges=list(g.edges),
            rotation=[list(r) for r in g.rotation],
            outer=g.outer_boundary() if with_outer else None,
        )


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise DocumentSyntaxError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_document(text: str) -> GraphDocument:
    """Syntax-level parse; structure is validated later by :func:`parse_graph`."""
    n = None
    edges: dict[int, tuple[int, int]] = {}
    rotation: dict[int, list[int]] = {}
    outer = apex = None
    crossings: list[tuple[int, int]] = []
    seen_format = False
    for lineno, tok in _lines(text):
        key, args = tok[0], tok[1:]
        if key == "format":
            if args != [GRAPH_FORMAT]:
                raise DocumentSyntaxError(f"unsupported format {' '.join(args)!r}", lineno)
            seen_format = True
        elif key == "vertices":
            (n,) = _exact(args, 1, lineno)
        elif key == "edge":
            eid, a, b = _exact(args, 3, lineno)
            if eid in edges:
                raise DocumentSyntaxError(f"edge {eid} defined twice", lineno)
            edges[eid] = (a, b)
        elif key == "rotation":
            vals = _ints(args, lineno)
            if len(vals) < 2:
                raise DocumentSyntaxError("rotation needs a vertex and its edges", lineno)
            if vals[0] in rotation:
                raise DocumentSyntaxError(f"rotation for vertex {vals[0]} given twice", lineno)
            rotation[vals[0]] = vals[1:]
        elif key == "outer":
            outer = _ints(args, lineno)
        elif key == "apex":
            (apex,) = _exact(args, 1, lineno)
        elif key == "crossing":
            a, b = _exact(args, 2, lineno)
            crossings.append((a, b))
        else:
            raise DocumentSyntaxError(f"unknown field {key!r}", lineno)
    if not seen_format:
        raise DocumentSyntaxError("missing 'format' line")
    if n is None:
        raise DocumentSyntaxError("missing 'vertices' line")
    if sorted(edges) != list(range(len(edges))):
        raise DocumentSyntaxError("edge ids must be dense from 0")
    for v in rotation:
        if not 0 <= v < n:
            raise DocumentSyntaxError(f"rotation for unknown vertex {v}")
    return GraphDocument(
        n=n,
        edges=[edges[i] for i in range(len(edges))],
        rotation=[rotation.get(v) for v in range(n)],
        outer=outer,
        apex=apex,
        crossings=crossings,
    )


def _exact(args: list[str], k: int, lineno: int) -> list[int]:
    if len(args) != k:
        raise DocumentSyntaxError(f"expected {k} values, got {len(args)}", lineno)
    return _ints(args, lineno)


def serialize_document(doc: GraphDocument) -> str:
    out = [f"format {GRAPH_FORMAT}", f"vertices {doc.n}"]
    out += [f"edge {i} {a} {b}" for i, (a, b) in enumerate(doc.edges)]
    for v, r in enumerate(doc.rotation):
        if r is not None:
            out.append("rotation " + " ".join(str(x) for x in [v, *r]))
    if doc.outer is not None:
        out.append("outer " + " ".join(map(str, doc.outer)))
    if doc.apex is not None:
        out.append(f"apex {doc.apex}")
    out += [f"crossing {a} {b}" for a, b in doc.crossings]
    return "\n".join(out) + "\n"


def serialize_graph(g: PlaneGraph) -> str:
    return serialize_document(GraphDocument.from_graph(g))


def parse_graph(text: str) -> Union[CubicGraph, NearPlanarSpec]:
    """Parse and validate a graph document.

    Documents without apex/crossing declarations become a :class:`CubicGraph`;
    the rest become a :class:`~spiralchain.nonplanar.NearPlanarSpec` whose
    declaration has been checked by ``classify``.
    """
    doc = parse_document(text)
    if doc.declares_nonplanar:
        from .nonplanar import NearPlanarSpec, classify

        spec = NearPlanarSpec.from_document(doc)
        classify(spec)
        return spec
    return doc.cubic_graph()


# colorings -------------------------------------------------------------------


def serialize_coloring(coloring: dict[int, int], report=None, fmt: str = "text") -> str:
    if fmt == "json":
        payload = {"format": COLORING_FORMAT, "colors": {str(e): c for e, c in sorted(coloring.items())}}
        if report is not None:
            payload["report"] = report.to_dict()
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    out = [f"format {COLORING_FORMAT}"]
    if report is not None:
        for k, v in report.to_dict().items():
            out.append(f"{k} {json.dumps(v, sort_keys=True, separators=(',', ':'))}")
    out += [f"color {e} {c}" for e, c in sorted(coloring.items())]
    return "\n".join(out) + "\n"


def parse_coloring(text: str) -> dict[int, int]:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        payload = json.loads(stripped)
        return {int(e): int(c) for e, c in payload["colors"].items()}
    coloring = {}
    for lineno, tok in _lines(text):
        if tok[0] == "color":
            e, c = _exact(tok[1:], 2, lineno)
            if c not in (1, 2, 3):
                raise DocumentSyntaxError(f"color {c} outside 1..3", lineno)
            coloring[e] = c
        elif tok[0] == "format" and tok[1:] != [COLORING_FORMAT]:
            raise DocumentSyntaxError(f"unsupported format {' '.join(tok[1:])!r}", lineno)
    return coloring


def serialize_faces(faces: dict[int, int]) -> str:
    out = [f"format {FACES_FORMAT}"] + [f"face {f} {v}" for f, v in sorted(faces.items())]
    return "\n".join(out) + "\n"


def parse_faces(text: str) -> dict[int, int]:
    faces = {}
    for lineno, tok in _lines(text):
        if tok[0] == "face":
            f, v = _exact(tok[1:], 2, lineno)
            faces[f] = v
        elif tok[0] == "format" and tok[1:] != [FACES_FORMAT]:
            raise DocumentSyntaxError(f"unsupported format {' '.join(tok[1:])!r}", lineno)
    return faces


__all__ = [
    "GraphDocument",
    "GraphError",
    "parse_document",
    "parse_graph",
    "serialize_document",
    "serialize_graph",
    "serialize_coloring",
    "parse_coloring",
    "serialize_faces",
    "parse_faces",
]
