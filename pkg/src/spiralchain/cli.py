"""Command-line front end.

Graph arguments are file paths, ``-`` for stdin, or ``@name`` for a shipped
corpus graph.  Exit codes: 0 success, 1 invalid input, 2 not colorable or
verification failed, 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import corpus
from .coloring import FAIL, color_graph, hamiltonian_coloring
from .document import (
    parse_coloring,
    parse_document,
    parse_faces,
    parse_graph,
    serialize_coloring,
    serialize_faces,
    serialize_graph,
)
from .errors import (
    BadDeclaration,
    ColoringError,
    DocumentSyntaxError,
    GraphError,
    NotHamiltonianCycle,
    OddCycle,
    PartialColoring,
    ReductionError,
    Unsatisfiable,
)
from .export import export_dot
from .generate import gen_random
from .graph import CubicGraph
from .nonplanar import NearPlanarSpec, classify, color_nonplanar
from .oracle import edge_to_face, face_to_edge, find_hamiltonian_cycle, solve, verify
from .spiral import ACW, CW, build_decomposition
from .triangles import expand_vertex_to_triangle, make_triangle_free

EXIT_OK, EXIT_INPUT, EXIT_UNCOLORABLE, EXIT_INTERNAL = 0, 1, 2, 3


class _Uncolorable(Exception):
    pass


def _graph(arg: str):
    return parse_graph(corpus.read_input(arg))


def _planar(arg: str) -> CubicGraph:
    g = _graph(arg)
    if not isinstance(g, CubicGraph):
        raise BadDeclaration("this command needs a planar graph without apex/crossing declarations")
    return g


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# verbs ------------------------------------------------------------------------


def cmd_validate(a) -> int:
    text = corpus.read_input(a.graph)
    doc = parse_document(text)
    if doc.declares_nonplanar:
        cls = classify(NearPlanarSpec.from_document(doc))
        print(f"valid {cls.kind} n={doc.n} m={len(doc.edges)}")
        return EXIT_OK
    g = doc.cubic_graph()
    print(f"valid planar n={g.n} m={g.m} faces={len(g.faces)} outer={' '.join(map(str, g.outer_boundary()))}")
    return EXIT_OK


def cmd_decompose(a) -> int:
    g = _planar(a.graph)
    dec = build_decomposition(g, a.start, a.direction)
    if a.format == "json":
        payload = {
            **dec.summary(),
            "chains": [
                {"vertices": list(ch.vertices), "edges": list(ch.edges), "segments": list(ch.segments), "direction": ch.direction}
                for ch in dec.chains
            ],
        }
        _emit(json.dumps(payload, indent=2) + "\n", a.output)
    else:
        lines = [f"chain {i} {ch.direction} " + " ".join(map(str, ch.vertices)) for i, ch in enumerate(dec.chains)]
        _emit("\n".join(lines) + "\n", a.output)
    return EXIT_OK


def cmd_color(a) -> int:
    doc = parse_document(corpus.read_input(a.graph))
    fallback = not a.no_fallback
    if doc.declares_nonplanar or a.nonplanar:
        spec = NearPlanarSpec.from_document(doc)
        c, report = color_nonplanar(spec, a.start, a.direction, fallback=fallback)
        g = spec.multigraph()
        plane = None
    else:
        g = plane = doc.cubic_graph()
        c, report = color_graph(plane, a.start, a.direction, fallback=fallback)
    _emit(serialize_coloring(c, report, fmt=a.format), a.output)
    if a.figure and plane is not None:
        from .plotting import draw_graph

        draw_graph(plane, a.figure, c, build_decomposition(plane, a.start, a.direction), title=report.method)
    if report.outcome == FAIL or not c or not verify(g, c):
        return EXIT_UNCOLORABLE
    return EXIT_OK


def cmd_verify(a) -> int:
    g = parse_document(corpus.read_input(a.graph)).multigraph()
    c = parse_coloring(corpus.read_input(a.coloring))
    try:
        ok = verify(g, c)
    except PartialColoring as ex:
        print(f"invalid: {ex}")
        return EXIT_UNCOLORABLE
    print("proper" if ok else "improper")
    return EXIT_OK if ok else EXIT_UNCOLORABLE


def cmd_oracle(a) -> int:
    g = parse_document(corpus.read_input(a.graph)).multigraph()
    r = solve(g, "count" if a.mode == "count" else "witness")
    if a.mode == "count":
        print(f"count {r.count}")
        return EXIT_OK if r.count else EXIT_UNCOLORABLE
    if not r.colorable:
        print(f"unsatisfiable nodes={r.nodes_explored}")
        return EXIT_UNCOLORABLE
    _emit(serialize_coloring(r.witness, fmt=a.format), a.output)
    return EXIT_OK


def cmd_reduce(a) -> int:
    g = _planar(a.graph)
    h, trace = make_triangle_free(g)
    notes = [f"# {type(ev).__name__}" for ev in trace.events]
    _emit("\n".join(notes + [serialize_graph(h)]) if notes else serialize_graph(h), a.output)
    return EXIT_OK


def cmd_expand(a) -> int:
    g = _planar(a.graph)
    _emit(serialize_graph(expand_vertex_to_triangle(g, a.vertex)), a.output)
    return EXIT_OK


def cmd_tait(a) -> int:
    g = _planar(a.graph)
    if a.mode == "to-faces":
        _emit(serialize_faces(edge_to_face(g, parse_coloring(corpus.read_input(a.input)))), a.output)
    else:
        _emit(serialize_coloring(face_to_edge(g, parse_faces(corpus.read_input(a.input)))), a.output)
    return EXIT_OK


def cmd_hamilton(a) -> int:
    g = parse_document(corpus.read_input(a.graph)).multigraph()
    if a.cycle:
        cycle = [int(x) for x in a.cycle.split(",")]
    else:
        cycle = find_hamiltonian_cycle(g)
        if cycle is None:
            print("no hamiltonian cycle")
            return EXIT_UNCOLORABLE
    _emit(serialize_coloring(hamiltonian_coloring(g, cycle), fmt=a.format), a.output)
    return EXIT_OK


def cmd_gen(a) -> int:
    _emit(serialize_graph(gen_random(a.n, a.seed)), a.output)
    return EXIT_OK


def cmd_fuzz(a) -> int:
    from .fuzz import BOTH, fuzz, write_jsonl

    directions = BOTH if a.direction == "both" else (a.direction,)
    summary = fuzz(a.count, a.min_n, a.max_n, a.seed, a.starts, directions, not a.no_shrink, a.workers)
    if a.output:
        with open(a.output, "w") as fh:
            write_jsonl(summary, fh)
    else:
        write_jsonl(summary, sys.stdout)
    if a.archive:
        out = Path(a.archive)
        out.mkdir(parents=True, exist_ok=True)
        for rec in summary.records:
            if rec.shrunk is not None:
                (out / f"seed{rec.seed}_n{rec.n}.txt").write_text(rec.graph)
                (out / f"seed{rec.seed}_shrunk_n{rec.shrunk['n']}.txt").write_text(rec.shrunk["graph"])
    if a.figure:
        from .plotting import plot_fuzz

        plot_fuzz(summary, a.figure)
    print(json.dumps(summary.to_dict(), sort_keys=True), file=sys.stderr)
    return EXIT_OK if summary.all_verified else EXIT_UNCOLORABLE


def cmd_export_dot(a) -> int:
    g = _planar(a.graph)
    c = parse_coloring(corpus.read_input(a.coloring)) if a.coloring else None
    dec = build_decomposition(g, a.start, a.direction) if a.backbone else None
    _emit(export_dot(g, c, dec), a.output)
    return EXIT_OK


# parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="spiralchain", description="Spiral-chain 3-edge-coloring of cubic planar graphs.")
    sub = p.add_subparsers(dest="verb", required=True)

    def verb(name, fn, help_, graph=True):
        sp = sub.add_parser(name, help=help_)
        if graph:
            sp.add_argument("graph", help="graph document path, '-' for stdin, or @name for a corpus graph")
        sp.add_argument("-o", "--output", help="write to this file instead of stdout")
        sp.set_defaults(fn=fn)
        return sp

    def spiral_flags(sp):
        sp.add_argument("--start", type=int, default=None, help="first spiral vertex")
        sp.add_argument("--direction", choices=(CW, ACW), default=CW)

    def fmt(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")

    verb("validate", cmd_validate, "check a graph document")
    sp = verb("decompose", cmd_decompose, "print the spiral chains")
    spiral_flags(sp)
    fmt(sp)
    sp = verb("color", cmd_color, "3-edge-color a graph")
    spiral_flags(sp)
    fmt(sp)
    sp.add_argument("--no-fallback", action="store_true", help="report failure instead of calling the exhaustive solver")
    sp.add_argument("--nonplanar", action="store_true", help="route through the apex/doublecross path")
    sp.add_argument("--figure", help="also draw the colored graph to this image file")
    sp = verb("verify", cmd_verify, "check a coloring against a graph")
    sp.add_argument("coloring")
    sp = sub.add_parser("oracle", help="exhaustive solver")
    sp.add_argument("mode", choices=("solve", "count"))
    sp.add_argument("graph")
    sp.add_argument("-o", "--output")
    fmt(sp)
    sp.set_defaults(fn=cmd_oracle)
    verb("reduce", cmd_reduce, "contract triangles until triangle-free")
    sp = verb("expand", cmd_expand, "replace a vertex by a triangle")
    sp.add_argument("vertex", type=int)
    sp = sub.add_parser("tait", help="edge <-> face coloring")
    sp.add_argument("mode", choices=("to-faces", "to-edges"))
    sp.add_argument("graph")
    sp.add_argument("input", help="coloring (to-faces) or face coloring (to-edges)")
    sp.add_argument("-o", "--output")
    sp.set_defaults(fn=cmd_tait)
    sp = verb("hamilton", cmd_hamilton, "color from a hamiltonian cycle")
    sp.add_argument("--cycle", help="comma-separated vertex cycle; searched for when omitted")
    fmt(sp)
    sp = verb("gen", cmd_gen, "random cubic planar graph", graph=False)
    sp.add_argument("n", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp = verb("fuzz", cmd_fuzz, "randomized sweep, JSONL report", graph=False)
    sp.add_argument("--count", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--min-n", type=int, default=4)
    sp.add_argument("--max-n", type=int, default=60)
    sp.add_argument("--starts", type=int, default=1, help="outer-boundary start vertices per graph (0 = all)")
    sp.add_argument("--direction", choices=(CW, ACW, "both"), default="both")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--no-shrink", action="store_true")
    sp.add_argument("--archive", help="directory for graphs that needed the fallback")
    sp.add_argument("--figure", help="outcome-by-size figure")
    sp = verb("export-dot", cmd_export_dot, "Graphviz DOT text")
    sp.add_argument("--coloring")
    sp.add_argument("--backbone", action="store_true", help="mark spiral backbone edges bold")
    spiral_flags(sp)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (Unsatisfiable, NotHamiltonianCycle, OddCycle) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_UNCOLORABLE
    except (GraphError, DocumentSyntaxError, BadDeclaration, ReductionError, ColoringError, KeyError, OSError, ValueError) as ex:
        print(f"error: {type(ex).__name__}: {ex}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as ex:  # pragma: no cover - last resort
        print(f"internal error: {type(ex).__name__}: {ex}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
