"""Regenerate the shipped corpus documents under src/spiralchain/data/.

networkx supplies planar embeddings for the standard graphs; the K3,3
variants are drawn from explicit coordinates so the crossing is a real
crossing.  Run from the repository root:

    python scripts/make_corpus.py
"""

import math
from pathlib import Path

import networkx as nx

from spiralchain.document import GraphDocument, serialize_document
from spiralchain.graph import PlaneGraph

OUT = Path(__file__).resolve().parent.parent / "src" / "spiralchain" / "data"


def edge_ids(edges):
    return {frozenset(e): i for i, e in enumerate(edges)}


def embedded_doc(nxg, outer=None, header=""):
    nxg = nx.convert_node_labels_to_integers(nxg, ordering="sorted")
    edges = sorted(tuple(sorted(e)) for e in nxg.edges())
    ids = edge_ids(edges)
    ok, emb = nx.check_planarity(nxg)
    assert ok
    rotation = [[ids[frozenset((v, w))] for w in emb.neighbors_cw_order(v)] for v in range(len(nxg))]
    g = PlaneGraph(len(nxg), edges, rotation, outer_hint=outer)
    if outer is not None and g.faces[g.outer_face].vertices != _rot_to(g.faces[g.outer_face].vertices, outer):
        # traced against the hint's orientation: use the mirror drawing
        g = g.mirrored()
    doc = GraphDocument.from_graph(g, with_outer=outer is not None)
    return header + serialize_document(doc)


def _rot_to(cyc, hint):
    i = cyc.index(hint[0])
    rotated = cyc[i:] + cyc[:i]
    return rotated if rotated == list(hint) else None


def rotation_from_coords(n, edges, pos, direction=None):
    """Clockwise rotation from a straight-line drawing.

    ``direction`` overrides the drawing direction of an edge at an endpoint
    (used for edges routed around the outside).
    """
    direction = direction or {}
    rot = []
    for v in range(n):
        inc = []
        for e, (a, b) in enumerate(edges):
            if v not in (a, b):
                continue
            w = b if a == v else a
            ang = direction.get((e, v))
            if ang is None:
                ang = math.atan2(pos[w][1] - pos[v][1], pos[w][0] - pos[v][0])
            inc.append((-ang, e))  # decreasing angle = clockwise
        inc.sort()
        rot.append([e for _, e in inc])
    return rot


def k33_docs():
    # hexagon 0,3,1,4,2,5 clockwise from the top
    order = [0, 3, 1, 4, 2, 5]
    pos = {}
    for k, v in enumerate(order):
        ang = math.radians(90 - 60 * k)
        pos[v] = (math.cos(ang), math.sin(ang))
    edges = sorted((a, b) for a in (0, 1, 2) for b in (3, 4, 5))
    ids = edge_ids(edges)
    outside = ids[frozenset((2, 3))]
    radial = {(outside, v): math.atan2(pos[v][1], pos[v][0]) for v in (2, 3)}
    rot = rotation_from_coords(6, edges, pos, radial)
    cross = (ids[frozenset((0, 4))], ids[frozenset((1, 5))])
    dc = GraphDocument(6, edges, rot, crossings=[cross])
    # apex: embed K3,3 - 5 and hang vertex 5 off its three neighbours
    sub = nx.complete_bipartite_graph(3, 3)
    sub.remove_node(5)
    ok, emb = nx.check_planarity(sub)
    assert ok
    rot_a = []
    for v in range(6):
        if v == 5:
            rot_a.append([ids[frozenset((w, 5))] for w in (0, 1, 2)])
            continue
        r = [ids[frozenset((v, w))] for w in emb.neighbors_cw_order(v)]
        if v in (0, 1, 2):
            r.append(ids[frozenset((v, 5))])
        rot_a.append(r)
    ap = GraphDocument(6, edges, rot_a, apex=5)
    return (
        "# K3,3 with one declared crossing between edges 0-4 and 1-5\n" + serialize_document(dc),
        "# K3,3 with apex vertex 5\n" + serialize_document(ap),
    )


def twin_pair():
    # gadget A = 0,1,2,3 (missing 0-3), gadget B = 4,5,6,7 (missing 4-7), connectors 0-4, 3-7
    g = nx.Graph()
    g.add_edges_from([(0, 1), (1, 2), (1, 3), (0, 2), (2, 3)])
    g.add_edges_from([(4, 5), (5, 6), (5, 7), (4, 6), (6, 7)])
    g.add_edges_from([(0, 4), (3, 7)])
    return g


def petersen_doc():
    g = nx.petersen_graph()
    edges = sorted(tuple(sorted(e)) for e in g.edges())
    rot = [[i for i, e in enumerate(edges) if v in e] for v in range(10)]
    doc = GraphDocument(10, edges, rot)
    return "# Petersen graph: not planar, not 3-edge-colorable (negative control)\n" + serialize_document(doc)


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    docs = {
        "k4": embedded_doc(nx.complete_graph(4), outer=[0, 1, 2], header="# complete graph K4\n"),
        "prism": embedded_doc(
            nx.circular_ladder_graph(3), outer=[0, 1, 2], header="# triangular prism: outer 0,1,2, inner 3,4,5, rungs i-(i+3)\n"
        ),
        "cube": embedded_doc(nx.hypercube_graph(3), header="# cube Q3\n"),
        "pentagonal_prism": embedded_doc(
            nx.circular_ladder_graph(5), outer=[0, 1, 2, 3, 4], header="# pentagonal prism\n"
        ),
        "truncated_tetrahedron": embedded_doc(nx.truncated_tetrahedron_graph(), header="# truncated tetrahedron\n"),
        "dodecahedron": embedded_doc(nx.dodecahedral_graph(), header="# dodecahedron\n"),
        "twin_pair": embedded_doc(
            twin_pair(), header="# twin-pair graph: two K4-minus-an-edge gadgets joined by 0-4 and 3-7\n"
        ),
        "tutte": embedded_doc(nx.tutte_graph(), header="# Tutte graph (46 vertices, 69 edges, non-hamiltonian)\n"),
        "petersen": petersen_doc(),
    }
    docs["k33_doublecross"], docs["k33_apex"] = k33_docs()
    for name, text in docs.items():
        (OUT / f"{name}.txt").write_text(text)
        print("wrote", name)


if __name__ == "__main__":
    main()
