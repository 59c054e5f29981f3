import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from independent import brute_bridges, euler_faces
from spiralchain import corpus
from spiralchain.errors import BadRotation, Disconnected, HasBridge, HasLoop, NotCubic, NotGenusZero
from spiralchain.generate import gen_random
from spiralchain.graph import CubicGraph, Multigraph, PlaneGraph, build_graph, find_bridges, is_bridgeless

K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
K4_ROT = [[0, 2, 1], [0, 3, 4], [3, 1, 5], [5, 2, 4]]


def test_k4_faces_and_edges():
    g = build_graph(K4_EDGES, K4_ROT)
    assert (g.m, len(g.faces)) == (6, 4)
    assert sorted(len(f) for f in g.faces) == [3, 3, 3, 3]


def test_prism_face_lengths(prism):
    assert sorted(len(f) for f in prism.faces) == [3, 3, 4, 4, 4]


def test_cube_face_lengths(load):
    assert [len(f) for f in load("cube").faces] == [4] * 6


def test_outer_boundary_from_hint(k4, prism, load):
    assert k4.outer_boundary() == [0, 1, 2]
    assert prism.outer_boundary() == [0, 1, 2]
    assert len(load("cube").outer_boundary()) == 4


def test_outer_hint_accepts_either_orientation():
    a = build_graph(K4_EDGES, K4_ROT, outer_face_hint=[0, 1, 2])
    b = build_graph(K4_EDGES, K4_ROT, outer_face_hint=[2, 1, 0])
    assert a.outer_face == b.outer_face


def test_default_outer_is_longest_face(load):
    g = load("pentagonal_prism")
    h = CubicGraph(g.n, g.edges, g.rotation)
    assert len(h.faces[h.outer_face]) == 5
    assert h.outer_face == min(f.id for f in h.faces if len(f) == 5)


def test_pendant_edge_not_cubic():
    with pytest.raises(NotCubic):
        build_graph(K4_EDGES + [(0, 4)], [[0, 2, 1, 6], [0, 3, 4], [3, 1, 5], [5, 2, 4], [6]])


def test_loop_rejected():
    with pytest.raises(HasLoop):
        Multigraph(2, [(0, 0), (0, 1)])


def test_disconnected_rejected():
    edges = K4_EDGES + [(a + 4, b + 4) for a, b in K4_EDGES]
    rot = K4_ROT + [[e + 6 for e in r] for r in K4_ROT]
    with pytest.raises(Disconnected):
        build_graph(edges, rot)


def test_bridge_rejected():
    # two 5-vertex blocks (K4 with one edge subdivided) joined at the subdivision vertices
    h = nx.Graph()
    for off in (0, 5):
        a, b, c, d, x = (off + i for i in range(5))
        h.add_edges_from([(a, b), (a, c), (b, c), (b, d), (c, d), (a, x), (d, x)])
    h.add_edge(4, 9)
    ok, emb = nx.check_planarity(h)
    assert ok
    edges = sorted(tuple(sorted(e)) for e in h.edges())
    ids = {frozenset(e): i for i, e in enumerate(edges)}
    rot = [[ids[frozenset((v, w))] for w in emb.neighbors_cw_order(v)] for v in range(10)]
    with pytest.raises(HasBridge):
        build_graph(edges, rot)
    assert find_bridges(Multigraph(10, edges)) == [ids[frozenset((4, 9))]]


def test_nonplanar_rotation_rejected():
    bad = [[0, 1, 2], [0, 3, 4], [3, 1, 5], [5, 4, 2]]  # one vertex flipped: genus 1
    with pytest.raises(NotGenusZero):
        build_graph(K4_EDGES, bad)


def test_rotation_mismatch_rejected():
    with pytest.raises(BadRotation):
        build_graph(K4_EDGES, [[0, 2, 1], [0, 3, 4], [3, 1, 5], [5, 2, 0]])


def test_parallel_edges_supported():
    g = PlaneGraph(2, [(0, 1), (0, 1), (0, 1)], [[0, 1, 2], [0, 2, 1]])
    assert len(g.faces) == 3
    assert is_bridgeless(g)


def test_petersen_document_not_planar():
    with pytest.raises(NotGenusZero):
        corpus.load_graph("petersen")


@pytest.mark.parametrize("name", corpus.PLANAR)
def test_corpus_invariants(load, name):
    g = load(name)
    assert g.n % 2 == 0 and g.m == 3 * g.n // 2
    assert g.n - g.m + len(g.faces) == 2
    assert len(g.faces) == euler_faces(g)
    darts = sorted(d for f in g.faces for d in f.darts)
    assert darts == list(range(2 * g.m))
    assert is_bridgeless(g) and brute_bridges(g) == []


def test_tutte_size(load):
    g = load("tutte")
    assert (g.n, g.m, len(g.faces)) == (46, 69, 25)


def test_twin_pair_bridgeless_by_networkx(twin_pair):
    h = nx.Graph(twin_pair.edges)
    assert not list(nx.bridges(h))


@given(st.integers(2, 12).map(lambda k: 2 * k), st.integers(0, 10_000))
def test_generated_graphs_valid(n, seed):
    g = gen_random(n, seed)
    assert g.n == n and g.m == 3 * n // 2
    assert g.n - g.m + len(g.faces) == 2
    assert len(g.faces) == euler_faces(g)
    assert brute_bridges(g) == []
    assert nx.check_planarity(nx.Graph(g.edges))[0]


@given(
    st.integers(3, 9),
    st.lists(st.tuples(st.integers(0, 8), st.integers(0, 8)), min_size=2, max_size=16),
)
def test_bridges_match_brute_force(n, pairs):
    edges = [(a % n, b % n) for a, b in pairs if a % n != b % n]
    g = Multigraph(n, edges)
    if not g.is_connected() or not edges:
        return
    assert sorted(find_bridges(g)) == brute_bridges(g)


def test_canonical_equality_ignores_rotation_start():
    a = build_graph(K4_EDGES, K4_ROT)
    b = build_graph(K4_EDGES, [r[1:] + r[:1] for r in K4_ROT])
    assert a == b and hash(a) == hash(b)


def test_mirror_reverses_rotations(k4):
    m = k4.mirrored()
    assert all(tuple(reversed(a)) == b for a, b in zip(k4.rotation, m.rotation))
    assert sorted(m.outer_vertices()) == sorted(k4.outer_vertices())
    assert m.mirrored() == k4


def test_face_sides_are_two_faces(load):
    g = load("dodecahedron")
    for e in range(g.m):
        a, b = g.face_sides(e)
        assert a != b
