import pytest
from hypothesis import given
from hypothesis import strategies as st

from independent import count_colorings_linegraph, eid, is_proper
from spiralchain import corpus
from spiralchain.coloring import color_graph, hamiltonian_coloring
from spiralchain.errors import ImproperInput, PartialColoring
from spiralchain.generate import gen_random
from spiralchain.oracle import (
    color_classes_are_perfect_matchings,
    count_colorings,
    edge_to_face,
    face_to_edge,
    find_hamiltonian_cycle,
    is_proper_face_coloring,
    is_uniquely_colorable,
    solve,
    verify,
)
from spiralchain.triangles import expand_vertex_to_triangle

# counts cross-checked against tests/independent.py (line-graph vertex coloring)
COUNTS = {
    "k4": 6,
    "prism": 6,
    "cube": 24,
    "pentagonal_prism": 30,
    "truncated_tetrahedron": 6,
    "twin_pair": 12,
    "k33_apex": 12,
    "petersen": 0,
    "dodecahedron": 60,
}


def multigraph(name):
    return corpus.load_document(name).multigraph()


def prism_coloring(g):
    spec = {(0, 1): 1, (1, 2): 2, (0, 2): 3, (0, 3): 2, (1, 4): 3, (2, 5): 1, (3, 4): 1, (4, 5): 2, (3, 5): 3}
    return {eid(g, a, b): k for (a, b), k in spec.items()}


@pytest.mark.parametrize("name,count", sorted(COUNTS.items()))
def test_counts(name, count):
    g = multigraph(name)
    assert count_colorings(g) == count
    assert count % 6 == 0


@pytest.mark.parametrize("name", ["k4", "prism", "k33_apex", "twin_pair"])
def test_counts_match_independent(name):
    g = multigraph(name)
    assert count_colorings(g) == count_colorings_linegraph(g)


def test_node_counts_pinned():
    assert solve(multigraph("k4"), "count").nodes_explored == 33
    assert solve(multigraph("petersen")).nodes_explored == 261


def test_petersen_unsatisfiable():
    r = solve(multigraph("petersen"))
    assert not r.colorable and r.status == "unsatisfiable" and r.witness is None


def test_k33_colorable():
    g = multigraph("k33_apex")
    r = solve(g)
    assert r.colorable and verify(g, r.witness)


def test_uniqueness(k4, prism):
    assert is_uniquely_colorable(k4)
    assert is_uniquely_colorable(expand_vertex_to_triangle(k4, 0))
    assert is_uniquely_colorable(prism)
    assert not is_uniquely_colorable(multigraph("cube"))


def test_verify_examples(k4, prism):
    assert verify(prism, prism_coloring(prism))
    c, _ = color_graph(k4)
    assert verify(k4, c)
    bad = dict(c)
    e0, e1, _ = k4.incident(0)
    bad[e1] = bad[e0]
    assert not verify(k4, bad)
    with pytest.raises(PartialColoring):
        verify(k4, {0: 1})


@given(st.integers(2, 10).map(lambda k: 2 * k), st.integers(0, 3000))
def test_witness_verifies_and_matches_matching_view(n, seed):
    g = gen_random(n, seed)
    r = solve(g)
    assert r.colorable
    assert verify(g, r.witness)
    assert color_classes_are_perfect_matchings(g, r.witness)
    assert is_proper(g, r.witness)


@given(st.integers(2, 6).map(lambda k: 2 * k), st.integers(0, 3000), st.data())
def test_verify_agrees_with_matching_view(n, seed, data):
    g = gen_random(n, seed)
    c = {e: data.draw(st.integers(1, 3)) for e in range(g.m)}
    assert verify(g, c) == color_classes_are_perfect_matchings(g, c)


@given(st.integers(2, 5).map(lambda k: 2 * k), st.integers(0, 3000))
def test_count_divisible_by_six(n, seed):
    g = gen_random(n, seed)
    assert count_colorings(g) % 6 == 0


def test_hamiltonian_search(k4, prism, load):
    cyc = find_hamiltonian_cycle(k4)
    assert sorted(cyc) == [0, 1, 2, 3]
    assert len(find_hamiltonian_cycle(prism)) == 6
    assert find_hamiltonian_cycle(load("tutte")) is None


@given(st.integers(2, 10).map(lambda k: 2 * k), st.integers(0, 3000))
def test_hamiltonian_coloring_verifies(n, seed):
    g = gen_random(n, seed)
    cyc = find_hamiltonian_cycle(g)
    if cyc is not None:
        assert verify(g, hamiltonian_coloring(g, cyc))


def test_tait_k4(k4):
    c, _ = color_graph(k4)
    f = edge_to_face(k4, c)
    assert sorted(f.values()) == [0, 1, 2, 3]
    assert f[k4.outer_face] == 0
    assert face_to_edge(k4, f) == c


def test_tait_prism(prism):
    c = prism_coloring(prism)
    f = edge_to_face(prism, c)
    assert len(f) == 5 and is_proper_face_coloring(prism, f)
    assert face_to_edge(prism, f) == c


def test_tait_rejects_improper(k4, prism):
    with pytest.raises(ImproperInput):
        edge_to_face(prism, {e: 1 for e in range(prism.m)})
    f = {face.id: 0 for face in k4.faces}
    with pytest.raises(ImproperInput):
        face_to_edge(k4, f)


def test_face_klein_values_recover_forced_k4(k4):
    # faces (0, a, b, ab): the outer face gets 0, the rest any assignment of a, b, ab
    inner = [f.id for f in k4.faces if f.id != k4.outer_face]
    f = {k4.outer_face: 0, inner[0]: 1, inner[1]: 2, inner[2]: 3}
    c = face_to_edge(k4, f)
    assert verify(k4, c)
    assert edge_to_face(k4, c) == f


@given(st.integers(2, 15).map(lambda k: 2 * k), st.integers(0, 3000))
def test_tait_round_trip(n, seed):
    g = gen_random(n, seed)
    c, _ = color_graph(g)
    f = edge_to_face(g, c)
    assert is_proper_face_coloring(g, f)
    assert face_to_edge(g, f) == c
