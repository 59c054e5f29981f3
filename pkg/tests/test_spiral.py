from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from independent import eid
from spiralchain.generate import gen_random
from spiralchain.spiral import ACW, CW, build_comb, build_combs, build_decomposition, next_rightmost


def chains_of(dec):
    return [(ch.vertices, ch.edges, ch.segments) for ch in dec.chains]


def test_k4_pinned(k4):
    assert chains_of(build_decomposition(k4)) == [((0, 1, 2, 3), (0, 3, 5), (0, 3))]
    assert chains_of(build_decomposition(k4, direction=ACW)) == [((0, 2, 1, 3), (1, 3, 4), (0, 3))]


def test_prism_pinned(prism):
    # outer ring 0,1,2 clockwise, then the inner ring continues clockwise 5,3,4
    assert chains_of(build_decomposition(prism)) == [((0, 1, 2, 5, 3, 4), (0, 3, 5, 7, 6), (0, 3))]
    assert chains_of(build_decomposition(prism, direction=ACW)) == [((0, 2, 1, 4, 3, 5), (1, 3, 4, 6, 7), (0, 3))]


def test_twin_pair_pinned(twin_pair):
    dec = build_decomposition(twin_pair)
    assert [ch.vertices for ch in dec.chains] == [(0, 4, 6, 7, 3, 1, 2), (5,)]
    assert dec.chains[1].entry_edge == 7


@pytest.mark.parametrize(
    "name,direction,lengths",
    [
        ("tutte", CW, [30, 6, 1, 6, 1, 2]),
        ("tutte", ACW, [31, 5, 2, 5, 2, 1]),
        ("dodecahedron", CW, [20]),
        ("truncated_tetrahedron", CW, [10, 2]),
        ("cube", CW, [8]),
    ],
)
def test_chain_lengths_pinned(load, name, direction, lengths):
    g = load(name)
    dec = build_decomposition(g, direction=direction)
    assert [len(ch) for ch in dec.chains] == lengths
    assert sorted(dec.order) == list(range(g.n))


def test_next_rightmost_prism_rung(prism):
    e = next_rightmost(prism, 2, eid(prism, 1, 2), {0, 1, 2})
    assert e == eid(prism, 2, 5)


def test_next_rightmost_fresh_vertex(prism):
    # at a fresh vertex the clockwise-next edge after the arrival edge wins
    via = eid(prism, 0, 1)
    assert next_rightmost(prism, 1, via, {0, 1}) == prism.rot_next(1, via)


def test_next_rightmost_stuck(k4):
    assert next_rightmost(k4, 3, 5, {0, 1, 2, 3}) is None


def test_k4_comb(k4):
    comb = build_comb(k4, build_decomposition(k4).chains[0])
    a, b, c, d = comb.chain.vertices
    assert comb.backbone == (eid(k4, a, b), eid(k4, b, c), eid(k4, c, d))
    real_at_a = {h.edge for h in comb.hairs_at(a) if h.real}
    assert real_at_a == {eid(k4, a, c), eid(k4, a, d)}
    hair_edges = {h.edge for h in comb.hairs}
    assert hair_edges == {eid(k4, a, c), eid(k4, a, d), eid(k4, b, d)}


def test_prism_comb(prism):
    comb = build_combs(prism, build_decomposition(prism))[0]
    assert len(comb.backbone) == 5
    hair_edges = sorted({h.edge for h in comb.hairs})
    assert len(hair_edges) == 4
    assert Counter(h.edge for h in comb.hairs if h.real) == Counter(hair_edges)


def test_degenerate_chain_comb(twin_pair):
    dec = build_decomposition(twin_pair)
    comb = build_combs(twin_pair, dec)[1]
    assert comb.backbone == () and len(comb.hairs) == 3
    assert not any(h.real for h in comb.hairs)


def _check_decomposition(g, dec):
    assert sorted(dec.order) == list(range(g.n))
    backbone = Counter()
    for ch in dec.chains:
        assert len(set(ch.vertices)) == len(ch.vertices)
        assert len(ch.edges) == len(ch.vertices) - 1
        for i, e in enumerate(ch.edges):
            assert set(g.edges[e]) == {ch.vertices[i], ch.vertices[i + 1]}
        backbone.update(ch.edges)
        assert ch.segments[0] == 0 and list(ch.segments) == sorted(set(ch.segments))
    assert all(v == 1 for v in backbone.values())
    combs = build_combs(g, dec)
    real, imag = Counter(), Counter()
    for comb in combs:
        for h in comb.hairs:
            (real if h.real else imag)[h.edge] += 1
    for e in range(g.m):
        if e in backbone:
            assert real[e] == imag[e] == 0
        else:
            assert real[e] == 1 and imag[e] == 1


@given(st.integers(2, 25).map(lambda k: 2 * k), st.integers(0, 10_000), st.sampled_from([CW, ACW]), st.data())
def test_decomposition_properties(n, seed, direction, data):
    g = gen_random(n, seed)
    start = data.draw(st.sampled_from(g.outer_boundary()))
    dec = build_decomposition(g, start, direction)
    assert dec.chains[0].vertices[0] == start
    _check_decomposition(g, dec)
    assert chains_of(build_decomposition(g, start, direction)) == chains_of(dec)


@given(st.integers(2, 25).map(lambda k: 2 * k), st.integers(0, 10_000), st.sampled_from([CW, ACW]))
def test_closing_edge_not_in_first_segment(n, seed, direction):
    g = gen_random(n, seed)
    ring = g.outer_boundary()
    if direction == ACW:
        ring = [ring[0]] + ring[:0:-1]
    dec = build_decomposition(g, ring[0], direction)
    ch = dec.chains[0]
    first = ch.edges[: ch.segments[1] - 1] if len(ch.segments) > 1 else ch.edges
    closing = set(g.edges_between(ring[-1], ring[0]))
    assert not closing & set(first)
    # the first segment peels the outer ring in order
    assert list(ch.vertices[: len(ring)]) == ring


@pytest.mark.parametrize("name", ["k4", "prism", "cube", "twin_pair", "tutte", "dodecahedron"])
def test_corpus_decompositions(load, name):
    g = load(name)
    for d in (CW, ACW):
        for s in g.outer_boundary():
            _check_decomposition(g, build_decomposition(g, s, d))


def test_bad_arguments(k4):
    with pytest.raises(ValueError):
        build_decomposition(k4, direction="sideways")
    with pytest.raises(ValueError):
        build_decomposition(k4, start=9)
