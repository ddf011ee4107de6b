"""Graph construction, the bundled instance, DIMACS I/O, and generators."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from meyniel import (
    COUNTEREXAMPLE_LETTERS,
    DuplicateEdgeError,
    EdgeCountMismatchError,
    MalformedHeaderError,
    SelfLoopError,
    VertexOutOfRangeError,
    build_graph,
    counterexample_graph,
    emit_dimacs,
    gen_chordal,
    gen_random,
    induced_subgraph,
    is_meyniel,
    parse_dimacs,
)
from meyniel.graph import check_invariants

from oracles import random_graph


@st.composite
def graphs(draw, max_n: int = 9):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not pairs:
        return build_graph(n, [])
    edges = draw(st.lists(st.sampled_from(pairs), unique=True))
    return build_graph(n, edges)


def test_build_graph_basics():
    g = build_graph(4, [(2, 0), (1, 2), (3, 2)])
    assert g.n == 4 and g.m == 3
    assert g.adjacency == ((2,), (2,), (0, 1, 3), (2,))
    assert g.degree(2) == 3 and g.degree(0) == 1
    assert g.has_edge(0, 2) and g.has_edge(2, 0) and not g.has_edge(0, 1)
    assert list(g.edges()) == [(0, 2), (1, 2), (2, 3)]
    assert g.max_degree() == 3
    check_invariants(g)


def test_build_graph_empty():
    g = build_graph(0, [])
    assert g.n == 0 and g.m == 0 and g.max_degree() == 0
    assert list(g.edges()) == []


def test_build_graph_rejects_self_loop():
    with pytest.raises(SelfLoopError) as exc:
        build_graph(3, [(1, 1)])
    assert exc.value.vertex == 1


def test_build_graph_rejects_duplicates_both_orientations():
    with pytest.raises(DuplicateEdgeError):
        build_graph(3, [(0, 1), (0, 1)])
    with pytest.raises(DuplicateEdgeError) as exc:
        build_graph(3, [(0, 1), (1, 0)])
    assert exc.value.edge == (0, 1)


def test_build_graph_rejects_out_of_range():
    with pytest.raises(VertexOutOfRangeError):
        build_graph(3, [(0, 3)])
    with pytest.raises(VertexOutOfRangeError):
        build_graph(3, [(-1, 2)])
    with pytest.raises(ValueError):
        build_graph(-1, [])


def test_counterexample_shape():
    g = counterexample_graph()
    assert g.n == 10 and g.m == 15
    assert list(g.edges()) == [
        (0, 1), (0, 2), (1, 2), (2, 3), (2, 5), (2, 6), (3, 4), (4, 8),
        (4, 9), (5, 6), (5, 7), (6, 7), (7, 8), (7, 9), (8, 9),
    ]
    # letter c is vertex 2: the hub of the left half
    assert COUNTEREXAMPLE_LETTERS == "abcdefghij"
    assert g.adjacency[2] == (0, 1, 3, 5, 6)
    assert g.adjacency[1] == (0, 2)
    check_invariants(g)


def test_parse_dimacs_accepts_comments_and_blanks():
    text = "c a comment\n\np edge 3 2\nc another\ne 1 2\ne 2 3\n"
    g = parse_dimacs(text)
    assert g.n == 3 and g.m == 2
    assert list(g.edges()) == [(0, 1), (1, 2)]


def test_parse_dimacs_errors():
    with pytest.raises(MalformedHeaderError):
        parse_dimacs("e 1 2\n")  # edge before header
    with pytest.raises(MalformedHeaderError):
        parse_dimacs("p edge 3\n")  # short header
    with pytest.raises(MalformedHeaderError):
        parse_dimacs("p col 3 1\ne 1 2\n")
    with pytest.raises(MalformedHeaderError):
        parse_dimacs("p edge x y\n")
    with pytest.raises(MalformedHeaderError):
        parse_dimacs("p edge 3 1\np edge 3 1\ne 1 2\n")
    with pytest.raises(MalformedHeaderError):
        parse_dimacs("p edge 3 1\ne 1\n")
    with pytest.raises(MalformedHeaderError):
        parse_dimacs("p edge 3 1\nq 1 2\n")
    with pytest.raises(MalformedHeaderError):
        parse_dimacs("")
    with pytest.raises(EdgeCountMismatchError) as exc:
        parse_dimacs("p edge 3 2\ne 1 2\n")
    assert (exc.value.declared, exc.value.found) == (2, 1)
    with pytest.raises(VertexOutOfRangeError):
        parse_dimacs("p edge 3 1\ne 0 2\n")  # 1-indexed input
    with pytest.raises(VertexOutOfRangeError):
        parse_dimacs("p edge 3 1\ne 1 4\n")
    with pytest.raises(SelfLoopError):
        parse_dimacs("p edge 3 1\ne 2 2\n")
    with pytest.raises(DuplicateEdgeError):
        parse_dimacs("p edge 3 2\ne 1 2\ne 2 1\n")


def test_emit_dimacs_exact_text():
    g = build_graph(3, [(1, 2), (0, 2)])
    assert emit_dimacs(g) == "p edge 3 2\ne 1 3\ne 2 3\n"
    assert emit_dimacs(build_graph(2, [])) == "p edge 2 0\n"


def test_roundtrip_seeded_batch():
    rng = random.Random(2024)
    for _ in range(100):
        g = random_graph(rng, rng.randint(0, 12), rng.random())
        assert parse_dimacs(emit_dimacs(g)) == g


@given(graphs())
def test_roundtrip_property(g):
    back = parse_dimacs(emit_dimacs(g))
    assert back == g
    check_invariants(back)


def test_gen_random_extremes():
    assert gen_random(1, 8, 0.0).m == 0
    g = gen_random(1, 8, 1.0)
    assert g.m == 8 * 7 // 2
    assert gen_random(1, 0, 0.5).n == 0
    with pytest.raises(ValueError):
        gen_random(1, 5, 1.5)
    with pytest.raises(ValueError):
        gen_random(1, -1, 0.5)


def test_gen_random_deterministic_and_seed_sensitive():
    a = gen_random(77, 64, 0.2)
    b = gen_random(77, 64, 0.2)
    c = gen_random(78, 64, 0.2)
    assert a == b
    assert a != c
    check_invariants(a)


def test_gen_random_edge_count_tracks_p():
    # mean is p * C(n, 2); allow six standard deviations
    n, p = 400, 0.1
    pairs = n * (n - 1) // 2
    mean = p * pairs
    sd = (pairs * p * (1 - p)) ** 0.5
    m = gen_random(5, n, p).m
    assert abs(m - mean) < 6 * sd


def test_gen_random_skip_regime():
    # n above the pairwise limit exercises the gap-jumping path
    g = gen_random(3, 3000, 0.001)
    check_invariants(g)
    pairs = 3000 * 2999 // 2
    mean = 0.001 * pairs
    sd = (pairs * 0.001 * 0.999) ** 0.5
    assert abs(g.m - mean) < 6 * sd
    assert gen_random(3, 3000, 0.001) == g


def test_gen_chordal_small_and_meyniel():
    k3 = gen_chordal(1, 3, 4)
    assert list(k3.edges()) == [(0, 1), (0, 2), (1, 2)]
    assert gen_chordal(1, 0, 2).n == 0
    assert gen_chordal(1, 1, 2).m == 0
    for seed in range(8):
        g = gen_chordal(seed, 14, 3)
        check_invariants(g)
        assert g == gen_chordal(seed, 14, 3)
        assert is_meyniel(g).is_meyniel
    with pytest.raises(ValueError):
        gen_chordal(1, 5, 0)


def test_induced_subgraph_known():
    g = counterexample_graph()
    sub, remap = induced_subgraph(g, [9, 1, 2, 4, 6, 7])
    assert remap == {1: 0, 2: 1, 4: 2, 6: 3, 7: 4, 9: 5}
    assert list(sub.edges()) == [(0, 1), (1, 3), (2, 5), (3, 4), (4, 5)]
    check_invariants(sub)


def test_induced_subgraph_validates():
    g = counterexample_graph()
    with pytest.raises(VertexOutOfRangeError):
        induced_subgraph(g, [0, 10])
    empty, remap = induced_subgraph(g, [])
    assert empty.n == 0 and remap == {}


@settings(max_examples=60)
@given(graphs(), st.data())
def test_induced_subgraph_property(g, data):
    keep = data.draw(st.lists(st.integers(0, max(g.n - 1, 0)), unique=True)) if g.n else []
    sub, remap = induced_subgraph(g, keep)
    assert sub.n == len(set(keep))
    back = {new: old for old, new in remap.items()}
    for u, v in sub.edges():
        assert g.has_edge(back[u], back[v])
    kept = sorted(set(keep))
    for i, u in enumerate(kept):
        for v in kept[i + 1:]:
            assert g.has_edge(u, v) == sub.has_edge(remap[u], remap[v])
