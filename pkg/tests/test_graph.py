from __future__ import annotations

import itertools
from math import factorial

import pytest
from hypothesis import given, strategies as st

from graphcensus.graph import (
    AutomorphismInfo,
    Graph,
    automorphism_info,
    automorphisms,
    canonical_form,
    canonical_search,
    edge_count,
    graph_from_key,
)


def brute_iso(a: Graph, b: Graph) -> bool:
    if (a.directed, a.vertex_count) != (b.directed, b.vertex_count):
        return False
    n = a.vertex_count
    ma, mb = a.matrix, b.matrix
    return any(
        all(ma[p[u]][p[v]] == mb[u][v] for u in range(n) for v in range(n))
        for p in itertools.permutations(range(n))
    )


def brute_orbit(g: Graph) -> int:
    n = g.vertex_count
    m = g.matrix
    return len({tuple(tuple(m[p[u]][p[v]] for v in range(n)) for u in range(n)) for p in itertools.permutations(range(n))})


@st.composite
def graphs(draw, max_v: int = 6, max_e: int = 8):
    directed = draw(st.booleans())
    n = draw(st.integers(1, max_v))
    pairs = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=max_e))
    return Graph.from_edges(directed, n, pairs)


def test_edge_count_examples():
    assert edge_count(Graph.from_edges(False, 3, [])) == 0
    assert edge_count(Graph.from_edges(False, 1, [(0, 0)])) == 1
    assert edge_count(Graph.from_edges(False, 2, [(0, 1), (1, 0), (0, 0)])) == 3


def test_undirected_loop_stored_once_on_diagonal():
    g = Graph.from_edges(False, 2, [(1, 1), (1, 1), (0, 1)])
    assert g.matrix == ((0, 1), (1, 2))


def test_from_matrix_rejects_asymmetric_undirected():
    with pytest.raises(ValueError):
        Graph.from_matrix(False, [[0, 1], [0, 0]])


def test_path_center_position_does_not_change_key():
    center_first = Graph.from_edges(False, 3, [(0, 1), (0, 2)])
    center_last = Graph.from_edges(False, 3, [(0, 2), (1, 2)])
    assert canonical_form(center_first) == canonical_form(center_last)


def test_triangle_key_is_its_own_matrix():
    k3 = Graph.from_edges(False, 3, [(0, 1), (1, 2), (0, 2)])
    assert canonical_form(k3) == bytes([0, 3]) + bytes(x for row in k3.matrix for x in row)


def test_path_and_star_on_four_vertices_differ():
    path = Graph.from_edges(False, 4, [(0, 1), (1, 2), (2, 3)])
    star = Graph.from_edges(False, 4, [(0, 1), (0, 2), (0, 3)])
    assert canonical_form(path) != canonical_form(star)
    assert not brute_iso(path, star)


def test_automorphism_examples():
    assert automorphism_info(Graph.from_edges(False, 3, [(0, 1), (1, 2)])) == AutomorphismInfo(2, 3)
    assert automorphism_info(Graph.from_edges(False, 3, [(0, 1), (1, 2), (0, 2)])) == AutomorphismInfo(6, 1)
    assert automorphism_info(Graph.from_edges(True, 2, [(0, 1), (1, 0)])) == AutomorphismInfo(2, 1)


def test_automorphism_info_needs_a_vertex():
    with pytest.raises(ValueError):
        automorphism_info(Graph.from_edges(False, 0, []))


def test_empty_graph_has_empty_key():
    assert canonical_form(Graph.from_edges(False, 0, [])) == bytes([0, 0])


@pytest.mark.parametrize("n,expected", [(1, 1), (5, 120), (8, 40320), (10, 3628800)])
def test_large_symmetric_groups(n, expected):
    assert automorphism_info(Graph.from_edges(False, n, [])).aut_order == expected


def test_cycle_and_matching_groups():
    c10 = Graph.from_edges(False, 10, [(i, (i + 1) % 10) for i in range(10)])
    matching = Graph.from_edges(False, 10, [(2 * i, 2 * i + 1) for i in range(5)])
    assert automorphism_info(c10).aut_order == 20
    assert automorphism_info(matching).aut_order == 2 ** 5 * 120


def _all_small_graphs(directed: bool, n: int, e: int):
    slots = [(u, v) for u in range(n) for v in range(n) if directed or u <= v]
    for combo in itertools.combinations_with_replacement(slots, e):
        yield Graph.from_edges(directed, n, combo)


@pytest.mark.parametrize("directed,n,e", [(False, 3, 3), (False, 4, 3), (True, 3, 2), (True, 2, 3)])
def test_key_equality_matches_exhaustive_isomorphism(directed, n, e):
    gs = list(_all_small_graphs(directed, n, e))
    keys = [canonical_form(g) for g in gs]
    reps: list[Graph] = []
    rep_keys = []
    for g, k in zip(gs, keys):
        hits = [i for i, r in enumerate(reps) if brute_iso(g, r)]
        assert len(hits) <= 1
        if hits:
            assert rep_keys[hits[0]] == k
        else:
            assert k not in rep_keys
            reps.append(g)
            rep_keys.append(k)


@given(graphs(), st.randoms(use_true_random=False))
def test_relabel_invariance(g, rnd):
    perm = list(range(g.vertex_count))
    rnd.shuffle(perm)
    assert canonical_form(g.relabel(perm)) == canonical_form(g)


@given(graphs(max_v=5))
def test_orbit_weight_counts_distinct_matrices(g):
    info = automorphism_info(g)
    assert info.orbit_weight == brute_orbit(g)
    assert info.orbit_weight * info.aut_order == factorial(g.vertex_count)


@given(graphs(max_v=6))
def test_aut_order_matches_backtracking_oracle(g):
    assert automorphism_info(g).aut_order == sum(1 for _ in automorphisms(g))


@given(graphs())
def test_key_decodes_to_an_isomorphic_graph(g):
    key = canonical_form(g)
    h = graph_from_key(key)
    assert canonical_form(h) == key
    if g.vertex_count <= 5:
        assert brute_iso(g, h)


@given(graphs(max_v=6))
def test_search_generators_are_automorphisms(g):
    res = canonical_search(g.matrix, g.directed)
    m = g.matrix
    n = g.vertex_count
    for p in res.generators:
        assert all(m[p[u]][p[v]] == m[u][v] for u in range(n) for v in range(n))


def test_text_roundtrip():
    g = Graph.from_edges(False, 3, [(0, 1), (1, 2), (2, 2)])
    assert Graph.from_text(g.to_text()) == g
