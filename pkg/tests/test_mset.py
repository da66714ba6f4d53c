from __future__ import annotations

import itertools
from math import comb

import pytest
from hypothesis import given, strategies as st

from graphcensus.census import count_cell
from graphcensus.mset import (
    MissingCell,
    PairTable,
    connected_from_totals,
    graph_base,
    k_component_table,
    multiset_coefficient,
    multiset_transform,
    pair_multisets,
    partitions_into,
    total_over_components,
)


def brute_pair_multisets(e_total, v_total, k):
    out = set()
    for es in itertools.product(range(e_total + 1), repeat=k):
        if sum(es) != e_total:
            continue
        for vs in itertools.product(range(1, v_total + 1), repeat=k):
            if sum(vs) == v_total:
                out.add(tuple(sorted(zip(es, vs), reverse=True)))
    return out


def flatten(ms):
    return tuple(p for p, f in ms for _ in range(f))


def test_multiset_coefficient_examples():
    assert all(multiset_coefficient(1, m) == 1 for m in range(10))
    assert all(multiset_coefficient(n, 2) == n + comb(n, 2) for n in range(10))
    assert multiset_coefficient(0, 0) == 1 and multiset_coefficient(0, 3) == 0


def test_multiset_coefficient_by_enumeration():
    assert multiset_coefficient(3, 4) == len(list(itertools.combinations_with_replacement(range(3), 4))) == 15


def test_multiset_coefficient_identity():
    for n in range(1, 31):
        for m in range(1, 31):
            assert multiset_coefficient(n, m) == sum(comb(n, j) * comb(m - 1, j - 1) for j in range(1, m + 1))


def test_fruit_triangle():
    t = [1, 3, 1, 0, 1, 0, 0, 0, 0]
    tri = multiset_transform(t, 8, 8)
    assert tri[(3, 3)] == 10 and tri[(3, 2)] == 3 and tri[(6, 2)] == 1
    assert [sum(tri[(n, k)] for k in range(1, n + 1)) for n in range(1, 9)] == [3, 7, 13, 23, 37, 57, 83, 118]


def test_all_ones_gives_partition_triangle():
    tri = multiset_transform([1] * 21, 20, 20)
    for n in range(1, 21):
        for k in range(1, n + 1):
            assert tri[(n, k)] == len(list(partitions_into(n, k)))
    partition_numbers = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627]
    assert [sum(tri[(n, k)] for k in range(1, n + 1)) for n in range(1, 21)] == partition_numbers


def test_pair_multisets_examples():
    got = pair_multisets(2, 3, 3)
    assert {flatten(m) for m in got} == {((2, 1), (0, 1), (0, 1)), ((1, 1), (1, 1), (0, 1))}
    assert pair_multisets(0, 4, 4) == [(((0, 1), 4),)]
    assert pair_multisets(3, 1, 2) == []
    assert [flatten(m) for m in pair_multisets(3, 4, 2)] == [
        ((3, 3), (0, 1)), ((3, 2), (0, 2)), ((3, 1), (0, 3)),
        ((2, 3), (1, 1)), ((2, 2), (1, 2)), ((2, 1), (1, 3)),
    ]


@given(st.integers(0, 5), st.integers(1, 6), st.integers(1, 4))
def test_pair_multisets_match_brute_force(e, v, k):
    got = pair_multisets(e, v, k)
    flat = [flatten(m) for m in got]
    assert len(flat) == len(set(flat))
    assert set(flat) == brute_pair_multisets(e, v, k)
    for m in got:
        assert sum(p[0] * f for p, f in m) == e and sum(p[1] * f for p, f in m) == v


@pytest.fixture(scope="module")
def simple_base():
    return graph_base("simple", 13, 15)


@pytest.fixture(scope="module")
def multi_base():
    return graph_base("multigraph", 12, 14)


def test_component_table_examples(simple_base, multi_base):
    assert k_component_table(simple_base, 2, 5, 7)[(5, 7)] == 11
    k4 = k_component_table(simple_base, 4, 9, 13)
    assert k4[(9, 12)] == 539 and k4[(9, 13)] == 315
    k5 = k_component_table(simple_base, 5, 6, 11)
    assert k5[(6, 10)] == 26 and k5[(6, 11)] == 33
    assert k_component_table(multi_base, 3, 5, 8)[(5, 8)] == 14
    assert k_component_table(multi_base, 2, 6, 7)[(6, 7)] == 52
    k1 = k_component_table(simple_base, 1, 6, 6)
    assert all(k1[c] == simple_base[c] for c in k1.values)


def test_total_over_components_examples(simple_base, multi_base):
    assert total_over_components(simple_base, 9, 9)[(9, 9)] == 771
    assert total_over_components(multi_base, 7, 5)[(7, 5)] == 149
    assert total_over_components(simple_base, 0, 5)[(0, 5)] == 1


def test_component_tables_vanish_below_k_and_empty_graph_count(simple_base):
    for k in range(1, 6):
        t = k_component_table(simple_base, k, 4, 8)
        assert all(t[(e, v)] == 0 for (e, v) in t.values if v < k)
        assert t[(0, k)] == 1


def test_missing_base_cell_is_named():
    base = PairTable({(0, 1): 1, (1, 2): 1}, "partial")
    with pytest.raises(MissingCell) as info:
        k_component_table(base, 2, 1, 3)
    assert "partial" in str(info.value) and "V=" in str(info.value)


def test_inversion_is_inverse_of_transform(simple_base):
    totals = total_over_components(simple_base, 6, 7)
    again = connected_from_totals(totals.values, 6, 7)
    assert again.values == {c: simple_base[c] for c in again.values}


def test_bases_agree_with_census():
    simple = graph_base("simple", 5, 5)
    multi = graph_base("multigraph", 5, 5)
    for e in range(6):
        for v in range(1, 6):
            assert simple[(e, v)] == count_cell("-dc.*-m-l", False, e, v)
            assert multi[(e, v)] == count_cell("-dc.*-l", False, e, v)


def test_sum_over_k_equals_census_totals(simple_base, multi_base):
    ts = total_over_components(simple_base, 5, 5)
    tm = total_over_components(multi_base, 5, 5)
    for e in range(6):
        for v in range(1, 6):
            assert ts[(e, v)] == count_cell("-d.*-m-l", False, e, v)
            assert tm[(e, v)] == count_cell("-d.*-l", False, e, v)


def test_vertex_marginal_reproduces_one_dimensional_transform(simple_base):
    # summing over V collapses the pair transform to the transform of the edge marginal;
    # components with no edges are excluded so that the marginal stays finite
    edge_only = PairTable({c: (0 if c[0] == 0 else x) for c, x in simple_base.values.items()})
    e_max, k = 6, 3
    seq = [1] + [sum(edge_only[(e, v)] for v in range(1, e + 2)) for e in range(1, e_max + 1)]
    one_d = multiset_transform(seq, e_max, k)
    two_d = k_component_table(edge_only, k, e_max, e_max + k)
    for e in range(k, e_max + 1):
        assert one_d[(e, k)] == sum(two_d[(e, v)] for v in range(1, e_max + k + 1))


def test_pair_table_roundtrip(simple_base):
    t = k_component_table(simple_base, 3, 6, 8)
    text = t.to_text()
    assert text.splitlines()[0] == "# base=simple k=3 labeled=false"
    back = PairTable.from_text(text)
    assert back == t and back.to_text() == text
    with pytest.raises(ValueError):
        PairTable.from_text("1,1,1\n")
