from __future__ import annotations

import itertools
from collections import Counter
from math import comb

import pytest

from graphcensus.census import (
    BudgetExceeded,
    CensusQuery,
    CountTable,
    Enumerator,
    census_table,
    connected_census,
    count_cell,
    enumerate_classes,
    marginal,
    tally,
)
from graphcensus.classify import TagPattern, all_tagsets, classify_matrix, impossible_patterns


def slow_census(directed: bool, e: int, n: int):
    """Every slot multiset, deduplicated by brute-force minimum over all relabelings."""
    slots = [(u, v) for u in range(n) for v in range(n) if directed or u <= v]
    classes: dict[tuple, object] = {}
    labeled: Counter = Counter()
    for combo in itertools.combinations_with_replacement(slots, e):
        m = [[0] * n for _ in range(n)]
        for u, v in combo:
            m[u][v] += 1
            if not directed and u != v:
                m[v][u] += 1
        key = min(tuple(m[p[a]][p[b]] for a in range(n) for b in range(n)) for p in itertools.permutations(range(n)))
        tags = classify_matrix(tuple(map(tuple, m)), directed)
        classes[key] = tags
        labeled[tags] += 1
    unl = Counter(classes.values())
    return {t: (unl[t], labeled[t]) for t in labeled}


@pytest.mark.parametrize(
    "directed,e,n",
    [(False, e, n) for n in range(1, 5) for e in range(5)] + [(True, e, n) for n in range(1, 4) for e in range(4)],
)
def test_tally_matches_naive_enumeration(directed, e, n):
    assert tally(directed, e, n) == slow_census(directed, e, n)


def test_enumeration_examples():
    assert len(list(enumerate_classes(False, 0, 3))) == 1
    assert len(list(enumerate_classes(False, 2, 2))) == 4
    assert len(list(enumerate_classes(True, 2, 2))) == 6


def test_enumeration_is_sorted_and_duplicate_free():
    from graphcensus.graph import canonical_form

    keys = [canonical_form(g) for g, _, _ in enumerate_classes(True, 4, 3)]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)


def test_simple_family_restriction():
    # simple graphs on 4 vertices: 1,1,2,3,2,1,1 by edges
    counts = [len(list(enumerate_classes(False, e, 4, loops=False, multiedges=False))) for e in range(7)]
    assert counts == [1, 1, 2, 3, 2, 1, 1]
    assert list(enumerate_classes(False, 7, 4, loops=False, multiedges=False)) == []


@pytest.mark.parametrize(
    "pattern,labeled,e,v,expected",
    [
        ("-dc-i-m-l", False, 6, 6, 13),
        ("-dc-i-m-l", True, 4, 5, 125),
        ("dCc-i-m-l", False, 5, 3, 1),
        ("dCc-im-l", False, 5, 3, 8),
        ("d-C-c-i-m-l", False, 4, 6, 15),
        ("-d", False, 2, 2, 4),
        ("-d", False, 3, 3, 14),
        ("-dc-i-m-l", True, 2, 3, 3),
        ("dCc-i-m-l", True, 2, 2, 1),
    ],
)
def test_count_examples(pattern, labeled, e, v, expected):
    assert count_cell(pattern, labeled, e, v) == expected


@pytest.mark.parametrize("directed", [False, True])
def test_labeled_totals_closed_form(directed):
    for v in range(1, 5):
        slots = v * v if directed else v * (v + 1) // 2
        for e in range(6):
            assert count_cell("d" if directed else "-d", True, e, v) == comb(slots + e - 1, e)


def test_impossible_patterns_count_zero():
    for p in impossible_patterns():
        t = census_table(p, False, 4, 4)
        assert set(t.entries.values()) == {0}


def test_marginal_sum_of_connectivity_classes():
    a = census_table("-dc", False, 4, 4)
    b = census_table("-d-c", False, 4, 4)
    m = marginal([a, b])
    assert m[(4, 4)] == 53 and a[(4, 4)] == 9 and b[(4, 4)] == 44
    assert m.entries == census_table("-d", False, 4, 4).entries


def test_marginal_errors():
    with pytest.raises(ValueError):
        marginal([])
    with pytest.raises(ValueError):
        marginal([census_table("-dc", False, 3, 3), census_table("-dc", True, 3, 3)])


def test_sixteen_undirected_classes_partition_all_graphs():
    full = [str(t) for t in all_tagsets(False)]
    for e in range(5):
        for v in range(1, 5):
            assert sum(count_cell(p, False, e, v) for p in full) == count_cell("-d", False, e, v)


def test_connected_census_examples():
    und = connected_census(False, False, 9, 5)
    assert und[(9, 5)] == 1 and und[(0, 1)] == 1
    assert connected_census(False, True, 5, 6)[(5, 6)] == 1296
    assert connected_census(True, False, 6, 4)[(6, 4)] == 47


def test_query_bounds_validated():
    with pytest.raises(ValueError):
        CensusQuery(TagPattern.parse("-d"), False, 11, 3)
    with pytest.raises(ValueError):
        CensusQuery(TagPattern.parse("-d"), False, 3, 0)


def test_budget_guard_names_cell():
    en = Enumerator(True, 4)
    with pytest.raises(BudgetExceeded) as info:
        en.level(6, budget=100)
    assert info.value.cell[1] == 4


def test_parallel_enumeration_matches_serial():
    serial = Enumerator(False, 5).level(5)
    parallel = Enumerator(False, 5).level(5, jobs=2)
    assert list(serial) == list(parallel)


def test_missing_cells_stay_blank():
    t = CountTable({(0, 1): 1, (1, 2): 0}, "-d", False, 1, 2)
    assert t.get(0, 2) is None and t.get(1, 2) == 0
    assert t.to_csv() == "E\\V,1,2\n0,1,\n1,,0\n"


def test_csv_and_fixture_roundtrip():
    t = census_table("-dc-i-m-l", True, 5, 5)
    back = CountTable.from_csv(t.to_csv(), t.pattern, t.labeled)
    assert back.entries == t.entries
    fx = CountTable.from_fixture(t.to_fixture())
    assert fx.entries == t.entries and fx.labeled and fx.pattern == "-dc-i-m-l"
    assert CountTable.from_csv(fx.to_csv()).entries == t.entries


def test_latex_layout():
    text = census_table("-d", True, 2, 2).to_latex()
    assert text.splitlines()[0] == "\\begin{tabular}{r|rr}"
    assert "2& 1& 6\\\\" in text


def test_fixture_line_format():
    t = census_table("-dc-i-m-l", False, 1, 2)
    assert "-dc-i-m-l;unlabeled;1;2;1\n" in t.to_fixture()
