from __future__ import annotations

from collections import Counter

from graphcensus.classify import parse_pattern
from graphcensus.fixtures import load_errata, load_fixtures


def test_fixture_ids_unique_and_counts_non_negative():
    fx = load_fixtures()
    assert len({f.id for f in fx}) == len(fx)
    assert all(c[-1] >= 0 for f in fx for c in f.cells)


def test_fixture_coverage():
    fx = load_fixtures()
    kinds = Counter(f.kind for f in fx)
    assert kinds["components"] == 8 and kinds["gf"] == 13 and kinds["mset_triangle"] == 1
    for f in fx:
        if f.kind == "census":
            assert len(f.cells) >= 12, f.id
            p = parse_pattern(f.pattern)
            assert p.directed == f.directed


def test_all_census_patterns_have_both_kinds():
    fx = [f for f in load_fixtures() if f.kind == "census"]
    by_pattern = Counter(f.pattern for f in fx)
    assert all(n == 2 for n in by_pattern.values())


def test_errata_point_at_printed_cells():
    fx = {f.id: f for f in load_fixtures()}
    errata = load_errata()
    assert len(errata) == 7
    for x in errata:
        cells = {(c[0], c[1]): c[2] for c in fx[x.table].cells}
        assert cells[(x.edges, x.vertices)] == x.printed
        # every correction is the same shift caused by the one wrong base cell
        assert x.printed - x.corrected == 450
