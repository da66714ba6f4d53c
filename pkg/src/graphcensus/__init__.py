"""Exact enumeration of small graphs and the generating functions around it."""
from __future__ import annotations

from .census import BudgetExceeded, CensusQuery, CountTable, census_table, connected_census, count, enumerate_classes, marginal
from .classify import TagPattern, TagSet, classify, impossible_patterns, parse_pattern
from .gf import RationalGF, series_expand
from .graph import AutomorphismInfo, Graph, automorphism_info, canonical_form, edge_count
from .mset import (
    PairTable,
    connected_from_totals,
    graph_base,
    k_component_table,
    multiset_coefficient,
    multiset_transform,
    pair_multisets,
    total_over_components,
)
from .polya import (
    CycleIndex,
    UnderlyingGraphRecord,
    connected_multigraph_gf,
    edge_cycle_index,
    polya_substitute,
    write_underlying_records,
)

__all__ = [
    "AutomorphismInfo", "BudgetExceeded", "CensusQuery", "CountTable", "CycleIndex", "Graph", "PairTable",
    "RationalGF", "TagPattern", "TagSet", "UnderlyingGraphRecord", "automorphism_info", "canonical_form",
    "census_table", "classify", "connected_census", "connected_from_totals", "connected_multigraph_gf", "count",
    "edge_count", "edge_cycle_index", "enumerate_classes", "graph_base", "impossible_patterns",
    "k_component_table", "marginal", "multiset_coefficient", "multiset_transform", "pair_multisets",
    "parse_pattern", "polya_substitute", "series_expand", "total_over_components", "write_underlying_records",
]
