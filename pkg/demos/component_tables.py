"""Graphs with k connected components from a table of connected ones."""
from __future__ import annotations

from graphcensus.mset import graph_base, k_component_table, multiset_transform, total_over_components

# the one-dimensional transform first: 1 apple, 3 bananas, 1 cherry, 1 date ...
tri = multiset_transform([1, 3, 1, 0, 1, 0, 0, 0, 0], 6, 6)
for n in range(1, 7):
    print(n, [tri[(n, k)] for k in range(1, n + 1)])

# connected simple graphs by (edges, vertices), then two and three components
base = graph_base("simple", 8, 10)
for k in (2, 3):
    print(f"\nsimple graphs with {k} components")
    print(k_component_table(base, k, 6, 8).to_csv())

# summing over k recovers every simple graph
totals = total_over_components(base, 6, 6)
print("all simple graphs, E=6 V=6:", totals[(6, 6)])
