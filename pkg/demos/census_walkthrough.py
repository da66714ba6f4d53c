"""Walk through a small census: enumerate classes, classify them, and tabulate."""
from __future__ import annotations

from graphcensus.census import census_table, count_cell, enumerate_classes, marginal
from graphcensus.classify import TagPattern

# every undirected graph with 3 edges on 3 vertices, loops and multi-edges allowed
for g, info, tags in enumerate_classes(False, 3, 3):
    rows = " / ".join(g.to_text().splitlines())
    print(f"{rows:22s} aut={info.aut_order} labelings={info.orbit_weight} tags={tags}")

# a pattern selects tag sets; ".*" leaves the remaining flags free
pattern = TagPattern.parse("-dc.*-m-l")
print("\nconnected simple graphs:", pattern)
print(census_table("-dc.*-m-l", False, 6, 6).to_csv())

# connected plus disconnected gives the total table
total = marginal([census_table("-dc", False, 4, 4), census_table("-d-c", False, 4, 4)])
print("all graphs with E=4, V=4:", total[(4, 4)])

# labeled counts weight each class by V!/|Aut|
print("labeled strongly connected digraphs, E=6 V=5:", count_cell("dCc-i-m-l", True, 6, 5))
