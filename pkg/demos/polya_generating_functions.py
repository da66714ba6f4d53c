"""Generating functions for connected loopless multigraphs by vertex count."""
from __future__ import annotations

from graphcensus.fixtures import shape_graph
from graphcensus.polya import connected_multigraph_gf, edge_cycle_index, polya_substitute

# the paw: a triangle with a pendant edge
paw = shape_graph("triangle")
z = edge_cycle_index(paw)
print("edge cycle index of the paw:", z.to_text())

# each edge may be doubled, tripled, ...: substitute t_i = x^i / (1 - x^i)
f = polya_substitute(z, "at-least-one-edge")
print("multigraphs on the paw:", f)
print("  series:", f.series(10))

# summing over all connected simple graphs on V vertices
for v in range(2, 7):
    gf = connected_multigraph_gf(v)
    print(f"V={v}: {gf}")
    print("      ", gf.series(12))
