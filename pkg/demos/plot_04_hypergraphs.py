"""
Ordered hypergraphs
===================

A partition is a hypergraph whose edges are its blocks.  Contraction glues
consecutive runs of vertices; it never creates a copy of a 1-regular pattern
that was absent before.
"""

from avoidance_lab import (
    contains_hypergraph,
    interval_contract,
    max_weight_avoiding,
    parse_hypergraph,
    render_hypergraph,
)

g = parse_hypergraph("1,4;2,5,6;3")
for s in (2, 3, 6):
    print(f"contract to {s}:", render_hypergraph(interval_contract(g, s)))

crossing = parse_hypergraph("1,3;2,4")
print("g contains 1,3;2,4:", contains_hypergraph(g, crossing))

###############################################################################
# Heaviest hypergraph on [5] with no crossing pair of edges.

res = max_weight_avoiding(crossing, 5)
print("weight", res.weight, "exact", res.exact, "example", render_hypergraph(res.best))
