"""
Girth and girth cycles
======================

Because Lambda(k, q) is edge-transitive, one anchored search tells us
about every edge.
"""

from girthlab import (
    count_girth_cycles_total,
    enumerate_cycles_through_anchor,
    girth,
    make_graph,
)

print(" k  q  girth")
for k, q in [(3, 3), (3, 5), (4, 3), (4, 7), (5, 4), (5, 7), (8, 3)]:
    print(f"{k:2d} {q:2d}  {girth(make_graph(k, q))}")

# beyond the range with closed-form answers the search still runs
print("Lambda(9,3):", girth(make_graph(9, 3), max_length=12), "at max_length 12,",
      girth(make_graph(9, 3)), "without a cap")

g = make_graph(3, 3)
recs = enumerate_cycles_through_anchor(g, 8)
print(len(recs), "girth cycles through the anchor edge of", g)
print("first type:", recs[0].cycle_type)
print("total girth cycles:", count_girth_cycles_total(g))
