"""
Walks and their closed forms
============================

A walk from the all-zero edge is fixed by its sequence of color
differences.  Its left vertices can be read off from prefix sums of the
``rho`` polynomials, without walking.
"""

import random

from girthlab import closed_form_vertices, make_field, make_graph, rho, walk_from_type

g = make_graph(4, 5)
t = (1, 1, 1, 4, 4, 1, 4, 4)
w = walk_from_type(g, t)
for l, r in zip(w.left_vertices, w.right_vertices):
    print(l, r)

print("closed forms:", closed_form_vertices(g, t))

# rho deletes adjacent pairs: rho_1(1, 2, 3) = 3 + 1
print("rho_1(1, 2, 3) over GF(5) =", rho(make_field(5), 1, (1, 2, 3)))

# spot check on a bigger graph
g = make_graph(10, 7)
rng = random.Random(0)
for _ in range(200):
    t = tuple(rng.randrange(1, 7) for _ in range(2 * rng.randrange(1, 12)))
    assert closed_form_vertices(g, t) == list(walk_from_type(g, t).left_vertices[1:])
print("200 random walks in", g, "match their closed forms")
