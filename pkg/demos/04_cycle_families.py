"""
Closed-form families of girth cycles
====================================

The predicted type sets come from parametrized families; comparing them
with brute-force search is an exact set equality.
"""

from girthlab import (
    Family,
    delta4,
    family_types,
    make_graph,
    predicted_girth_cycle_types,
    theorem3_types,
)
from girthlab.verify import brute_force_types, k3_twelve_cycle_types

for k, q in [(3, 5), (4, 4), (5, 5), (4, 3), (7, 3)]:
    g = make_graph(k, q)
    predicted = predicted_girth_cycle_types(g)
    length = len(next(iter(predicted)))
    same = predicted == brute_force_types(g, length)
    print(f"{g}: {len(predicted)} types of length {length}, brute force agrees: {same}")

# the quadratic-root description of the 10-cycles is empty over GF(3)
print("10-cycle types over GF(3):", len(theorem3_types(make_graph(5, 3))))

# lifting 12-cycles of Lambda(3,3) to Lambda(4,3) by the delta4 test
g4 = make_graph(4, 3)
base = k3_twelve_cycle_types()
lifted = {t for t in base if delta4(g4, t) == 0}
print(f"{len(base)} 12-cycle types in Lambda(3,3), {len(lifted)} survive in Lambda(4,3)")
print("T4_91 over GF(3):", sorted(family_types(make_graph(8, 3), Family.T4_91)))
