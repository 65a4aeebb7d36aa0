"""
Finite fields and the graph Lambda(k, q)
========================================

Elements of GF(q) are integers in ``[0, q)``: the base-p digits are the
coefficients of a polynomial modulo a fixed irreducible.
"""

from girthlab import make_field, make_graph

f = make_field(9)
print("GF(9) modulus:", f.modulus_str())
print("x * x =", f.element_str(f.mul(3, 3)))
print("inverse of x + 1:", f.element_str(f.inv(4)))

# Lambda(4, 5): vertices are 5-tuples, one neighbor per color on the other side
g = make_graph(4, 5)
left = (1, 0, 0, 0, 0)
for color in range(g.q):
    right = g.right_neighbor(left, color)
    assert g.left_neighbor(right, left[0]) == left
    print(f"color {color}: {right}  (index {g.encode(right)})")

print("left, right, edges:", g.counts())
