"""
Local coordinates of webs in a triangle
=======================================

A rung-less local web is a honeycomb plus corner arcs.  Its seven
coordinates are additive over components, and the nine rhombus numbers
recover the components.
"""

from webcoord import GENERATORS, TriangleWeb, decompose_local, local_coords, rhombus_vector, tropical_x

# The eight generators and their rhombus numbers.
for name, c in GENERATORS.items():
    print(f"{name:5s} {c}  rhombus {rhombus_vector(c).integers()}")

# A web with an out-honeycomb of size 2, two arcs at corner 1 and one at corner 3.
w = TriangleWeb("out", 2, ("RL", "", "L"))
c = local_coords(w)
print("\ncoordinates", c, "x =", tropical_x(c))

# Corner words are only defined up to reordering; the decomposition gives counts.
print("decomposition", decompose_local(c))

# Out- and in-honeycombs together equal one L arc at each corner, so the
# generators are not independent; the decomposition never uses both.
print(decompose_local((3, 3, 3, 3, 3, 3, 6)))
