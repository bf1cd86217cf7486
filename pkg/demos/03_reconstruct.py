"""
From coordinates back to webs
=============================

Every cone point is the coordinate vector of a non-elliptic web: glue
canonical local webs along ladder-webs, then remove square-faces.
"""

from pathlib import Path

from webcoord import global_coords, load_triangulation, reconstruct
from webcoord.glue import crossing_count, ladder_glue

T = load_triangulation(Path(__file__).parent.parent / "tests" / "fixtures" / "torus.json")

c = (2, 4, 4, 5, 6, 6, 8, 7)
W0 = ladder_glue(c, T)
print("ladder gluing:", [w.corners for w in W0.webs], "crossings", crossing_count(W0))


def show(before, square, after):
    print("  resolve", [tuple(t) for t in square.transpositions], crossing_count(before), "->", crossing_count(after))


W = reconstruct(c, T, on_step=show)
print("non-elliptic:", [w.corners for w in W.webs])
print("coordinates preserved:", global_coords(W) == c)
