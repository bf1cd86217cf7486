"""
Counting cone points and checking confluence
============================================

Enumerate the global cone in a box, reconstruct each point, and check that
random reorderings of corner arcs give parallel-equivalent webs.
"""

import random
from pathlib import Path

import numpy as np

from webcoord import GlobalWeb, confluence_check, decompose_local, enumerate_cone, load_triangulation
from webcoord import roundtrip_cone, shuffled_representative
from webcoord.cone import local_point

fixtures = Path(__file__).parent.parent / "tests" / "fixtures"
torus = load_triangulation(fixtures / "torus.json")
sphere = load_triangulation(fixtures / "sphere4.json")

for name, T, bounds in [("torus", torus, range(7)), ("sphere", sphere, range(4))]:
    counts = [len(list(enumerate_cone(T, b))) for b in bounds]
    print(name, "cone points per bound", counts)

points = np.array(list(enumerate_cone(torus, 6)))
print("\ntorus, bound 6:", len(points), "points; mean coordinate", points.mean(axis=0).round(2))
print("all round trip:", all(roundtrip_cone(tuple(c), torus) for c in points.tolist()))

rng = random.Random(0)
ok = 0
for c in points.tolist():
    contents = {t: decompose_local(local_point(c, torus, t)) for t in torus.triangles}
    W = GlobalWeb.from_mapping(torus, {t: shuffled_representative(k, rng) for t, k in contents.items()})
    ok += confluence_check(W)
print("confluent square removal:", ok, "of", len(points))
