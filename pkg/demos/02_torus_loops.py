"""
Loops on the once-punctured torus
=================================

Two triangles glued along edges a, b, c.  Corner arcs glue into closed
curves; the biangles between the triangles are never stored, but their
ladder-webs are recomputed as crossings.
"""

from pathlib import Path

from webcoord import GlobalWeb, TriangleWeb, crossing_count, find_square_faces, global_coords, load_triangulation
from webcoord import resolve_square, trace_travelers

T = load_triangulation(Path(__file__).parent.parent / "tests" / "fixtures" / "torus.json")


def loops(w0, w1):
    return GlobalWeb.from_mapping(T, {"T0": TriangleWeb(corners=(w0, "", "")), "T1": TriangleWeb(corners=(w1, "", ""))})


# One loop: an R arc in T0 and an L arc in T1.
W = loops("R", "L")
print("coordinates", global_coords(W))
for t in trace_travelers(W):
    print(t.kind, [(r.edge, r.tri, r.direction) for r in t.route])

# Two parallel copies, stacked the same way in both triangles: no crossings.
print("\nRL / RL crossings:", crossing_count(loops("RL", "RL")))

# Stacked in opposite orders the curves cross twice: a square-face.
W = loops("RL", "LR")
squares = find_square_faces(W)
print("RL / LR crossings:", crossing_count(W), "squares:", len(squares))

# Removing it swaps the arcs in one triangle; coordinates do not move.
W1 = resolve_square(W, squares[0])
print("after resolution:", [w.corners[0] for w in W1.webs], global_coords(W1) == global_coords(W))
