"""Independent brute-force oracles shared by the test modules."""

import itertools

import numpy as np

from webcoord import GENERATORS

ORDER = ("R1", "L1", "R2", "L2", "R3", "L3", "Hin", "Hout")
GEN = np.array([GENERATORS[g] for g in ORDER], dtype=np.int64)


def combinations(arc_max, honey_max, admissible_only=False):
    """Coefficient rows (8 columns, in ORDER) in the given box."""
    arcs = np.array(list(itertools.product(range(arc_max + 1), repeat=6)), dtype=np.int64)
    honey = [(i, o) for i in range(honey_max + 1) for o in range(honey_max + 1)]
    if admissible_only:
        honey = [(i, o) for i, o in honey if i == 0 or o == 0]
    rows = [np.hstack([arcs, np.broadcast_to(np.array(h), (len(arcs), 2))]) for h in honey]
    return np.vstack(rows)


def keys(points):
    """Pack non-negative 7-tuples with entries < 256 into single integers."""
    points = np.asarray(points, dtype=np.int64)
    assert points.max(initial=0) < 256
    return points @ (256 ** np.arange(7, dtype=np.int64))


def admissible_representation_counts(targets, arc_max, honey_max):
    """For each target point, the number of admissible generator combinations
    (at most one honeycomb generator used) inside the box that produce it."""
    combos = combinations(arc_max, honey_max, admissible_only=True)
    produced = keys(combos @ GEN)
    uniq, counts = np.unique(produced, return_counts=True)
    t = keys(targets)
    idx = np.searchsorted(uniq, t)
    idx = np.minimum(idx, len(uniq) - 1)
    return np.where(uniq[idx] == t, counts[idx], 0)


def brute_force_local_cone(bound):
    """Local cone points in the box by evaluating the rhombus formulas as
    written, one point at a time."""
    out = []
    for c in itertools.product(range(bound + 1), repeat=7):
        a11, a12, a21, a22, a31, a32, a = c
        nums = (
            a22 + a31 - a, a + a32 - a11 - a31, a21 + a - a12 - a22,
            a32 + a11 - a, a + a12 - a21 - a11, a31 + a - a22 - a32,
            a12 + a21 - a, a + a22 - a31 - a21, a11 + a - a32 - a12,
        )
        if all(v >= 0 and v % 3 == 0 for v in nums):
            out.append(c)
    return out
