"""Knutson-Tao rhombus numbers, local and global cones, and the local
generator decomposition.

Rhombus numbers are thirds of integers; they are kept as integer
numerators over 3 so that membership is an exact sign-and-congruence test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import NotInConeError
from .localweb import LocalWebContent, canonical_from_counts, local_coords
from .surface import DotIndexing, IdealTriangulation, dot_indexing, triangle_dot_positions

# Rows give 3*r_ij as integer forms in (a11, a12, a21, a22, a31, a32, a),
# ordered r11, r12, r13, r21, r22, r23, r31, r32, r33.
RHOMBUS_FORMS = np.array(
    [
        [0, 0, 0, 1, 1, 0, -1],    # r11 = a22 + a31 - a
        [-1, 0, 0, 0, -1, 1, 1],   # r12 = a + a32 - a11 - a31
        [0, -1, 1, -1, 0, 0, 1],   # r13 = a21 + a - a12 - a22
        [1, 0, 0, 0, 0, 1, -1],    # r21 = a32 + a11 - a
        [-1, 1, -1, 0, 0, 0, 1],   # r22 = a + a12 - a21 - a11
        [0, 0, 0, -1, 1, -1, 1],   # r23 = a31 + a - a22 - a32
        [0, 1, 1, 0, 0, 0, -1],    # r31 = a12 + a21 - a
        [0, 0, -1, 1, -1, 0, 1],   # r32 = a + a22 - a31 - a21
        [1, -1, 0, 0, 0, -1, 1],   # r33 = a11 + a - a32 - a12
    ],
    dtype=np.int64,
)
X_FORM = np.array([1, -1, 1, -1, 1, -1, 0], dtype=np.int64)
RHOMBUS_LABELS = ("r11", "r12", "r13", "r21", "r22", "r23", "r31", "r32", "r33")


@dataclass(frozen=True)
class RhombusVector:
    numerators: tuple[int, ...]

    def values(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(v, 3) for v in self.numerators)

    def integers(self) -> tuple[int, ...]:
        """The rhombus numbers, which must all be integers."""
        if any(v % 3 for v in self.numerators):
            raise ValueError("rhombus numbers are not all integers")
        return tuple(v // 3 for v in self.numerators)

    def __getitem__(self, label: str) -> Fraction:
        return Fraction(self.numerators[RHOMBUS_LABELS.index(label)], 3)

    def __add__(self, other: RhombusVector) -> RhombusVector:
        return RhombusVector(tuple(a + b for a, b in zip(self.numerators, other.numerators)))


def _dot(row: np.ndarray, c: Sequence[int]) -> int:
    return int(sum(int(a) * int(b) for a, b in zip(row, c)))


def rhombus_vector(c: Sequence[int]) -> RhombusVector:
    if len(c) != 7:
        raise ValueError("a local cone point has 7 coordinates")
    return RhombusVector(tuple(_dot(row, c) for row in RHOMBUS_FORMS))


def in_local_cone(c: Sequence[int]) -> bool:
    return all(v >= 0 and v % 3 == 0 for v in rhombus_vector(c).numerators)


def tropical_x(c: Sequence[int]) -> Fraction:
    return Fraction(_dot(X_FORM, c), 3)


def decompose_local(c: Sequence[int]) -> LocalWebContent:
    """Unique generator decomposition of a local cone point.

    Non-negative ``x`` gives arc counts ``(r11, r12, r21, r22, r31, r32)``
    and an in-honeycomb of size ``x``; negative ``x`` gives an
    out-honeycomb of size ``-x`` and subtracts ``-x`` from the three
    ``L`` counts.
    """
    if not in_local_cone(c):
        raise NotInConeError(f"{tuple(c)} is not in the local Knutson-Tao cone")
    r = rhombus_vector(c).integers()
    x = tropical_x(c)
    assert x.denominator == 1 and x == r[2] - r[1] == r[5] - r[4] == r[8] - r[7]
    x = int(x)
    counts = [r[0], r[1], r[3], r[4], r[6], r[7]]
    if x >= 0:
        content = LocalWebContent(tuple(counts), "in" if x else "none", x)
    else:
        for i in (1, 3, 5):
            counts[i] += x
        content = LocalWebContent(tuple(counts), "out", -x)
    assert local_coords(canonical_from_counts(content)) == tuple(c)
    return content


def local_point(v: Sequence[int], T: IdealTriangulation, tri: str) -> tuple[int, ...]:
    return tuple(v[i] for i in triangle_dot_positions(T, tri))


def in_global_cone(v: Sequence[int], T: IdealTriangulation, idx: DotIndexing | None = None) -> bool:
    idx = idx or dot_indexing(T)
    if len(v) != len(idx):
        raise ValueError(f"expected {len(idx)} coordinates, got {len(v)}")
    return all(in_local_cone(local_point(v, T, t)) for t in T.triangles)


def local_cone_points(bound: int) -> np.ndarray:
    """All local cone points with every coordinate in ``[0, bound]``, lexicographic.

    Brute-force over the box, vectorized two leading coordinates at a time.
    """
    axis = np.arange(bound + 1, dtype=np.int64)
    tail = np.stack(np.meshgrid(*([axis] * 5), indexing="ij"), axis=-1).reshape(-1, 5)
    chunks = []
    for a11 in axis:
        for a12 in axis:
            head = np.broadcast_to(np.array([a11, a12], dtype=np.int64), (len(tail), 2))
            pts = np.hstack([head, tail])
            num = pts @ RHOMBUS_FORMS.T
            ok = np.all((num >= 0) & (num % 3 == 0), axis=1)
            chunks.append(pts[ok])
    return np.concatenate(chunks)
