"""Rung-less essential local webs in a single ideal triangle.

Such a web is a (possibly empty) honeycomb plus disjoint corner arcs.  The
arcs at corner ``k`` are recorded as a word over ``R``/``L``, innermost
(closest to the vertex ``v_k``) first.  ``R_k`` enters the triangle through
slot ``k+2`` and leaves through slot ``k+1``; ``L_k`` runs the other way.

Local coordinates use the dot order ``(a11, a12, a21, a22, a31, a32, a)``,
where ``(a_j1, a_j2)`` are the left and right edge-dots of slot ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import NotRepresentableError, WebFormatError
from .surface import SLOTS, rot

IN, OUT = "in", "out"
DIRECTIONS = ("in", "out", "none")

# c(R_k), c(L_k) and the unit honeycombs, in the local dot order.
GENERATORS: dict[str, tuple[int, ...]] = {
    "R1": (0, 0, 1, 2, 2, 1, 1),
    "L1": (0, 0, 2, 1, 1, 2, 2),
    "R2": (2, 1, 0, 0, 1, 2, 1),
    "L2": (1, 2, 0, 0, 2, 1, 2),
    "R3": (1, 2, 2, 1, 0, 0, 1),
    "L3": (2, 1, 1, 2, 0, 0, 2),
    "Hin": (2, 1, 2, 1, 2, 1, 3),
    "Hout": (1, 2, 1, 2, 1, 2, 3),
}
ARC_NAMES = ("R1", "L1", "R2", "L2", "R3", "L3")


@dataclass(frozen=True)
class TriangleWeb:
    direction: str = "none"
    n: int = 0
    corners: tuple[str, str, str] = ("", "", "")

    def __post_init__(self):
        if self.direction not in DIRECTIONS:
            raise WebFormatError(f"honeycomb direction must be one of {DIRECTIONS}")
        if not isinstance(self.n, int) or self.n < 0:
            raise WebFormatError("honeycomb size must be a non-negative integer")
        if (self.n == 0) != (self.direction == "none"):
            raise WebFormatError("honeycomb size is 0 exactly when direction is 'none'")
        if len(self.corners) != 3 or any(set(w) - {"R", "L"} for w in self.corners):
            raise WebFormatError("corners must be three words over {R, L}")
        object.__setattr__(self, "corners", tuple(self.corners))

    def corner(self, k: int) -> str:
        return self.corners[k - 1]

    def content(self) -> LocalWebContent:
        counts = []
        for w in self.corners:
            counts += [w.count("R"), w.count("L")]
        return LocalWebContent(tuple(counts), self.direction, self.n)

    def to_dict(self) -> dict:
        hc = {"dir": self.direction}
        if self.n:
            hc["n"] = self.n
        return {"honeycomb": hc, "corners": list(self.corners)}

    @classmethod
    def from_dict(cls, rec: dict) -> TriangleWeb:
        try:
            hc = rec.get("honeycomb", {"dir": "none"})
            direction = hc.get("dir", "none")
            n = hc.get("n") or 0
            corners = tuple(rec.get("corners", ["", "", ""]))
        except AttributeError:
            raise WebFormatError(f"malformed triangle web record {rec!r}") from None
        return cls(direction, n, corners)  # type: ignore[arg-type]


@dataclass(frozen=True)
class LocalWebContent:
    """Corner-arc counts ``(nR1, nL1, nR2, nL2, nR3, nL3)`` plus honeycomb."""

    counts: tuple[int, int, int, int, int, int] = (0, 0, 0, 0, 0, 0)
    direction: str = "none"
    n: int = 0

    def __post_init__(self):
        if len(self.counts) != 6 or any(c < 0 for c in self.counts):
            raise WebFormatError("content needs six non-negative arc counts")
        if (self.n == 0) != (self.direction == "none") or self.n < 0:
            raise WebFormatError("honeycomb size is 0 exactly when direction is 'none'")
        object.__setattr__(self, "counts", tuple(self.counts))


def _add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def local_coords(w: TriangleWeb | LocalWebContent) -> tuple[int, ...]:
    """Fock-Goncharov local coordinates: the sum of generator vectors over components."""
    content = w.content() if isinstance(w, TriangleWeb) else w
    c = (0,) * 7
    for name, count in zip(ARC_NAMES, content.counts):
        c = _add(c, tuple(count * x for x in GENERATORS[name]))
    if content.n:
        hc = GENERATORS["Hin" if content.direction == IN else "Hout"]
        c = _add(c, tuple(content.n * x for x in hc))
    return c


def arc_symbol(letter: str, corner: int, slot: int) -> str:
    """Orientation (relative to the triangle) of arc ``letter_corner`` on ``slot``."""
    if slot == rot(corner, 2):
        return IN if letter == "R" else OUT
    if slot == rot(corner, 1):
        return OUT if letter == "R" else IN
    raise ValueError(f"corner {corner} arcs do not touch slot {slot}")


def strand_counts(w: TriangleWeb, slot: int) -> tuple[int, int]:
    word = boundary_word(w, slot)
    return word.count(IN), word.count(OUT)


def edge_dot_pair(n_in: int, n_out: int) -> tuple[int, int]:
    return 2 * n_in + n_out, n_in + 2 * n_out


def edge_dot_pair_inverse(a_left: int, a_right: int) -> tuple[int, int]:
    p, q = 2 * a_left - a_right, 2 * a_right - a_left
    if p % 3 or q % 3 or p < 0 or q < 0:
        raise NotRepresentableError(f"({a_left}, {a_right}) is not an edge-dot pair")
    return p // 3, q // 3


class Slot(NamedTuple):
    """One strand end on a triangle side.

    ``kind`` is ``"arc"`` (``ref`` = (corner, index in corner word)) or
    ``"honey"`` (``ref`` = (slot, index)).
    """

    symbol: str
    kind: str
    ref: tuple[int, int]


def boundary_layout(w: TriangleWeb, slot: int) -> list[Slot]:
    """Strand ends on ``slot``, left to right as seen from inside the triangle."""
    left, right = rot(slot, 1), rot(slot, 2)
    out = [Slot(arc_symbol(ch, left, slot), "arc", (left, i)) for i, ch in enumerate(w.corner(left))]
    if w.n:
        out += [Slot(w.direction, "honey", (slot, h)) for h in range(w.n)]
    word = w.corner(right)
    out += [
        Slot(arc_symbol(word[i], right, slot), "arc", (right, i))
        for i in reversed(range(len(word)))
    ]
    return out


def arc_position(w: TriangleWeb, corner: int, index: int, slot: int) -> int:
    """Position of an end of arc ``(corner, index)`` on ``slot``."""
    if slot == rot(corner, 2):
        return index
    if slot == rot(corner, 1):
        return len(w.corner(rot(slot, 1))) + w.n + len(w.corner(corner)) - 1 - index
    raise ValueError(f"corner {corner} arcs do not touch slot {slot}")


def boundary_word(w: TriangleWeb, slot: int) -> list[str]:
    return [s.symbol for s in boundary_layout(w, slot)]


def canonical_from_counts(content: LocalWebContent) -> TriangleWeb:
    """Representative with every corner word of the form ``R...RL...L``."""
    c = content.counts
    corners = tuple("R" * c[2 * k] + "L" * c[2 * k + 1] for k in range(3))
    return TriangleWeb(content.direction, content.n, corners)  # type: ignore[arg-type]


def corner_transpose(w: TriangleWeb, corner: int, position: int) -> TriangleWeb:
    """Swap the oppositely oriented arcs at ``position`` and ``position + 1``."""
    word = w.corner(corner)
    if not 0 <= position < len(word) - 1:
        raise IndexError(f"no adjacent pair at position {position} of corner {corner}")
    if word[position] == word[position + 1]:
        raise ValueError("cannot transpose two equal letters")
    new = word[:position] + word[position + 1] + word[position] + word[position + 2:]
    corners = list(w.corners)
    corners[corner - 1] = new
    return TriangleWeb(w.direction, w.n, tuple(corners))  # type: ignore[arg-type]


def rotate_web(w: TriangleWeb) -> TriangleWeb:
    """Relabel corners ``k -> k+1``."""
    c = w.corners
    return TriangleWeb(w.direction, w.n, (c[2], c[0], c[1]))


def reverse_web(w: TriangleWeb) -> TriangleWeb:
    """Reverse every orientation: R <-> L and honeycomb in <-> out."""
    swap = str.maketrans("RL", "LR")
    flip = {"in": "out", "out": "in", "none": "none"}[w.direction]
    return TriangleWeb(flip, w.n, tuple(c.translate(swap) for c in w.corners))  # type: ignore[arg-type]


__all__ = [
    "GENERATORS", "IN", "OUT", "SLOTS", "LocalWebContent", "Slot", "TriangleWeb",
    "arc_position", "boundary_layout", "boundary_word", "canonical_from_counts",
    "corner_transpose", "edge_dot_pair", "edge_dot_pair_inverse", "local_coords",
    "reverse_web", "rotate_web", "strand_counts",
]
