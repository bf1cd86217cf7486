"""Ideal triangulations of punctured surfaces.

A triangulation is stored as a combinatorial map: an ordered list of
triangle ids and an ordered list of edges, each edge gluing two
``(triangle, slot)`` sides.  Every triangle is oriented counterclockwise
with vertices ``v1, v2, v3``; slot ``j`` carries the edge running from
``v_{j+1}`` to ``v_{j+2}`` and corner ``k`` sits at ``v_k``, opposite slot
``k``.  Gluing two counterclockwise triangles reverses the edge direction,
so the left end of an edge seen from one side is its right end seen from
the other.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Any

from .errors import TriangulationError

SLOTS = (1, 2, 3)


def rot(k: int, d: int = 1) -> int:
    """Shift a 1-based slot/corner index by ``d`` modulo 3."""
    return (k - 1 + d) % 3 + 1


@dataclass(frozen=True)
class Side:
    tri: str
    slot: int


@dataclass(frozen=True)
class Edge:
    id: str
    sides: tuple[Side, Side]


@dataclass(frozen=True)
class IdealTriangulation:
    triangles: tuple[str, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        _validate(self)

    @cached_property
    def _side_index(self) -> dict[tuple[str, int], tuple[int, int]]:
        return {
            (s.tri, s.slot): (e, i)
            for e, edge in enumerate(self.edges)
            for i, s in enumerate(edge.sides)
        }

    @cached_property
    def edge_index(self) -> dict[str, int]:
        return {edge.id: i for i, edge in enumerate(self.edges)}

    @cached_property
    def triangle_index(self) -> dict[str, int]:
        return {t: i for i, t in enumerate(self.triangles)}

    def locate(self, tri: str, slot: int) -> tuple[int, int]:
        """Return ``(edge index, side index)`` of the side ``(tri, slot)``."""
        return self._side_index[(tri, slot)]

    def edge_at(self, tri: str, slot: int) -> Edge:
        return self.edges[self.locate(tri, slot)[0]]

    def opposite(self, tri: str, slot: int) -> Side:
        e, i = self.locate(tri, slot)
        return self.edges[e].sides[1 - i]

    def euler_characteristic(self) -> int:
        return euler_characteristic(self)

    def to_dict(self) -> dict[str, Any]:
        return {
            "triangles": list(self.triangles),
            "edges": [
                {"id": e.id, "sides": [{"tri": s.tri, "slot": s.slot} for s in e.sides]}
                for e in self.edges
            ],
        }


def _validate(T: IdealTriangulation) -> None:
    if len(set(T.triangles)) != len(T.triangles):
        raise TriangulationError("duplicate triangle id")
    if len({e.id for e in T.edges}) != len(T.edges):
        raise TriangulationError("duplicate edge id")
    known = set(T.triangles)
    seen: set[tuple[str, int]] = set()
    for edge in T.edges:
        if len(edge.sides) != 2:
            raise TriangulationError(f"edge {edge.id!r} must have exactly two sides")
        for s in edge.sides:
            if s.tri not in known:
                raise TriangulationError(f"edge {edge.id!r} references unknown triangle {s.tri!r}")
            if s.slot not in SLOTS:
                raise TriangulationError(f"edge {edge.id!r} has slot {s.slot!r} outside 1..3")
            if (s.tri, s.slot) in seen:
                raise TriangulationError(f"duplicate side ({s.tri}, {s.slot})")
            seen.add((s.tri, s.slot))
        if edge.sides[0].tri == edge.sides[1].tri:
            raise TriangulationError(f"self-folded edge {edge.id!r}: both sides on {edge.sides[0].tri!r}")
    missing = {(t, j) for t in T.triangles for j in SLOTS} - seen
    if missing:
        raise TriangulationError(f"unglued sides: {sorted(missing)}")
    if 3 * len(T.triangles) != 2 * len(T.edges):
        raise TriangulationError("3·|triangles| must equal 2·|edges|")
    if len(T.triangles) - len(T.edges) >= 0:
        raise TriangulationError("Euler characteristic must be negative")
    # dual graph connectivity
    adj: dict[str, set[str]] = {t: set() for t in T.triangles}
    for edge in T.edges:
        a, b = edge.sides
        adj[a.tri].add(b.tri)
        adj[b.tri].add(a.tri)
    start = T.triangles[0]
    reached = {start}
    queue = deque([start])
    while queue:
        for nb in adj[queue.popleft()]:
            if nb not in reached:
                reached.add(nb)
                queue.append(nb)
    if len(reached) != len(T.triangles):
        raise TriangulationError("triangulation is disconnected")


def triangulation_from_dict(doc: Any) -> IdealTriangulation:
    if not isinstance(doc, dict) or "triangles" not in doc or "edges" not in doc:
        raise TriangulationError("schema: expected object with 'triangles' and 'edges'")
    tris = doc["triangles"]
    if not isinstance(tris, list) or not tris or not all(isinstance(t, str) for t in tris):
        raise TriangulationError("schema: 'triangles' must be a non-empty list of strings")
    edges = []
    for raw in doc["edges"] if isinstance(doc["edges"], list) else [None]:
        try:
            sides = raw["sides"]
            if not isinstance(raw["id"], str) or len(sides) != 2:
                raise TypeError
            parsed = tuple(Side(str(s["tri"]), s["slot"]) for s in sides)
            if not all(isinstance(s.slot, int) and not isinstance(s.slot, bool) for s in parsed):
                raise TypeError
        except (KeyError, TypeError, IndexError):
            raise TriangulationError(f"schema: malformed edge record {raw!r}") from None
        edges.append(Edge(raw["id"], parsed))  # type: ignore[arg-type]
    if not edges:
        raise TriangulationError("schema: empty edge list")
    return IdealTriangulation(tuple(tris), tuple(edges))


def load_triangulation(document: str | Path | dict) -> IdealTriangulation:
    """Load and validate a triangulation.

    ``document`` may be a parsed JSON object, a JSON string, or a path to a
    JSON file.  Raises :class:`TriangulationError` on any schema or
    topological violation.
    """
    if isinstance(document, dict):
        return triangulation_from_dict(document)
    if isinstance(document, Path) or (isinstance(document, str) and not document.lstrip().startswith("{")):
        document = Path(document).read_text()
    try:
        doc = json.loads(document)
    except json.JSONDecodeError as exc:
        raise TriangulationError(f"schema: invalid JSON ({exc})") from None
    return triangulation_from_dict(doc)


def dump_triangulation(T: IdealTriangulation) -> str:
    return json.dumps(T.to_dict(), indent=2)


def euler_characteristic(T: IdealTriangulation) -> int:
    return len(T.triangles) - len(T.edges)


@dataclass(frozen=True)
class Dot:
    kind: str  # "edge" or "triangle"
    owner: str
    side: str = ""  # "L" or "R" for edge-dots

    @property
    def label(self) -> str:
        return f"{self.owner}{self.side}" if self.kind == "edge" else f"t{self.owner}"


@dataclass(frozen=True)
class DotIndexing:
    dots: tuple[Dot, ...]

    def __len__(self) -> int:
        return len(self.dots)

    @cached_property
    def index(self) -> dict[Dot, int]:
        return {d: i for i, d in enumerate(self.dots)}

    def labels(self) -> list[str]:
        return [d.label for d in self.dots]


def dot_indexing(T: IdealTriangulation) -> DotIndexing:
    """Edge-dot pairs (left, right from the first-listed side) in edge order,
    then one triangle-dot per triangle."""
    dots = [Dot("edge", e.id, lr) for e in T.edges for lr in "LR"]
    dots += [Dot("triangle", t) for t in T.triangles]
    return DotIndexing(tuple(dots))


def triangle_dot_positions(T: IdealTriangulation, tri: str) -> list[int]:
    """Global dot indices for ``tri`` in local order (a11, a12, a21, a22, a31, a32, a).

    An edge viewed from its second-listed side has its left/right dots
    exchanged.
    """
    out = []
    for j in SLOTS:
        e, i = T.locate(tri, j)
        left, right = 2 * e, 2 * e + 1
        out += [left, right] if i == 0 else [right, left]
    out.append(2 * len(T.edges) + T.triangle_index[tri])
    return out
