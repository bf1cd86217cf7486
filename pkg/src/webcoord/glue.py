"""Global webs in good position and the ladder gluing construction.

A global web is one rung-less essential local web per triangle.  Biangle
contents are never stored: on every edge the two boundary words determine
the unique ladder-web, whose rungs are recorded here as crossings of
oppositely oriented strands (the global picture).
"""

from __future__ import annotations

import json
from collections.abc import Callable, Mapping
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import NamedTuple

from .cone import decompose_local, in_global_cone, local_point, rhombus_vector
from .errors import (
    IncompatibleWebError,
    InvariantError,
    NotInConeError,
    StaleSquareError,
    WebFormatError,
)
from .localweb import (
    IN,
    OUT,
    Slot,
    TriangleWeb,
    arc_position,
    boundary_layout,
    canonical_from_counts,
    corner_transpose,
    local_coords,
)
from .surface import SLOTS, IdealTriangulation, load_triangulation, rot


@dataclass(frozen=True)
class GlobalWeb:
    triangulation: IdealTriangulation = field(compare=False, repr=False)
    webs: tuple[TriangleWeb, ...]

    def __post_init__(self):
        if len(self.webs) != len(self.triangulation.triangles):
            raise WebFormatError("need exactly one local web per triangle")

    @classmethod
    def from_mapping(cls, T: IdealTriangulation, webs: Mapping[str, TriangleWeb]) -> GlobalWeb:
        unknown = set(webs) - set(T.triangles)
        if unknown:
            raise WebFormatError(f"webs given for unknown triangles {sorted(unknown)}")
        return cls(T, tuple(webs.get(t, TriangleWeb()) for t in T.triangles))

    @classmethod
    def empty(cls, T: IdealTriangulation) -> GlobalWeb:
        return cls(T, tuple(TriangleWeb() for _ in T.triangles))

    def web(self, tri: str) -> TriangleWeb:
        return self.webs[self.triangulation.triangle_index[tri]]

    def replace(self, **changes: TriangleWeb) -> GlobalWeb:
        webs = list(self.webs)
        for tri, w in changes.items():
            webs[self.triangulation.triangle_index[tri]] = w
        return GlobalWeb(self.triangulation, tuple(webs))

    def as_mapping(self) -> dict[str, TriangleWeb]:
        return dict(zip(self.triangulation.triangles, self.webs))

    def to_dict(self, triangulation: str | dict | None = None) -> dict:
        return {
            "triangulation": self.triangulation.to_dict() if triangulation is None else triangulation,
            "webs": {t: w.to_dict() for t, w in self.as_mapping().items()},
        }

    @cached_property
    def picture(self) -> GlobalPicture:
        return GlobalPicture(self)


def load_web(document: str | Path | dict, base: Path | None = None) -> GlobalWeb:
    """Load a web file; ``"triangulation"`` is an inline object or a path
    relative to the web file."""
    if not isinstance(document, dict):
        if isinstance(document, Path) or not document.lstrip().startswith("{"):
            base = Path(document).parent
            document = Path(document).read_text()
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise WebFormatError(f"invalid JSON ({exc})") from None
    if not isinstance(document, dict) or "triangulation" not in document or "webs" not in document:
        raise WebFormatError("web file needs 'triangulation' and 'webs'")
    tri = document["triangulation"]
    if isinstance(tri, str):
        path = Path(tri)
        if not path.is_absolute() and base is not None:
            path = base / path
        T = load_triangulation(path)
    else:
        T = load_triangulation(tri)
    if not isinstance(document["webs"], dict):
        raise WebFormatError("'webs' must map triangle ids to records")
    webs = {t: TriangleWeb.from_dict(rec) for t, rec in document["webs"].items()}
    return GlobalWeb.from_mapping(T, webs)


Node = tuple[str, int, int]  # (triangle, slot, position)


class Pass(NamedTuple):
    """A strand crossing a biangle; ``forward`` strands leave side 0."""

    edge: int
    forward: bool
    k: int
    pos: tuple[int, int]  # positions on the boundary words of side 0 and side 1


@dataclass(frozen=True, order=True)
class Crossing:
    edge_index: int
    forward_pos: tuple[int, int]
    backward_pos: tuple[int, int]
    edge: str = field(compare=False)
    forward: int = field(compare=False)
    backward: int = field(compare=False)

    def to_dict(self) -> dict:
        return {
            "edge": self.edge,
            "forward": {"k": self.forward, "positions": list(self.forward_pos)},
            "backward": {"k": self.backward, "positions": list(self.backward_pos)},
        }


class RouteEntry(NamedTuple):
    edge: str
    tri: str
    slot: int
    position: int
    direction: str  # OUT when leaving ``tri``, IN when entering it

    @property
    def place(self) -> tuple[str, str, int, str]:
        return self.edge, self.tri, self.slot, self.direction


@dataclass(frozen=True)
class Traveler:
    id: int
    kind: str  # "loop" or "arc"
    route: tuple[RouteEntry, ...]
    passes: tuple[tuple[int, int, bool], ...]  # (edge index, k, forward)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "kind": self.kind,
            "route": [list(r) for r in self.route],
        }


@dataclass(frozen=True, order=True)
class SquareFace:
    first: Crossing
    second: Crossing
    transpositions: tuple[tuple[str, int, int], ...]  # (triangle, corner, position)

    def to_dict(self) -> dict:
        return {
            "crossings": [self.first.to_dict(), self.second.to_dict()],
            "transpositions": [list(t) for t in self.transpositions],
        }


def _side_counts(w: TriangleWeb, slot: int) -> tuple[int, int]:
    word = [s.symbol for s in boundary_layout(w, slot)]
    return word.count(IN), word.count(OUT)


def check_compatible(W: GlobalWeb) -> bool:
    T = W.triangulation
    for edge in T.edges:
        a, b = edge.sides
        na_in, na_out = _side_counts(W.web(a.tri), a.slot)
        nb_in, nb_out = _side_counts(W.web(b.tri), b.slot)
        if (na_in, na_out) != (nb_out, nb_in):
            return False
    return True


def require_compatible(W: GlobalWeb) -> None:
    if not check_compatible(W):
        raise IncompatibleWebError("strand counts disagree across some biangle")


class GlobalPicture:
    """Strands, biangle matchings and crossings of a compatible global web."""

    def __init__(self, W: GlobalWeb):
        require_compatible(W)
        self.web = W
        T = self.T = W.triangulation
        self.layout: dict[tuple[str, int], list[Slot]] = {
            (t, j): boundary_layout(W.web(t), j) for t in T.triangles for j in SLOTS
        }
        self.passes: list[list[Pass]] = []
        self.pass_at: dict[Node, tuple[int, int]] = {}
        self.crossings: list[list[Crossing]] = []
        for e, edge in enumerate(T.edges):
            s0, s1 = edge.sides
            w0 = [s.symbol for s in self.layout[(s0.tri, s0.slot)]]
            w1 = [s.symbol for s in self.layout[(s1.tri, s1.slot)]]
            m = len(w1)
            passes = []
            for forward, sym0, sym1 in ((True, OUT, IN), (False, IN, OUT)):
                ends0 = [p for p in range(len(w0)) if w0[p] == sym0]
                # side 1 is read right-to-left to align it with side 0
                ends1 = [q for q in reversed(range(m)) if w1[q] == sym1]
                for k, (p, q) in enumerate(zip(ends0, ends1)):
                    passes.append(Pass(e, forward, k, (p, q)))
            for i, ps in enumerate(passes):
                self.pass_at[(s0.tri, s0.slot, ps.pos[0])] = (e, i)
                self.pass_at[(s1.tri, s1.slot, ps.pos[1])] = (e, i)
            self.passes.append(passes)
            fwd = [p for p in passes if p.forward]
            bwd = [p for p in passes if not p.forward]
            found = []
            for f in fwd:
                for b in bwd:
                    # side-1 order is reversed, so interleaving means equal signs here
                    if (f.pos[0] - b.pos[0]) * (f.pos[1] - b.pos[1]) > 0:
                        found.append(Crossing(e, f.pos, b.pos, edge.id, f.k, b.k))
            self.crossings.append(sorted(found))
        self._crossing_keys = {
            (c.edge_index, c.forward, c.backward): c for cs in self.crossings for c in cs
        }

    def all_crossings(self) -> list[Crossing]:
        return [c for cs in self.crossings for c in cs]

    def crossing_between(self, e: int, p: Pass, q: Pass) -> Crossing | None:
        if p.forward == q.forward:
            return None
        f, b = (p, q) if p.forward else (q, p)
        return self._crossing_keys.get((e, f.k, b.k))

    def slot_entry(self, node: Node) -> Slot:
        tri, slot, pos = node
        return self.layout[(tri, slot)][pos]

    def across(self, node: Node) -> Node:
        """The node on the other side of the biangle."""
        e, i = self.pass_at[node]
        ps = self.passes[e][i]
        _, side = self.T.locate(node[0], node[1])
        other = self.T.edges[e].sides[1 - side]
        return other.tri, other.slot, ps.pos[1 - side]

    def through(self, node: Node) -> Node | None:
        """The other end of the corner arc at ``node``; ``None`` at a honeycomb."""
        tri, slot, _ = node
        entry = self.slot_entry(node)
        if entry.kind == "honey":
            return None
        corner, i = entry.ref
        other = rot(corner, 1) if slot == rot(corner, 2) else rot(corner, 2)
        return tri, other, arc_position(self.web.web(tri), corner, i, other)

    def entry(self, node: Node, direction: str) -> RouteEntry:
        tri, slot, pos = node
        return RouteEntry(self.T.edge_at(tri, slot).id, tri, slot, pos, direction)

    def _entry_key(self, r: RouteEntry) -> tuple[int, int, int]:
        e, side = self.T.locate(r.tri, r.slot)
        return e, side, r.position

    @cached_property
    def travelers(self) -> list[Traveler]:
        out_nodes = [
            (t, j, p)
            for (t, j), lay in self.layout.items()
            for p, s in enumerate(lay)
            if s.symbol == OUT
        ]
        seen: set[Node] = set()
        raw = []
        starts = [n for n in out_nodes if self.slot_entry(n).kind == "honey"]
        starts += [n for n in out_nodes if self.slot_entry(n).kind == "arc"]
        for start in starts:
            if start in seen:
                continue
            route, passes = [], []
            node: Node | None = start
            kind = "loop"
            while True:
                seen.add(node)
                route.append(self.entry(node, OUT))
                passes.append(self.pass_at[node])
                arrive = self.across(node)
                route.append(self.entry(arrive, IN))
                node = self.through(arrive)
                if node is None:
                    kind = "arc"
                    break
                if node == start:
                    break
            if kind == "loop":
                i = min(range(len(route)), key=lambda i: self._entry_key(route[i]))
                route = route[i:] + route[:i]
            raw.append((kind, tuple(route), passes))
        raw.sort(key=lambda r: (r[0] != "arc", self._entry_key(r[1][0])))
        return [
            Traveler(
                i,
                kind,
                route,
                tuple((e, self.passes[e][k].k, self.passes[e][k].forward) for e, k in passes),
            )
            for i, (kind, route, passes) in enumerate(raw)
        ]

    @cached_property
    def traveler_at(self) -> dict[Node, int]:
        """Traveler id through each strand end."""
        out = {}
        for t in self.travelers:
            for r in t.route:
                out[(r.tri, r.slot, r.position)] = t.id
        return out

    @cached_property
    def square_faces(self) -> list[SquareFace]:
        found: dict[tuple[Crossing, Crossing], SquareFace] = {}
        for p in self.all_crossings():
            for side in (0, 1):
                hit = self._walk(p, side)
                if hit is None:
                    continue
                q, swaps = hit
                pair = (min(p, q), max(p, q))
                if pair not in found:
                    found[pair] = SquareFace(pair[0], pair[1], tuple(swaps))
        return sorted(found.values())

    def _walk(self, p: Crossing, side: int):
        """Follow the two strands of crossing ``p`` out of its biangle through
        ``side`` while they run parallel; return the next crossing of the
        pair with the corner transpositions that would remove both."""
        T = self.T
        e = p.edge_index
        ends = (p.forward_pos[side], p.backward_pos[side])
        swaps: list[tuple[str, int, int]] = []
        visited = set()
        for _ in range(sum(len(v) for v in self.layout.values()) + 1):
            s = T.edges[e].sides[side]
            a, b = ends
            if abs(a - b) != 1:
                return None
            la = self.layout[(s.tri, s.slot)][a]
            lb = self.layout[(s.tri, s.slot)][b]
            if la.kind != "arc" or lb.kind != "arc" or la.ref[0] != lb.ref[0]:
                return None
            corner = la.ref[0]
            ia, ib = la.ref[1], lb.ref[1]
            word = self.web.web(s.tri).corner(corner)
            if abs(ia - ib) != 1 or word[ia] == word[ib]:
                return None
            key = (s.tri, corner, min(ia, ib))
            if key in visited:
                return None
            visited.add(key)
            swaps.append(key)
            na = self.through((s.tri, s.slot, a))
            nb = self.through((s.tri, s.slot, b))
            e2, s_in = T.locate(na[0], na[1])
            pa = self.passes[e2][self.pass_at[na][1]]
            pb = self.passes[e2][self.pass_at[nb][1]]
            q = self.crossing_between(e2, pa, pb)
            if q is not None:
                return None if q == p else (q, swaps)
            e, side = e2, 1 - s_in
            ends = (pa.pos[side], pb.pos[side])
        return None


def biangle_crossings(W: GlobalWeb, edge: str) -> list[Crossing]:
    return list(W.picture.crossings[W.triangulation.edge_index[edge]])


def crossing_count(W: GlobalWeb) -> int:
    return sum(len(cs) for cs in W.picture.crossings)


def trace_travelers(W: GlobalWeb) -> list[Traveler]:
    return W.picture.travelers


def global_coords(W: GlobalWeb) -> tuple[int, ...]:
    """Assemble per-triangle local coordinates into the global dot vector."""
    require_compatible(W)
    T = W.triangulation
    local = {t: local_coords(w) for t, w in W.as_mapping().items()}
    out = [0] * (2 * len(T.edges) + len(T.triangles))
    for e, edge in enumerate(T.edges):
        s0, s1 = edge.sides
        c0 = local[s0.tri][2 * (s0.slot - 1): 2 * s0.slot]
        c1 = local[s1.tri][2 * (s1.slot - 1): 2 * s1.slot]
        if (c0[0], c0[1]) != (c1[1], c1[0]):
            raise InvariantError(f"gluing identity fails on edge {edge.id!r}: {c0} vs {c1}")
        out[2 * e], out[2 * e + 1] = c0
    for i, t in enumerate(T.triangles):
        out[2 * len(T.edges) + i] = local[t][6]
    return tuple(out)


def gluing_identity_holds(W: GlobalWeb) -> bool:
    try:
        global_coords(W)
    except InvariantError:
        return False
    return True


def find_square_faces(W: GlobalWeb) -> list[SquareFace]:
    return list(W.picture.square_faces)


def is_nonelliptic(W: GlobalWeb) -> bool:
    return not W.picture.square_faces


def resolve_square(W: GlobalWeb, sq: SquareFace) -> GlobalWeb:
    """Remove a square-face by transposing the parallel arc pairs along it."""
    if sq not in W.picture.square_faces:
        raise StaleSquareError("square-face is not present in this web")
    webs = W.as_mapping()
    for tri, corner, pos in sq.transpositions:
        webs[tri] = corner_transpose(webs[tri], corner, pos)
    W1 = GlobalWeb.from_mapping(W.triangulation, webs)
    if not check_compatible(W1):
        raise InvariantError("square resolution broke compatibility")
    before, after = crossing_count(W), crossing_count(W1)
    if after != before - 2:
        raise InvariantError(f"square resolution changed crossings {before} -> {after}")
    if global_coords(W1) != global_coords(W):
        raise InvariantError("square resolution changed coordinates")
    return W1


def first_square(squares: list[SquareFace]) -> SquareFace:
    return squares[0]


def remove_squares(
    W: GlobalWeb,
    choose: Callable[[list[SquareFace]], SquareFace] = first_square,
    on_step: Callable[[GlobalWeb, SquareFace, GlobalWeb], None] | None = None,
) -> GlobalWeb:
    """Square removing loop; terminates since each step removes two crossings."""
    while True:
        squares = find_square_faces(W)
        if not squares:
            return W
        sq = choose(squares)
        W1 = resolve_square(W, sq)
        if on_step is not None:
            on_step(W, sq, W1)
        W = W1


def ladder_glue(c, T: IdealTriangulation) -> GlobalWeb:
    """Canonical representative of each local content; may be elliptic."""
    if not in_global_cone(c, T):
        raise NotInConeError("vector is not in the global Knutson-Tao cone")
    webs = {t: canonical_from_counts(decompose_local(local_point(c, T, t))) for t in T.triangles}
    W = GlobalWeb.from_mapping(T, webs)
    if not check_compatible(W):
        raise InvariantError("cone point produced incompatible local webs")
    return W


def reconstruct(c, T: IdealTriangulation, on_step=None) -> GlobalWeb:
    """Inverse coordinate map: ladder gluing followed by square removal."""
    W = remove_squares(ladder_glue(c, T), on_step=on_step)
    if global_coords(W) != tuple(c):
        raise InvariantError("reconstruction does not reproduce the coordinates")
    return W


def rhombus_table(W: GlobalWeb) -> dict[str, list[int]]:
    return {
        t: list(rhombus_vector(local_coords(w)).integers()) for t, w in W.as_mapping().items()
    }
