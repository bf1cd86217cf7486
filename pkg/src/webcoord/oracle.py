"""Executable checks of the coordinate bijection.

These harnesses compare webs through their global pictures: travelers are
matched via the i-th out-strand on each edge and must share routes, and
square removal is replayed under every resolution order.
"""

from __future__ import annotations

import heapq
import itertools
import random
from collections import Counter
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .cone import in_global_cone, local_cone_points
from .errors import (
    ContentMismatchError,
    CorrespondenceError,
    EllipticWebError,
    IncompatibleWebError,
    NotInConeError,
)
from .glue import (
    GlobalPicture,
    GlobalWeb,
    Traveler,
    check_compatible,
    find_square_faces,
    global_coords,
    is_nonelliptic,
    reconstruct,
    resolve_square,
)
from .localweb import OUT, LocalWebContent, TriangleWeb
from .surface import IdealTriangulation, triangle_dot_positions

EXHAUSTIVE_SQUARES = 6
SAMPLED_ORDERS = 32
SAMPLE_SEED = 0


@dataclass(frozen=True)
class TravelerCorrespondence:
    mapping: dict[int, int]
    kinds: dict[int, str] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.mapping)

    def is_identity(self) -> bool:
        return all(a == b for a, b in self.mapping.items())


def _route_from(t: Traveler, node) -> tuple:
    """Route places of ``t`` starting at the out-strand ``node``."""
    route = t.route
    if t.kind == "loop":
        i = next(
            i for i, r in enumerate(route)
            if r.direction == OUT and (r.tri, r.slot, r.position) == node
        )
        route = route[i:] + route[:i]
    return tuple(r.place for r in route)


def fellow_traveler_check(W: GlobalWeb, W2: GlobalWeb) -> TravelerCorrespondence:
    """Match travelers through the i-th out-strand of every edge and verify
    that matched travelers have the same kind and the same route."""
    if W.triangulation != W2.triangulation:
        raise ContentMismatchError("webs live on different triangulations")
    for t, a, b in zip(W.triangulation.triangles, W.webs, W2.webs):
        if a.content() != b.content():
            raise ContentMismatchError(f"local contents differ on triangle {t!r}")
    if not (check_compatible(W) and check_compatible(W2)):
        raise IncompatibleWebError("fellow-traveler check needs compatible webs")
    P, P2 = W.picture, W2.picture
    fwd: dict[int, int] = {}
    back: dict[int, int] = {}
    for (tri, slot), layout in P.layout.items():
        outs = [p for p, s in enumerate(layout) if s.symbol == OUT]
        outs2 = [p for p, s in enumerate(P2.layout[(tri, slot)]) if s.symbol == OUT]
        if len(outs) != len(outs2):
            raise CorrespondenceError(f"out-strand counts differ on ({tri}, {slot})")
        for p, p2 in zip(outs, outs2):
            a = P.traveler_at[(tri, slot, p)]
            b = P2.traveler_at[(tri, slot, p2)]
            if fwd.setdefault(a, b) != b or back.setdefault(b, a) != a:
                raise CorrespondenceError(f"traveler {a} is matched inconsistently")
            ta, tb = P.travelers[a], P2.travelers[b]
            if ta.kind != tb.kind:
                raise CorrespondenceError(f"traveler {a} is a {ta.kind}, its match a {tb.kind}")
            if _route_from(ta, (tri, slot, p)) != _route_from(tb, (tri, slot, p2)):
                raise CorrespondenceError(f"travelers {a} and {b} have different routes")
    if len(fwd) != len(P.travelers) or len(back) != len(P2.travelers):
        raise CorrespondenceError("traveler correspondence is not a bijection")
    return TravelerCorrespondence(fwd, {a: P.travelers[a].kind for a in fwd})


def crossing_pairs(P: GlobalPicture) -> Counter:
    """Crossing counts keyed by the (sorted) pair of travelers involved."""
    T = P.T
    counts: Counter = Counter()
    for c in P.all_crossings():
        s0 = T.edges[c.edge_index].sides[0]
        a = P.traveler_at[(s0.tri, s0.slot, c.forward_pos[0])]
        b = P.traveler_at[(s0.tri, s0.slot, c.backward_pos[0])]
        counts[tuple(sorted((a, b)))] += 1
    return counts


def same_crossing_pattern(W: GlobalWeb, W2: GlobalWeb, corr: TravelerCorrespondence) -> bool:
    mapped: Counter = Counter()
    for (a, b), n in crossing_pairs(W.picture).items():
        mapped[tuple(sorted((corr.mapping[a], corr.mapping[b])))] += n
    return mapped == crossing_pairs(W2.picture)


def roundtrip_cone(c, T: IdealTriangulation) -> bool:
    if not in_global_cone(c, T):
        raise NotInConeError("vector is not in the global Knutson-Tao cone")
    return global_coords(reconstruct(c, T)) == tuple(c)


def roundtrip_web(W: GlobalWeb) -> bool:
    """Coordinates then reconstruction returns a web equivalent to ``W``."""
    if not is_nonelliptic(W):
        raise EllipticWebError("roundtrip_web needs a non-elliptic web")
    W2 = reconstruct(global_coords(W), W.triangulation)
    try:
        corr = fellow_traveler_check(W, W2)
    except CorrespondenceError:
        return False
    return same_crossing_pattern(W, W2, corr)


@dataclass
class ConfluenceResult:
    terminals: list[GlobalWeb]
    orders: int
    exhaustive: bool
    ok: bool = False
    diagnostics: list[str] = field(default_factory=list)


def explore_square_removal(W: GlobalWeb, seed: int = SAMPLE_SEED, on_step=None) -> ConfluenceResult:
    """Run square removal under every resolution order (or a seeded sample
    of orders when there are many squares) and collect the end results.

    ``on_step(before, square, after)`` is called after every resolution.
    """

    def step(V, sq):
        V1 = resolve_square(V, sq)
        if on_step is not None:
            on_step(V, sq, V1)
        return V1

    if len(find_square_faces(W)) <= EXHAUSTIVE_SQUARES:
        terminals: dict[tuple, GlobalWeb] = {}
        paths: dict[tuple, int] = {}

        def visit(V: GlobalWeb) -> int:
            if V.webs in paths:
                return paths[V.webs]
            squares = find_square_faces(V)
            if not squares:
                terminals[V.webs] = V
                n = 1
            else:
                n = sum(visit(step(V, sq)) for sq in squares)
            paths[V.webs] = n
            return n

        orders = visit(W) if find_square_faces(W) else 0
        if not terminals:
            terminals[W.webs] = W
        return ConfluenceResult(list(terminals.values()), orders, True)
    rng = random.Random(seed)
    found = {}
    for _ in range(SAMPLED_ORDERS):
        V = W
        while squares := find_square_faces(V):
            V = step(V, rng.choice(squares))
        found[V.webs] = V
    return ConfluenceResult(list(found.values()), SAMPLED_ORDERS, False)


def confluence_check(W: GlobalWeb, result: ConfluenceResult | None = None) -> bool:
    """All square-removal outcomes share coordinates and fellow-travel pairwise."""
    res = result or explore_square_removal(W)
    coords = {global_coords(V) for V in res.terminals}
    if len(coords) != 1:
        res.diagnostics.append("terminal webs have different coordinates")
        res.ok = False
        return False
    for A, B in itertools.combinations(res.terminals, 2):
        try:
            corr = fellow_traveler_check(A, B)
        except CorrespondenceError as exc:
            res.diagnostics.append(str(exc))
            res.ok = False
            return False
        if not same_crossing_pattern(A, B, corr):
            res.diagnostics.append("terminal webs have different crossing patterns")
            res.ok = False
            return False
    res.ok = True
    return True


def shuffled_representative(content: LocalWebContent, rng: random.Random) -> TriangleWeb:
    """A uniformly random ordering of the corner arcs of ``content``."""
    corners = []
    for k in range(3):
        letters = list("R" * content.counts[2 * k] + "L" * content.counts[2 * k + 1])
        rng.shuffle(letters)
        corners.append("".join(letters))
    return TriangleWeb(content.direction, content.n, tuple(corners))  # type: ignore[arg-type]


def _join(T: IdealTriangulation, bound: int, first: list[tuple] | None = None) -> list[tuple]:
    local = [tuple(map(int, p)) for p in local_cone_points(bound)]
    n_dots = 2 * len(T.edges) + len(T.triangles)
    order = list(T.triangles)
    positions = [triangle_dot_positions(T, t) for t in order]
    assigned: set[int] = set()
    plans = []
    for pos in positions:
        fixed = [i for i, d in enumerate(pos) if d in assigned]
        table: dict[tuple, list[tuple]] = {}
        for p in local:
            table.setdefault(tuple(p[i] for i in fixed), []).append(p)
        plans.append((pos, fixed, table))
        assigned.update(pos)
    out: list[tuple] = []
    v = [0] * n_dots

    def rec(level: int) -> None:
        if level == len(plans):
            out.append(tuple(v))
            return
        pos, fixed, table = plans[level]
        cands = table.get(tuple(v[pos[i]] for i in fixed), [])
        if level == 0 and first is not None:
            cands = first
        for p in cands:
            for d, val in zip(pos, p):
                v[d] = val
            rec(level + 1)

    rec(0)
    out.sort()
    return out


def _join_part(args) -> list[tuple]:
    T, bound, part, jobs = args
    local = [tuple(map(int, p)) for p in local_cone_points(bound)]
    return _join(T, bound, local[part::jobs])


def enumerate_cone(T: IdealTriangulation, bound: int, jobs: int = 1) -> Iterator[tuple[int, ...]]:
    """Global cone points with all coordinates in ``[0, bound]``, lexicographic.

    With ``jobs > 1`` the first triangle's local points are dealt round-robin
    to worker processes and the sorted partial results merged.
    """
    if bound < 0:
        return iter(())
    if jobs <= 1:
        return iter(_join(T, bound))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_join_part, [(T, bound, i, jobs) for i in range(jobs)]))
    return heapq.merge(*parts)


__all__ = [
    "ConfluenceResult", "TravelerCorrespondence", "confluence_check", "crossing_pairs",
    "enumerate_cone", "explore_square_removal", "fellow_traveler_check", "roundtrip_cone",
    "roundtrip_web", "same_crossing_pattern", "shuffled_representative",
]
