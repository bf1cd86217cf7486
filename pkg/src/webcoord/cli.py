"""``webcoord`` command line front end.

Every subcommand prints one JSON report ``{"status", "payload",
"diagnostics"}``.  Exit codes: 0 ok, 1 invalid input, 2 not in cone or
elliptic, 3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .cone import decompose_local, in_global_cone, local_point
from .errors import (
    EllipticWebError,
    InvariantError,
    NotInConeError,
    WebcoordError,
)
from .glue import (
    check_compatible,
    find_square_faces,
    global_coords,
    is_nonelliptic,
    load_web,
    reconstruct,
    rhombus_table,
    trace_travelers,
)
from .oracle import (
    confluence_check,
    enumerate_cone,
    explore_square_removal,
    fellow_traveler_check,
    same_crossing_pattern,
)
from .surface import dot_indexing, euler_characteristic, load_triangulation

EXIT = {"ok": 0, "invalid": 1, "not-in-cone": 2, "elliptic": 2, "internal": 3}


@dataclass
class Report:
    status: str = "ok"
    payload: dict[str, Any] = field(default_factory=dict)
    diagnostics: list[str] = field(default_factory=list)

    def to_json(self) -> str:
        payload = self.payload if self.status == "ok" else {}
        return json.dumps(
            {"status": self.status, "payload": payload, "diagnostics": self.diagnostics},
            indent=2,
        )


class UsageError(WebcoordError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"vector must be comma-separated integers, got {text!r}") from None


def _dots(T) -> list[str]:
    return dot_indexing(T).labels()


def cmd_validate(args) -> Report:
    T = load_triangulation(Path(args.tri))
    return Report(payload={
        "triangles": len(T.triangles),
        "edges": len(T.edges),
        "euler_characteristic": euler_characteristic(T),
        "dots": _dots(T) if args.dots else len(dot_indexing(T)),
    })


def cmd_coords(args) -> Report:
    W = load_web(Path(args.web))
    payload: dict[str, Any] = {"coordinates": list(global_coords(W))}
    if args.rhombus:
        payload["rhombus"] = rhombus_table(W)
    if args.dots:
        payload["dots"] = _dots(W.triangulation)
    return Report(payload=payload)


def cmd_cone_check(args) -> Report:
    T = load_triangulation(Path(args.tri))
    v = parse_vector(args.vector)
    if not in_global_cone(v, T):
        raise NotInConeError(f"{args.vector} is not in the global cone")
    decomposition = {}
    for t in T.triangles:
        content = decompose_local(local_point(v, T, t))
        entry = {name: n for name, n in zip(("R1", "L1", "R2", "L2", "R3", "L3"), content.counts) if n}
        if content.n:
            entry[f"H{content.direction}"] = content.n
        if entry:
            decomposition[t] = entry
    payload: dict[str, Any] = {"in_cone": True, "decomposition": decomposition}
    if args.dots:
        payload["dots"] = _dots(T)
    return Report(payload=payload)


def cmd_reconstruct(args) -> Report:
    T = load_triangulation(Path(args.tri))
    W = reconstruct(parse_vector(args.vector), T)
    doc = W.to_dict()
    if args.output:
        Path(args.output).write_text(json.dumps(doc, indent=2) + "\n")
    return Report(payload={"web": doc})


def cmd_roundtrip(args) -> Report:
    W = load_web(Path(args.web))
    if not check_compatible(W):
        raise WebcoordError("web is not compatible")
    if not is_nonelliptic(W):
        raise EllipticWebError(f"web has {len(find_square_faces(W))} square-face(s)")
    c = global_coords(W)
    W2 = reconstruct(c, W.triangulation)
    corr = fellow_traveler_check(W, W2)
    if not same_crossing_pattern(W, W2, corr):
        raise InvariantError("reconstructed web is not equivalent to the input")
    return Report(payload={
        "coordinates": list(c),
        "roundtrip": True,
        "correspondence": {str(a): b for a, b in sorted(corr.mapping.items())},
    })


def cmd_enumerate(args) -> Report:
    T = load_triangulation(Path(args.tri))
    pts = [list(p) for p in enumerate_cone(T, args.max, jobs=args.jobs)]
    payload: dict[str, Any] = {"count": len(pts), "points": pts}
    if args.dots:
        payload["dots"] = _dots(T)
    return Report(payload=payload)


def cmd_trace(args) -> Report:
    W = load_web(Path(args.web))
    P = W.picture
    return Report(payload={
        "travelers": [t.to_dict() for t in trace_travelers(W)],
        "crossings": [c.to_dict() for c in P.all_crossings()],
        "square_faces": [s.to_dict() for s in P.square_faces],
    })


def cmd_confluence(args) -> Report:
    W = load_web(Path(args.web))
    res = explore_square_removal(W)
    ok = confluence_check(W, res)
    if not ok:
        raise InvariantError("; ".join(res.diagnostics) or "square removal is not confluent")
    return Report(payload={
        "confluent": True,
        "squares": len(find_square_faces(W)),
        "orders": res.orders,
        "exhaustive": res.exhaustive,
        "terminals": len(res.terminals),
    })


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="webcoord", description="Coordinates for SL3 non-elliptic webs")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("validate", help="check a triangulation file")
    s.add_argument("tri")
    s.add_argument("--dots", action="store_true", help="print the dot index legend")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("coords", help="global coordinates of a web")
    s.add_argument("web")
    s.add_argument("--rhombus", action="store_true", help="include per-triangle rhombus numbers")
    s.add_argument("--dots", action="store_true")
    s.set_defaults(func=cmd_coords)

    s = sub.add_parser("cone-check", help="cone membership and local decomposition")
    s.add_argument("tri")
    s.add_argument("vector")
    s.add_argument("--dots", action="store_true")
    s.set_defaults(func=cmd_cone_check)

    s = sub.add_parser("reconstruct", help="non-elliptic web with given coordinates")
    s.add_argument("tri")
    s.add_argument("vector")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_reconstruct)

    s = sub.add_parser("roundtrip", help="coords -> reconstruct -> fellow-traveler check")
    s.add_argument("web")
    s.set_defaults(func=cmd_roundtrip)

    s = sub.add_parser("enumerate", help="cone points with bounded coordinates")
    s.add_argument("tri")
    s.add_argument("--max", type=int, required=True)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--dots", action="store_true")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("trace", help="travelers, crossings and square-faces")
    s.add_argument("web")
    s.set_defaults(func=cmd_trace)

    s = sub.add_parser("confluence", help="square removal under every order")
    s.add_argument("web")
    s.set_defaults(func=cmd_confluence)
    return p


def dispatch(argv: list[str]) -> tuple[int, Report]:
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("missing subcommand")
        report = args.func(args)
    except NotInConeError as exc:
        report = Report("not-in-cone", diagnostics=[str(exc)])
    except EllipticWebError as exc:
        report = Report("elliptic", diagnostics=[str(exc)])
    except InvariantError as exc:
        return EXIT["internal"], Report("invalid", diagnostics=[f"internal: {exc}"])
    except (WebcoordError, OSError, ValueError) as exc:
        report = Report("invalid", diagnostics=[str(exc)])
    return EXIT[report.status], report


def main(argv: list[str] | None = None) -> int:
    code, report = dispatch(sys.argv[1:] if argv is None else argv)
    print(report.to_json())
    return code


if __name__ == "__main__":
    sys.exit(main())
