"""Command-line front end: ``tripants <command> ...``.

Exit status is 0 on success, 1 on a domain error or a failed check, and 2
when the arguments cannot be parsed.
"""
from __future__ import annotations

import argparse
import sys

from . import farey
from . import pushmap as pm
from .errors import TriPantsError, WordParseError
from .explorer import (
    RADIUS_CAP,
    EdgeFilter,
    exact_distance,
    explore_ball,
    find_path,
    lower_bound_distance,
)
from .triarc import MoveKind, MoveLabel, canonical_arc, flip, neighbors, parse_tri_arc
from .verify import SUITES, run_suite


def _cmd_neighbors(args, out):
    t = parse_tri_arc(args.triarc)
    for v, label in neighbors(t):
        out.write(f"{label}\t{v}\n")


def _cmd_flip(args, out):
    t = parse_tri_arc(args.triarc)
    out.write(f"{flip(t, MoveLabel(canonical_arc(args.arc), MoveKind(args.kind)))}\n")


def _cmd_project(args, out):
    out.write(f"{farey.project(parse_tri_arc(args.triarc))}\n")


def _cmd_push(args, out):
    theta = pm.parse_push_word(args.pushword)
    out.write(f"{pm.apply_push(theta, parse_tri_arc(args.triarc))}\n")


def _cmd_distance(args, out):
    t1, t2 = parse_tri_arc(args.t1), parse_tri_arc(args.t2)
    if args.lower_bound:
        out.write(f"{lower_bound_distance(t1, t2)}\n")
        return 0
    d = exact_distance(t1, t2, args.max)
    if d is None:
        sys.stderr.write(f"NotFound: distance exceeds {args.max}\n")
        return 1
    out.write(f"{d}\n")
    return 0


def _cmd_farey_distance(args, out):
    t1, t2 = farey.parse_triangle(args.t1), farey.parse_triangle(args.t2)
    out.write(f"{farey.dual_distance(t1, t2)}\n")


def _cmd_explore(args, out):
    ball = explore_ball(parse_tri_arc(args.triarc), args.radius, EdgeFilter(args.filter))
    out.write(ball.to_dot() if args.format == "dot" else ball.to_jsonl())


def _cmd_path(args, out):
    t1, t2 = parse_tri_arc(args.t1), parse_tri_arc(args.t2)
    report = find_path(t1, t2, args.fiber_cap)
    out.write(f"length\t{report.length}\n")
    t = t1
    for label in report.moves:
        t = flip(t, label)
        out.write(f"{label}\t{t}\n")


def _cmd_verify(args, out):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        report = run_suite(name, args.radius, args.seed)
        for line in report.lines():
            out.write(line + "\n")
        ok &= report.ok
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tripants", description="Explore the tri-pants graph.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("neighbors", help="the nine flips of a tri-arc")
    p.add_argument("triarc")
    p.set_defaults(func=_cmd_neighbors)

    p = sub.add_parser("flip", help="apply one flip")
    p.add_argument("--arc", required=True)
    p.add_argument("--kind", required=True, choices=[k.value for k in MoveKind])
    p.add_argument("triarc")
    p.set_defaults(func=_cmd_flip)

    p = sub.add_parser("project", help="Farey triangle of a tri-arc")
    p.add_argument("triarc")
    p.set_defaults(func=_cmd_project)

    p = sub.add_parser("push", help="apply a point-push word")
    p.add_argument("pushword")
    p.add_argument("triarc")
    p.set_defaults(func=_cmd_push)

    p = sub.add_parser("distance", help="graph distance between tri-arcs")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--max", type=int, default=RADIUS_CAP)
    group.add_argument("--lower-bound", action="store_true")
    p.add_argument("t1")
    p.add_argument("t2")
    p.set_defaults(func=_cmd_distance)

    p = sub.add_parser("farey-distance", help="distance in the dual Farey tree")
    p.add_argument("t1")
    p.add_argument("t2")
    p.set_defaults(func=_cmd_farey_distance)

    p = sub.add_parser("explore", help="dump a ball as DOT or JSON lines")
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--filter", choices=[f.value for f in EdgeFilter], default="all")
    p.add_argument("--format", choices=["dot", "jsonl"], default="dot")
    p.add_argument("triarc")
    p.set_defaults(func=_cmd_explore)

    p = sub.add_parser("path", help="a replay-checked move sequence")
    p.add_argument("--fiber-cap", type=int, default=10_000)
    p.add_argument("t1")
    p.add_argument("t2")
    p.set_defaults(func=_cmd_path)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", required=True, choices=[*SUITES, "all"])
    p.add_argument("--radius", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify)
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out) or 0
    except WordParseError as exc:
        sys.stderr.write(f"ParseError: {exc}\n")
        return 2
    except TriPantsError as exc:
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
