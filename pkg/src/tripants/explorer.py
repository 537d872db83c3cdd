"""Breadth-first exploration of the tri-pants graph.

The graph is never stored whole: vertices are tri-arcs, and
:func:`tripants.triarc.neighbors` generates edges on demand. Balls are
finite induced subgraphs around a base vertex; paths are built by walking
the dual Farey tree with small flips and then searching the last fiber
with big flips.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Iterable, Optional

from . import farey
from .errors import FiberSearchExhausted, RadiusCap
from .triarc import MoveKind, MoveLabel, TriArc, flip, neighbors

RADIUS_CAP = 6
DISTANCE_CAP = 2 * RADIUS_CAP


class EdgeFilter(enum.Enum):
    ALL = "all"
    BIG = "big"
    SMALL = "small"

    def admits(self, label: MoveLabel) -> bool:
        if self is EdgeFilter.ALL:
            return True
        return (label.kind is MoveKind.BIG) == (self is EdgeFilter.BIG)


def filtered_neighbors(t: TriArc, edge_filter: EdgeFilter = EdgeFilter.ALL):
    return [(v, label) for v, label in neighbors(t) if edge_filter.admits(label)]


@dataclass
class ExplorationBall:
    base: TriArc
    radius: int
    edge_filter: EdgeFilter
    depth: dict = field(default_factory=dict)  # TriArc -> int, in BFS order
    edges: list = field(default_factory=list)  # (TriArc, TriArc, MoveLabel)

    @property
    def vertices(self) -> list[TriArc]:
        return list(self.depth)

    def adjacency(self) -> dict:
        adj = {v: [] for v in self.depth}
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def to_dot(self) -> str:
        lines = ["graph tripants {"]
        for v, d in self.depth.items():
            lines.append(f'  "{v}" [depth={d}];')
        for u, v, label in self.edges:
            lines.append(f'  "{u}" -- "{v}" [kind={label.kind.value}, arc="{label.arc}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_jsonl(self) -> str:
        records = [
            {"vertex": str(v), "depth": d, "triangle": str(farey.project(v))}
            for v, d in self.depth.items()
        ]
        records += [
            {"from": str(u), "to": str(v), "kind": label.kind.value, "arc": str(label.arc)}
            for u, v, label in self.edges
        ]
        return "".join(json.dumps(r) + "\n" for r in records)


def explore_ball(
    base: TriArc,
    radius: int,
    edge_filter: EdgeFilter = EdgeFilter.ALL,
    cap: int = RADIUS_CAP,
) -> ExplorationBall:
    if not 0 <= radius <= cap:
        raise RadiusCap(f"radius {radius} is outside 0..{cap}")
    ball = ExplorationBall(base, radius, edge_filter)
    ball.depth[base] = 0
    level = [base]
    for d in range(1, radius + 1):
        found = set()
        for u in level:
            for v, _ in filtered_neighbors(u, edge_filter):
                if v not in ball.depth:
                    found.add(v)
        level = sorted(found)
        for v in level:
            ball.depth[v] = d
    seen_edges = set()
    for u in ball.depth:
        for v, label in filtered_neighbors(u, edge_filter):
            if v in ball.depth:
                key = frozenset((u, v))
                if key not in seen_edges:
                    seen_edges.add(key)
                    ball.edges.append((u, v, label))
    return ball


def _bidirectional(s: TriArc, t: TriArc, edge_filter: EdgeFilter, max_len: int, max_expansions=None):
    """Shortest ``s``-``t`` vertex path of length at most ``max_len``, or None.

    Raises :class:`FiberSearchExhausted` once more than ``max_expansions``
    vertices have been expanded.
    """
    if s == t:
        return [s]
    parents = ({s: None}, {t: None})
    frontiers = ([s], [t])
    radii = [0, 0]
    expanded = 0
    while radii[0] + radii[1] < max_len and frontiers[0] and frontiers[1]:
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        mine, other = parents[side], parents[1 - side]
        best = None
        nxt = []
        for u in frontiers[side]:
            expanded += 1
            if max_expansions is not None and expanded > max_expansions:
                raise FiberSearchExhausted(
                    f"expanded {max_expansions} vertices without joining {s} to {t}"
                )
            for v, _ in filtered_neighbors(u, edge_filter):
                if v in mine:
                    continue
                mine[v] = u
                nxt.append(v)
                if v in other:
                    length = radii[side] + 1 + _depth(other, v)
                    if best is None or length < best[0]:
                        best = (length, v)
        radii[side] += 1
        frontiers = (nxt, frontiers[1]) if side == 0 else (frontiers[0], nxt)
        if best is not None:
            meet = best[1]
            head = _trace(parents[0], meet)[::-1]
            tail = _trace(parents[1], meet)[1:]
            return head + tail
    return None


def _trace(parents: dict, v):
    out = [v]
    while parents[out[-1]] is not None:
        out.append(parents[out[-1]])
    return out


def _depth(parents: dict, v) -> int:
    return len(_trace(parents, v)) - 1


def _labels(vertices: list[TriArc]) -> list[MoveLabel]:
    moves = []
    for u, v in zip(vertices, vertices[1:]):
        (label,) = [lab for w, lab in neighbors(u) if w == v]
        moves.append(label)
    return moves


def exact_distance(t1: TriArc, t2: TriArc, max_radius: int = RADIUS_CAP, cap: int = DISTANCE_CAP) -> Optional[int]:
    """Graph distance if it is at most ``max_radius``, else None."""
    if max_radius > cap:
        raise RadiusCap(f"max radius {max_radius} exceeds the cap {cap}")
    path = _bidirectional(t1, t2, EdgeFilter.ALL, max_radius)
    return None if path is None else len(path) - 1


def fiber_distance(t1: TriArc, t2: TriArc, max_radius: int = DISTANCE_CAP) -> Optional[int]:
    """Distance using big flips only (so both ends must share a projection)."""
    path = _bidirectional(t1, t2, EdgeFilter.BIG, max_radius)
    return None if path is None else len(path) - 1


def lower_bound_distance(t1: TriArc, t2: TriArc) -> int:
    return farey.dual_distance(farey.project(t1), farey.project(t2))


@dataclass(frozen=True)
class PathReport:
    start: TriArc
    end: TriArc
    moves: tuple[MoveLabel, ...]

    @property
    def length(self) -> int:
        return len(self.moves)

    @property
    def endpoints(self) -> tuple[TriArc, TriArc]:
        return self.start, self.end

    def replay(self) -> TriArc:
        return replay(self.start, self.moves)


def replay(t: TriArc, moves: Iterable[MoveLabel]) -> TriArc:
    for label in moves:
        t = flip(t, label)
    return t


def arc_with_slope(t: TriArc, s: farey.Slope):
    (arc,) = [arc for arc in t.arcs if farey.slope_of(arc.canon) == s]
    return arc


def walk_to_triangle(t: TriArc, target: farey.FareyTriangle) -> tuple[list[MoveLabel], TriArc]:
    """Small flips carrying ``t`` into the fiber over ``target``.

    Each step flips the arc whose slope is opposite the separating edge, so
    the projection follows the dual-tree geodesic exactly.
    """
    moves = []
    tri = farey.project(t)
    while tri != target:
        edge = farey.separating_edge(tri, target)
        label = MoveLabel(arc_with_slope(t, tri.opposite(edge)), MoveKind.SMALL1)
        t = flip(t, label)
        tri = farey.project(t)
        moves.append(label)
    return moves, t


def find_path(t1: TriArc, t2: TriArc, fiber_cap: int = 10_000) -> PathReport:
    """A (not necessarily shortest) move sequence from ``t1`` to ``t2``.

    Raises :class:`FiberSearchExhausted` when the final big-flip search
    expands more than ``fiber_cap`` vertices.
    """
    moves, mid = walk_to_triangle(t1, farey.project(t2))
    bridge = _bidirectional(mid, t2, EdgeFilter.BIG, max_len=10**9, max_expansions=fiber_cap)
    if bridge is None:
        raise FiberSearchExhausted(f"no big-flip path from {mid} to {t2}")
    report = PathReport(t1, t2, tuple(moves) + tuple(_labels(bridge)))
    if report.replay() != t2:
        raise AssertionError(f"path from {t1} does not replay to {t2}")
    return report


def find_cycles(ball: ExplorationBall, max_len: int) -> list[tuple[TriArc, ...]]:
    """Simple cycles through the base of length at most ``max_len``.

    Each cycle starts at the base and is listed once, up to reversal.
    """
    adj = ball.adjacency()
    base = ball.base
    found = set()
    path = [base]
    on_path = {base}

    def dfs(u):
        for v in adj[u]:
            if v == base and len(path) >= 3:
                cyc = tuple(path)
                rev = (base,) + tuple(reversed(path[1:]))
                found.add(min(cyc, rev, key=lambda c: [x.sort_key() for x in c]))
            elif v not in on_path and len(path) < max_len:
                path.append(v)
                on_path.add(v)
                dfs(v)
                path.pop()
                on_path.discard(v)

    dfs(base)
    return sorted(found, key=lambda c: (len(c), [x.sort_key() for x in c]))


def fibonacci_triangle(k: int) -> farey.FareyTriangle:
    """Triangle with vertices ``F(k)/F(k+1)``, ``F(k+1)/F(k+2)``, ``F(k+2)/F(k+3)``."""
    fib = [0, 1]
    while len(fib) < k + 4:
        fib.append(fib[-1] + fib[-2])
    return farey.make_triangle(*(farey.Slope(fib[i], fib[i + 1]) for i in (k, k + 1, k + 2)))


def far_tri_arc(n: int, base: TriArc) -> tuple[TriArc, list[MoveLabel]]:
    """A tri-arc at least ``n`` small flips from ``base``, reached by small flips.

    The target fiber lies over a Fibonacci triangle, whose dual-tree
    distance from the base triangle grows linearly in the index.
    """
    start = farey.project(base)
    k = 0
    while farey.dual_distance(start, fibonacci_triangle(k)) < n:
        k += 1
    moves, t = walk_to_triangle(base, fibonacci_triangle(k))
    return t, moves
