"""Slopes, Farey triangles and the dual tree.

Slopes are reduced fractions ``p/q`` with ``q >= 0``; infinity is ``1/0``.
Everything is exact integer arithmetic: the cyclic order of slopes on the
circle is read off from signs of 2x2 determinants of the homogeneous
vectors ``(p, q)``.

    >>> base = make_triangle(Slope(0, 1), Slope(1, 1), INFINITY)
    >>> str(base)
    'inf,0/1,1/1'
    >>> [str(n) for n in dual_neighbors(base)]
    ['inf,-1/1,0/1', 'inf,1/1,2/1', '0/1,1/2,1/1']
"""
from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass

from . import freegroup as fg
from .errors import (
    EdgeNotInTriangle,
    NotATriangle,
    NotPrimitive,
    SameTriangle,
    WordParseError,
)


@dataclass(frozen=True)
class Slope:
    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if math.gcd(p, q) != 1:
            raise NotPrimitive(f"({p}, {q}) is not a primitive pair")
        if q < 0 or (q == 0 and p < 0):
            object.__setattr__(self, "p", -p)
            object.__setattr__(self, "q", -q)

    @classmethod
    def reduced(cls, p: int, q: int) -> "Slope":
        g = math.gcd(p, q)
        if g == 0:
            raise NotPrimitive("(0, 0) has no slope")
        return cls(p // g, q // g)

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    def __lt__(self, other: "Slope") -> bool:
        # infinity first, then increasing value
        if self.q == 0:
            return other.q != 0
        if other.q == 0:
            return False
        return self.p * other.q < other.p * self.q

    def __str__(self):
        return "inf" if self.q == 0 else f"{self.p}/{self.q}"


INFINITY = Slope(1, 0)


def parse_slope(text: str) -> Slope:
    text = text.strip()
    if text in ("inf", "1/0", "-1/0"):
        return INFINITY
    num, sep, den = text.partition("/")
    try:
        p, q = int(num), int(den) if sep else 1
    except ValueError:
        raise WordParseError(f"invalid slope {text!r}") from None
    return Slope(p, q)


def det(s: Slope, t: Slope) -> int:
    return s.p * t.q - s.q * t.p


def is_farey_edge(s1: Slope, s2: Slope) -> bool:
    return abs(det(s1, s2)) == 1


@dataclass(frozen=True)
class FareyEdge:
    endpoints: tuple[Slope, Slope]

    def __post_init__(self):
        u, v = sorted(self.endpoints)
        if not is_farey_edge(u, v):
            raise NotATriangle(f"{u} and {v} are not Farey neighbours")
        object.__setattr__(self, "endpoints", (u, v))

    def __str__(self):
        return ",".join(map(str, self.endpoints))


@dataclass(frozen=True)
class FareyTriangle:
    vertices: tuple[Slope, Slope, Slope]

    def __str__(self):
        return ",".join(map(str, self.vertices))

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, s) -> bool:
        return s in self.vertices

    def edges(self) -> list[FareyEdge]:
        return [FareyEdge(pair) for pair in itertools.combinations(self.vertices, 2)]

    @functools.cached_property
    def raw(self) -> tuple:
        return tuple((s.p, s.q) for s in self.vertices)

    def opposite(self, e: FareyEdge) -> Slope:
        if not all(v in self.vertices for v in e.endpoints):
            raise EdgeNotInTriangle(f"{e} is not an edge of {self}")
        (w,) = (v for v in self.vertices if v not in e.endpoints)
        return w


def make_triangle(s1: Slope, s2: Slope, s3: Slope) -> FareyTriangle:
    vs = (s1, s2, s3)
    if len(set(vs)) != 3:
        raise NotATriangle(f"{s1}, {s2}, {s3} are not distinct")
    for u, v in itertools.combinations(vs, 2):
        if not is_farey_edge(u, v):
            raise NotATriangle(f"{u} and {v} are not Farey neighbours (|det| = {abs(det(u, v))})")
    return FareyTriangle(tuple(sorted(vs)))


def parse_triangle(text: str) -> FareyTriangle:
    parts = text.split(",")
    if len(parts) != 3:
        raise WordParseError(f"a triangle is three comma-separated slopes, got {text!r}")
    return make_triangle(*map(parse_slope, parts))


def slope_of(w: fg.FreeWord) -> Slope:
    p, q = fg.abelianize(w)
    if math.gcd(p, q) != 1:
        raise NotPrimitive(f"{w} abelianizes to ({p}, {q}), which is not primitive")
    return Slope(p, q)


def project(t) -> FareyTriangle:
    """Triangle of slopes of the three arcs of a tri-arc."""
    return make_triangle(*(slope_of(arc.canon) for arc in t.arcs))


def neighbor_across(t: FareyTriangle, e: FareyEdge) -> FareyTriangle:
    w = t.opposite(e)
    u, v = e.endpoints
    # the two triangles on e have third vertices u + v and u - v
    for cand in (Slope(u.p + v.p, u.q + v.q), Slope(u.p - v.p, u.q - v.q)):
        if cand != w:
            return FareyTriangle(tuple(sorted((u, v, cand))))
    raise AssertionError("unreachable: u + v and u - v are distinct slopes")


def dual_neighbors(t: FareyTriangle) -> list[FareyTriangle]:
    return [neighbor_across(t, e) for e in t.edges()]


# The walk works on raw (p, q) pairs; it runs millions of times in the checks.
# For slopes x, z the sign of det(x, z) says whether x precedes z in angular
# order on [0, pi), where infinity = (1, 0) comes first. z lies strictly
# between u and v exactly when det(u, z) and det(v, z) have opposite signs.

def _normalized(p, q):
    return (-p, -q) if q < 0 or (q == 0 and p < 0) else (p, q)


def _step(tri, z):
    """Cross the edge of ``tri`` whose far arc holds ``z``; return (edge, next)."""
    a, b, c = tri
    z0, z1 = z
    sa = a[0] * z1 - a[1] * z0 > 0
    sb = b[0] * z1 - b[1] * z0 > 0
    sc = c[0] * z1 - c[1] * z0 > 0
    ac = a[0] * c[1] - a[1] * c[0] > 0
    bc = b[0] * c[1] - b[1] * c[0] > 0
    # edge ab faces z iff "z between a, b" differs from "c between a, b"
    if (sa != sb) != (ac != bc):
        u, v, w = a, b, c
    else:
        ab = a[0] * b[1] - a[1] * b[0] > 0
        cb = not bc
        if (sa != sc) != (ab != cb):
            u, v, w = a, c, b
        else:
            u, v, w = b, c, a
    third = _normalized(u[0] + v[0], u[1] + v[1])
    if third == w:
        third = _normalized(u[0] - v[0], u[1] - v[1])
    return (u, v), (u, v, third)


def _raw(t: FareyTriangle):
    return t.raw


def _from_raw(vs) -> FareyTriangle:
    return FareyTriangle(tuple(sorted(Slope(p, q) for p, q in vs)))


def separating_edge(t: FareyTriangle, target: FareyTriangle) -> FareyEdge:
    """The edge of ``t`` crossed by the dual-tree path from ``t`` to ``target``."""
    if t == target:
        raise SameTriangle(f"{t} is the target itself")
    z = next(v for v in target.vertices if v not in t.vertices)
    (u, v), _ = _step(_raw(t), (z.p, z.q))
    return FareyEdge((Slope(*u), Slope(*v)))


def _walk(t1: FareyTriangle, t2: FareyTriangle):
    cur = _raw(t1)
    goal = _raw(t2)
    yield cur
    while True:
        for z in goal:
            if z not in cur:
                break
        else:
            return
        _, cur = _step(cur, z)
        yield cur


def dual_path(t1: FareyTriangle, t2: FareyTriangle) -> list[FareyTriangle]:
    """Triangles visited by the dual-tree geodesic, both ends included."""
    return [_from_raw(vs) for vs in _walk(t1, t2)]


def dual_distance(t1: FareyTriangle, t2: FareyTriangle) -> int:
    """Length of the separating-edge walk from ``t1`` to ``t2``."""
    goal = _raw(t2)
    cur = _raw(t1)
    z = next((g for g in goal if g not in cur), None)
    if z is None:
        return 0
    (u, v), (_, _, m) = _step(cur, z)
    n = 1
    # After crossing (u, v) into (u, v, m) the walk never turns back, so the
    # next edge is (u, m) or (m, v): (u, m) when z and v sit on opposite
    # sides of it.
    while True:
        if z in (u, v, m):
            z = next((g for g in goal if g not in (u, v, m)), None)
            if z is None:
                return n
        zb = (u[0] * z[1] - u[1] * z[0] > 0) != (m[0] * z[1] - m[1] * z[0] > 0)
        vb = (u[0] * v[1] - u[1] * v[0] > 0) != (m[0] * v[1] - m[1] * v[0] > 0)
        if zb != vb:
            far, v = v, m
        else:
            far, u = u, m
        m = _normalized(u[0] + v[0], u[1] + v[1])
        if m == far:
            m = _normalized(u[0] - v[0], u[1] - v[1])
        n += 1


BASE_TRIANGLE = FareyTriangle((INFINITY, Slope(0, 1), Slope(1, 1)))
