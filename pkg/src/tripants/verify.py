"""Named verification suites over finite windows of the tri-pants graph.

Each suite returns a list of :class:`Check`; :func:`run_suite` bundles them
into a :class:`Report`. The CLI ``verify`` command is a thin wrapper.
"""
from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass, field

from . import farey
from . import freegroup as fg
from . import pushmap as pm
from .explorer import (
    EdgeFilter,
    explore_ball,
    far_tri_arc,
    fiber_distance,
    find_cycles,
    find_path,
    lower_bound_distance,
)
from .triarc import (
    MoveKind,
    base_tri_arc,
    big_flip,
    canonical_arc,
    make_tri_arc,
    neighbors,
    small_flips,
)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class Report:
    suite: str
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(c.passed for c in self.checks)

    @property
    def failed(self) -> int:
        return len(self.checks) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def lines(self):
        for c in self.checks:
            yield f"{'PASS' if c.passed else 'FAIL'}\t{self.suite}\t{c.name}\t{c.detail}"
        yield f"SUMMARY\t{self.suite}\t{self.passed} passed, {self.failed} failed"


def _check(name, failures, total):
    failures = list(failures)
    detail = f"{total} cases" if not failures else f"{len(failures)}/{total} failed, e.g. {failures[0]}"
    return Check(name, not failures, detail)


def random_word(rng: random.Random, max_len: int) -> fg.FreeWord:
    return fg.FreeWord("".join(rng.choice(fg.ALPHABET) for _ in range(rng.randint(0, max_len))))


def random_reachable(rng: random.Random, steps: int):
    t = base_tri_arc()
    for _ in range(steps):
        t = rng.choice(neighbors(t))[0]
    return t


def suite_freegroup(radius, rng):
    checks = []
    words = [random_word(rng, 12) for _ in range(300)]
    raw = ["".join(rng.choice(fg.ALPHABET) for _ in range(rng.randint(0, 16))) for _ in range(300)]
    checks.append(_check(
        "reduce is idempotent",
        [s for s in raw if fg.reduce(str(fg.reduce(s))) != fg.reduce(s)], len(raw)))
    pairs = list(zip(words, reversed(words)))
    checks.append(_check(
        "invert is an involutive antihomomorphism",
        [(u, v) for u, v in pairs if ~~u != u or ~(u * v) != ~v * ~u], len(pairs)))
    triples = [tuple(random_word(rng, 8) for _ in range(3)) for _ in range(10_000)]
    checks.append(_check(
        "concat is associative",
        [t for t in triples if (t[0] * t[1]) * t[2] != t[0] * (t[1] * t[2])], len(triples)))
    checks.append(_check(
        "abelianize is a homomorphism",
        [(u, v) for u, v in pairs
         if fg.abelianize(u * v) != tuple(map(sum, zip(fg.abelianize(u), fg.abelianize(v))))],
        len(pairs)))
    short = [fg.FreeWord("".join(p)) for n in range(4) for p in itertools.product(fg.ALPHABET, repeat=n)]
    short = sorted(set(short), key=fg.FreeWord.sort_key)
    conj = [fg.FreeWord("".join(p)) for n in range(5) for p in itertools.product(fg.ALPHABET, repeat=n)]
    conj = set(conj)
    bad = []
    for u in short:
        orbit = {g * u * ~g for g in conj}
        for v in short:
            if fg.is_conjugate(u, v) != (v in orbit):
                bad.append((u, v))
    checks.append(_check("is_conjugate agrees with brute-force conjugation", bad, len(short) ** 2))
    basis_pairs = [(u, v) for u in short for v in short if fg.is_basis(u, v)]
    checks.append(_check(
        "is_basis implies unimodular abelianization",
        [(u, v) for u, v in basis_pairs
         if abs(fg.abelianize(u).p * fg.abelianize(v).q - fg.abelianize(u).q * fg.abelianize(v).p) != 1],
        len(basis_pairs)))
    sample = rng.sample(basis_pairs, min(200, len(basis_pairs)))
    checks.append(_check(
        "substitution by a basis preserves the standard basis",
        [p for p in sample if not fg.is_basis(fg.substitute(p, fg.G1), fg.substitute(p, fg.G2))],
        len(sample)))
    return checks


def suite_triarc(radius, rng):
    checks = []
    ball = explore_ball(base_tri_arc(), radius)
    verts = ball.vertices
    bad = []
    for t in verts:
        for arc in t.arcs:
            p, q = (x for x in t.arcs if x != arc)
            hits = [
                (x, y)
                for first, second in ((p, q), (q, p))
                for x in first.orientations()
                for y in second.orientations()
                if (x * y) in arc.orientations()
            ]
            # exactly one match up to (x, y) <-> (y^-1, x^-1)
            if len(hits) != 2 or (~hits[0][1], ~hits[0][0]) != hits[1]:
                bad.append((t, arc, hits))
    checks.append(_check("decomposition is unique up to inversion symmetry", bad, 3 * len(verts)))
    bad = [(t, arc) for t in verts for arc in t.arcs
           if big_flip(*big_flip(t, arc))[0] != t]
    checks.append(_check("big flip is an involution", bad, 3 * len(verts)))
    bad = []
    for t in verts:
        for arc in t.arcs:
            s1, s2 = small_flips(t, arc)
            new = next(x for x in s1.arcs if x not in t.arcs)
            if big_flip(s1, new)[0] != s2:
                bad.append((t, arc))
    checks.append(_check("small-flip outputs differ by a big flip", bad, 3 * len(verts)))
    bad = []
    for t in verts:
        for v, _ in neighbors(t):
            try:
                make_tri_arc(*(str(a) for a in v.arcs))
            except ValueError as exc:
                bad.append((v, exc))
    checks.append(_check("flips preserve tri-arc validity", bad, 9 * len(verts)))
    bad = [t for t in verts
           if not all(any(fg.is_basis(x, y) for x in u.orientations() for y in v.orientations())
                      for u, v in itertools.combinations(t.arcs, 2))]
    checks.append(_check("every pair of arcs is a basis", bad, len(verts)))
    samples = [random_reachable(rng, rng.randint(0, 12)) for _ in range(1000)]
    bad = [(t, arc) for t in samples for arc in t.arcs if big_flip(*big_flip(t, arc))[0] != t]
    checks.append(_check("big flip is an involution on random tri-arcs", bad, 3 * len(samples)))
    return checks


def suite_noncommutation(radius, rng):
    base = base_tri_arc()
    c, b = canonical_arc("a"), canonical_arc("b")
    a = canonical_arc("ab")  # a = cb
    ab_first = big_flip(big_flip(base, a)[0], b)[0]
    ba_first = big_flip(big_flip(base, b)[0], a)[0]
    want_1 = make_tri_arc("ba", "Aba", "a")  # {bc, c^-1 b c, c}
    want_2 = make_tri_arc("aabA", "abA", "a")  # {c a c^-1, a c^-1, c}
    return [
        Check("big flip of ab on the base gives {a, b, ba}",
              big_flip(base, a)[0] == make_tri_arc("a", "b", "ba"), str(big_flip(base, a)[0])),
        Check("flip a-arc then b-arc matches the worked triple", ab_first == want_1, str(ab_first)),
        Check("flip b-arc then a-arc matches the worked triple", ba_first == want_2, str(ba_first)),
        Check("the two orders differ", ab_first != ba_first, f"{ab_first} vs {ba_first}"),
    ]


def suite_degree(radius, rng):
    checks = []
    ball = explore_ball(base_tri_arc(), radius)
    interior = [t for t, d in ball.depth.items() if d < radius]
    bad = [t for t in interior if len({v for v, _ in neighbors(t)} - {t}) != 9]
    checks.append(_check("interior vertices have 9 distinct neighbours", bad, len(interior)))
    adj = ball.adjacency()
    bad = [t for t in interior if len(set(adj[t])) != 9]
    checks.append(_check("ball stores all 9 edges at interior vertices", bad, len(interior)))
    fib = explore_ball(base_tri_arc(), radius, EdgeFilter.BIG)
    adj = fib.adjacency()
    interior = [t for t, d in fib.depth.items() if d < radius]
    bad = [t for t in interior if len(set(adj[t])) != 3]
    checks.append(_check("big-flip ball interiors are 3-regular", bad, len(interior)))
    sizes = [len(explore_ball(base_tri_arc(), r).depth) for r in range(min(radius, 4) + 1)]
    checks.append(Check("ball size strictly increases with radius",
                        all(x < y for x, y in zip(sizes, sizes[1:])), str(sizes)))
    return checks


def suite_projection(radius, rng):
    checks = []
    base = base_tri_arc()
    ball = explore_ball(base, radius)
    bad = []
    for u, v, label in ball.edges:
        pu, pv = farey.project(u), farey.project(v)
        if label.kind is MoveKind.BIG:
            if pu != pv:
                bad.append((u, v))
        elif pv not in farey.dual_neighbors(pu) or len(set(pu) & set(pv)) != 2:
            bad.append((u, v))
    checks.append(_check("big edges keep the projection, small edges cross one dual edge",
                         bad, len(ball.edges)))
    fib = explore_ball(base, radius, EdgeFilter.BIG)
    projections = {farey.project(t) for t in fib.vertices}
    checks.append(Check("big-flip ball lies in one fiber", len(projections) == 1,
                        f"{len(fib.depth)} vertices"))
    start = farey.project(base)
    bad = [t for t, d in ball.depth.items() if lower_bound_distance(base, t) > d]
    checks.append(_check("lower bound never exceeds BFS depth", bad, len(ball.depth)))
    r = min(radius, 4)
    hit = {farey.project(t) for t, d in ball.depth.items() if d <= r}
    dual = _dual_ball(start, r)
    checks.append(_check("projection is onto the dual ball of the same radius",
                         [tri for tri in dual if tri not in hit], len(dual)))
    return checks


def _dual_ball(start, radius):
    dist = {start: 0}
    queue = deque([start])
    while queue:
        tri = queue.popleft()
        if dist[tri] == radius:
            continue
        for n in farey.dual_neighbors(tri):
            if n not in dist:
                dist[n] = dist[tri] + 1
                queue.append(n)
    return dist


def suite_farey(radius, rng):
    checks = []
    ball = _dual_ball(farey.BASE_TRIANGLE, 8)
    tris = list(ball)
    bad = [t for t in tris if farey.dual_distance(farey.BASE_TRIANGLE, t) != ball[t]]
    checks.append(_check("walk distance from the base matches BFS (dual radius 8)", bad, len(tris)))
    near = [t for t in tris if ball[t] <= 4]
    sample = rng.sample(near, min(40, len(near)))
    bad = []
    for t in sample:
        oracle = _dual_ball(t, 8)
        for u in sample:
            if farey.dual_distance(t, u) != oracle[u]:
                bad.append((t, u))
    checks.append(_check("walk distance matches BFS between sampled pairs", bad, len(sample) ** 2))
    bad = [(x, y, z) for x, y, z in itertools.product(sample[:12], repeat=3)
           if farey.dual_distance(x, z) > farey.dual_distance(x, y) + farey.dual_distance(y, z)
           or farey.dual_distance(x, y) != farey.dual_distance(y, x)]
    checks.append(_check("dual distance is a metric", bad, 12 ** 3))
    bad = [t for t in tris for n in farey.dual_neighbors(t) if t not in farey.dual_neighbors(n)]
    checks.append(_check("dual adjacency is symmetric", bad, 3 * len(tris)))
    return checks


def suite_push(radius, rng):
    checks = []
    words = ["".join(rng.choice("aAbB") for _ in range(rng.randint(0, 12))) for _ in range(1000)]
    checks.append(_check("push automorphisms act trivially on homology",
                         [w for w in words if not pm.forget_check(pm.push_auto(w))], len(words)))
    checks.append(_check("push of theta then its inverse is the identity",
                         [w for w in words
                          if pm.push_auto(pm.inverse_word(w)).compose(pm.push_auto(w)) != pm.IDENTITY_AUTO],
                         len(words)))
    ball = explore_ball(base_tri_arc(), min(radius, 2))
    short = ["".join(rng.choice("aAbB") for _ in range(rng.randint(0, 6))) for _ in range(20)]
    bad = [(w, t) for w in short for t in ball.vertices
           if farey.project(pm.apply_push(w, t)) != farey.project(t)]
    checks.append(_check("pushes stay in the fiber", bad, len(short) * len(ball.depth)))
    bad = []
    for t in ball.vertices:
        for g in pm.PushGen:
            d = fiber_distance(t, pm.apply_local_push((g,), t), 6)
            if d != 2:
                bad.append((t, g, d))
    checks.append(_check("pushes along a tri-arc's own arcs are two big flips",
                         bad, 4 * len(ball.depth)))
    bad = []
    for t in ball.vertices:
        for g in pm.PushGen:
            d = fiber_distance(t, pm.apply_push((g,), t), 8)
            if d is None or d % 2 or d == 0:
                bad.append((t, g, d))
    checks.append(_check("generator pushes are an even, nonzero number of big flips",
                         bad, 4 * len(ball.depth)))
    return checks


def suite_connectivity(radius, rng):
    base = base_tri_arc()
    ball = explore_ball(base, radius)
    bad = []
    for t in ball.vertices:
        try:
            report = find_path(base, t)
        except ValueError as exc:
            bad.append((t, exc))
            continue
        if report.replay() != t or report.length < lower_bound_distance(base, t):
            bad.append(t)
    checks = [_check("paths from the base reach every ball vertex", bad, len(ball.depth))]
    thetas = ["".join(p) for n in range(5) for p in itertools.product("aAbB", repeat=n)]
    bad = []
    for w in thetas:
        target = pm.apply_push(w, base)
        if find_path(base, target).replay() != target:
            bad.append(w)
    checks.append(_check("paths reach every push image (|theta| <= 4)", bad, len(thetas)))
    return checks


def suite_diameter(radius, rng):
    base = base_tri_arc()
    checks = []
    for n in (5, 10, 15, 20):
        t, moves = far_tri_arc(n, base)
        lb = lower_bound_distance(base, t)
        checks.append(Check(f"tri-arc at lower-bound distance >= {n}", lb >= n, f"projection {farey.project(t)}, bound {lb}, {sum(len(a.canon) for a in t.arcs)} letters"))
    return checks


def suite_cycles(radius, rng):
    base = base_tri_arc()
    ball = explore_ball(base, max(2, min(radius, 3)))
    cycles = find_cycles(ball, 3)
    s1, s2 = small_flips(base, canonical_arc("ab"))
    want = {(base, s1, s2), (base, s2, s1)}
    checks = [
        Check("small-big-small 3-cycle through the base", any(c in want for c in cycles),
              f"{len(cycles)} triangles through the base"),
        Check("no 2-cycles", not find_cycles(ball, 2)),
    ]
    fiber = explore_ball(base, 5, EdgeFilter.BIG)
    checks.append(Check("experiment: big-flip ball of radius 5 has no cycles",
                        not find_cycles(fiber, 11), f"{len(fiber.depth)} vertices"))
    return checks


SUITES = {
    "freegroup": suite_freegroup,
    "triarc": suite_triarc,
    "noncommutation": suite_noncommutation,
    "degree": suite_degree,
    "projection": suite_projection,
    "farey": suite_farey,
    "push": suite_push,
    "connectivity": suite_connectivity,
    "diameter": suite_diameter,
    "cycles": suite_cycles,
}


def run_suite(name: str, radius: int = 3, seed: int = 0) -> Report:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    return Report(name, SUITES[name](radius, random.Random(seed)))
