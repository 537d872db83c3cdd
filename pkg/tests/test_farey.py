from collections import deque

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tripants import farey
from tripants.errors import (
    EdgeNotInTriangle,
    NotATriangle,
    NotPrimitive,
    SameTriangle,
    WordParseError,
)
from tripants.farey import INFINITY, FareyEdge, Slope, parse_slope, parse_triangle
from tripants.freegroup import FreeWord as W
from tripants.triarc import base_tri_arc, big_flip, canonical_arc, make_tri_arc, small_flips

BASE = farey.BASE_TRIANGLE


def tri(text):
    return parse_triangle(text)


def bfs(start, radius):
    dist = {start: 0}
    queue = deque([start])
    while queue:
        t = queue.popleft()
        if dist[t] < radius:
            for n in farey.dual_neighbors(t):
                if n not in dist:
                    dist[n] = dist[t] + 1
                    queue.append(n)
    return dist


def test_slope_normalisation():
    assert Slope(-1, -2) == Slope(1, 2)
    assert Slope(-1, 0) == INFINITY
    assert str(Slope(-1, 1)) == "-1/1"
    assert str(INFINITY) == "inf"
    with pytest.raises(NotPrimitive):
        Slope(2, 4)
    with pytest.raises(NotPrimitive):
        Slope(0, 0)
    assert Slope.reduced(2, 4) == Slope(1, 2)


def test_slope_parsing():
    assert parse_slope("inf") == INFINITY
    assert parse_slope("3/5") == Slope(3, 5)
    assert parse_slope("-2") == Slope(-2, 1)
    with pytest.raises(WordParseError):
        parse_slope("x/2")


def test_slope_of_examples():
    assert farey.slope_of(W("a")) == INFINITY
    assert farey.slope_of(W("ab")) == Slope(1, 1)
    with pytest.raises(NotPrimitive):
        farey.slope_of(W("abAB"))
    with pytest.raises(NotPrimitive):
        farey.slope_of(W("aa"))


def test_is_farey_edge_examples():
    assert farey.is_farey_edge(Slope(0, 1), INFINITY)
    assert farey.is_farey_edge(Slope(1, 3), Slope(1, 2))
    assert not farey.is_farey_edge(Slope(1, 3), Slope(2, 3))


def test_make_triangle_examples():
    assert farey.make_triangle(Slope(0, 1), Slope(1, 1), INFINITY) == BASE
    t = farey.make_triangle(Slope(1, 2), Slope(1, 3), Slope(2, 5))
    # |1*3 - 2*1| = |1*5 - 2*2| = |1*5 - 3*2| = 1
    assert str(t) == "1/3,2/5,1/2"
    with pytest.raises(NotATriangle):
        farey.make_triangle(Slope(0, 1), Slope(1, 1), Slope(2, 1))
    with pytest.raises(NotATriangle):
        farey.make_triangle(Slope(0, 1), Slope(0, 1), INFINITY)


def test_project_examples():
    assert farey.project(base_tri_arc()) == BASE
    assert farey.project(make_tri_arc("a", "b", "ba")) == BASE
    assert farey.project(make_tri_arc("a", "b", "aB")) == tri("inf,-1/1,0/1")


def test_neighbor_across_examples():
    assert farey.neighbor_across(BASE, FareyEdge((Slope(0, 1), INFINITY))) == tri("0/1,inf,-1/1")
    assert farey.neighbor_across(BASE, FareyEdge((Slope(0, 1), Slope(1, 1)))) == tri("0,1,1/2")
    for e in BASE.edges():
        assert farey.neighbor_across(farey.neighbor_across(BASE, e), e) == BASE
    with pytest.raises(EdgeNotInTriangle):
        farey.neighbor_across(BASE, FareyEdge((Slope(0, 1), Slope(-1, 1))))


def test_dual_neighbors_examples():
    got = set(farey.dual_neighbors(BASE))
    assert got == {tri("0,inf,-1"), tri("0,1,1/2"), tri("1,inf,2")}
    for n in got:
        assert BASE in farey.dual_neighbors(n)


@pytest.mark.parametrize(
    "target, edge",
    [("0,inf,-1", "0,inf"), ("1/2,1/3,2/5", "0,1"), ("1,inf,2", "1,inf")],
)
def test_separating_edge_examples(target, edge):
    e = farey.separating_edge(BASE, tri(target))
    assert set(e.endpoints) == {parse_slope(s) for s in edge.split(",")}


def test_separating_edge_same_triangle():
    with pytest.raises(SameTriangle):
        farey.separating_edge(BASE, BASE)


def test_dual_distance_examples():
    assert farey.dual_distance(BASE, BASE) == 0
    assert farey.dual_distance(BASE, tri("0,inf,-1")) == 1
    target = tri("1/2,1/3,2/5")
    assert farey.dual_distance(BASE, target) == 3
    assert [str(t) for t in farey.dual_path(BASE, target)] == [
        "inf,0/1,1/1", "0/1,1/2,1/1", "0/1,1/3,1/2", "1/3,2/5,1/2",
    ]
    assert bfs(BASE, 3)[target] == 3


def test_walk_matches_bfs_from_base():
    dist = bfs(BASE, 8)
    assert len(dist) == 3 * 2 ** 8 - 2
    for t, d in dist.items():
        assert farey.dual_distance(BASE, t) == d


def test_walk_strictly_decreases_bfs_distance():
    dist = bfs(BASE, 6)
    for t in list(dist)[:: 7]:
        path = farey.dual_path(t, BASE)
        assert [dist[p] for p in path] == list(range(dist[t], -1, -1))


def test_metric_on_sampled_triples():
    tris = list(bfs(BASE, 4))[::3]
    for x in tris[:10]:
        for y in tris[:10]:
            assert farey.dual_distance(x, y) == farey.dual_distance(y, x)
            assert (farey.dual_distance(x, y) == 0) == (x == y)
            for z in tris[:10]:
                assert farey.dual_distance(x, z) <= farey.dual_distance(x, y) + farey.dual_distance(y, z)


def test_big_integers_are_exact():
    fib = [0, 1]
    while len(fib) < 200:
        fib.append(fib[-1] + fib[-2])
    t = farey.make_triangle(*(Slope(fib[i], fib[i + 1]) for i in (150, 151, 152)))
    assert fib[151] > 2 ** 64
    assert farey.dual_distance(BASE, t) >= 150


def test_projection_invariants(ball3):
    for t in ball3.vertices:
        p = farey.project(t)
        for a in t.arcs:
            assert farey.project(big_flip(t, a)[0]) == p
            for s in small_flips(t, a):
                q = farey.project(s)
                assert q in farey.dual_neighbors(p)
                assert len(set(p) & set(q)) == 2


def test_local_surjectivity(base):
    from tripants.explorer import explore_ball

    for r in range(5):
        hit = {farey.project(t) for t in explore_ball(base, r).vertices}
        assert set(bfs(BASE, r)) <= hit


@given(st.lists(st.integers(0, 2), max_size=40))
def test_random_walk_distance_bounds(picks):
    t = BASE
    for i in picks:
        t = farey.dual_neighbors(t)[i]
    d = farey.dual_distance(BASE, t)
    assert d <= len(picks) and d % 2 == len(picks) % 2
    assert farey.dual_distance(t, BASE) == d
