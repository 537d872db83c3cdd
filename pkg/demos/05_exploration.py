"""Balls, distances, paths, a short cycle, and tri-arcs far from the base."""
from tripants.explorer import (
    EdgeFilter,
    exact_distance,
    explore_ball,
    far_tri_arc,
    find_cycles,
    find_path,
    lower_bound_distance,
)
from tripants.triarc import base_tri_arc, parse_tri_arc

base = base_tri_arc()
for r in range(5):
    print(f"radius {r}: {len(explore_ball(base, r).vertices)} vertices,"
          f" {len(explore_ball(base, r, EdgeFilter.BIG).vertices)} in the fiber")

cycles = find_cycles(explore_ball(base, 2), 3)
print(f"{len(cycles)} triangles through the base, e.g.", " -> ".join(map(str, cycles[0])))

t = parse_tri_arc("a,abA,aabA")
print("distance to", t, "is", exact_distance(base, t, 4))
report = find_path(base, t)
print("path:", " ".join(map(str, report.moves)))

for n in (5, 10, 20):
    far, moves = far_tri_arc(n, base)
    print(f"n={n}: lower bound {lower_bound_distance(base, far)},"
          f" longest arc has {max(len(a.canon) for a in far.arcs)} letters")
