"""Projecting tri-arcs to Farey triangles and walking the dual tree."""
from tripants import farey
from tripants.triarc import base_tri_arc, neighbors

base = base_tri_arc()
print("base projects to", farey.project(base))
for v, label in neighbors(base):
    print(f"  {str(label):<10} -> {farey.project(v)}")

target = farey.parse_triangle("1/3,2/5,1/2")
path = farey.dual_path(farey.BASE_TRIANGLE, target)
print("dual geodesic:", " | ".join(map(str, path)))
print("distance:", farey.dual_distance(farey.BASE_TRIANGLE, target))
