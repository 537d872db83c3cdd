"""Point pushes act on tri-arcs and stay inside the fiber.

A push acts trivially on homology, so the projection never moves; a push
along one of the tri-arc's own arcs is two big flips.
"""
from tripants import farey
from tripants import pushmap as pm
from tripants.explorer import fiber_distance
from tripants.triarc import base_tri_arc

base = base_tri_arc()
for word in ["a", "A", "b", "B", "ab", "abAB"]:
    auto = pm.push_auto(word)
    t = pm.apply_push(word, base)
    print(
        f"push {word:<5} a -> {auto.image_g1}, b -> {auto.image_g2};"
        f" {t} over {farey.project(t)}, forget check {pm.forget_check(auto)}"
    )

print("fiber distance of push along a:", fiber_distance(base, pm.apply_push("a", base)))
