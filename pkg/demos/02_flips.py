"""The nine neighbours of the base tri-arc, and the non-commutation of big flips."""
from tripants.triarc import base_tri_arc, big_flip, canonical_arc, neighbors

base = base_tri_arc()
print("base:", base)
for v, label in neighbors(base):
    print(f"  {str(label):<10} {v}")

# two big flips on different arcs do not commute
a, b = canonical_arc("ab"), canonical_arc("b")
first = big_flip(big_flip(base, a)[0], b)[0]
second = big_flip(big_flip(base, b)[0], a)[0]
print("flip ab then b:", first)
print("flip b then ab:", second)

# a big flip undoes itself when applied to the arc it created
t, new = big_flip(base, a)
print("round trip:", big_flip(t, new)[0] == base)
