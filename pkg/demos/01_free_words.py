"""Words in the free group on a, b: reduction, conjugacy, bases.

Uppercase letters are inverses, so ``A`` is a^-1.
"""
from tripants import freegroup as fg

w = fg.parse_word("abBAab")
print("abBAab reduces to", w)

core, conj = fg.cyclic_reduce(fg.parse_word("abAbaBA"))
print("abAbaBA = conj * core * conj^-1 with core", core, "and conj", conj)

print("ab ~ ba:", fg.is_conjugate(fg.parse_word("ab"), fg.parse_word("ba")))
print("a ~ b:", fg.is_conjugate(fg.G1, fg.G2))

# a pair is a basis iff its commutator is conjugate to [a,b] or [b,a]
for x, y in [("a", "ab"), ("ab", "ba"), ("aab", "ab")]:
    print(f"({x}, {y}) basis: {fg.is_basis(fg.parse_word(x), fg.parse_word(y))}")

print("abelian image of aabAb:", tuple(fg.abelianize(fg.parse_word("aabAb"))))
