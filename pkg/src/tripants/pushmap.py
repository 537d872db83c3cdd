"""Point-push automorphisms of F(a, b) and their action on tri-arcs.

A push word is spelled like a free word (``a``, ``A``, ``b``, ``B``) but
each letter names a push generator. Pushing along ``theta1 * theta2``
pushes along ``theta1`` first, so as maps it is
``push(theta2) o push(theta1)``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from . import freegroup as fg
from .errors import NotBasis, WordParseError
from .freegroup import FreeWord
from .triarc import TriArc, canonical_arc, decompose


class PushGen(enum.Enum):
    ALONG_G1 = "a"
    ALONG_G1_INVERSE = "A"
    ALONG_G2 = "b"
    ALONG_G2_INVERSE = "B"

    def inverse(self) -> "PushGen":
        return PushGen(self.value.swapcase())


@dataclass(frozen=True)
class Automorphism:
    image_g1: FreeWord
    image_g2: FreeWord

    def __post_init__(self):
        if not fg.is_basis(self.image_g1, self.image_g2):
            raise NotBasis(f"({self.image_g1}, {self.image_g2}) is not a free basis")

    @property
    def images(self) -> tuple[FreeWord, FreeWord]:
        return self.image_g1, self.image_g2

    def __call__(self, w: FreeWord) -> FreeWord:
        return fg.substitute(self.images, w)

    def compose(self, inner: "Automorphism") -> "Automorphism":
        """``self o inner``: apply ``inner`` first."""
        return Automorphism(self(inner.image_g1), self(inner.image_g2))

    def __str__(self):
        return f"a->{self.image_g1 or '1'}, b->{self.image_g2 or '1'}"


IDENTITY_AUTO = Automorphism(fg.G1, fg.G2)

# Images fixed by the four two-big-flip cases worked out on {a, b, ab}:
# along a conjugates b by a, along b conjugates a by b.
_GENERATORS = {
    PushGen.ALONG_G1: Automorphism(FreeWord("a"), FreeWord("abA")),
    PushGen.ALONG_G1_INVERSE: Automorphism(FreeWord("a"), FreeWord("Aba")),
    PushGen.ALONG_G2: Automorphism(FreeWord("baB"), FreeWord("b")),
    PushGen.ALONG_G2_INVERSE: Automorphism(FreeWord("Bab"), FreeWord("b")),
}


def push_generator(g: PushGen) -> Automorphism:
    return _GENERATORS[g]


def parse_push_word(text: str) -> tuple[PushGen, ...]:
    try:
        return tuple(PushGen(c) for c in text.strip())
    except ValueError:
        raise WordParseError(f"invalid push word {text!r}: only a, b, A, B are allowed") from None


def push_auto(theta) -> Automorphism:
    if isinstance(theta, str):
        theta = parse_push_word(theta)
    auto = IDENTITY_AUTO
    for g in theta:
        auto = push_generator(g).compose(auto)
    return auto


def apply_push(theta, t: TriArc) -> TriArc:
    auto = push_auto(theta)
    return TriArc(canonical_arc(auto(arc.canon)) for arc in t.arcs)


def forget_check(auto: Automorphism) -> bool:
    """True iff the automorphism acts trivially on homology."""
    return fg.abelianize(auto.image_g1) == (1, 0) and fg.abelianize(auto.image_g2) == (0, 1)


def inverse_word(theta) -> tuple[PushGen, ...]:
    if isinstance(theta, str):
        theta = parse_push_word(theta)
    return tuple(g.inverse() for g in reversed(theta))


def local_basis(t: TriArc) -> tuple[FreeWord, FreeWord]:
    """Oriented ``(x, y)`` from the arcs of ``t`` with ``x * y`` its largest arc."""
    return decompose(t, t.arcs[-1])


def apply_local_push(theta, t: TriArc) -> TriArc:
    """Push along the arcs of ``t`` itself rather than along ``a`` and ``b``.

    With ``(x, y) = local_basis(t)`` the letters ``a``/``b`` of ``theta``
    mean pushes along ``x``/``y``: the result is ``f(P(a)), f(P(b)),
    f(P(ab))`` where ``f`` sends ``a, b`` to ``x, y``.  On the base tri-arc
    this agrees with :func:`apply_push`.
    """
    x, y = local_basis(t)
    auto = push_auto(theta)
    return TriArc(
        canonical_arc(fg.substitute((x, y), auto(w)))
        for w in (fg.G1, fg.G2, FreeWord("ab"))
    )
