"""Tri-arcs as canonical triples of unoriented arc classes, and the flip moves.

An arc class is a nontrivial word taken up to inversion; we keep the
shortlex-smaller of ``w`` and ``w^-1``. A tri-arc is three distinct arc
classes in which some pair is a free basis and every arc is a product of
(signed) representatives of the other two.

    >>> t = base_tri_arc()
    >>> str(t)
    'a,b,ab'
    >>> str(big_flip(t, canonical_arc("ab"))[0])
    'a,b,AB'
    >>> [str(s) for s in small_flips(t, canonical_arc("ab"))]
    ['a,b,aB', 'a,b,Ab']
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterator, Union

from . import freegroup as fg
from .errors import (
    ArcNotInTriple,
    IdentityWord,
    NoDecomposition,
    NotBasis,
    NotDistinct,
    WordParseError,
)
from .freegroup import FreeWord

WordLike = Union[str, FreeWord]


def _word(w: WordLike) -> FreeWord:
    return w if isinstance(w, FreeWord) else fg.parse_word(w)


class ArcClass:
    """The unoriented class ``{w, w^-1}``, stored by its smaller representative."""

    __slots__ = ("canon",)

    def __init__(self, w: WordLike):
        w = _word(w)
        if not w:
            raise IdentityWord("the identity word is not an arc")
        inv = fg.invert(w)
        object.__setattr__(self, "canon", w if w <= inv else inv)

    def __setattr__(self, name, value):
        raise AttributeError("ArcClass is immutable")

    def __reduce__(self):
        return ArcClass, (str(self.canon),)

    def __eq__(self, other):
        if isinstance(other, ArcClass):
            return self.canon == other.canon
        return NotImplemented

    def __hash__(self):
        return hash(self.canon)

    def __lt__(self, other: "ArcClass") -> bool:
        return self.canon < other.canon

    def __str__(self):
        return str(self.canon)

    def __repr__(self):
        return f"ArcClass({str(self.canon)!r})"

    def orientations(self) -> tuple[FreeWord, FreeWord]:
        return self.canon, fg.invert(self.canon)


def canonical_arc(w: WordLike) -> ArcClass:
    return ArcClass(w)


class TriArc:
    """Three arc classes, kept sorted. Build through :func:`make_tri_arc`."""

    __slots__ = ("arcs",)

    def __init__(self, arcs):
        object.__setattr__(self, "arcs", tuple(sorted(arcs)))

    def __setattr__(self, name, value):
        raise AttributeError("TriArc is immutable")

    def __reduce__(self):
        return TriArc, (self.arcs,)

    def __eq__(self, other):
        if isinstance(other, TriArc):
            return self.arcs == other.arcs
        return NotImplemented

    def __hash__(self):
        return hash(self.arcs)

    def sort_key(self):
        return tuple(arc.canon.sort_key() for arc in self.arcs)

    def __lt__(self, other: "TriArc") -> bool:
        return self.sort_key() < other.sort_key()

    def __iter__(self) -> Iterator[ArcClass]:
        return iter(self.arcs)

    def __contains__(self, arc) -> bool:
        return arc in self.arcs

    def __str__(self):
        return ",".join(str(arc) for arc in self.arcs)

    def __repr__(self):
        return f"TriArc({str(self)!r})"

    def replace(self, old: ArcClass, new: ArcClass) -> "TriArc":
        return TriArc(new if arc == old else arc for arc in self.arcs)

    def others(self, arc: ArcClass) -> tuple[ArcClass, ArcClass]:
        if arc not in self.arcs:
            raise ArcNotInTriple(f"{arc} is not an arc of {self}")
        rest = tuple(x for x in self.arcs if x != arc)
        return rest[0], rest[1]


class MoveKind(enum.Enum):
    BIG = "big"
    SMALL1 = "small1"
    SMALL2 = "small2"


@dataclass(frozen=True)
class MoveLabel:
    arc: ArcClass
    kind: MoveKind

    def __str__(self):
        return f"{self.kind.value}:{self.arc}"


def parse_move_label(text: str) -> MoveLabel:
    kind, sep, arc = text.partition(":")
    if not sep:
        raise WordParseError(f"invalid move label {text!r}")
    try:
        move_kind = MoveKind(kind)
    except ValueError:
        raise WordParseError(f"invalid move kind {kind!r}") from None
    return MoveLabel(canonical_arc(arc), move_kind)


def _oriented_products(p: ArcClass, q: ArcClass):
    # fixed enumeration: compositions (p, q) then (q, p); signs + before -
    for first, second in ((p, q), (q, p)):
        for x in first.orientations():
            for y in second.orientations():
                yield x, y


def _decompose(target: ArcClass, p: ArcClass, q: ArcClass):
    for x, y in _oriented_products(p, q):
        if fg.concat(x, y) == target.canon:
            return x, y
    return None


def make_tri_arc(w1: WordLike, w2: WordLike, w3: WordLike) -> TriArc:
    arcs = [canonical_arc(w) for w in (w1, w2, w3)]
    if len(set(arcs)) != 3:
        raise NotDistinct(f"arcs {', '.join(map(str, arcs))} are not pairwise distinct")
    for i, arc in enumerate(arcs):
        p, q = (arcs[j] for j in range(3) if j != i)
        if _decompose(arc, p, q) is None:
            raise NoDecomposition(f"{arc} is not a product of {p} and {q} (any orientation)")
    if not any(fg.is_basis(u.canon, v.canon) for u, v in itertools.combinations(arcs, 2)):
        raise NotBasis(f"no pair of {', '.join(map(str, arcs))} is a free basis")
    return TriArc(arcs)


def parse_tri_arc(text: str) -> TriArc:
    parts = text.split(",")
    if len(parts) != 3:
        raise WordParseError(f"a tri-arc is three comma-separated words, got {text!r}")
    return make_tri_arc(*parts)


def base_tri_arc() -> TriArc:
    return TriArc((ArcClass("a"), ArcClass("b"), ArcClass("ab")))


def decompose(t: TriArc, target: ArcClass) -> tuple[FreeWord, FreeWord]:
    """Return ``(x, y)`` with ``x * y == target.canon``.

    ``x`` and ``y`` are oriented representatives of the two other arcs.
    Exactly one oriented product equals the canonical word itself (its
    mirror ``(y^-1, x^-1)`` gives the inverse), so the result is unique.
    """
    p, q = t.others(target)
    found = _decompose(target, p, q)
    if found is None:
        raise NoDecomposition(f"{target} is not a product of {p} and {q} in {t}")
    return found


def big_flip(t: TriArc, target: ArcClass) -> tuple[TriArc, ArcClass]:
    x, y = decompose(t, target)
    new = canonical_arc(fg.concat(y, x))
    return t.replace(target, new), new


def small_flips(t: TriArc, target: ArcClass) -> tuple[TriArc, TriArc]:
    x, y = decompose(t, target)
    first = canonical_arc(fg.concat(x, fg.invert(y)))
    second = canonical_arc(fg.concat(fg.invert(x), y))
    return t.replace(target, first), t.replace(target, second)


def flip(t: TriArc, label: MoveLabel) -> TriArc:
    if label.kind is MoveKind.BIG:
        return big_flip(t, label.arc)[0]
    s1, s2 = small_flips(t, label.arc)
    return s1 if label.kind is MoveKind.SMALL1 else s2


def neighbors(t: TriArc) -> list[tuple[TriArc, MoveLabel]]:
    """The nine tri-arcs one elementary move away, grouped by arc (big, small1, small2)."""
    out = []
    for arc in t.arcs:
        x, y = decompose(t, arc)
        xi, yi = fg.invert(x), fg.invert(y)
        out.append((t.replace(arc, canonical_arc(fg.concat(y, x))), MoveLabel(arc, MoveKind.BIG)))
        out.append((t.replace(arc, canonical_arc(fg.concat(x, yi))), MoveLabel(arc, MoveKind.SMALL1)))
        out.append((t.replace(arc, canonical_arc(fg.concat(xi, y))), MoveLabel(arc, MoveKind.SMALL2)))
    return out
