"""Freely reduced words in the free group of rank two.

Words are spelled over ``a`` (g1), ``b`` (g2), ``A`` (g1^-1) and ``B``
(g2^-1); the empty string is the identity.

    >>> w = FreeWord("abAB")
    >>> ~w
    FreeWord('baBA')
    >>> FreeWord("ab") * FreeWord("B")
    FreeWord('a')
    >>> abelianize(FreeWord("abA"))
    AbelianImage(p=0, q=1)
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Union

from .errors import WordParseError

ALPHABET = "aAbB"

# g1 < g1^-1 < g2 < g2^-1
_RANK = str.maketrans("aAbB", "0123")


@dataclass(frozen=True)
class Letter:
    generator: int  # 1 or 2
    sign: int  # +1 or -1

    def __post_init__(self):
        if self.generator not in (1, 2) or self.sign not in (1, -1):
            raise ValueError(f"invalid letter ({self.generator}, {self.sign})")

    @property
    def char(self) -> str:
        c = "a" if self.generator == 1 else "b"
        return c if self.sign > 0 else c.upper()

    @classmethod
    def from_char(cls, c: str) -> "Letter":
        if c not in ALPHABET:
            raise WordParseError(f"invalid letter {c!r}")
        return cls(1 if c in "aA" else 2, 1 if c.islower() else -1)

    def __invert__(self) -> "Letter":
        return Letter(self.generator, -self.sign)


class AbelianImage(NamedTuple):
    p: int
    q: int


def _free_reduce(s: str) -> str:
    out: list[str] = []
    for c in s:
        if out and out[-1] == c.swapcase():
            out.pop()
        else:
            out.append(c)
    return "".join(out)


class FreeWord:
    """An element of F(a, b) stored as its freely reduced spelling.

    Equality is equality of spellings. The ordering is shortlex with
    ``a < A < b < B``; it is what every canonical form downstream uses.
    """

    __slots__ = ("_s",)

    def __init__(self, letters: Union[str, "FreeWord", Iterable[Union[str, Letter]]] = ""):
        if isinstance(letters, FreeWord):
            s = letters._s
        elif isinstance(letters, str):
            s = letters
        else:
            s = "".join(x.char if isinstance(x, Letter) else x for x in letters)
        if any(c not in ALPHABET for c in s):
            raise WordParseError(f"invalid word {s!r}: only a, b, A, B are allowed")
        object.__setattr__(self, "_s", _free_reduce(s))

    @classmethod
    def _raw(cls, s: str) -> "FreeWord":
        # caller guarantees s is reduced
        w = object.__new__(cls)
        object.__setattr__(w, "_s", s)
        return w

    def __setattr__(self, name, value):
        raise AttributeError("FreeWord is immutable")

    def __reduce__(self):
        return FreeWord, (self._s,)

    @property
    def letters(self) -> tuple[Letter, ...]:
        return tuple(Letter.from_char(c) for c in self._s)

    def __str__(self) -> str:
        return self._s

    def __repr__(self) -> str:
        return f"FreeWord({self._s!r})"

    def __len__(self) -> int:
        return len(self._s)

    def __bool__(self) -> bool:
        return bool(self._s)

    def __hash__(self) -> int:
        return hash(self._s)

    def __eq__(self, other) -> bool:
        if isinstance(other, FreeWord):
            return self._s == other._s
        return NotImplemented

    def sort_key(self) -> tuple[int, str]:
        return len(self._s), self._s.translate(_RANK)

    def __lt__(self, other: "FreeWord") -> bool:
        return self.sort_key() < other.sort_key()

    def __le__(self, other: "FreeWord") -> bool:
        return self.sort_key() <= other.sort_key()

    def __gt__(self, other: "FreeWord") -> bool:
        return self.sort_key() > other.sort_key()

    def __ge__(self, other: "FreeWord") -> bool:
        return self.sort_key() >= other.sort_key()

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return concat(self, other)

    def __invert__(self) -> "FreeWord":
        return invert(self)

    def __pow__(self, n: int) -> "FreeWord":
        base = self if n >= 0 else invert(self)
        return FreeWord._raw(_free_reduce(base._s * abs(n)))


IDENTITY = FreeWord._raw("")
G1 = FreeWord._raw("a")
G2 = FreeWord._raw("b")


def parse_word(text: str) -> FreeWord:
    return FreeWord(text.strip())


def reduce(letters: Iterable[Union[str, Letter]]) -> FreeWord:
    return FreeWord(letters)


def invert(w: FreeWord) -> FreeWord:
    return FreeWord._raw(w._s[::-1].swapcase())


def concat(u: FreeWord, v: FreeWord) -> FreeWord:
    s, t = u._s, v._s
    i = 0
    n = min(len(s), len(t))
    while i < n and s[-1 - i] == t[i].swapcase():
        i += 1
    return FreeWord._raw(s[: len(s) - i] + t[i:])


def product(*words: FreeWord) -> FreeWord:
    out = IDENTITY
    for w in words:
        out = concat(out, w)
    return out


def cyclic_reduce(w: FreeWord) -> tuple[FreeWord, FreeWord]:
    """Split ``w`` as ``conjugator * core * conjugator^-1``, core cyclically reduced."""
    s = w._s
    i = 0
    while len(s) - 2 * i >= 2 and s[i] == s[len(s) - 1 - i].swapcase():
        i += 1
    return FreeWord._raw(s[i : len(s) - i]), FreeWord._raw(s[:i])


def is_conjugate(u: FreeWord, v: FreeWord) -> bool:
    cu, _ = cyclic_reduce(u)
    cv, _ = cyclic_reduce(v)
    if len(cu) != len(cv):
        return False
    return cv._s in cu._s + cu._s


def abelianize(w: FreeWord) -> AbelianImage:
    s = w._s
    return AbelianImage(s.count("a") - s.count("A"), s.count("b") - s.count("B"))


def commutator(u: FreeWord, v: FreeWord) -> FreeWord:
    return product(u, v, invert(u), invert(v))


_STD_COMMUTATOR = FreeWord._raw("abAB")


def is_basis(u: FreeWord, v: FreeWord) -> bool:
    """True iff ``(u, v)`` freely generates F(a, b).

    In rank two a pair is a basis exactly when its commutator is conjugate
    to ``[a, b]`` or ``[b, a]``.
    """
    c = commutator(u, v)
    return is_conjugate(c, _STD_COMMUTATOR) or is_conjugate(c, invert(_STD_COMMUTATOR))


def substitute(images: tuple[FreeWord, FreeWord], w: FreeWord) -> FreeWord:
    """Image of ``w`` under the endomorphism ``a -> images[0], b -> images[1]``."""
    img1, img2 = images
    table = {"a": img1, "A": invert(img1), "b": img2, "B": invert(img2)}
    out = IDENTITY
    for c in w._s:
        out = concat(out, table[c])
    return out
