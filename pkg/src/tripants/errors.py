"""Exceptions raised across the package.

Every domain error carries the name used on the command line, so the CLI
can report ``<ErrorName>: <message>`` without a lookup table.
"""


class TriPantsError(ValueError):
    """Base class for all domain errors."""


class WordParseError(TriPantsError):
    pass


class IdentityWord(TriPantsError):
    pass


class NotDistinct(TriPantsError):
    pass


class NoDecomposition(TriPantsError):
    pass


class NotBasis(TriPantsError):
    pass


class ArcNotInTriple(TriPantsError):
    pass


class NotPrimitive(TriPantsError):
    pass


class NotATriangle(TriPantsError):
    pass


class EdgeNotInTriangle(TriPantsError):
    pass


class SameTriangle(TriPantsError):
    pass


class RadiusCap(TriPantsError):
    pass


class FiberSearchExhausted(TriPantsError):
    """A capped big-flip search ran out of budget.

    This means the cap was too small, not that the fiber is disconnected.
    """
