"""Exception hierarchy.

Everything raised on purpose by this package derives from ObError, so callers
(and the service layer) can distinguish domain errors from bugs.
"""

from __future__ import annotations


class ObError(Exception):
    """Base class for all domain errors raised by obcalc."""


# ---------------------------------------------------------------- surfaces


class BadGluing(ObError):
    """A triangle side is glued twice, to itself, or to a missing side."""


class NonOrientable(ObError):
    """The gluing pattern does not admit a consistent orientation."""


class Disconnected(ObError):
    """The glued surface has more than one connected component."""


class ClosedSurface(ObError):
    """Every side is glued; the calculus needs nonempty boundary."""


class InteriorVertex(ObError):
    """A vertex of the triangulation does not lie on the boundary.

    Normal forms are only unique when every vertex is a boundary vertex, so
    such triangulations are rejected outright.
    """


# ------------------------------------------------------- normal coordinates


class Unrealizable(ObError):
    """Coordinates violate a matching or admissibility constraint."""


class KindMismatch(ObError):
    """An operation got a closed curve where it needs an arc, or vice versa."""


class NotAnArc(KindMismatch):
    """Raised when boundary weights do not describe a single embedded arc."""


class NotEmbedded(ObError):
    """A construction produced a multicurve with an unremovable self-crossing."""


class Inessential(ObError):
    """The curve or arc bounds a disk / is boundary-parallel where that is
    disallowed."""


# ---------------------------------------------------------------- open books


class TrivialArc(ObError):
    """The arc is isotopic to its monodromy image; no certificate comes out
    of it."""


class MissingProvenance(ObError):
    """A twisting loop was supplied without the data showing where it came
    from, so the non-isolation requirement cannot be checked."""


class NotIsolated(ObError):
    """make_non_isolated was asked to fix a loop that is already fine."""


class NotSobering(ObError):
    """The arc fails the non-positivity test that the reduction pipeline
    requires."""


# ---------------------------------------------------------------- detection


class NoReduction(ObError):
    """No reduction move applies to the given state."""


class NotNeeded(ObError):
    """A specific move was requested on a state it does not apply to."""


class BadIndex(ObError):
    """A crossing or strand index is out of range for the state."""


class BadPair(ObError):
    """The requested crossing pair cannot be smoothed coherently."""


class PreconditionFailed(ObError):
    """A move's documented precondition does not hold on the given state."""


class StuckState(ObError):
    """The pipeline ran out of applicable moves before reaching a terminal
    state; indicates a bug or an input outside the supported class."""


# ----------------------------------------------------------------- file I/O


class ParseError(ObError):
    """Malformed .ob or certificate text."""


class UnknownName(ObError):
    """A monodromy word or request refers to a curve name that was never
    defined."""


class InvalidCertificate(ObError):
    """Certificate replay failed a check; the message says which one."""
