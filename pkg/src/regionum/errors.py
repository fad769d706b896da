"""Exception hierarchy shared by every regionum module."""

from __future__ import annotations


class RegionumError(Exception):
    """Base class for all computation errors raised by regionum."""


class MalformedInput(RegionumError):
    """Input text could not be parsed."""


class LabelError(RegionumError):
    """Edge labels are inconsistent (wrong multiplicity or orientation)."""


class NotAKnot(RegionumError):
    """The diagram has more than one component."""


class NotPlanar(RegionumError):
    """Face traversal does not give c + 2 faces."""


class UnknownCrossing(RegionumError):
    pass


class UnknownRegion(RegionumError):
    pass


class DimensionMismatch(RegionumError):
    pass


class KernelTooLarge(RegionumError):
    pass


class TooLarge(RegionumError):
    """Diagram exceeds the configured crossing cap."""


class NoSolution(RegionumError):
    """No region set realises the requested crossing changes."""
