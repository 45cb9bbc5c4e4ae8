"""Exception hierarchy for urskit.

Checks report failed properties through `Outcome`; exceptions are reserved
for misuse and for data that is not available at the requested precision.
"""

from __future__ import annotations


class UrskitError(Exception):
    """Base class for every error raised by urskit."""


class ConfigError(UrskitError):
    """Malformed action/kernel/witness document or invalid run configuration."""


class ActionError(UrskitError):
    """The described action is not a total action by bijections."""


class BudgetExceeded(UrskitError):
    """Exploration visited more vertices than the vertex budget allows."""

    def __init__(self, budget: int, radius: int):
        super().__init__(f"vertex budget {budget} exceeded exploring radius {radius}")
        self.budget = budget
        self.radius = radius


class Unsaturated(UrskitError):
    """A ball type or level is missing from a LevelSystem."""


class ExplorationError(UrskitError):
    """The explored region is too small for the requested ball."""


class InfinityArrow(UrskitError):
    """range/source/inverse requested for the point at infinity."""


class NotComposable(UrskitError):
    """Source of the first arrow does not match the range of the second."""


class PrecisionExhausted(UrskitError):
    """The operation needs more levels than the arguments carry."""


class LevelMismatch(UrskitError):
    """Kernels or functions built over different level systems."""


class BijectionFailure(UrskitError):
    """Vertex to arrow correspondence is not injective."""


class ZeroNormFiber(UrskitError):
    """Normalization of a witness fiber with zero norm."""


class NotLocal(UrskitError):
    """A groupoid function nonzero at infinity has no local kernel."""
