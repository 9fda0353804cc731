"""Exception types shared across the package."""

from __future__ import annotations


class AmbientMismatch(ValueError):
    """Two values live in polynomial rings with different variable counts."""


class SizeLimitExceeded(RuntimeError):
    """An exact computation was refused because the input exceeds its size bound."""


class CampaignConfigError(ValueError):
    """A campaign configuration is contradictory or infeasible."""
