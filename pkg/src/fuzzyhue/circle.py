"""Circular arithmetic on the 360-degree hue wheel.

Hues are plain floats normalized to [0, 360); arcs are directed circular
intervals that may wrap through 0. Everything here is a pure function of
immutable values, so the types are safe to share freely.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

PERIOD = 360.0

# Absolute tolerance for angle comparisons, in degrees.
TOL = 1e-9


def wrap(angle: float) -> float:
    """Normalize an angle in degrees to [0, 360)."""
    if not math.isfinite(angle):
        raise ValueError(f"angle must be finite, got {angle!r}")
    h = angle % PERIOD
    # Tiny negative angles round up to exactly the period under fmod.
    return 0.0 if h >= PERIOD else h


@dataclass(frozen=True)
class Arc:
    """Directed circular interval from ``start`` ascending to ``end``.

    The arc runs in ascending degrees and wraps through 0 when ``end`` is
    numerically below ``start``. Both endpoints are included. ``start ==
    end`` denotes the empty arc by convention; the full circle needs its own
    constructor because endpoints alone cannot tell it apart from empty.
    """

    start: float
    end: float
    is_full: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "start", wrap(self.start))
        object.__setattr__(self, "end", wrap(self.end))

    @classmethod
    def full_circle(cls) -> Arc:
        return cls(0.0, 0.0, is_full=True)

    @property
    def measure(self) -> float:
        """Arc length in degrees, in [0, 360]."""
        if self.is_full:
            return PERIOD
        return (self.end - self.start) % PERIOD

    def contains(self, hue: float) -> bool:
        """True when ``hue`` lies on the closed arc (wrap-aware)."""
        if self.is_full:
            return True
        m = self.measure
        if m == 0.0:
            return False
        offset = (wrap(hue) - self.start) % PERIOD
        # The second clause catches points a rounding error below start.
        return offset <= m + TOL or offset >= PERIOD - TOL

    def intersect(self, other: Arc) -> list[Arc]:
        """Set intersection with another arc, as 0, 1, or 2 arcs.

        Two arcs come back only when both inputs wrap such that the overlap
        is disconnected. Arcs that merely touch at a point share measure
        zero and yield nothing, matching the empty-arc convention.
        """
        if self.is_full:
            if other.is_full:
                return [Arc.full_circle()]
            return [other] if other.measure > 0.0 else []
        if other.is_full:
            return [self] if self.measure > 0.0 else []
        m1 = self.measure
        m2 = other.measure
        if m1 == 0.0 or m2 == 0.0:
            return []
        # Unroll relative to self.start: self covers [0, m1] and the other
        # arc covers [t, t + m2] on one or both of two adjacent branches.
        t = (other.start - self.start) % PERIOD
        pieces = []
        for branch in (t - PERIOD, t):
            lo = max(0.0, branch)
            hi = min(m1, branch + m2)
            if hi - lo > 0.0:
                pieces.append(Arc(wrap(self.start + lo), wrap(self.start + hi)))
        return pieces

    def midpoint(self) -> float:
        """Hue halfway along the arc from start to end."""
        return wrap(self.start + self.measure / 2.0)

    def rotated(self, delta: float) -> Arc:
        if self.is_full:
            return self
        return Arc(wrap(self.start + delta), wrap(self.end + delta))
