"""Linguistic hue partitions reconstructed from crossing positions and widths.

A partition is an ordered ring of named categories, each backed by a
:class:`~fuzzyhue.fuzzyset.CircularTrapezoid`. The builtin nine-category
model ships the COLIBRI hue constants: the half-membership crossing between
every adjacent pair of categories and the total width of each transition
zone. Those two numbers per boundary are enough to reconstruct the full
membership functions, because each transition zone is centered on its
crossing with complementary linear shoulders (so adjacent memberships sum
to one across the zone, and every crossing sits exactly at 0.5/0.5).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .circle import PERIOD, wrap
from .fuzzyset import CircularTrapezoid

#: Ring order of the builtin categories.
RING = (
    "red",
    "orange",
    "yellow",
    "green",
    "cyan",
    "lightblue",
    "blue",
    "violet",
    "magenta",
)

# Builtin boundary constants: (crossing position, transition width), entry k
# separating RING[k] from RING[k+1], the last wrapping back to red. Stored
# exactly as published, one decimal place.
_COLIBRI_BOUNDARIES = (
    (12.5, 15.0),  # red | orange
    (40.0, 12.0),  # orange | yellow
    (55.5, 19.0),  # yellow | green
    (151.5, 47.0),  # green | cyan
    (180.5, 11.0),  # cyan | lightblue
    (199.5, 27.0),  # lightblue | blue
    (255.0, 30.0),  # blue | violet
    (300.5, 45.0),  # violet | magenta
    (340.5, 21.0),  # magenta | red
)

_CORE_TOL = 1e-9


class PartitionError(ValueError):
    """Boundary data cannot produce a valid partition."""


class BoundaryOrderError(PartitionError):
    """Boundary positions are not strictly ascending within one period."""


class InconsistentCoreError(PartitionError):
    """A category's transition zones overlap, leaving it a negative core."""

    def __init__(self, category: str, deficit: float):
        self.category = category
        self.deficit = deficit
        super().__init__(
            f"boundary widths around category {category!r} overlap by "
            f"{deficit:.6g} degrees (core would be negative)"
        )


@dataclass(frozen=True)
class BoundarySpec:
    """A half-membership crossing between two adjacent categories.

    ``position`` is the hue where the two membership curves cross at 0.5;
    ``width`` is the total extent of the transition zone around it (equal to
    the overlap of the two supports).
    """

    position: float
    width: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "position", wrap(self.position))
        if not 0.0 < self.width < PERIOD:
            raise ValueError(f"transition width must be in (0, 360), got {self.width!r}")


@dataclass(frozen=True)
class HuePartition:
    """Ordered ring of named categories with their membership functions.

    ``boundaries[k]`` separates ``names[k]`` from its ring successor.
    Immutable after construction; every query is a pure function.
    """

    names: tuple[str, ...]
    sets: tuple[CircularTrapezoid, ...]
    boundaries: tuple[BoundarySpec, ...]

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown category {name!r}") from None

    def fuzzy_set(self, name: str) -> CircularTrapezoid:
        return self.sets[self.index(name)]

    def successor(self, name: str) -> str:
        return self.names[(self.index(name) + 1) % len(self.names)]

    def memberships(self, hue: float) -> dict[str, float]:
        """All category memberships at ``hue``, in ring order.

        At most two entries are nonzero and the values sum to one.
        """
        return {name: t.membership(hue) for name, t in zip(self.names, self.sets)}

    def category_of(self, hue: float) -> str:
        """Crisp winner at ``hue``; exact ties go to the earlier ring entry."""
        best_name = self.names[0]
        best = -1.0
        for name, t in zip(self.names, self.sets):
            m = t.membership(hue)
            if m > best:
                best = m
                best_name = name
        return best_name

    def rotated(self, delta: float) -> HuePartition:
        """The same partition with every hue shifted by ``delta`` degrees."""
        return HuePartition(
            self.names,
            tuple(t.rotated(delta) for t in self.sets),
            tuple(BoundarySpec(wrap(b.position + delta), b.width) for b in self.boundaries),
        )


def from_boundaries(
    boundaries: Sequence[BoundarySpec], names: Iterable[str]
) -> HuePartition:
    """Reconstruct a partition from its crossing positions and zone widths.

    The category between boundaries L and R gets knots
    ``(L.position - L.width/2, L.position + L.width/2,
    R.position - R.width/2, R.position + R.width/2)`` in circular
    arithmetic: each transition zone extends half its width to either side
    of the crossing. Boundary positions must be strictly ascending within
    one period; boundary k separates category k from k+1, with the last
    boundary wrapping back to the first category.
    """
    names = tuple(names)
    boundaries = tuple(boundaries)
    n = len(boundaries)
    if n < 2:
        raise PartitionError("a partition needs at least 2 categories")
    if len(names) != n:
        raise PartitionError(
            f"got {len(names)} category names but {n} boundaries; counts must match"
        )
    if len(set(names)) != n:
        raise PartitionError("category names must be unique")
    positions = [b.position for b in boundaries]
    for prev, cur in zip(positions, positions[1:]):
        if cur <= prev:
            raise BoundaryOrderError(
                f"boundary positions must be strictly ascending, got {cur} after {prev}"
            )

    sets = []
    for i, name in enumerate(names):
        left = boundaries[i - 1]
        right = boundaries[i]
        gap = (right.position - left.position) % PERIOD
        core = gap - (left.width + right.width) / 2.0
        if core < -_CORE_TOL:
            raise InconsistentCoreError(name, -core)
        span = gap + (left.width + right.width) / 2.0
        if span >= PERIOD:
            raise PartitionError(
                f"support of category {name!r} would cover the whole circle "
                f"({span:.6g} degrees)"
            )
        a = wrap(left.position - left.width / 2.0)
        b = wrap(left.position + left.width / 2.0)
        c = b if core < 0.0 else wrap(right.position - right.width / 2.0)
        d = wrap(right.position + right.width / 2.0)
        sets.append(CircularTrapezoid(a, b, c, d))
    return HuePartition(names, tuple(sets), boundaries)


@lru_cache(maxsize=1)
def builtin_colibri() -> HuePartition:
    """The nine-category COLIBRI hue partition with its published constants.

    Deterministic and identical across runs; the returned instance is
    immutable and shared.
    """
    specs = tuple(BoundarySpec(pos, width) for pos, width in _COLIBRI_BOUNDARIES)
    return from_boundaries(specs, RING)
