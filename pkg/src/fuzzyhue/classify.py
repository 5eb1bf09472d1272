"""Fuzzy color descriptors for single colors and whole images."""

from __future__ import annotations

import colorsys
from collections import Counter
from dataclasses import dataclass
from math import fsum
from typing import TYPE_CHECKING, Mapping

from .partition import HuePartition

if TYPE_CHECKING:
    from .formats import PixelGrid

#: Label used for colors below the chromatic thresholds.
ACHROMATIC = "achromatic"


@dataclass(frozen=True)
class HsvColor:
    """Hexcone HSV triple; ``hue`` is None exactly when saturation is 0."""

    hue: float | None
    saturation: float
    value: float


@dataclass(frozen=True)
class AchromaticGate:
    """Saturation/value thresholds outside which a color reads as gray.

    Colors with saturation below ``s_min``, value below ``v_min``, or value
    above ``v_max`` get all their mass on the achromatic label. The default
    ``v_max`` of 1.0 leaves white ungated.
    """

    s_min: float = 0.15
    v_min: float = 0.10
    v_max: float = 1.0


DEFAULT_GATE = AchromaticGate()


def _check_channel(value: int) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or not 0 <= value <= 255:
        raise ValueError(f"RGB channel must be an integer in [0, 255], got {value!r}")
    return value


def rgb_to_hsv(rgb: tuple[int, int, int]) -> HsvColor:
    """Standard hexcone conversion; hue in degrees [0, 360) or None for grays."""
    r, g, b = (_check_channel(v) for v in rgb)
    h, s, v = colorsys.rgb_to_hsv(r / 255.0, g / 255.0, b / 255.0)
    return HsvColor(None if s == 0.0 else h * 360.0, s, v)


def hsv_to_rgb(hue: float, saturation: float = 1.0, value: float = 1.0) -> tuple[int, int, int]:
    """Inverse hexcone conversion to 8-bit RGB (same convention as rgb_to_hsv)."""
    r, g, b = colorsys.hsv_to_rgb((hue % 360.0) / 360.0, saturation, value)
    return round(r * 255), round(g * 255), round(b * 255)


@dataclass(frozen=True)
class FuzzyColorDescriptor:
    """Normalized per-category mass for a color or image, plus gray mass."""

    category_mass: Mapping[str, float]
    achromatic_mass: float

    def labeled_masses(self) -> list[tuple[str, float]]:
        """All (label, mass) pairs in ring order, achromatic last."""
        pairs = list(self.category_mass.items())
        pairs.append((ACHROMATIC, self.achromatic_mass))
        return pairs

    def total(self) -> float:
        return fsum(self.category_mass.values()) + self.achromatic_mass


def classify_color(
    partition: HuePartition,
    rgb: tuple[int, int, int],
    gate: AchromaticGate = DEFAULT_GATE,
) -> FuzzyColorDescriptor:
    """Fuzzy descriptor of one color: memberships of its hue, or all gray."""
    hsv = rgb_to_hsv(rgb)
    if (
        hsv.hue is None
        or hsv.saturation < gate.s_min
        or hsv.value < gate.v_min
        or hsv.value > gate.v_max
    ):
        return FuzzyColorDescriptor({name: 0.0 for name in partition.names}, 1.0)
    return FuzzyColorDescriptor(partition.memberships(hsv.hue), 0.0)


def image_descriptor(
    partition: HuePartition,
    grid: "PixelGrid",
    gate: AchromaticGate = DEFAULT_GATE,
) -> FuzzyColorDescriptor:
    """Equal-weight average of the per-pixel descriptors of an image.

    Distinct colors are classified once and their counted masses reduced
    with exact (compensated) summation, so the result is identical for any
    pixel ordering.
    """
    if not grid.pixels:
        raise ValueError("cannot describe an empty image")
    counts = Counter(grid.pixels)
    n = len(grid.pixels)
    weighted = [(classify_color(partition, rgb, gate), count) for rgb, count in counts.items()]
    masses = {
        name: fsum(d.category_mass[name] * count for d, count in weighted) / n
        for name in partition.names
    }
    achromatic = fsum(d.achromatic_mass * count for d, count in weighted) / n
    return FuzzyColorDescriptor(masses, achromatic)


def dominant_labels(descriptor: FuzzyColorDescriptor, k: int = 3) -> list[tuple[str, float]]:
    """Top-k labels by mass, descending; zero-mass labels are omitted.

    Ties keep ring order (achromatic last), so output is deterministic.
    """
    if not 1 <= k <= 10:
        raise ValueError(f"k must be in [1, 10], got {k!r}")
    entries = [(label, mass) for label, mass in descriptor.labeled_masses() if mass > 0.0]
    entries.sort(key=lambda entry: -entry[1])
    return entries[:k]
