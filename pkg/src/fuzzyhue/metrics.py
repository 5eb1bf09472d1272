"""Category-extent and transition-zone metrics for hue partitions.

Two measurements per category: *wideness*, the measure of its alpha-cut
(default alpha 0.5, where the cut endpoints are the category boundaries),
and the *boundary width* shared with each ring neighbor, the measure of the
overlap of their supports. Wideness has both a closed-form evaluator and an
indicator-integral one; the integral form needs no special casing for
categories split by the 0/360 seam, which is exactly why it exists.
"""

from __future__ import annotations

from dataclasses import dataclass

from .circle import PERIOD, Arc
from .partition import HuePartition


class AdjacencyError(ValueError):
    """The two categories are not neighbors on the ring."""


@dataclass(frozen=True)
class CategoryMetrics:
    """One category's row: its cut arc, extent, and neighbor overlaps."""

    name: str
    wideness_range: Arc
    wideness: float
    left_boundary_width: float
    right_boundary_width: float


@dataclass(frozen=True)
class AsymmetryReport:
    """Extremes of category extent across a partition."""

    widest: str
    narrowest: str
    ratio: float
    per_category: tuple[CategoryMetrics, ...]


def wideness(partition: HuePartition, name: str, alpha: float = 0.5) -> float:
    """Measure in degrees of the category's alpha-cut (closed form)."""
    return partition.fuzzy_set(name).alpha_cut(alpha).measure


def wideness_numeric(
    partition: HuePartition, name: str, alpha: float = 0.5, step: float = 0.01
) -> float:
    """Indicator-integral form of wideness: a midpoint Riemann sum.

    The grid always covers the full circle, so wrap-around cuts need no
    special handling. Accurate to within one grid cell of the closed form.
    """
    if not 0.0 < step <= 1.0:
        raise ValueError(f"step must be in (0, 1], got {step!r}")
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"alpha must be in (0, 1], got {alpha!r}")
    t = partition.fuzzy_set(name)
    n = int(round(PERIOD / step))
    cell = PERIOD / n
    hits = sum(1 for i in range(n) if t.membership((i + 0.5) * cell) >= alpha)
    return hits * cell


def boundary_width(partition: HuePartition, name_a: str, name_b: str) -> float:
    """Total measure of the overlap of two adjacent categories' supports.

    Symmetric in its arguments. For a 2-category ring the pair shares both
    boundaries and the value covers both zones.
    """
    i = partition.index(name_a)
    j = partition.index(name_b)
    n = len(partition)
    if n == 2:
        if i == j:
            raise AdjacencyError(f"{name_a!r} is not adjacent to itself")
        first, second = min(i, j), max(i, j)
    elif (j - i) % n == 1:
        first, second = i, j
    elif (i - j) % n == 1:
        first, second = j, i
    else:
        raise AdjacencyError(f"categories {name_a!r} and {name_b!r} are not adjacent")
    pieces = partition.sets[first].support().intersect(partition.sets[second].support())
    return sum(piece.measure for piece in pieces)


def _zone_measure(partition: HuePartition, k: int) -> float:
    """Overlap of supports of ring neighbors k and k+1 at boundary k."""
    n = len(partition)
    pieces = partition.sets[k].support().intersect(partition.sets[(k + 1) % n].support())
    if len(pieces) == 1:
        return pieces[0].measure
    # 2-category ring: both zones come back; keep the one at this boundary.
    position = partition.boundaries[k].position
    for piece in pieces:
        if piece.contains(position):
            return piece.measure
    return 0.0


def metrics_table(partition: HuePartition, alpha: float = 0.5) -> list[CategoryMetrics]:
    """One row per category in ring order.

    The left boundary width of each category equals the right boundary
    width of its predecessor, by construction.
    """
    zones = [_zone_measure(partition, k) for k in range(len(partition))]
    rows = []
    for k, name in enumerate(partition.names):
        cut = partition.sets[k].alpha_cut(alpha)
        rows.append(
            CategoryMetrics(
                name=name,
                wideness_range=cut,
                wideness=cut.measure,
                left_boundary_width=zones[k - 1],
                right_boundary_width=zones[k],
            )
        )
    return rows


def asymmetry_report(partition: HuePartition) -> AsymmetryReport:
    """Widest and narrowest categories by wideness, and their ratio.

    The ratio is rounded to four significant digits. Ties resolve to the
    earlier ring entry.
    """
    rows = metrics_table(partition)
    widest = max(rows, key=lambda r: r.wideness)
    narrowest = min(rows, key=lambda r: r.wideness)
    ratio = float(f"{widest.wideness / narrowest.wideness:.4g}")
    return AsymmetryReport(
        widest=widest.name,
        narrowest=narrowest.name,
        ratio=ratio,
        per_category=tuple(rows),
    )
