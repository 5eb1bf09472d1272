import random

import pytest

from fuzzyhue import BoundarySpec, builtin_colibri


@pytest.fixture(scope="session")
def colibri():
    return builtin_colibri()


def make_p6(width, height, pixels, comment=None):
    """Binary PPM bytes for a row-major list of (r, g, b) tuples."""
    assert len(pixels) == width * height
    header = f"P6\n{'# ' + comment + chr(10) if comment else ''}{width} {height}\n255\n"
    return header.encode("ascii") + bytes(v for px in pixels for v in px)


def random_boundary_specs(rng: random.Random, count: int) -> list[BoundarySpec]:
    """A consistent random ring of boundary specs (positive cores).

    Positions are strictly ascending with a minimum gap; each width stays
    below the smaller neighboring gap so transition zones never collide.
    """
    while True:
        positions = sorted(rng.uniform(0.0, 360.0) for _ in range(count))
        gaps = [
            (positions[(i + 1) % count] - positions[i]) % 360.0 for i in range(count)
        ]
        if min(gaps) > 1.0:
            break
    widths = [
        rng.uniform(0.05, 0.90) * min(gaps[i - 1], gaps[i]) for i in range(count)
    ]
    return [BoundarySpec(p, w) for p, w in zip(positions, widths)]
