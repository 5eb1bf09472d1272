"""External formats: partition config JSON, metrics CSV, and PPM images."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .metrics import CategoryMetrics
from .partition import BoundarySpec, HuePartition, from_boundaries

CSV_HEADER = (
    "category",
    "range_start",
    "range_end",
    "wideness",
    "left_boundary_width",
    "right_boundary_width",
)


class ConfigError(ValueError):
    """Partition config document is unreadable or violates the schema."""


class ImageFormatError(ValueError):
    """Image file is recognized but malformed."""


class UnsupportedImageFormatError(ImageFormatError):
    """Image file is in a format this reader does not handle."""


@dataclass(frozen=True)
class PixelGrid:
    """Row-major 8-bit RGB raster."""

    width: int
    height: int
    pixels: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        if self.width <= 0 or self.height <= 0:
            raise ValueError(f"image dimensions must be positive, got {self.width}x{self.height}")
        if len(self.pixels) != self.width * self.height:
            raise ValueError(
                f"pixel count {len(self.pixels)} does not match {self.width}x{self.height}"
            )


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ConfigError(message)


def load_partition(text: str) -> HuePartition:
    """Parse a partition config document.

    The document is flat JSON: a period of 360, the category names in ring
    order, and one (position, width) boundary per adjacent pair, ascending,
    with boundary k separating category k from k+1 (the last wraps back to
    the first). Schema violations name the offending field; reconstruction
    errors (overlapping transition zones) name the category.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    _require(isinstance(doc, dict), "config root must be a JSON object")
    _require(doc.get("period") == 360, 'config field "period" must be the number 360')

    categories = doc.get("categories")
    _require(isinstance(categories, list), 'config field "categories" must be a list')
    names = []
    for i, entry in enumerate(categories):
        _require(
            isinstance(entry, dict) and isinstance(entry.get("name"), str) and entry["name"],
            f'categories[{i}] must be an object with a non-empty string "name"',
        )
        names.append(entry["name"])

    raw_boundaries = doc.get("boundaries")
    _require(isinstance(raw_boundaries, list), 'config field "boundaries" must be a list')
    _require(
        len(raw_boundaries) == len(names) and len(names) >= 2,
        f"category count ({len(names)}) and boundary count ({len(raw_boundaries)}) "
        "must match and be at least 2",
    )
    specs = []
    previous = None
    for i, entry in enumerate(raw_boundaries):
        _require(isinstance(entry, dict), f"boundaries[{i}] must be an object")
        position = entry.get("position")
        width = entry.get("width")
        _require(
            isinstance(position, (int, float)) and not isinstance(position, bool),
            f"boundaries[{i}].position must be a number",
        )
        _require(
            isinstance(width, (int, float)) and not isinstance(width, bool),
            f"boundaries[{i}].width must be a number",
        )
        _require(
            0 <= position < 360,
            f"boundaries[{i}].position must lie in [0, 360), got {position}",
        )
        _require(width > 0, f"boundaries[{i}].width must be > 0, got {width}")
        _require(
            previous is None or position > previous,
            f"boundaries[{i}].position must be strictly ascending, got {position} after {previous}",
        )
        previous = position
        specs.append(BoundarySpec(float(position), float(width)))
    return from_boundaries(specs, names)


def dump_partition(partition: HuePartition) -> str:
    """Config document for a partition, loadable by :func:`load_partition`."""
    doc = {
        "period": 360,
        "categories": [{"name": name} for name in partition.names],
        "boundaries": [
            {"position": b.position, "width": b.width} for b in partition.boundaries
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def format_number(value: float) -> str:
    """Shortest decimal text that round-trips, always with a decimal point."""
    return repr(float(value))


def export_metrics_csv(rows: Sequence[CategoryMetrics]) -> str:
    """Metrics table as CSV with LF line endings, rows in ring order."""
    if not rows:
        raise ValueError("metrics table is empty")
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(
            [
                row.name,
                format_number(row.wideness_range.start),
                format_number(row.wideness_range.end),
                format_number(row.wideness),
                format_number(row.left_boundary_width),
                format_number(row.right_boundary_width),
            ]
        )
    return buffer.getvalue()


class _TokenScanner:
    """Whitespace/comment-aware scanner for PPM headers and ASCII rasters."""

    def __init__(self, data: bytes, pos: int):
        self.data = data
        self.pos = pos

    def skip_separators(self) -> None:
        data, n = self.data, len(self.data)
        while self.pos < n:
            byte = self.data[self.pos]
            if byte in b" \t\r\n\x0b\x0c":
                self.pos += 1
            elif byte in b"#":
                while self.pos < n and data[self.pos] not in b"\n":
                    self.pos += 1
            else:
                return

    def next_int(self, what: str) -> int:
        self.skip_separators()
        begin = self.pos
        n = len(self.data)
        while self.pos < n and self.data[self.pos : self.pos + 1].isdigit():
            self.pos += 1
        if self.pos == begin:
            raise ImageFormatError(f"malformed PPM header: expected {what}")
        return int(self.data[begin : self.pos])


def _read_ppm_header(data: bytes) -> tuple[int, int, int]:
    scanner = _TokenScanner(data, 2)
    width = scanner.next_int("width")
    height = scanner.next_int("height")
    maxval = scanner.next_int("maxval")
    if width <= 0 or height <= 0:
        raise ImageFormatError(f"invalid PPM dimensions {width}x{height}")
    if maxval != 255:
        raise UnsupportedImageFormatError(f"only maxval 255 is supported, got {maxval}")
    return width, height, scanner.pos


def read_image(path: str | Path) -> PixelGrid:
    """Read a PPM image (binary P6; ASCII P3 also accepted).

    Raises FileNotFoundError for missing files, ImageFormatError for
    malformed headers or truncated payloads, and
    UnsupportedImageFormatError for anything that is not a 8-bit PPM.
    """
    data = Path(path).read_bytes()
    magic = bytes(data[:2])
    if magic == b"P6":
        width, height, pos = _read_ppm_header(data)
        # Exactly one whitespace byte separates the header from the raster.
        if pos >= len(data) or data[pos] not in b" \t\r\n":
            raise ImageFormatError("malformed PPM header: missing raster separator")
        raster = data[pos + 1 : pos + 1 + 3 * width * height]
        if len(raster) < 3 * width * height:
            raise ImageFormatError(
                f"truncated P6 pixel data: expected {3 * width * height} bytes, "
                f"got {len(raster)}"
            )
        pixels = tuple(
            (raster[i], raster[i + 1], raster[i + 2]) for i in range(0, len(raster), 3)
        )
        return PixelGrid(width, height, pixels)
    if magic == b"P3":
        width, height, pos = _read_ppm_header(data)
        scanner = _TokenScanner(data, pos)
        values = []
        for index in range(3 * width * height):
            try:
                value = scanner.next_int(f"sample {index}")
            except ImageFormatError:
                raise ImageFormatError(
                    f"truncated P3 pixel data: expected {3 * width * height} samples, "
                    f"got {index}"
                ) from None
            if value > 255:
                raise ImageFormatError(f"P3 sample {index} out of range: {value}")
            values.append(value)
        pixels = tuple(
            (values[i], values[i + 1], values[i + 2]) for i in range(0, len(values), 3)
        )
        return PixelGrid(width, height, pixels)
    raise UnsupportedImageFormatError(
        f"unsupported image format (magic {magic!r}); expected PPM P6 or P3"
    )
