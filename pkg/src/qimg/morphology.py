"""Translation-invariant dilation and erosion on finite rasters.

A structuring element is a finite map from integer (dy, dx) offsets to
values in [0,1].  Dilation joins t-norm products over the reflected
support, erosion meets residua over the support; with the Boolean family
and binary inputs the pair reduces to Minkowski set dilation/erosion.
The raster is embedded in the integer plane with a boundary policy:
``zero`` (extension by the lattice bottom, under which the algebraic laws
hold), ``one`` or ``replicate``.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

import numpy as np

from .errors import DomainError, ParseError
from .free_module import IndexSet
from .grid import GridImage
from .quantale import BOOLEAN, Quantale
from .transform import Kernel

__all__ = [
    "StructuringElement",
    "MorphConfig",
    "PADDINGS",
    "reflect",
    "dilate",
    "erode",
    "opening",
    "closing",
    "toeplitz_kernel",
    "binary_brute_dilate",
    "binary_brute_erode",
    "preset",
    "PRESETS",
    "read_sel",
    "write_sel",
]

PADDINGS = ("zero", "one", "replicate")


@dataclass(frozen=True, eq=False)
class StructuringElement:
    """Finite fuzzy shape: offsets (dy, dx) mapped to weights in [0,1]."""

    entries: Mapping[tuple[int, int], float]

    def __post_init__(self):
        items = {}
        for offset, value in dict(self.entries).items():
            dy, dx = offset
            if int(dy) != dy or int(dx) != dx:
                raise ValueError(f"offset {offset!r} is not an integer pair")
            v = float(value)
            if not 0.0 <= v <= 1.0:
                raise DomainError(f"weight {value!r} at {offset} outside [0,1]")
            items[(int(dy), int(dx))] = v
        if not items:
            raise ValueError("structuring element needs at least one offset")
        object.__setattr__(self, "entries", MappingProxyType(items))

    def is_binary(self) -> bool:
        return all(v in (0.0, 1.0) for v in self.entries.values())

    def items(self):
        return self.entries.items()

    def __repr__(self) -> str:
        return f"StructuringElement({dict(self.entries)!r})"


@dataclass(frozen=True)
class MorphConfig:
    """Quantale family plus boundary policy for the raster embedding."""

    q: Quantale
    padding: str = "zero"

    def __post_init__(self):
        if self.padding not in PADDINGS:
            raise ValueError(f"unknown padding {self.padding!r}; expected one of {PADDINGS}")


def reflect(se: StructuringElement) -> StructuringElement:
    """Reflection through the origin: the entry at d moves to -d."""
    return StructuringElement({(-dy, -dx): v for (dy, dx), v in se.items()})


def _check_binary(se: StructuringElement, img: GridImage, q: Quantale) -> None:
    if q == BOOLEAN and not (se.is_binary() and img.is_binary()):
        raise DomainError("boolean morphology needs a binary image and element")


def _shifted(pixels: np.ndarray, dy: int, dx: int, padding: str) -> np.ndarray:
    """Array T with T[r, c] = pixels[r - dy, c - dx], padded per policy."""
    rows, cols = pixels.shape
    py, px = abs(dy), abs(dx)
    if py == 0 and px == 0:
        return pixels
    if padding == "replicate":
        padded = np.pad(pixels, ((py, py), (px, px)), mode="edge")
    else:
        fill = 0.0 if padding == "zero" else 1.0
        padded = np.pad(pixels, ((py, py), (px, px)), mode="constant", constant_values=fill)
    return padded[py - dy : py - dy + rows, px - dx : px - dx + cols]


def dilate(se: StructuringElement, img: GridImage, cfg: MorphConfig) -> GridImage:
    """out(y) = join over x of mul(se(y - x), img(x))."""
    _check_binary(se, img, cfg.q)
    out = np.zeros(img.shape)
    for (dy, dx), v in se.items():
        contrib = cfg.q.mul(v, _shifted(img.pixels, dy, dx, cfg.padding))
        np.maximum(out, contrib, out=out)
    return GridImage(out)


def erode(se: StructuringElement, img: GridImage, cfg: MorphConfig) -> GridImage:
    """out(x) = meet over y of residuum(se(y - x), img(y)).

    Offsets with weight 0 are skipped: bottom -> v is the top and cannot
    move the meet.
    """
    _check_binary(se, img, cfg.q)
    out = np.ones(img.shape)
    for (dy, dx), v in se.items():
        if v == 0.0:
            continue
        contrib = cfg.q.residuum(v, _shifted(img.pixels, -dy, -dx, cfg.padding))
        np.minimum(out, contrib, out=out)
    return GridImage(out)


def opening(se: StructuringElement, img: GridImage, cfg: MorphConfig) -> GridImage:
    """Erode then dilate; anti-extensive and idempotent."""
    return dilate(se, erode(se, img, cfg), cfg)


def closing(se: StructuringElement, img: GridImage, cfg: MorphConfig) -> GridImage:
    """Dilate then erode; extensive and idempotent."""
    return erode(se, dilate(se, img, cfg), cfg)


def toeplitz_kernel(se: StructuringElement, rows: int, cols: int, cfg: MorphConfig) -> Kernel:
    """The offset-invariant kernel p(x, y) = se(y - x) on a rows x cols grid.

    Reference path only: its forward/inverse transforms reproduce dilation
    and erosion without the windowed shortcuts.
    """
    size = rows * cols
    values = np.zeros((size, size))
    for (dy, dx), v in se.items():
        for r in range(max(0, -dy), min(rows, rows - dy)):
            c0, c1 = max(0, -dx), min(cols, cols - dx)
            if c0 >= c1:
                continue
            x = r * cols + np.arange(c0, c1)
            y = (r + dy) * cols + np.arange(c0, c1) + dx
            values[x, y] = v
    index = IndexSet(size, (rows, cols))
    return Kernel(cfg.q, index, index, values)


def binary_brute_dilate(se: StructuringElement, img: GridImage) -> GridImage:
    """Literal Minkowski dilation: union of the element translated to each point."""
    points, support = _as_sets(se, img)
    hits = {(r + dy, c + dx) for (r, c) in points for (dy, dx) in support}
    out = np.zeros(img.shape)
    for r, c in hits:
        if 0 <= r < img.rows and 0 <= c < img.cols:
            out[r, c] = 1.0
    return GridImage(out)


def binary_brute_erode(se: StructuringElement, img: GridImage) -> GridImage:
    """Literal set erosion: points whose translated element stays inside the set."""
    points, support = _as_sets(se, img)
    out = np.zeros(img.shape)
    for r in range(img.rows):
        for c in range(img.cols):
            if all((r + dy, c + dx) in points for (dy, dx) in support):
                out[r, c] = 1.0
    return GridImage(out)


def _as_sets(se: StructuringElement, img: GridImage):
    if not (se.is_binary() and img.is_binary()):
        raise DomainError("set-morphology oracles need binary inputs")
    points = {(r, c) for r, c in zip(*np.nonzero(img.pixels))}
    support = {d for d, v in se.items() if v == 1.0}
    return points, support


# --- presets and the QSEL text format ---------------------------------------

def _all_ones(offsets) -> StructuringElement:
    return StructuringElement({d: 1.0 for d in offsets})


PRESETS = {
    # 3x3 cross: origin plus the four 4-neighbours
    "cross3": _all_ones([(0, 0), (-1, 0), (1, 0), (0, -1), (0, 1)]),
    # full 3x3 square
    "square3": _all_ones([(dy, dx) for dy in (-1, 0, 1) for dx in (-1, 0, 1)]),
    # 5x5 disk: offsets with dy^2 + dx^2 <= 4
    "disk5": _all_ones(
        [
            (dy, dx)
            for dy in range(-2, 3)
            for dx in range(-2, 3)
            if dy * dy + dx * dx <= 4
        ]
    ),
}


def preset(name: str) -> StructuringElement:
    try:
        return PRESETS[name]
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; expected one of {sorted(PRESETS)}") from None


SEL_MAGIC = "QSEL 1"


def write_sel(path, se: StructuringElement) -> None:
    lines = [SEL_MAGIC]
    for (dy, dx), v in sorted(se.items()):
        lines.append(f"{dy} {dx} {repr(float(v))}")
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def read_sel(path) -> StructuringElement:
    with open(path, "r", encoding="ascii") as fh:
        raw = fh.read().splitlines()
    if not raw or raw[0].strip() != SEL_MAGIC:
        raise ParseError(f"{path}: missing '{SEL_MAGIC}' header")
    entries = {}
    for i, ln in enumerate(raw[1:], start=2):
        stripped = ln.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != 3:
            raise ParseError(f"{path}: line {i} is not 'dy dx value'")
        try:
            dy, dx, v = int(parts[0]), int(parts[1]), float(parts[2])
        except ValueError:
            raise ParseError(f"{path}: line {i} holds a malformed entry") from None
        if not 0.0 <= v <= 1.0:
            raise ParseError(f"{path}: line {i} has a value outside [0,1]")
        entries[(dy, dx)] = v
    if not entries:
        raise ParseError(f"{path}: no entries")
    return StructuringElement(entries)
