"""Image compression and reconstruction as transforms over 2-D grids.

A codebook is a kernel from the m x n pixel grid to the a x b code grid.
Compression is the forward transform, reconstruction the inverse one; the
two builders here generate a strong coder (triangular) and an orthonormal
one (block), so the fixed-point and round-trip theorems are exercised by
construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ParseError, ShapeError
from .free_module import IndexSet
from .grid import GridImage
from .quantale import BOOLEAN, Quantale
from .transform import Kernel, forward, inverse, read_kernel, write_kernel

__all__ = [
    "Codebook",
    "build_triangular_codebook",
    "build_block_codebook",
    "custom_codebook",
    "compress",
    "reconstruct",
    "mse",
    "psnr",
    "read_codebook",
    "write_codebook",
]

BUILDERS = ("triangular", "block", "custom")


@dataclass(frozen=True, eq=False)
class Codebook:
    """A kernel between shaped grids plus the name of its construction."""

    kernel: Kernel
    builder: str

    def __post_init__(self):
        if self.builder not in BUILDERS:
            raise ValueError(f"unknown builder {self.builder!r}; expected one of {BUILDERS}")
        if self.kernel.domain.shape is None or self.kernel.codomain.shape is None:
            raise ShapeError("codebook kernels need 2-D shapes on both index sets")
        (m, n), (a, b) = self.kernel.domain.shape, self.kernel.codomain.shape
        if a > m or b > n:
            raise ShapeError(f"code grid {a}x{b} larger than image grid {m}x{n}")

    @property
    def image_shape(self) -> tuple[int, int]:
        return self.kernel.domain.shape

    @property
    def code_shape(self) -> tuple[int, int]:
        return self.kernel.codomain.shape


def _check_builder_params(q: Quantale, m: int, n: int, a: int, b: int, minimum: int) -> None:
    if q == BOOLEAN:
        raise DomainError("codebook builders produce fractional entries; pick a real family")
    if not (minimum <= a <= m and minimum <= b <= n):
        raise ValueError(f"need {minimum} <= a <= m and {minimum} <= b <= n, got {(m, n, a, b)}")


def _nodes(length: int, count: int) -> np.ndarray:
    """count node positions spread over 0..length-1, rounded half-up."""
    step = (length - 1) / (count - 1)
    return np.array([math.floor(h * step + 0.5) for h in range(count)], dtype=int)


def _hat_profiles(length: int, nodes: np.ndarray) -> np.ndarray:
    """One triangular bump per node: 1 at its node, 0 at the neighbouring ones."""
    count = len(nodes)
    profiles = np.zeros((count, length))
    i = np.arange(length)
    for h in range(count):
        node = nodes[h]
        if h > 0:
            left = nodes[h - 1]
            rising = (i > left) & (i <= node)
            profiles[h, rising] = (i[rising] - left) / (node - left)
        if h < count - 1:
            right = nodes[h + 1]
            falling = (i >= node) & (i < right)
            profiles[h, falling] = (right - i[falling]) / (right - node)
        profiles[h, node] = 1.0
    return profiles


def build_triangular_codebook(q: Quantale, m: int, n: int, a: int, b: int) -> Codebook:
    """Separable hat-function codebook; classifies strong by construction.

    Entry ((i,j),(h,k)) is the real product A_h(i) * B_k(j) of triangular
    bumps centred on an a x b lattice of node pixels; each code cell is 1
    exactly at its node and 0 at every other node, which makes the node map
    the witnessing injection.
    """
    _check_builder_params(q, m, n, a, b, minimum=2)
    rows = _hat_profiles(m, _nodes(m, a))  # (a, m)
    cols = _hat_profiles(n, _nodes(n, b))  # (b, n)
    values = np.einsum("hi,kj->ijhk", rows, cols).reshape(m * n, a * b)
    kernel = Kernel(q, IndexSet(m * n, (m, n)), IndexSet(a * b, (a, b)), values)
    return Codebook(kernel, "triangular")


def build_block_codebook(q: Quantale, m: int, n: int, a: int, b: int) -> Codebook:
    """Disjoint rectangular blocks; classifies orthonormal by construction.

    The grid splits into a x b blocks of near-equal size.  Inside block
    (h,k) the weight is 1 at the block centre and decays linearly to a
    floor of 0.2 at the block boundary; outside it is 0, so distinct code
    cells never overlap.
    """
    _check_builder_params(q, m, n, a, b, minimum=1)
    row_edges = [m * h // a for h in range(a + 1)]
    col_edges = [n * k // b for k in range(b + 1)]
    values = np.zeros((m, n, a, b))
    for h in range(a):
        r0, r1 = row_edges[h], row_edges[h + 1]
        rc = (r0 + r1 - 1) // 2
        rext = max(rc - r0, r1 - 1 - rc)
        for k in range(b):
            c0, c1 = col_edges[k], col_edges[k + 1]
            cc = (c0 + c1 - 1) // 2
            cext = max(cc - c0, c1 - 1 - cc)
            ri = np.arange(r0, r1)
            ci = np.arange(c0, c1)
            dr = np.abs(ri - rc) / rext if rext else np.zeros(len(ri))
            dc = np.abs(ci - cc) / cext if cext else np.zeros(len(ci))
            # written so both endpoints are exact: 1.0 at the centre, 0.2 at the rim
            w = 0.2 + 0.8 * (1.0 - np.maximum(dr[:, None], dc[None, :]))
            w[rc - r0, cc - c0] = 1.0
            values[r0:r1, c0:c1, h, k] = w
    kernel = Kernel(
        q, IndexSet(m * n, (m, n)), IndexSet(a * b, (a, b)), values.reshape(m * n, a * b)
    )
    return Codebook(kernel, "block")


def custom_codebook(
    q: Quantale, values, image_shape: tuple[int, int], code_shape: tuple[int, int]
) -> Codebook:
    """Wrap caller-supplied kernel entries as a codebook."""
    m, n = image_shape
    a, b = code_shape
    kernel = Kernel(q, IndexSet(m * n, (m, n)), IndexSet(a * b, (a, b)), values)
    return Codebook(kernel, "custom")


def compress(cb: Codebook, img: GridImage) -> GridImage:
    """Forward transform of the image through the codebook kernel."""
    if img.shape != cb.image_shape:
        raise ShapeError(f"image {img.shape} does not match codebook domain {cb.image_shape}")
    out = forward(cb.kernel, img.element())
    return GridImage.from_element(out)


def reconstruct(cb: Codebook, comp: GridImage) -> GridImage:
    """Inverse transform of a compressed image back to the full grid."""
    if comp.shape != cb.code_shape:
        raise ShapeError(f"image {comp.shape} does not match codebook codomain {cb.code_shape}")
    out = inverse(cb.kernel, comp.element())
    return GridImage.from_element(out)


def mse(a: GridImage, b: GridImage) -> float:
    """Mean squared pixel difference on the [0,1] scale."""
    if a.shape != b.shape:
        raise ShapeError(f"images shaped {a.shape} and {b.shape}")
    diff = a.pixels - b.pixels
    return float(np.mean(diff * diff))


def psnr(a: GridImage, b: GridImage) -> float:
    """Peak signal-to-noise ratio in dB; infinite for identical images."""
    err = mse(a, b)
    if err == 0.0:
        return math.inf
    return 10.0 * math.log10(1.0 / err)


def write_codebook(path, cb: Codebook) -> None:
    m, n = cb.image_shape
    a, b = cb.code_shape
    write_kernel(path, cb.kernel, comments=[f"builder {cb.builder} {m} {n} {a} {b}"])


def read_codebook(path) -> Codebook:
    kernel, comments = read_kernel(path)
    params = None
    for c in comments:
        parts = c.split()
        if len(parts) == 6 and parts[0] == "builder":
            params = parts[1:]
            break
    if params is None:
        raise ParseError(f"{path}: no '# builder <name> <m> <n> <a> <b>' comment line")
    name = params[0]
    try:
        m, n, a, b = (int(tok) for tok in params[1:])
    except ValueError:
        raise ParseError(f"{path}: malformed builder parameters {params[1:]}") from None
    if m * n != kernel.domain.size or a * b != kernel.codomain.size:
        raise ParseError(f"{path}: builder shapes disagree with the kernel sizes")
    shaped = Kernel(kernel.q, IndexSet(m * n, (m, n)), IndexSet(a * b, (a, b)), kernel.values)
    return Codebook(shaped, name)
