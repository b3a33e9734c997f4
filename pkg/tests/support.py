"""Shared generators and independent oracles for the test suite."""

from __future__ import annotations

import itertools

import numpy as np

from qimg import (
    BOOLEAN,
    GOEDEL,
    LUKASIEWICZ,
    PRODUCT,
    IndexSet,
    Kernel,
    ModuleElement,
)

ALL_FAMILIES = (GOEDEL, PRODUCT, LUKASIEWICZ, BOOLEAN)
REAL_FAMILIES = (GOEDEL, PRODUCT, LUKASIEWICZ)

TOL = 1e-12

LEVEL_RANK = {"general": 0, "coder": 1, "normal": 2, "strong": 3, "orthonormal": 4}


def leq(a, b, tol=TOL) -> bool:
    return bool(np.all(np.asarray(a) <= np.asarray(b) + tol))


def close(a, b, tol=TOL) -> bool:
    return bool(np.all(np.abs(np.asarray(a) - np.asarray(b)) <= tol))


def unit_values(rng, shape, q):
    if q is BOOLEAN:
        return rng.integers(0, 2, size=shape).astype(float)
    return rng.uniform(0.0, 1.0, size=shape)


def random_element(rng, q, index: IndexSet) -> ModuleElement:
    return ModuleElement(index, unit_values(rng, index.size, q))


def random_kernel(rng, q, nx: int, ny: int, palette=None) -> Kernel:
    if palette is not None:
        vals = rng.choice(np.asarray(palette, dtype=float), size=(nx, ny))
    else:
        vals = unit_values(rng, (nx, ny), q)
    return Kernel(q, IndexSet(nx), IndexSet(ny), vals)


def random_strong_kernel(rng, q, nx: int, ny: int):
    """A kernel forced strong: each code row is 1 at its own column, 0 elsewhere."""
    assert nx >= ny
    vals = unit_values(rng, (nx, ny), q)
    eps = rng.choice(nx, size=ny, replace=False)
    for y, x in enumerate(eps):
        vals[x, :] = 0.0
        vals[x, y] = 1.0
    return Kernel(q, IndexSet(nx), IndexSet(ny), vals), tuple(int(x) for x in eps)


def classify_bruteforce(p: Kernel):
    """Exhaustive-injection classification oracle for small kernels.

    Enumerates every injective map from codomain to domain indices and
    checks the defining clauses directly; independent of the matching
    search used in production.
    """
    vals = p.values
    nx, ny = vals.shape
    orthogonal = True
    for x in range(nx):
        for y1 in range(ny):
            for y2 in range(ny):
                if y1 != y2 and p.q.mul(vals[x, y1], vals[x, y2]) != 0.0:
                    orthogonal = False
    best = "general"
    for eps in itertools.permutations(range(nx), ny):
        if not all(vals[eps[y], y] >= 1.0 for y in range(ny)):
            continue
        level = "coder"
        if all(vals[eps[y], y] == 1.0 for y in range(ny)):
            level = "normal"
            if all(
                vals[eps[y1], y2] == 0.0
                for y1 in range(ny)
                for y2 in range(ny)
                if y1 != y2
            ):
                level = "strong"
        if LEVEL_RANK[level] > LEVEL_RANK[best]:
            best = level
        if best == "strong":
            break
    if best == "strong" and orthogonal:
        best = "orthonormal"
    return best, orthogonal


def witness_satisfies(p: Kernel, eps, level: str) -> bool:
    """Check the reported injection against the clauses of the reported level."""
    vals = p.values
    ny = vals.shape[1]
    if len(set(eps)) != ny:
        return False
    if level in ("coder",) and not all(vals[eps[y], y] >= 1.0 for y in range(ny)):
        return False
    if level in ("normal", "strong", "orthonormal"):
        if not all(vals[eps[y], y] == 1.0 for y in range(ny)):
            return False
    if level in ("strong", "orthonormal"):
        if not all(
            vals[eps[y1], y2] == 0.0 for y1 in range(ny) for y2 in range(ny) if y1 != y2
        ):
            return False
    return True


def shift_pixels(pixels: np.ndarray, hy: int, hx: int) -> np.ndarray:
    """Translate by (hy, hx) with zero fill: out[r, c] = pixels[r - hy, c - hx]."""
    rows, cols = pixels.shape
    out = np.zeros_like(pixels)
    rs0, rs1 = max(0, hy), min(rows, rows + hy)
    cs0, cs1 = max(0, hx), min(cols, cols + hx)
    out[rs0:rs1, cs0:cs1] = pixels[rs0 - hy : rs1 - hy, cs0 - hx : cs1 - hx]
    return out
