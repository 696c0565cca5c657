"""Kernel selection for the windowed Laurent expansion.

The hot loop is a raster-order geometric-series accumulation over a dense
int64 grid.  A Cython extension provides the compiled kernel; a vectorized
numpy implementation is the fallback, selected at import.  Terms whose
worst-case coefficients could overflow int64 run on an exact big-int path.

Set LATTICE_STAIRS_BACKEND=py to force the fallback (used by the benchmark).
"""

from __future__ import annotations

import os

import numpy as np

_FORCED = os.environ.get("LATTICE_STAIRS_BACKEND", "auto").lower()

_cy = None
if _FORCED in ("auto", "cy", "compiled"):
    try:
        from . import _kernel_cy as _cy  # type: ignore[attr-defined]
    except ImportError:
        _cy = None
        if _FORCED in ("cy", "compiled"):
            raise

BACKEND = "compiled" if _cy is not None else "python"


def _geometric_np(grid: np.ndarray, ux: int, uy: int) -> None:
    """grid[i, j] += grid[i-ux, j-uy] in raster order (ux, uy >= 0, not both 0)."""
    nx, ny = grid.shape
    if ux == 0:
        for j in range(uy, ny):
            grid[:, j] += grid[:, j - uy]
    elif uy == 0:
        for i in range(ux, nx):
            grid[i, :] += grid[i - ux, :]
    else:
        for i in range(ux, nx):
            grid[i, uy:] += grid[i - ux, :-uy]


def _geometric(grid: np.ndarray, ux: int, uy: int) -> None:
    if _cy is not None:
        _cy.geometric_pass(grid, ux, uy)
    else:
        _geometric_np(grid, ux, uy)


def run_passes(points, origin, shape, series, use_bigint):
    """Accumulate geometric/interval series over a dense grid.

    points: {absolute (x, y): coeff}; origin/shape define the grid frame;
    series: [(u, m)] with u componentwise nonnegative, m = 0 for a full
    geometric series and m >= 2 for the finite sum over {0, u, .., (m-1)u}.
    Returns an int64 ndarray, or nested lists of Python ints if use_bigint.
    """
    ox, oy = origin
    nx, ny = shape
    if use_bigint:
        return _run_bigint(points, ox, oy, nx, ny, series)
    grid = np.zeros((nx, ny), dtype=np.int64)
    for (x, y), c in points.items():
        grid[x - ox, y - oy] += c
    for (ux, uy), m in series:
        _geometric(grid, ux, uy)
        if m:
            sx, sy = m * ux, m * uy
            if sx < nx and sy < ny:
                shifted = grid.copy()
                shifted[sx:, sy:] -= grid[: nx - sx, : ny - sy]
                grid = shifted
    return grid


def _run_bigint(points, ox, oy, nx, ny, series):
    grid = [[0] * ny for _ in range(nx)]
    for (x, y), c in points.items():
        grid[x - ox][y - oy] += c
    for (ux, uy), m in series:
        for i in range(ux, nx):
            src = grid[i - ux]
            dst = grid[i]
            for j in range(uy, ny):
                dst[j] += src[j - uy]
        if m:
            sx, sy = m * ux, m * uy
            if sx < nx and sy < ny:
                prev = [row[:] for row in grid]
                for i in range(sx, nx):
                    src = prev[i - sx]
                    dst = grid[i]
                    for j in range(sy, ny):
                        dst[j] -= src[j - sy]
    return grid
