# cython: boundscheck=False, wraparound=False, language_level=3
"""Compiled raster kernel for geometric-series accumulation on int64 grids."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def geometric_pass(cnp.int64_t[:, ::1] grid, Py_ssize_t ux, Py_ssize_t uy):
    """grid[i, j] += grid[i-ux, j-uy] in raster order (ux, uy >= 0, not both 0)."""
    cdef Py_ssize_t nx = grid.shape[0]
    cdef Py_ssize_t ny = grid.shape[1]
    cdef Py_ssize_t i, j
    with nogil:
        for i in range(ux, nx):
            for j in range(uy, ny):
                grid[i, j] += grid[i - ux, j - uy]
