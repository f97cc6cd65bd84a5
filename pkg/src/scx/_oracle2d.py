"""Coarse two-dimensional Dirichlet eigensolve, used only for verification.

Cross-checks product additivity against a direct five-point-stencil solve on
a rectangle; deliberately independent of the one-dimensional spectral path.
Not part of the public computation API.
"""

from __future__ import annotations

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.linalg import eigsh


def rectangle_lambda1(a: float, b: float, target_h: float = 1.0 / 64) -> float:
    """First Dirichlet eigenvalue of -Lap on (0,a) x (0,b), five-point stencil."""
    nx = max(int(round(a / target_h)) - 1, 8)
    ny = max(int(round(b / target_h)) - 1, 8)
    hx = a / (nx + 1)
    hy = b / (ny + 1)
    n = nx * ny

    rows, cols, vals = [], [], []

    def idx(i, j):
        return i * ny + j

    for i in range(nx):
        for j in range(ny):
            k = idx(i, j)
            rows.append(k); cols.append(k); vals.append(2.0 / hx**2 + 2.0 / hy**2)
            if i > 0:
                rows.append(k); cols.append(idx(i - 1, j)); vals.append(-1.0 / hx**2)
            if i < nx - 1:
                rows.append(k); cols.append(idx(i + 1, j)); vals.append(-1.0 / hx**2)
            if j > 0:
                rows.append(k); cols.append(idx(i, j - 1)); vals.append(-1.0 / hy**2)
            if j < ny - 1:
                rows.append(k); cols.append(idx(i, j + 1)); vals.append(-1.0 / hy**2)
    A = csr_matrix((vals, (rows, cols)), shape=(n, n))
    v0 = np.ones(n)
    lam = eigsh(A, k=1, sigma=0.0, which="LM", v0=v0,
                return_eigenvectors=False)
    return float(lam[0])
