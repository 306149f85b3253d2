"""Spatial stencils, discrete norms, and the tridiagonal solve.

Grid functions are plain 1-D numpy arrays of length M+1 holding nodal
values on a ``SpatialGrid``; indices 0 and M are boundary nodes.  All the
spatial structure of the schemes lives in two stencils:

* the compact average  (v[i-1] + 10 v[i] + v[i+1]) / 12, which lifts the
  centered second difference to fourth-order accuracy, and
* the centered second difference  (v[i-1] - 2 v[i] + v[i+1]) / h**2.

Both act on interior nodes only; the compact average passes boundary
values through unchanged and the second difference returns zeros there.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "GridFunction",
    "apply_compact",
    "apply_second_diff",
    "norm_l2",
    "seminorm_h1",
    "norm_energy",
    "TridiagonalSystem",
    "solve_tridiagonal",
]

# Nodal values on a SpatialGrid, shape (M+1,).
GridFunction = np.ndarray


def apply_compact(v: GridFunction) -> GridFunction:
    """Compact average: (v[i-1] + 10 v[i] + v[i+1]) / 12 at interior nodes.

    Boundary entries are returned unchanged.
    """
    out = np.array(v, dtype=float)
    out[1:-1] = (v[:-2] + 10.0 * v[1:-1] + v[2:]) / 12.0
    return out


def apply_second_diff(v: GridFunction, h: float) -> GridFunction:
    """Centered second difference at interior nodes, zero at the boundary."""
    out = np.zeros_like(v, dtype=float)
    out[1:-1] = (v[:-2] - 2.0 * v[1:-1] + v[2:]) / (h * h)
    return out


def norm_l2(v: GridFunction, h: float) -> float:
    """Discrete L2 norm sqrt(h * sum_{i=1}^{M-1} v_i**2) over interior nodes."""
    w = v[1:-1]
    return float(np.sqrt(h * np.dot(w, w)))


def seminorm_h1(v: GridFunction, h: float) -> float:
    """Discrete H1 seminorm sqrt(h * sum_{i=1}^{M} ((v_i - v_{i-1})/h)**2)."""
    d = np.diff(v) / h
    return float(np.sqrt(h * np.dot(d, d)))


def norm_energy(v: GridFunction, h: float) -> float:
    """Energy norm induced by the compact stencil.

    Defined by  |v|_E**2 = |grad v|**2 - (h**2/12) * h * sum (d2 v_i)**2
    where |grad v| is ``seminorm_h1`` and d2 the centered second difference.
    The subtraction keeps at least two thirds of the seminorm for functions
    vanishing at the boundary, so the radicand is nonnegative up to
    rounding; a radicand below -1e-12 relative to the seminorm squared is
    reported as an error instead of silently clamped.
    """
    semi2 = h * np.sum((np.diff(v) / h) ** 2)
    d2 = apply_second_diff(v, h)[1:-1]
    rad = semi2 - (h * h / 12.0) * h * np.dot(d2, d2)
    if rad < 0.0:
        if rad < -1e-12 * max(semi2, np.finfo(float).tiny):
            raise ValueError(f"energy norm radicand is negative: {rad}")
        rad = 0.0
    return float(np.sqrt(rad))


@dataclass(frozen=True)
class TridiagonalSystem:
    """A strictly diagonally dominant tridiagonal system A u = b.

    ``diag`` and ``rhs`` have length n; ``lower`` and ``upper`` have length
    n - 1 and hold A[i+1, i] and A[i, i+1].  Strict row dominance is what
    licenses the pivot-free elimination in ``solve_tridiagonal``, so it is
    checked at construction.
    """

    lower: np.ndarray
    diag: np.ndarray
    upper: np.ndarray
    rhs: np.ndarray

    def __post_init__(self) -> None:
        n = self.diag.size
        if self.rhs.size != n or self.lower.size != n - 1 or self.upper.size != n - 1:
            raise ValueError("inconsistent band lengths")
        if __debug__:
            off = np.zeros(n)
            off[:-1] += np.abs(self.upper)
            off[1:] += np.abs(self.lower)
            gap = np.abs(self.diag) - off
            if not np.all(gap > 0.0):
                i = int(np.argmin(gap))
                raise ValueError(
                    f"row {i} is not strictly diagonally dominant (gap {gap[i]})"
                )


def solve_tridiagonal(system: TridiagonalSystem) -> np.ndarray:
    """Solve A u = b by the Thomas algorithm (no pivoting).

    Row dominance guarantees every pivot stays bounded away from zero; a
    vanishing pivot therefore indicates a corrupted system and raises.
    """
    n = system.diag.size
    piv = system.diag[0]
    if abs(piv) < 1e-300:
        raise ValueError("zero pivot in row 0")
    if n == 1:
        return np.array([system.rhs[0] / piv])
    c = np.empty(n - 1)
    d = np.empty(n)
    c[0] = system.upper[0] / piv
    d[0] = system.rhs[0] / piv
    for i in range(1, n):
        piv = system.diag[i] - system.lower[i - 1] * c[i - 1]
        if abs(piv) < 1e-300:
            raise ValueError(f"zero pivot in row {i}")
        if i < n - 1:
            c[i] = system.upper[i] / piv
        d[i] = (system.rhs[i] - system.lower[i - 1] * d[i - 1]) / piv
    u = np.empty(n)
    u[-1] = d[-1]
    for i in range(n - 2, -1, -1):
        u[i] = d[i] - c[i] * u[i + 1]
    return u
