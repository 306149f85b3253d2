"""Spatial grids on [0, 1] and (possibly graded) temporal meshes on [0, T].

The time-stepping schemes read mesh geometry exclusively through these two
containers, so nonuniform meshes only ever have to be implemented here.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = ["SpatialGrid", "TemporalMesh", "uniform_time_mesh", "graded_time_mesh"]


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=float)
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class SpatialGrid:
    """Uniform grid x_i = i*h on [0, 1] with M cells, h = 1/M.

    Nodes 0 and M carry the Dirichlet boundary; 1..M-1 are interior.
    """

    M: int
    h: float = field(init=False)
    x: np.ndarray = field(init=False)

    def __post_init__(self) -> None:
        if self.M < 2:
            raise ValueError(f"need at least 2 cells, got M={self.M}")
        object.__setattr__(self, "h", 1.0 / self.M)
        object.__setattr__(self, "x", _readonly(np.linspace(0.0, 1.0, self.M + 1)))


@dataclass(frozen=True)
class TemporalMesh:
    """Strictly increasing time levels 0 = t_0 < t_1 < ... < t_N = T."""

    t: np.ndarray
    T: float

    def __post_init__(self) -> None:
        t = _readonly(self.t)
        object.__setattr__(self, "t", t)
        if t.ndim != 1 or t.size < 2:
            raise ValueError("need at least the two levels t_0 and t_N")
        if t[0] != 0.0:
            raise ValueError(f"mesh must start at 0, got t_0={t[0]}")
        if not np.all(np.diff(t) > 0.0):
            raise ValueError("time levels must be strictly increasing")
        if abs(t[-1] - self.T) > 8.0 * np.finfo(float).eps * max(1.0, self.T):
            raise ValueError(f"t_N={t[-1]} does not match T={self.T}")

    @property
    def N(self) -> int:
        return self.t.size - 1

    @property
    def steps(self) -> np.ndarray:
        """Step sizes tau_n = t_n - t_{n-1}, length N."""
        return np.diff(self.t)


def uniform_time_mesh(T: float, N: int) -> TemporalMesh:
    """Uniform mesh t_n = T*n/N.

    The levels are computed as T*(n/N) rather than by accumulating a step
    size, so t_N equals T exactly and refining N keeps shared levels
    bit-identical.
    """
    if T <= 0.0:
        raise ValueError(f"final time must be positive, got T={T}")
    if N < 1:
        raise ValueError(f"need at least one step, got N={N}")
    n = np.arange(N + 1, dtype=float)
    return TemporalMesh(t=T * (n / N), T=T)


def graded_time_mesh(T: float, N: int, r: float) -> TemporalMesh:
    """Graded mesh t_n = T*(n/N)**r clustering levels near t = 0.

    r = 1 delegates to ``uniform_time_mesh`` so the two constructions agree
    bit for bit.  r > 1 compresses early steps to compensate the kernel
    singularity; r < 1 is rejected because it would do the opposite.
    """
    if r < 1.0:
        raise ValueError(f"grading exponent must satisfy r >= 1, got r={r}")
    if r == 1.0:
        return uniform_time_mesh(T, N)
    if T <= 0.0:
        raise ValueError(f"final time must be positive, got T={T}")
    if N < 1:
        raise ValueError(f"need at least one step, got N={N}")
    n = np.arange(N + 1, dtype=float)
    return TemporalMesh(t=T * (n / N) ** r, T=T)
