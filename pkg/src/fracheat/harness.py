"""Convergence sweeps and their reporting.

A sweep runs one scheme over a ladder of time-step counts for each
requested fractional order, measures the error against the problem's exact
solution, and tags each refinement with its observed rate
log2(E(N/2) / E(N)) whenever the ladder actually doubled.  Reports render
to CSV (machine-readable, stable column set) or to an aligned text table
with one block per order.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .meshes import SpatialGrid, TemporalMesh, graded_time_mesh, uniform_time_mesh
from .operators import norm_energy, norm_l2
from .problems import get_problem
from .solver import SchemeKind, SolutionLattice, solve

__all__ = [
    "SweepConfig",
    "ReportRow",
    "ConvergenceReport",
    "max_lattice_error",
    "lattice_error",
    "parse_mesh_kind",
    "build_time_mesh",
    "run_sweep",
]

CSV_HEADER = "alpha,scheme,mesh,M,N,E1,rate,wall_seconds"


def max_lattice_error(
    lattice: SolutionLattice, exact: Callable[[np.ndarray, float], np.ndarray]
) -> float:
    """Largest pointwise error over every node of every level."""
    worst = 0.0
    for n, t in enumerate(lattice.mesh.t):
        diff = lattice.values[n] - np.asarray(exact(lattice.grid.x, float(t)))
        worst = max(worst, float(np.max(np.abs(diff))))
    return worst


def lattice_error(
    lattice: SolutionLattice,
    exact: Callable[[np.ndarray, float], np.ndarray],
    norm: str = "max",
) -> float:
    """Error in the chosen norm, maximized over time levels.

    ``max`` is the pointwise lattice maximum, ``l2`` and ``a`` take the
    discrete L2 and energy norms of each level's error and report the
    largest one.
    """
    if norm == "max":
        return max_lattice_error(lattice, exact)
    if norm == "l2":
        level = lambda d: norm_l2(d, lattice.grid.h)
    elif norm == "a":
        level = lambda d: norm_energy(d, lattice.grid.h)
    else:
        raise ValueError(f"unknown norm {norm!r} (known: max, a, l2)")
    worst = 0.0
    for n, t in enumerate(lattice.mesh.t):
        diff = lattice.values[n] - np.asarray(exact(lattice.grid.x, float(t)))
        worst = max(worst, level(diff))
    return worst


def parse_mesh_kind(mesh_kind: str) -> float:
    """Return the grading exponent encoded by a mesh kind string.

    ``"uniform"`` maps to r = 1; ``"graded:<r>"`` to its exponent.
    """
    if mesh_kind == "uniform":
        return 1.0
    if mesh_kind.startswith("graded:"):
        try:
            r = float(mesh_kind.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"bad grading exponent in {mesh_kind!r}") from None
        if r < 1.0:
            raise ValueError(f"grading exponent must be >= 1, got {r}")
        return r
    raise ValueError(f"unknown mesh kind {mesh_kind!r} (use uniform or graded:<r>)")


def build_time_mesh(mesh_kind: str, T: float, N: int) -> TemporalMesh:
    r = parse_mesh_kind(mesh_kind)
    if r == 1.0:
        return uniform_time_mesh(T, N)
    return graded_time_mesh(T, N, r)


@dataclass(frozen=True)
class SweepConfig:
    """Everything one convergence sweep depends on.

    ``Ns`` is consumed in order; a row gets a rate exactly when the
    previous row of the same alpha used half its step count.  ``norm``
    selects the error measure (max, a, or l2).
    """

    alphas: tuple[float, ...]
    M: int
    Ns: tuple[int, ...]
    T: float = 1.0
    scheme: SchemeKind = SchemeKind.TRANSFORMED
    mesh_kind: str = "uniform"
    problem_label: str = "manufactured-sin"
    norm: str = "max"
    output_path: Optional[str] = None
    format: str = "csv"

    def __post_init__(self) -> None:
        if len(self.alphas) == 0 or len(self.Ns) == 0:
            raise ValueError("need at least one alpha and one N")
        if self.format not in ("csv", "table"):
            raise ValueError(f"unknown format {self.format!r}")
        parse_mesh_kind(self.mesh_kind)  # fail fast on bad mesh strings
        if self.norm not in ("max", "a", "l2"):
            raise ValueError(f"unknown norm {self.norm!r}")


@dataclass(frozen=True)
class ReportRow:
    alpha: float
    scheme: str
    mesh: str
    M: int
    N: int
    E1: float
    rate: Optional[float]
    wall_seconds: float


@dataclass(frozen=True)
class ConvergenceReport:
    config: SweepConfig
    rows: tuple[ReportRow, ...] = field(default_factory=tuple)

    def to_csv(self) -> str:
        lines = [CSV_HEADER]
        for r in self.rows:
            rate = "" if r.rate is None else f"{r.rate:.5e}"
            lines.append(
                f"{r.alpha:g},{r.scheme},{r.mesh},{r.M},{r.N},"
                f"{r.E1:.5e},{rate},{r.wall_seconds:.5e}"
            )
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        cfg = self.config
        out = []
        for alpha in cfg.alphas:
            out.append(
                f"alpha = {alpha:g}   "
                f"(problem={cfg.problem_label}, scheme={cfg.scheme.value}, "
                f"mesh={cfg.mesh_kind}, M={cfg.M}, norm={cfg.norm})"
            )
            out.append(f"{'N':>8}  {'E1':>12}  {'rate':>8}")
            for r in self.rows:
                if r.alpha != alpha:
                    continue
                rate = "*" if r.rate is None else f"{r.rate:.4f}"
                out.append(f"{r.N:>8}  {r.E1:>12.4e}  {rate:>8}")
            out.append("")
        return "\n".join(out)

    def render(self) -> str:
        return self.to_csv() if self.config.format == "csv" else self.to_text()


def run_sweep(config: SweepConfig) -> ConvergenceReport:
    """Run the whole ladder sequentially and collect one row per solve.

    Rows appear in (alpha, N) iteration order, so repeated runs produce
    identical numeric columns; only ``wall_seconds`` varies between runs.
    If ``output_path`` is set the rendered report is also written there
    (UTF-8, LF line endings).
    """
    grid = SpatialGrid(config.M)
    rows: list[ReportRow] = []
    mesh_name = config.mesh_kind
    for alpha in config.alphas:
        problem = get_problem(config.problem_label, alpha, config.T)
        if problem.exact_u is None:
            raise ValueError(
                f"problem {config.problem_label!r} has no exact solution to sweep against"
            )
        prev: Optional[ReportRow] = None
        for N in config.Ns:
            mesh = build_time_mesh(config.mesh_kind, config.T, N)
            start = time.perf_counter()
            lattice = solve(problem, grid, mesh, config.scheme)
            wall = time.perf_counter() - start
            err = lattice_error(lattice, problem.exact_u, config.norm)
            rate = None
            if prev is not None and N == 2 * prev.N and err > 0.0 and prev.E1 > 0.0:
                rate = float(np.log2(prev.E1 / err))
            row = ReportRow(
                alpha=alpha,
                scheme=config.scheme.value,
                mesh=mesh_name,
                M=config.M,
                N=N,
                E1=err,
                rate=rate,
                wall_seconds=wall,
            )
            rows.append(row)
            prev = row
    report = ConvergenceReport(config=config, rows=tuple(rows))
    if config.output_path is not None:
        with open(config.output_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(report.render())
    return report
