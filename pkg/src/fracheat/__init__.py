"""Finite difference solvers for the 1-D time-fractional diffusion equation.

The Caputo-order problem is integrated in time and discretized by exact
kernel-step quadrature against endpoint averages, paired with a compact
fourth-order spatial stencil; a classical L1 scheme is included as a
baseline.  See ``solver`` for the schemes, ``problems`` for benchmark
instances, and ``harness`` for convergence sweeps and reporting.
"""

from .harness import (
    ConvergenceReport,
    ReportRow,
    SweepConfig,
    build_time_mesh,
    lattice_error,
    max_lattice_error,
    parse_mesh_kind,
    run_sweep,
)
from .meshes import SpatialGrid, TemporalMesh, graded_time_mesh, uniform_time_mesh
from .operators import (
    GridFunction,
    TridiagonalSystem,
    apply_compact,
    apply_second_diff,
    norm_energy,
    norm_l2,
    seminorm_h1,
    solve_tridiagonal,
)
from .problems import (
    ProblemSpec,
    SeriesSolution,
    available_problems,
    get_problem,
    manufactured_sin,
    series_reference,
    sine_decay,
    zero_problem,
)
from .quadrature import (
    WeightRow,
    forcing_convolution,
    forcing_convolution_profile,
    midpoint_convolution,
    weights_row,
)
from .solver import SchemeKind, SolutionLattice, solve, step_l1, step_transformed
from .special import MLParams, SeriesConvergenceError, gamma, mittag_leffler

__all__ = [
    "ConvergenceReport",
    "ReportRow",
    "SweepConfig",
    "build_time_mesh",
    "lattice_error",
    "max_lattice_error",
    "parse_mesh_kind",
    "run_sweep",
    "SpatialGrid",
    "TemporalMesh",
    "graded_time_mesh",
    "uniform_time_mesh",
    "GridFunction",
    "TridiagonalSystem",
    "apply_compact",
    "apply_second_diff",
    "norm_energy",
    "norm_l2",
    "seminorm_h1",
    "solve_tridiagonal",
    "ProblemSpec",
    "SeriesSolution",
    "available_problems",
    "get_problem",
    "manufactured_sin",
    "series_reference",
    "sine_decay",
    "zero_problem",
    "WeightRow",
    "forcing_convolution",
    "forcing_convolution_profile",
    "midpoint_convolution",
    "weights_row",
    "SchemeKind",
    "SolutionLattice",
    "solve",
    "step_l1",
    "step_transformed",
    "MLParams",
    "SeriesConvergenceError",
    "gamma",
    "mittag_leffler",
]

__version__ = "0.1.0"
