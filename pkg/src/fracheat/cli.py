"""Command line front end.

Two subcommands: ``run`` solves a single problem instance and writes the
solution, ``converge`` runs a refinement ladder and writes the error
report.  Usage problems exit with status 2, runtime failures with 1.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .harness import ConvergenceReport, SweepConfig, build_time_mesh, parse_mesh_kind, run_sweep
from .meshes import SpatialGrid
from .problems import available_problems, get_problem
from .solver import SchemeKind, solve


def _parse_alphas(text: str) -> tuple[float, ...]:
    try:
        alphas = tuple(float(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad alpha list {text!r}") from None
    return alphas


def _parse_ladder(text: str) -> tuple[int, ...]:
    """Step counts: '64', '10,20,80', or a doubling ladder '10:640:x2'."""
    try:
        if ":" in text:
            lo_s, hi_s, step_s = text.split(":")
            if step_s != "x2":
                raise ValueError
            lo, hi = int(lo_s), int(hi_s)
            if lo < 1 or hi < lo:
                raise ValueError
            ladder = [lo]
            while ladder[-1] < hi:
                ladder.append(2 * ladder[-1])
            if ladder[-1] != hi:
                raise ValueError
            return tuple(ladder)
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"bad time-step list {text!r} (use N, N1,N2,..., or a:b:x2 with b = a*2^k)"
        ) from None


def _mesh_kind(text: str) -> str:
    try:
        parse_mesh_kind(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return text


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--alpha", type=_parse_alphas, required=True,
                   help="fractional order(s), comma separated, each in (0, 1)")
    p.add_argument("--spatial-cells", type=int, default=100, metavar="M",
                   help="number of spatial cells (default 100)")
    p.add_argument("--time-steps", type=_parse_ladder, required=True, metavar="N",
                   help="time step count, list, or doubling ladder a:b:x2")
    p.add_argument("--final-time", type=float, default=1.0, metavar="T")
    p.add_argument("--scheme", choices=[s.value for s in SchemeKind],
                   default=SchemeKind.TRANSFORMED.value)
    p.add_argument("--mesh", type=_mesh_kind, default="uniform",
                   help="'uniform' or 'graded:<r>' with r >= 1")
    p.add_argument("--problem", choices=available_problems(), default="manufactured-sin")
    p.add_argument("--norm", choices=["max", "a", "l2"], default="max",
                   help="error norm for converge reports")
    p.add_argument("--format", choices=["csv", "table"], default="csv")
    p.add_argument("--output", default=None, metavar="PATH",
                   help="write to this file instead of stdout")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fracheat",
        description="Finite difference solvers for 1-D time-fractional diffusion.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    run_p = sub.add_parser("run", help="solve one instance and dump the solution")
    _add_common(run_p)
    run_p.add_argument("--dump", choices=["profile", "lattice"], default="profile",
                       help="final-time profile or the whole space-time lattice")
    conv_p = sub.add_parser("converge", help="run a refinement ladder and report errors")
    _add_common(conv_p)
    return parser


def _validate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    for alpha in args.alpha:
        if not 0.0 < alpha < 1.0:
            parser.error(f"alpha must lie in (0, 1), got {alpha:g}")
    if args.spatial_cells < 2:
        parser.error(f"need at least 2 spatial cells, got {args.spatial_cells}")
    if args.final_time <= 0.0:
        parser.error(f"final time must be positive, got {args.final_time:g}")
    if args.scheme == SchemeKind.L1.value and args.mesh != "uniform":
        parser.error("the l1 scheme supports uniform meshes only")
    if args.command == "run":
        if len(args.alpha) != 1:
            parser.error("run takes a single alpha")
        if len(args.time_steps) != 1:
            parser.error("run takes a single time step count")


def _emit(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _dump_run(args: argparse.Namespace) -> str:
    problem = get_problem(args.problem, args.alpha[0], args.final_time)
    grid = SpatialGrid(args.spatial_cells)
    mesh = build_time_mesh(args.mesh, args.final_time, args.time_steps[0])
    lattice = solve(problem, grid, mesh, SchemeKind(args.scheme))
    lines = []
    if args.dump == "profile":
        if args.format == "csv":
            lines.append("x,u")
            for x, u in zip(grid.x, lattice.values[-1]):
                lines.append(f"{x:.10g},{u:.10g}")
        else:
            lines.append(f"{'x':>12}  {'u':>14}")
            for x, u in zip(grid.x, lattice.values[-1]):
                lines.append(f"{x:>12.6f}  {u:>14.6e}")
    else:
        if args.format == "csv":
            lines.append("t,x,u")
            for n, t in enumerate(mesh.t):
                for x, u in zip(grid.x, lattice.values[n]):
                    lines.append(f"{t:.10g},{x:.10g},{u:.10g}")
        else:
            lines.append(f"{'t':>12}  {'x':>12}  {'u':>14}")
            for n, t in enumerate(mesh.t):
                for x, u in zip(grid.x, lattice.values[n]):
                    lines.append(f"{t:>12.6f}  {x:>12.6f}  {u:>14.6e}")
    return "\n".join(lines) + "\n"


def _run_converge(args: argparse.Namespace) -> ConvergenceReport:
    config = SweepConfig(
        alphas=args.alpha,
        M=args.spatial_cells,
        Ns=args.time_steps,
        T=args.final_time,
        scheme=SchemeKind(args.scheme),
        mesh_kind=args.mesh,
        problem_label=args.problem,
        norm=args.norm,
        output_path=args.output,
        format=args.format,
    )
    return run_sweep(config)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    try:
        if args.command == "run":
            _emit(_dump_run(args), args.output)
        else:
            report = _run_converge(args)
            if args.output is None:
                sys.stdout.write(report.render())
    except (ValueError, ArithmeticError, RuntimeError) as exc:
        print(f"fracheat: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
