"""Temporal convergence of the transformed scheme on the manufactured benchmark.

Fixes M = 100 spatial cells (fine enough that the spatial error is
negligible), halves the time step repeatedly, and tabulates the maximum
error over the whole space-time lattice together with the observed rate
log2(E(N/2) / E(N)).  The rates climb toward 1 + alpha as N grows, so the
fractional order of the problem is visible directly in the table.

Equivalent CLI call for one of the rows:

    fracheat converge --alpha 0.5 --spatial-cells 100 --time-steps 10:640:x2
"""

from fracheat.harness import SweepConfig, run_sweep


def main() -> None:
    config = SweepConfig(
        alphas=(0.25, 0.5, 0.75),
        M=100,
        Ns=(10, 20, 40, 80, 160, 320, 640),
    )
    report = run_sweep(config)
    print(report.to_text())
    print("Expected trend: rate -> 1 + alpha as N doubles.")


if __name__ == "__main__":
    main()
