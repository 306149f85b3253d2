"""Gamma function access and a Mittag-Leffler series evaluator.

Everything downstream (quadrature weights, closed-form forcings, series
references) funnels its special-function needs through this module so the
conventions live in one place: ``gamma`` rejects the nonpositive axis, and
``mittag_leffler`` evaluates E_beta(z) by its Taylor series with terms formed
in log space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = ["gamma", "MLParams", "mittag_leffler", "SeriesConvergenceError"]

# exp(x) overflows float64 a little above 709; stay clear of the edge.
_LOG_OVERFLOW = 700.0


class SeriesConvergenceError(RuntimeError):
    """Raised when a series evaluation stops before meeting its tolerance."""


def gamma(x: float) -> float:
    """Gamma function on the positive real axis.

    Parameters
    ----------
    x : float
        Argument, must be positive.  The solver only ever needs arguments
        in (0, 4] but any positive value is accepted.

    Returns
    -------
    float
        Gamma(x).

    Raises
    ------
    ValueError
        If ``x <= 0`` (the poles and the negative axis are not needed
        anywhere in this package, so they are rejected outright).
    """
    if x <= 0.0:
        raise ValueError(f"gamma requires a positive argument, got {x}")
    return math.gamma(x)


@dataclass(frozen=True)
class MLParams:
    """Parameters for a Mittag-Leffler evaluation.

    Attributes
    ----------
    beta : float
        Series order in (0, 1].  beta = 1 recovers exp(z).
    z : float
        Argument.  |z| must not exceed 50; far beyond that the alternating
        series is useless in double precision anyway.
    tol : float
        Relative truncation tolerance for the partial sums.
    max_terms : int
        Hard cap on the number of series terms.
    """

    beta: float
    z: float
    tol: float = 1e-14
    max_terms: int = 500

    def __post_init__(self) -> None:
        if not 0.0 < self.beta <= 1.0:
            raise ValueError(f"beta must lie in (0, 1], got {self.beta}")
        if abs(self.z) > 50.0:
            raise ValueError(f"|z| must not exceed 50, got z={self.z}")
        if self.tol <= 0.0:
            raise ValueError("tol must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be at least 1")


def mittag_leffler(params: MLParams) -> float:
    """One-parameter Mittag-Leffler function E_beta(z) by Taylor series.

    E_beta(z) = sum_{n>=0} z^n / Gamma(1 + n*beta).  Terms are formed as
    exp(n*log|z| - lgamma(1 + n*beta)) so that large intermediate factorials
    never overflow.  Summation stops once the term just added is no larger
    than ``tol`` times the running sum in magnitude.

    For z < 0 the series alternates and cancellation grows quickly with
    |z| (and faster for small beta): the returned value is then accurate
    only to roughly ``max_term * eps`` absolutely.  Callers that need the
    value as a reference should keep |z| modest.

    Raises
    ------
    SeriesConvergenceError
        If ``max_terms`` terms do not reach the tolerance.
    """
    z = params.z
    if z == 0.0:
        return 1.0

    log_abs_z = math.log(abs(z))
    negative = z < 0.0
    total = 1.0  # n = 0 term
    for n in range(1, params.max_terms + 1):
        log_mag = n * log_abs_z - math.lgamma(1.0 + n * params.beta)
        if log_mag > _LOG_OVERFLOW:
            raise SeriesConvergenceError(
                f"series term overflows at n={n} for z={z}, beta={params.beta}"
            )
        mag = math.exp(log_mag)
        term = -mag if (negative and n % 2 == 1) else mag
        total += term
        if mag <= params.tol * abs(total):
            return total
    raise SeriesConvergenceError(
        f"no convergence after {params.max_terms} terms "
        f"(z={z}, beta={params.beta}, tol={params.tol})"
    )
