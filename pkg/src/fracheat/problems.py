"""Benchmark problems for the fractional diffusion solvers.

A ``ProblemSpec`` bundles the data of one initial-boundary value problem

    (d/dt)^alpha u = u_xx + f(x, t)   on (0, 1) x (0, T],
    u(x, 0) = phi(x),                 u(0, t) = u(1, t) = 0,

with the Caputo derivative of order alpha in (0, 1).  Problems that know
their exact solution also carry it, along with the closed-form fractional
integral of their forcing when one exists; the time stepper uses the latter
to avoid an avoidable layer of quadrature error.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .special import MLParams, gamma, mittag_leffler

__all__ = [
    "ProblemSpec",
    "SeriesSolution",
    "series_reference",
    "manufactured_sin",
    "zero_problem",
    "sine_decay",
    "available_problems",
    "get_problem",
]

SpaceTimeFn = Callable[[np.ndarray, float], np.ndarray]


@dataclass(frozen=True)
class ProblemSpec:
    """One well-posed problem instance.

    ``f`` and the optional callables are vectorized over the node array x
    at a fixed time.  ``exact_f_conv`` is the fractional integral of the
    forcing (kernel t**(alpha-1)/Gamma(alpha)); when absent the solver
    falls back to product quadrature in time.
    """

    label: str
    alpha: float
    T: float
    phi: Callable[[np.ndarray], np.ndarray]
    f: SpaceTimeFn
    exact_u: Optional[SpaceTimeFn] = None
    exact_f_conv: Optional[SpaceTimeFn] = None

    def __post_init__(self) -> None:
        if not 0.0 < self.alpha < 1.0:
            raise ValueError(f"alpha must lie in (0, 1), got {self.alpha}")
        if self.T <= 0.0:
            raise ValueError(f"final time must be positive, got T={self.T}")
        ends = np.asarray(self.phi(np.array([0.0, 1.0])), dtype=float)
        if np.max(np.abs(ends)) > 1e-12:
            raise ValueError("initial data must vanish at both boundaries")
        if self.exact_u is not None:
            xs = np.linspace(0.0, 1.0, 5)
            gap = np.max(np.abs(self.exact_u(xs, 0.0) - self.phi(xs)))
            if gap > 1e-12:
                raise ValueError("exact_u at t=0 does not reproduce phi")


@dataclass(frozen=True)
class SeriesSolution:
    """Separated-variables solution for f = 0 and sine-series initial data.

    With phi(x) = sum_m c_m sin(m pi x) the solution is

        u(x, t) = sum_m c_m E_alpha(-(m pi)**2 t**alpha) sin(m pi x),

    a correctness probe rather than a production path: each mode argument
    (m pi)**2 t**alpha must stay within the Mittag-Leffler evaluator's
    admissible range, and for sizeable arguments (or small alpha) the
    alternating series loses precision or stops converging within its term
    budget, in which case evaluation raises.
    """

    alpha: float
    coefficients: np.ndarray
    tol: float = 1e-14
    max_terms: int = 500

    def __post_init__(self) -> None:
        c = np.ascontiguousarray(self.coefficients, dtype=float)
        c.flags.writeable = False
        object.__setattr__(self, "coefficients", c)
        if not 0.0 < self.alpha <= 1.0:
            raise ValueError(f"alpha must lie in (0, 1], got {self.alpha}")
        if c.ndim != 1 or c.size < 1:
            raise ValueError("need at least one mode coefficient")
        if not np.all(np.isfinite(c)):
            raise ValueError("mode coefficients must be finite")

    def evaluate(self, x: np.ndarray, t: float) -> np.ndarray:
        if t < 0.0:
            raise ValueError(f"time must be nonnegative, got t={t}")
        x = np.asarray(x, dtype=float)
        out = np.zeros_like(x)
        ta = t**self.alpha
        for m, c in enumerate(self.coefficients, start=1):
            if c == 0.0:
                continue
            z = -((m * np.pi) ** 2) * ta
            factor = mittag_leffler(
                MLParams(beta=self.alpha, z=z, tol=self.tol, max_terms=self.max_terms)
            )
            out += c * factor * np.sin(m * np.pi * x)
        return out


def series_reference(alpha: float, coefficients: np.ndarray) -> SeriesSolution:
    """Exact-solution evaluator for f = 0, phi = sum_m c_m sin(m pi x)."""
    return SeriesSolution(alpha=alpha, coefficients=np.asarray(coefficients, float))


def manufactured_sin(alpha: float, T: float = 1.0) -> ProblemSpec:
    """Manufactured benchmark with exact solution u = sin(pi x) t**2.

    The forcing that produces it is

        f(x, t) = sin(pi x) (pi**2 t**2 + 2 t**(2-alpha) / Gamma(3-alpha)),

    and because the fractional integral maps t**b to
    Gamma(b+1)/Gamma(alpha+b+1) t**(alpha+b) termwise, its integral is
    known in closed form as well:

        sin(pi x) (2 pi**2 t**(2+alpha) / Gamma(3+alpha) + t**2).
    """
    g3m = gamma(3.0 - alpha)
    g3p = gamma(3.0 + alpha)

    def phi(x: np.ndarray) -> np.ndarray:
        return np.zeros_like(np.asarray(x, dtype=float))

    def f(x: np.ndarray, t: float) -> np.ndarray:
        return np.sin(np.pi * x) * (np.pi**2 * t**2 + 2.0 * t ** (2.0 - alpha) / g3m)

    def exact_u(x: np.ndarray, t: float) -> np.ndarray:
        return np.sin(np.pi * x) * t**2

    def exact_f_conv(x: np.ndarray, t: float) -> np.ndarray:
        return np.sin(np.pi * x) * (
            2.0 * np.pi**2 * t ** (2.0 + alpha) / g3p + t**2
        )

    return ProblemSpec(
        label="manufactured-sin",
        alpha=alpha,
        T=T,
        phi=phi,
        f=f,
        exact_u=exact_u,
        exact_f_conv=exact_f_conv,
    )


def zero_problem(alpha: float, T: float = 1.0) -> ProblemSpec:
    """phi = 0, f = 0: the solution is identically zero."""

    def zero_x(x: np.ndarray) -> np.ndarray:
        return np.zeros_like(np.asarray(x, dtype=float))

    def zero_xt(x: np.ndarray, t: float) -> np.ndarray:
        return np.zeros_like(np.asarray(x, dtype=float))

    return ProblemSpec(
        label="zero",
        alpha=alpha,
        T=T,
        phi=zero_x,
        f=zero_xt,
        exact_u=zero_xt,
        exact_f_conv=zero_xt,
    )


def sine_decay(alpha: float, T: float = 1.0) -> ProblemSpec:
    """Unforced decay of the first sine mode, phi = sin(pi x), f = 0.

    The exact solution is the one-mode series reference; evaluating it at
    large pi**2 T**alpha raises, see ``SeriesSolution``.
    """
    series = series_reference(alpha, np.array([1.0]))

    def phi(x: np.ndarray) -> np.ndarray:
        return np.sin(np.pi * np.asarray(x, dtype=float))

    def f(x: np.ndarray, t: float) -> np.ndarray:
        return np.zeros_like(np.asarray(x, dtype=float))

    def exact_u(x: np.ndarray, t: float) -> np.ndarray:
        return series.evaluate(x, t)

    def exact_f_conv(x: np.ndarray, t: float) -> np.ndarray:
        return np.zeros_like(np.asarray(x, dtype=float))

    return ProblemSpec(
        label="sine-decay",
        alpha=alpha,
        T=T,
        phi=phi,
        f=f,
        exact_u=exact_u,
        exact_f_conv=exact_f_conv,
    )


_FACTORIES: dict[str, Callable[[float, float], ProblemSpec]] = {
    "manufactured-sin": manufactured_sin,
    "zero": zero_problem,
    "sine-decay": sine_decay,
}


def available_problems() -> tuple[str, ...]:
    """Labels accepted by ``get_problem``, in registration order."""
    return tuple(_FACTORIES)


def get_problem(label: str, alpha: float, T: float = 1.0) -> ProblemSpec:
    """Instantiate a registered problem by label."""
    try:
        factory = _FACTORIES[label]
    except KeyError:
        known = ", ".join(_FACTORIES)
        raise ValueError(f"unknown problem label {label!r} (known: {known})") from None
    return factory(alpha, T)
