"""Odd periodic far-field profiles of u'' + u - u^3 = 0.

The family is parametrized by its half-period kappa > pi (distance between
consecutive zeros) or, equivalently, by its amplitude M in (0, 1).  The two
parametrizations are linked through the complete elliptic integral of the
first kind.  kappa = inf (KAPPA_INF) denotes the single-interface limit,
whose profile is the tanh kink.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.interpolate import CubicHermiteSpline

from .errors import AccuracyError, ParameterError
from .grids import Field1D, Grid1D

__all__ = [
    "KAPPA_INF",
    "PeriodicOrbit",
    "complete_elliptic_K",
    "half_period_of_amplitude",
    "amplitude_of_half_period",
    "hamiltonian",
    "hamiltonian_level",
    "sample_orbit",
]

KAPPA_INF = math.inf


def complete_elliptic_K(k: float) -> float:
    """Complete elliptic integral of the first kind,
    K(k) = int_0^1 dv / sqrt((1 - v^2)(1 - k^2 v^2)),
    by arithmetic-geometric-mean iteration (exact to rounding)."""
    if not 0.0 <= k < 1.0:
        raise ParameterError(f"modulus must satisfy 0 <= k < 1, got {k}")
    a, b = 1.0, math.sqrt(1.0 - k * k)
    # quadratic convergence: well under 10 sweeps to rounding level, but
    # never compare below one ulp or the loop can stall
    for _ in range(60):
        if a - b <= 1e-15 * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return math.pi / (2.0 * a)


def half_period_of_amplitude(M: float) -> float:
    """Half-period kappa(M) = (2*sqrt(2)*gamma/M) K(gamma),
    gamma = M / sqrt(2 - M^2).  Strictly greater than pi on (0, 1)."""
    if not 0.0 < M < 1.0:
        raise ParameterError(f"amplitude must lie in (0, 1), got {M}")
    gamma = M / math.sqrt(2.0 - M * M)
    return 2.0 * math.sqrt(2.0) * gamma / M * complete_elliptic_K(gamma)


def amplitude_of_half_period(kappa: float) -> float:
    """Inverse of half_period_of_amplitude, by bisection on (0, 1).

    Stops when the half-period of the midpoint matches kappa to 1e-10.
    Bisection (not Newton) is deliberate: the map is flat near M = 0 and
    steep near M = 1.
    """
    if not kappa > math.pi - 1e-9:
        raise ParameterError(f"half-period must exceed pi, got {kappa}")
    lo, hi = 1e-15, 1.0 - 1e-15
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        km = half_period_of_amplitude(mid)
        if abs(km - kappa) <= 1e-10:
            return mid
        if km < kappa:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def hamiltonian(u, uy):
    """Conserved quantity uy^2 + u^2 - u^4/2 of the far-field ODE."""
    return uy * uy + u * u - u ** 4 / 2.0


def hamiltonian_level(M: float) -> float:
    """Hamiltonian value on the orbit of amplitude M: M^2 (2 - M^2) / 2."""
    return M * M * (2.0 - M * M) / 2.0


@dataclass(frozen=True)
class PeriodicOrbit:
    """One member of the odd periodic family, sampled on [0, kappa].

    The normalization is u(0) = 0 with positive initial slope; the maximum
    over [0, kappa] equals the amplitude.  `evaluate` is a C^1 interpolant
    of the underlying trajectory (closed-form tanh for kappa = inf).
    """

    kappa: float
    amplitude: float
    hamiltonian_level: float
    profile: Field1D
    _spline: object = field(default=None, repr=False, compare=False)
    drift: float = 0.0  # relative Hamiltonian drift over the integration

    def evaluate(self, y):
        y = np.asarray(y, dtype=float)
        if self._spline is None:
            out = np.tanh(y / math.sqrt(2.0))
        else:
            out = self._spline(np.clip(y, 0.0, self.kappa))
        return out if out.ndim else float(out)


def _rk4_orbit(M: float, kappa: float, n_steps: int):
    """Fixed-step RK4 for u'' = -u + u^3 from the zero crossing, with the
    initial slope forced by the Hamiltonian level at the turning point."""
    level = hamiltonian_level(M)
    hstep = kappa / n_steps
    u = np.empty(n_steps + 1)
    v = np.empty(n_steps + 1)
    u[0], v[0] = 0.0, math.sqrt(level)

    def f(uu, vv):
        return vv, -uu + uu ** 3

    ui, vi = u[0], v[0]
    for i in range(n_steps):
        k1u, k1v = f(ui, vi)
        k2u, k2v = f(ui + 0.5 * hstep * k1u, vi + 0.5 * hstep * k1v)
        k3u, k3v = f(ui + 0.5 * hstep * k2u, vi + 0.5 * hstep * k2v)
        k4u, k4v = f(ui + hstep * k3u, vi + hstep * k3v)
        ui += hstep / 6.0 * (k1u + 2 * k2u + 2 * k3u + k4u)
        vi += hstep / 6.0 * (k1v + 2 * k2v + 2 * k3v + k4v)
        u[i + 1], v[i + 1] = ui, vi
    s = np.linspace(0.0, kappa, n_steps + 1)
    return s, u, v, level


def sample_orbit(kappa: float, n_cells: int, y_max: float = 20.0) -> PeriodicOrbit:
    """Sample the orbit of half-period kappa on a cell-centered grid.

    n_cells is rounded up to odd so the turning point kappa/2 is a cell
    center and the sampled max equals the amplitude.  For kappa = KAPPA_INF
    the closed-form kink tanh(y/sqrt(2)) on [0, y_max] is returned.
    """
    if kappa == KAPPA_INF:
        grid = Grid1D(0.0, y_max, max(int(n_cells), 2))
        vals = np.tanh(grid.centers() / math.sqrt(2.0))
        return PeriodicOrbit(KAPPA_INF, 1.0, 0.5, Field1D(grid, vals), None, 0.0)
    if not kappa > math.pi:
        raise ParameterError(f"half-period must exceed pi, got {kappa}")
    n = int(n_cells)
    if n % 2 == 0:
        n += 1
    n = max(n, 3)
    M = amplitude_of_half_period(kappa)
    # 40 substeps per cell; cell centers land exactly on RK4 nodes
    s, u, v, level = _rk4_orbit(M, kappa, 40 * n)
    drift = np.max(np.abs(hamiltonian(u, v) - level)) / level
    if drift > 1e-8:
        raise AccuracyError(f"Hamiltonian drift {drift:.2e} exceeds 1e-8; refine n_cells")
    grid = Grid1D(0.0, kappa, n)
    vals = u[20::40][:n]  # node index of center i is 40*i + 20
    spline = CubicHermiteSpline(s, u, v)
    return PeriodicOrbit(kappa, M, level, Field1D(grid, vals), spline,
                         float(drift))
