"""Auxiliary 1D traveling waves and closed-form comparison functions.

bistable_wave solves w'' + d w' + w - w^3 = 0 on the unstable manifold of
w = 1 by shooting; its translate is anchored at the first zero crossing
(d < 2, oscillatory tail) or at half height (d >= 2, monotone).
csch_supersolution is the explicit monotone solution of w'' - w - w^3 = 0
used to dominate the front tail, and decay_rates exposes the two linear
rates used for tail validation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.interpolate import CubicHermiteSpline
from scipy.optimize import brentq

from .errors import DomainTooShortError, ParameterError
from .grids import Field1D, Grid1D

__all__ = ["WaveProfile", "bistable_wave", "csch_supersolution", "decay_rates"]

_EPS_SHOOT = 1e-8


def decay_rates(c: float) -> tuple[float, float]:
    """(lambda_right, m_left) for speed c >= 0.

    lambda_right = c/2 + sqrt(c^2/4 + 1): decay rate of the front ahead of
    the quench (root of lambda^2 - c*lambda - 1 = 0, sign-adjusted).
    m_left = -c/2 + sqrt(c^2/4 + 2): rate at which 1 - u vanishes in the
    wake (unstable rate of the state u = 1).
    """
    if c < 0:
        raise ParameterError("speed must be nonnegative")
    lam = c / 2.0 + math.sqrt(c * c / 4.0 + 1.0)
    m = -c / 2.0 + math.sqrt(c * c / 4.0 + 2.0)
    return lam, m


@dataclass(frozen=True)
class WaveProfile:
    """A sampled traveling wave of the unquenched bistable equation."""

    d: float
    profile: Field1D
    kind: str  # "oscillatory_tail" (d < 2) or "monotone" (d >= 2)


def _shoot(d: float, s_needed: float, step: float):
    """Integrate (w, w') from 1 - eps along the unstable direction of w = 1
    with classical RK4 until the trajectory covers s_needed past the
    anchor event.  Returns the C^1 interpolant and the event time."""
    m = decay_rates(d)[1]
    target = 0.0 if d < 2.0 else 0.5
    u, v = 1.0 - _EPS_SHOOT, -_EPS_SHOOT * m
    us, vs = [u], [v]

    def f(uu, vv):
        return vv, -d * vv - uu + uu ** 3

    s_event = None
    i = 0
    max_steps = int(2e6)
    while True:
        k1u, k1v = f(u, v)
        k2u, k2v = f(u + 0.5 * step * k1u, v + 0.5 * step * k1v)
        k3u, k3v = f(u + 0.5 * step * k2u, v + 0.5 * step * k2v)
        k4u, k4v = f(u + step * k3u, v + step * k3v)
        u += step / 6.0 * (k1u + 2 * k2u + 2 * k3u + k4u)
        v += step / 6.0 * (k1v + 2 * k2v + 2 * k3v + k4v)
        us.append(u)
        vs.append(v)
        i += 1
        if s_event is None and u <= target:
            s_event = i * step  # refined below
        if abs(u) > 1.5:
            if s_event is None:
                raise DomainTooShortError(
                    f"shooting diverged before reaching the anchor (d={d})")
            break
        if s_event is not None and i * step >= s_event + s_needed + 1.0:
            break
        if i >= max_steps:
            raise DomainTooShortError("shooting budget exhausted")
    s = np.arange(len(us)) * step
    spline = CubicHermiteSpline(s, us, vs)
    # refine the anchor inside its bracketing step
    k = int(round(s_event / step))
    s_event = brentq(lambda t: spline(t) - target, s[k - 1], s[k], xtol=1e-14)
    return spline, s[-1], s_event, m


def bistable_wave(d: float, grid: Grid1D) -> WaveProfile:
    """Traveling wave of w'' + d w' + w - w^3 = 0 with w(-inf) = 1.

    For d < 2 the profile is translated so its first zero crossing sits at
    x = 0 (0 = w(0) < w(x) < 1 for x < 0); for d >= 2 so that w(0) = 1/2.
    """
    if d < 0:
        raise ParameterError("speed must be nonnegative")
    step = min(grid.h / 4.0, 0.005)
    spline, s_end, s_event, m = _shoot(d, max(grid.x_max, 0.0) + grid.h, step)
    x = grid.centers()
    s = x + s_event
    vals = np.empty_like(x)
    early = s < 0.0
    if np.any(s > s_end):
        raise DomainTooShortError("grid extends past the computed trajectory")
    # before the stored trajectory: unstable-manifold asymptote
    vals[early] = 1.0 - _EPS_SHOOT * np.exp(m * s[early])
    vals[~early] = spline(s[~early])
    kind = "oscillatory_tail" if d < 2.0 else "monotone"
    return WaveProfile(d, Field1D(grid, vals), kind)


def csch_supersolution(grid: Grid1D) -> Field1D:
    """The explicit monotone solution sqrt(2)*csch(x + x0) of
    w'' - w - w^3 = 0, shifted (x0 = arcsinh(sqrt(2))) so its value at
    x = 0 is 1.  Defined for x > -x0; the grid must avoid the pole."""
    x0 = math.asinh(math.sqrt(2.0))
    if grid.x_min <= -x0:
        raise ParameterError("grid reaches the csch singularity at x = -arcsinh(sqrt(2))")
    x = grid.centers()
    return Field1D(grid, math.sqrt(2.0) / np.sinh(x + x0))
