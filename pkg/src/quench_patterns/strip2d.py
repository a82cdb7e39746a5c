"""Two-dimensional quenched patterns: strips of height kappa and the
half-plane rectangle.

Both geometries run the same monotone relaxation as the 1D front, with
Dirichlet data assembled from lower-dimensional building blocks: the
strip carries the periodic profile on its inflow face, the half-plane
rectangle carries products of 1D fronts.  Domains are grown (left side
first, then right) until the solution stops responding on a fixed probe
window.

The module also builds the explicit comparison functions used to bracket
these patterns: a positive subsolution forcing nontrivial wakes when
c^2/4 + pi^2/kappa^2 < 1, and a composite supersolution that squeezes the
wake to zero when that quantity exceeds 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._operators import Operator1D, Operator2D, iteration_stats
from .errors import ConvergenceError, ParameterError, SchemeIntegrityError
from .front1d import DOMAIN_LIMIT, MONOTONE_TOL, IterationReport, \
    solve_truncated_front
from .grids import Field1D, Field2D, Grid1D, Grid2D, aligned_grid, \
    extend_front, extend_strip, quench_mu
from .orbits import amplitude_of_half_period
from .waves import bistable_wave

MAX_ITER_2D = 50_000


@dataclass(frozen=True)
class StripProblem:
    """A truncated 2D problem: geometry plus Dirichlet ring data.

    `boundary` maps face names (left/right/bottom/top) to arrays of values
    at the face's cell centers.
    """
    c: float
    kappa: float
    M: float
    L: float
    grid: Grid2D
    boundary: dict


@dataclass(frozen=True)
class SubsolutionSpec:
    """Parameters of the explicit comparison functions on the strip."""
    c: float
    d: float
    alpha: float
    kappa: float

    def check_existence(self):
        if not (self.c ** 2 / 4 + math.pi ** 2 / self.kappa ** 2
                < self.d ** 2 / 4 < 1.0):
            raise ParameterError(
                "need c^2/4 + pi^2/kappa^2 < d^2/4 < 1 for a subsolution")
        amp = amplitude_of_half_period(self.kappa)
        if not 0.0 <= self.alpha <= amp:
            raise ParameterError(
                f"alpha must lie in [0, {amp:.6f}] for kappa={self.kappa}")

    def check_nonexistence(self):
        if self.d <= max(2.0, self.c):
            raise ParameterError("need d > max(2, c) for the supersolution")
        if self.d ** 2 / 4 - self.c ** 2 / 4 - math.pi ** 2 / self.kappa ** 2 >= 0:
            raise ParameterError(
                "need d^2/4 - c^2/4 - pi^2/kappa^2 < 0 for the supersolution")
        if self.alpha < 0:
            raise ParameterError("alpha must be nonnegative")


def periodic_profile_discrete(gy: Grid1D, tol=1e-13) -> np.ndarray:
    """Maximal positive steady profile of the wake problem on the y grid,
    computed with the same stencil as the 2D solves.

    This is the grid-level realization of the periodic orbit: it agrees
    with the sampled orbit to O(h^2), and using it as strip boundary data
    keeps the discrete comparison sandwich exact (to rounding) instead of
    only up to discretization error.
    """
    op = Operator1D(gy, 0.0)
    v = np.ones(gy.n_cells)
    for _ in range(100_000):
        v_new = op.solve(6.0 * v - v ** 3)
        done = np.max(np.abs(v_new - v)) < tol
        v = v_new
        if done:
            return v
    raise ConvergenceError("wake-profile iteration did not converge")


def make_strip_problem(c, kappa, M, L, h=0.05) -> StripProblem:
    """Assemble the height-kappa strip problem on (-M, L) x (0, kappa).

    Inflow face carries the periodic profile; the other faces are zero
    (the trigger-side trace of the product data vanishes with the
    periodic factor, and the data is 1 * profile on the left face).
    """
    if not kappa > math.pi:
        raise ParameterError("strip height must exceed pi")
    if not 0.0 <= c < 3.0:
        raise ParameterError(
            "strip speeds are supported for 0 <= c < 3; beyond that the "
            "wake is erased with nothing left to resolve")
    gx = aligned_grid(-M, L, h)
    gy = Grid1D(0.0, kappa, max(2, int(round(kappa / h))))
    grid = Grid2D(gx, gy)
    left = periodic_profile_discrete(gy)
    boundary = {
        "left": left,
        "right": np.zeros(gy.n_cells),
        "bottom": np.zeros(gx.n_cells),
        "top": np.zeros(gx.n_cells),
    }
    return StripProblem(c, kappa, M, L, grid, boundary)


def _relax(op: Operator2D, mu, bc, tol, max_iter=MAX_ITER_2D):
    """Monotone relaxation from the constant state 1; shared by both
    geometries.  Returns (values, IterationReport fields)."""
    u = np.ones((op.grid.gx.n_cells, op.grid.gy.n_cells))
    worst = 0.0
    for it in range(1, max_iter + 1):
        rhs = (5.0 + mu) * u - u ** 3 + bc
        u_new = op.solve(rhs)
        worst = max(worst, float(np.max(u_new - u)))
        if worst > MONOTONE_TOL:
            iteration_stats.record(worst)
            raise SchemeIntegrityError(
                f"2D iterate increased by {worst:.3e} (> {MONOTONE_TOL:g})")
        update = float(np.max(np.abs(u_new - u)))
        u = u_new
        if update < tol:
            res = float(np.max(np.abs(
                op.apply(u) - ((5.0 + mu) * u - u ** 3 + bc))))
            if res < 100.0 * tol:
                iteration_stats.record(worst)
                return u, it, update, res, worst
    raise ConvergenceError(f"2D iteration did not converge in {max_iter} sweeps")


def solve_truncated_strip(p: StripProblem, tol=1e-8):
    """Maximal pattern of the truncated strip problem."""
    if tol < 1e-12:
        raise ParameterError("tol below 1e-12 is not resolvable here")
    op = Operator2D(p.grid, p.c)
    mu = quench_mu(p.grid.gx.centers())[:, None]
    bc = op.bc_array(**p.boundary)
    u, it, update, res, worst = _relax(op, mu, bc, tol)
    field = Field2D(p.grid, u.ravel())
    return field, IterationReport(field, it, update, res, worst)


def wake_slice(field: Field2D, x: float, left_profile=None) -> np.ndarray:
    """Solution values along the vertical line at `x` (y centers)."""
    gy = field.grid.gy
    if left_profile is None:
        left_profile = Field1D(gy, field.values2d()[0, :])
    ev = extend_strip(field, left_profile, 0.0)
    y = gy.centers()
    return ev(np.full_like(y, x), y)


def continue_strip(c, kappa, h=0.05, tol=1e-8, window=(-15.0, 15.0),
                   domain_tol=1e-6, M0=25.0, L0=30.0) -> Field2D:
    """Strip pattern continued in M, then L, until stable on `window`.

    Collapse of the wake (the regime where no pattern survives the limit)
    is a regular return value: the field simply tends to zero behind the
    trigger, and callers read the verdict off the wake amplitude.
    """
    xp = np.linspace(window[0], window[1], 201)
    M, L = float(M0), float(L0)

    def solved(M, L):
        p = make_strip_problem(c, kappa, M, L, h)
        fld, _ = solve_truncated_strip(p, tol)
        yc = fld.grid.gy.centers()
        ev = extend_strip(fld, Field1D(fld.grid.gy, p.boundary["left"]), 0.0)
        xx, yy = np.meshgrid(xp, yc, indexing="ij")
        return fld, ev(xx.ravel(), yy.ravel())

    fld, prev = solved(M, L)
    while True:
        if np.max(np.abs(prev)) <= domain_tol:
            # collapsed on the whole window; growing the domain only
            # shrinks the maximal solution further, so this is converged
            return fld
        if M < DOMAIN_LIMIT:
            M *= 2
        elif L < DOMAIN_LIMIT:
            L *= 2
        else:
            raise ConvergenceError(
                f"strip not domain-converged within the schedule (c={c}, "
                f"kappa={kappa})")
        fld, cur = solved(M, L)
        if np.max(np.abs(cur - prev)) <= domain_tol:
            _, chk = solved(M, 2 * L)
            if np.max(np.abs(chk - cur)) <= domain_tol:
                return fld
        prev = cur


def solve_hinfty(c, h=0.05, tol=1e-8, window=(-12.0, 12.0),
                 domain_tol=1e-5, M0=25.0, L0=30.0) -> Field2D:
    """Lower-half-plane pattern on the rectangle (-M, L) x (-M, 0).

    Dirichlet data is the product of the 1D fronts in x and in y; the
    full-plane pattern follows by odd reflection u(x, -y) = -u(x, y),
    which is exactly the homogeneous data on the top face.  Only 0 <= c < 2
    is meaningful (the 1D building block vanishes beyond the threshold).
    """
    if not 0.0 <= c < 2.0:
        raise ParameterError("half-plane patterns require 0 <= c < 2")
    xp = np.linspace(window[0], window[1], 161)
    yp = np.linspace(window[0], -h / 2.0, 161)
    M, L = float(M0), float(L0)

    def solved(M, L):
        rep_x = solve_truncated_front(c, M, L, h, tol)
        rep_y = solve_truncated_front(c, M, 0.0, h, tol)
        gx, gy = rep_x.field.grid, rep_y.field.grid
        grid = Grid2D(gx, gy)
        theta_x, theta_y = rep_x.field.values, rep_y.field.values
        op = Operator2D(grid, c)
        mu = quench_mu(gx.centers())[:, None]
        bc = op.bc_array(left=theta_y, right=0.0, bottom=theta_x, top=0.0)
        u, *_ = _relax(op, mu, bc, tol)
        fld = Field2D(grid, u.ravel())
        ev = extend_strip(fld, rep_y.field, 0.0)
        xx, yy = np.meshgrid(xp, yp, indexing="ij")
        return fld, ev(xx.ravel(), yy.ravel())

    fld, prev = solved(M, L)
    while True:
        if M < DOMAIN_LIMIT:
            M *= 2
        elif L < DOMAIN_LIMIT:
            L *= 2
        else:
            raise ConvergenceError("half-plane solve exhausted the schedule")
        fld, cur = solved(M, L)
        if np.max(np.abs(cur - prev)) <= domain_tol:
            return fld
        prev = cur


def odd_extension(field: Field2D):
    """Evaluator of the full-plane pattern: u(x, -y) = -u(x, y)."""
    left = Field1D(field.grid.gy, field.values2d()[0, :])
    ev = extend_strip(field, left, 0.0)

    def evaluate(x, y):
        x, y = np.broadcast_arrays(np.asarray(x, float), np.asarray(y, float))
        val = np.asarray(ev(x.ravel(), (-np.abs(y)).ravel())).reshape(x.shape)
        out = np.where(y > 0, -val, val)
        return np.where(y == 0, 0.0, out)

    return evaluate


def _shifted_wave(d, gx: Grid1D, shift: float) -> np.ndarray:
    """w_d(x - shift) at the centers of gx (shift >= 0 slides the wave so
    the grid sees more of its plateau near 1)."""
    g = Grid1D(gx.x_min - shift, gx.x_max - shift, gx.n_cells)
    return bistable_wave(d, g).profile.values


def build_subsolution(s: SubsolutionSpec, grid: Grid2D) -> Field2D:
    """Positive subsolution alpha * e^{-(c-d)x/2} w_d(x) sin(pi y / kappa)
    on a strip piece left of the trigger."""
    s.check_existence()
    if grid.gx.x_max > 1e-12:
        raise ParameterError("subsolution grid must lie in x <= 0")
    x = grid.gx.centers()
    y = grid.gy.centers()
    w = bistable_wave(s.d, grid.gx).profile.values
    envelope = np.exp(-(s.c - s.d) * x / 2.0) * w
    vy = s.alpha * np.sin(math.pi * y / s.kappa)
    vals = envelope[:, None] * vy[None, :]
    return Field2D(grid, vals.ravel())


def supersolution_shift(s: SubsolutionSpec, grid: Grid2D,
                        tau_max=40.0, margin=0.0) -> float:
    """Smallest translate tau >= 0 for which the dominating bracket
    d^2/4 - c^2/4 - pi^2/kappa^2 + w_d^2 - 3 w_c^2 is at most -margin on
    the grid, so that the composite profile dominates every pattern."""
    delta = s.d ** 2 / 4 - s.c ** 2 / 4 - math.pi ** 2 / s.kappa ** 2
    for tau in np.arange(0.0, tau_max + 0.25, 0.25):
        wc = _shifted_wave(s.c, grid.gx, tau)
        wd = _shifted_wave(s.d, grid.gx, tau)
        if np.max(delta + wd ** 2 - 3.0 * wc ** 2) <= -margin:
            return float(tau)
    raise ConvergenceError("no admissible translate found for the "
                           "nonexistence supersolution")


def build_nonexistence_supersolution(s: SubsolutionSpec, grid: Grid2D,
                                     shift: float = 0.0) -> Field2D:
    """Composite profile w_c(x - shift) + e^{-(c-d)x/2} w_d(x - shift)
    * alpha sin(pi y / kappa), dominating the strip pattern on x <= 0.

    `shift` >= 0 slides both waves toward their plateau; use
    `supersolution_shift` to pick one that makes the domination bracket
    nonpositive on the grid.
    """
    s.check_nonexistence()
    if grid.gx.x_max > 1e-12:
        raise ParameterError("supersolution grid must lie in x <= 0")
    x = grid.gx.centers()
    y = grid.gy.centers()
    wc = _shifted_wave(s.c, grid.gx, shift)
    wd = _shifted_wave(s.d, grid.gx, shift)
    envelope = np.exp(-(s.c - s.d) * x / 2.0) * wd
    vy = s.alpha * np.sin(math.pi * y / s.kappa)
    vals = wc[:, None] + envelope[:, None] * vy[None, :]
    return Field2D(grid, vals.ravel())
