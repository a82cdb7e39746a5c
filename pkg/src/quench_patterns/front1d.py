"""One-dimensional quenched fronts connecting 1 behind the trigger to 0
far ahead.

The solver runs a monotone relaxation: starting from the constant 1, each
sweep solves a linear elliptic problem whose right-hand side freezes the
cubic nonlinearity at the previous iterate.  The shift 5 dominates the
derivative of the reaction term on [-1, 1], so successive iterates are
pointwise ordered and converge down to the maximal solution.  A strictly
increasing iterate is a scheme bug, not a modeling outcome, and raises
SchemeIntegrityError.

`continue_front` grows the truncated domain until the solution stops
responding on a fixed probe window, and `verify_dichotomy` reduces the
resulting wake amplitude to a trivial/nontrivial verdict with an explicit
inconclusive band around the pulled threshold.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._operators import Operator1D, iteration_stats
from .errors import ConvergenceError, ParameterError, SchemeIntegrityError
from .grids import Field1D, Grid1D, aligned_grid, extend_front, quench_mu

MONOTONE_TOL = 1e-12
MAX_ITER = 100_000
DOMAIN_LIMIT = 3200.0


@dataclass(frozen=True)
class IterationReport:
    """Outcome of one truncated solve."""
    field: Field1D
    iterations: int
    final_update: float
    final_residual: float
    monotone_violation: float


@dataclass(frozen=True)
class DichotomyVerdict:
    """Large-domain trivial/nontrivial classification at speed c."""
    c: float
    verdict: str          # "nontrivial" | "trivial" | "inconclusive"
    wake_amplitude: float
    probe_window: tuple
    M_final: float
    L_final: float


def solve_truncated_front(c, M, L, h=0.02, tol=1e-10,
                          max_iter=MAX_ITER) -> IterationReport:
    """Maximal front on (-M, L) with data 1 on the left, 0 on the right."""
    if M <= 0 or L < 0:
        raise ParameterError("domain half-lengths must satisfy M > 0, L >= 0")
    if L == 0:
        # everything left of the trigger; used as boundary data in 2D
        grid = Grid1D(-M, 0.0, max(1, int(round(M / h))))
    else:
        grid = aligned_grid(-M, L, h)
    op = Operator1D(grid, c)
    x = grid.centers()
    mu = quench_mu(x)
    bc = op.bc_vector(1.0, 0.0)
    u = np.ones(grid.n_cells)
    worst = 0.0
    for it in range(1, max_iter + 1):
        rhs = (5.0 + mu) * u - u ** 3 + bc
        u_new = op.solve(rhs)
        worst = max(worst, float(np.max(u_new - u)))
        if worst > MONOTONE_TOL:
            iteration_stats.record(worst)
            raise SchemeIntegrityError(
                f"iterate increased by {worst:.3e} (> {MONOTONE_TOL:g})")
        update = float(np.max(np.abs(u_new - u)))
        u = u_new
        if update < tol:
            res = float(np.max(np.abs(
                op.apply(u) - ((5.0 + mu) * u - u ** 3 + bc))))
            if res < 100.0 * tol:
                iteration_stats.record(worst)
                return IterationReport(Field1D(grid, u), it, update, res, worst)
    raise ConvergenceError(
        f"front iteration did not converge in {max_iter} sweeps "
        f"(c={c}, M={M}, L={L})")


def wake_amplitude(field: Field1D, near: float = 5.0,
                   far: float = 10.0) -> float:
    """Largest |u| over the wake probe band -far <= x <= -near.

    The band sits behind the trigger but away from the left boundary,
    where the Dirichlet value 1 always forces a boundary layer even when
    the large-domain limit is trivial.
    """
    x = field.grid.centers()
    sel = (x >= -far) & (x <= -near)
    if not np.any(sel):
        raise ParameterError("domain too short to probe the wake")
    return float(np.max(np.abs(field.values[sel])))


def continue_front(c, h=0.02, tol=1e-10, window=(-20.0, 20.0),
                   domain_tol=1e-8, M0=25.0, L0=30.0):
    """Grow (-M, L) until the front is domain-converged on `window`.

    Doubles M first (the wake side carries the slow decay for small c),
    then L, comparing constant-extended solutions at probe points inside
    the window.  Returns the final IterationReport.
    """
    probes = np.linspace(window[0], window[1], 401)
    M, L = float(M0), float(L0)
    rep = solve_truncated_front(c, M, L, h, tol)
    prev = extend_front(rep.field, 1.0, 0.0)(probes)
    while True:
        grown = False
        if M < DOMAIN_LIMIT:
            M, grown = 2 * M, True
        elif L < DOMAIN_LIMIT:
            L, grown = 2 * L, True
        if not grown:
            raise ConvergenceError(
                f"front not domain-converged within (-{DOMAIN_LIMIT}, "
                f"{DOMAIN_LIMIT}) at c={c}")
        rep = solve_truncated_front(c, M, L, h, tol)
        cur = extend_front(rep.field, 1.0, 0.0)(probes)
        if np.max(np.abs(cur - prev)) <= domain_tol:
            # one cross-check on the other side before accepting
            if L >= 2 * L0 or _l_converged(c, rep, probes, h, tol, domain_tol):
                return rep
        prev = cur


def _l_converged(c, rep, probes, h, tol, domain_tol):
    M = -rep.field.grid.x_min
    L2 = 2 * rep.field.grid.x_max
    other = solve_truncated_front(c, M, L2, h, tol)
    a = extend_front(rep.field, 1.0, 0.0)(probes)
    b = extend_front(other.field, 1.0, 0.0)(probes)
    return np.max(np.abs(a - b)) <= domain_tol


def verify_dichotomy(c, h=0.02, tol=1e-10, probe=(-10.0, 10.0),
                     L=30.0, M0=50.0, domain_tol=1e-6) -> DichotomyVerdict:
    """Classify the large-domain limit at speed c as trivial or not.

    The decision is made on the wake amplitude after the solution has
    stopped moving on the probe window under M-doubling (with M at least
    200 so slow wakes have room to collapse).  Near the threshold speed 2
    the truncated problem cannot distinguish the two regimes at these
    tolerances, so a band around it is reported inconclusive by design.
    """
    if abs(c - 2.0) < 0.05:
        # inside the critical band no verdict is claimed; report the
        # best-effort amplitude from a bounded-work solve (convergence is
        # algebraically slow exactly at the threshold)
        try:
            rep = solve_truncated_front(c, 200.0, L, h, 1e-6, max_iter=30_000)
            amp = wake_amplitude(rep.field)
        except ConvergenceError:
            amp = math.nan
        return DichotomyVerdict(c, "inconclusive", amp, tuple(probe),
                                200.0, L)
    probes = np.linspace(probe[0], probe[1], 201)
    M = float(M0)
    rep = solve_truncated_front(c, M, L, h, tol)
    prev = extend_front(rep.field, 1.0, 0.0)(probes)
    while True:
        if M >= DOMAIN_LIMIT:
            raise ConvergenceError(f"dichotomy probe exhausted domain at c={c}")
        M *= 2
        rep = solve_truncated_front(c, M, L, h, tol)
        cur = extend_front(rep.field, 1.0, 0.0)(probes)
        if M >= 200.0 and np.max(np.abs(cur - prev)) <= domain_tol:
            break
        prev = cur
    amp = wake_amplitude(rep.field)
    if amp >= 0.5:
        verdict = "nontrivial"
    elif amp <= 1e-3:
        verdict = "trivial"
    else:
        verdict = "inconclusive"
    return DichotomyVerdict(c, verdict, amp, tuple(probe), M,
                            rep.field.grid.x_max)
