"""Existence classification: the critical quantity, predicted and
measured verdicts, tail-rate fitting, and the (c, kappa) sweep.

The organizing number is P(c; kappa) = c^2/4 + pi^2/kappa^2 (c^2/4 in the
single-interface limit kappa = inf).  P < 1 predicts a nontrivial wake
pattern, P > 1 predicts collapse; a band of width 0.02 around 1 is left
unclassified because the threshold itself is an open problem and
truncation blurs it numerically.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import ParameterError, QuenchError
from .front1d import verify_dichotomy
from .grids import Field1D
from .orbits import KAPPA_INF, amplitude_of_half_period
from .strip2d import continue_strip

CRITICAL_BAND = 0.02


@dataclass(frozen=True)
class ClassificationRecord:
    """One cell of the existence diagram."""
    c: float
    kappa: float
    P: float
    predicted: str                      # exists | not_exists | critical
    measured: str = "not_run"           # nontrivial | trivial | inconclusive | not_run
    wake_amplitude: float = math.nan
    decay_rate_right: Optional[float] = None

    @property
    def agree(self) -> Optional[bool]:
        if self.measured == "not_run":
            return None
        pairs = {("exists", "nontrivial"), ("not_exists", "trivial")}
        if self.predicted == "critical" or self.measured == "inconclusive":
            return None
        return (self.predicted, self.measured) in pairs


def critical_quantity(c: float, kappa: float) -> float:
    """P(c; kappa) = c^2/4 + pi^2/kappa^2, with the pi^2 term absent in
    the single-interface limit."""
    if c < 0:
        raise ParameterError("speed must be nonnegative")
    if kappa == KAPPA_INF:
        return c * c / 4.0
    if not kappa > math.pi:
        raise ParameterError(f"half-period must exceed pi, got {kappa}")
    return c * c / 4.0 + math.pi ** 2 / kappa ** 2


def predict(c: float, kappa: float) -> str:
    """Threshold P against 1 with the critical band."""
    P = critical_quantity(c, kappa)
    if P < 1.0 - CRITICAL_BAND:
        return "exists"
    if P > 1.0 + CRITICAL_BAND:
        return "not_exists"
    return "critical"


def fit_decay_rate(field: Field1D, window, target: str) -> float:
    """Least-squares exponential rate of the field's tail on `window`.

    target "value_to_zero" fits log|u|, "value_to_one" fits log|1 - u|.
    The returned rate is the positive magnitude of the slope.
    """
    if target not in ("value_to_zero", "value_to_one"):
        raise ParameterError("target must be value_to_zero or value_to_one")
    x = field.grid.centers()
    v = field.values if target == "value_to_zero" else 1.0 - field.values
    sel = (x >= window[0]) & (x <= window[1])
    v = np.abs(v[sel])
    x = x[sel]
    usable = (v > 1e-12) & (v < 1.0 - 1e-12)
    if np.count_nonzero(usable) < 10:
        raise ParameterError(
            "fewer than 10 usable points in the fit window")
    slope = np.polyfit(x[usable], np.log(v[usable]), 1)[0]
    return float(abs(slope))


def _measure_cell(c: float, kappa: float, h: float, tol: float,
                  domain_tol: float):
    """Run the solver for one sweep cell; returns (measured, wake_amp)."""
    if kappa == KAPPA_INF:
        v = verify_dichotomy(c, h=max(h / 2, 0.02), domain_tol=domain_tol)
        return v.verdict, v.wake_amplitude
    fld = continue_strip(c, kappa, h=h, tol=tol, domain_tol=domain_tol)
    x = fld.grid.gx.centers()
    # probe behind the trigger but away from the inflow face, whose
    # Dirichlet data forces a boundary layer even when the wake collapses
    band = (x >= -10.0) & (x <= -5.0)
    amp = float(np.max(np.abs(fld.values2d()[band, :])))
    scale = amplitude_of_half_period(kappa)
    if amp >= 0.5 * scale:
        return "nontrivial", amp
    if amp <= 1e-3:
        return "trivial", amp
    return "inconclusive", amp


def _run_cell(args):
    c, kappa, h, tol, domain_tol = args
    P = critical_quantity(c, kappa)
    pred = predict(c, kappa)
    try:
        measured, amp = _measure_cell(c, kappa, h, tol, domain_tol)
    except QuenchError:
        measured, amp = "not_run", math.nan
    return ClassificationRecord(c, kappa, P, pred, measured, amp)


def sweep(c_grid, kappa_grid, run_solvers: bool = False, h: float = 0.1,
          tol: float = 1e-8, domain_tol: float = 1e-6,
          workers: int = 1):
    """Fill the existence diagram over the product grid.

    Returns a list of ClassificationRecord in row-major (c outer, kappa
    inner) order.  With run_solvers, each cell runs the standard
    continuation schedule; cell failures are recorded as not_run and
    never abort the sweep.  workers > 1 distributes cells over processes.
    """
    for c in c_grid:
        if not 0.0 <= c <= 3.0:
            raise ParameterError(f"sweep speeds must lie in [0, 3], got {c}")
    for k in kappa_grid:
        if k != KAPPA_INF and not (math.pi < k <= 64.0):
            raise ParameterError(
                f"sweep half-periods must lie in (pi, 64] or inf, got {k}")
    cells = [(float(c), float(k), h, tol, domain_tol)
             for c in c_grid for k in kappa_grid]
    if not run_solvers:
        return [ClassificationRecord(c, k, critical_quantity(c, k),
                                     predict(c, k))
                for c, k, *_ in cells]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_run_cell, cells))
    return [_run_cell(cell) for cell in cells]
