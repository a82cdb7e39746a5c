"""Demo: bracketing the strip pattern between explicit comparison
functions.

A positive subsolution pins the pattern away from zero when
c^2/4 + pi^2/kappa^2 < 1; a composite supersolution forces collapse when
the same quantity exceeds 1.  Both are verified here against a direct
strip solve and against their own finite-difference defect signs.
"""

import math

import numpy as np

import quench_patterns as qp

KAPPA = 2 * math.pi


def defect(V, c, hx, hy):
    """Interior five-point defect Delta V + c V_x + V - V^3 on x <= 0."""
    core = V[1:-1, 1:-1]
    lap = ((V[2:, 1:-1] - 2 * core + V[:-2, 1:-1]) / hx ** 2
           + (V[1:-1, 2:] - 2 * core + V[1:-1, :-2]) / hy ** 2)
    dx = (V[2:, 1:-1] - V[:-2, 1:-1]) / (2 * hx)
    return lap + c * dx + core - core ** 3


def main():
    alpha = qp.amplitude_of_half_period(KAPPA)

    print("=== subsolution at (c, d) = (0.5, 1.9), alpha = M(2*pi) ===")
    spec = qp.SubsolutionSpec(0.5, 1.9, alpha, KAPPA)
    p = qp.make_strip_problem(0.5, KAPPA, 25.0, 30.0, 0.05)
    fld, _ = qp.solve_truncated_strip(p, 1e-8)
    n_left = int(round(p.M / p.grid.gx.h))
    grid = qp.Grid2D(qp.Grid1D(-p.M, 0.0, n_left), p.grid.gy)
    V = qp.build_subsolution(spec, grid)
    vals = V.values2d()
    r = defect(vals, spec.c, grid.gx.h, grid.gy.h)
    print(f"  defect minimum {r.min():.3e} (subsolution: must be >= 0 "
          "up to rounding)")
    gap = fld.values2d()[:n_left, :] - vals
    print(f"  pattern minus subsolution: minimum {gap.min():.3e} "
          "(bracket: must be >= -1e-8)")

    print("\n=== supersolution at (c, d) = (1.9, 2.1), alpha = 0.5 ===")
    spec2 = qp.SubsolutionSpec(1.9, 2.1, 0.5, KAPPA)
    tau = qp.supersolution_shift(spec2, grid)
    W = qp.build_nonexistence_supersolution(spec2, grid, tau)
    r2 = defect(W.values2d(), spec2.c, grid.gx.h, grid.gy.h)
    print(f"  admissible translate tau = {tau}")
    print(f"  defect maximum {r2.max():.3e} (supersolution: must be <= 0)")


if __name__ == "__main__":
    main()
