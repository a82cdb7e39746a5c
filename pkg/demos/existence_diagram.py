"""Demo: the existence diagram over quench speed and strip height.

P(c; kappa) = c^2/4 + pi^2/kappa^2 organizes everything: P < 1 predicts
a surviving wake pattern, P > 1 predicts collapse.  The quick run prints
the predicted diagram; pass --measure to also run the solvers on a small
grid and compare.
"""

import math
import sys

import quench_patterns as qp

C_GRID = [0.0, 0.4, 0.8, 1.2, 1.6, 2.0]
KAPPA_GRID = [4.0, 2 * math.pi, 16.0, qp.KAPPA_INF]
MARK = {"exists": "#", "not_exists": ".", "critical": "?"}


def main():
    measure = "--measure" in sys.argv
    if measure:
        c_grid, kappa_grid = [0.5, 1.0, 2.1], [4.0, 2 * math.pi,
                                               qp.KAPPA_INF]
    else:
        c_grid, kappa_grid = C_GRID, KAPPA_GRID
    records = qp.sweep(c_grid, kappa_grid, run_solvers=measure, h=0.1)

    print("predicted diagram ('#' pattern, '.' collapse, '?' critical):")
    header = "        " + "".join(f"{('inf' if math.isinf(k) else f'{k:g}'):>8s}"
                                  for k in kappa_grid)
    print(header + "   <- kappa")
    by_c = {}
    for r in records:
        by_c.setdefault(r.c, []).append(r)
    for c, row in by_c.items():
        marks = "".join(f"{MARK[r.predicted]:>8s}" for r in row)
        print(f"c={c:4.1f} {marks}")

    if measure:
        print("\nmeasured verdicts:")
        for r in records:
            kap = "inf" if math.isinf(r.kappa) else f"{r.kappa:.3g}"
            ok = {True: "agree", False: "DISAGREE", None: "-"}[r.agree]
            print(f"  c={r.c:4.2f} kappa={kap:>5s} P={r.P:5.3f} "
                  f"predicted={r.predicted:10s} measured={r.measured:10s} "
                  f"[{ok}]")


if __name__ == "__main__":
    main()
