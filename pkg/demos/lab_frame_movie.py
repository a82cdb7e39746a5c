"""Demo: watching the quench sweep past in the lab frame.

The quench interface moves at speed c while the state front behind it
can travel at most at speed 2.  Below the threshold the front locks to
the quench; above it the front detaches and falls behind at a growing
distance.  Snapshots print as coarse ASCII profiles.
"""

import numpy as np

import quench_patterns as qp

GLYPHS = " .:-=+*#"


def ascii_profile(field, n=72):
    x = np.linspace(field.grid.x_min, field.grid.x_max, n)
    u = qp.extend_front(field, 1.0, 0.0)(x)
    idx = np.clip((u * (len(GLYPHS) - 1)).round().astype(int), 0,
                  len(GLYPHS) - 1)
    return "".join(GLYPHS[i] for i in idx)


def run(c):
    print(f"\n=== lab frame at c = {c} (quench marked ^) ===")
    grid = qp.aligned_grid(-10.0, 40.0, 0.1)
    x = grid.centers()
    init = qp.Field1D(grid, (x < 0).astype(float))
    cfg = qp.EvolveConfig("lab", c, 0.005, 12.0, grid, init, (1.0, 0.0))
    _, _, snaps = qp.evolve(cfg, snapshot_every=800)
    for t, snap in snaps:
        line = ascii_profile(snap)
        pos = int(round((c * t - grid.x_min)
                        / (grid.x_max - grid.x_min) * (len(line) - 1)))
        marker = " " * pos + "^"
        print(f"t={t:5.1f} |{line}|")
        print(f"        {marker}")


def main():
    run(1.0)   # front locked to the quench
    run(2.5)   # front detaches: the wake dies out


if __name__ == "__main__":
    main()
