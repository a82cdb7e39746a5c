"""Uniform cell-centered grids, sampled fields, the quench coefficient,
and the extension operators used to compare solutions across domains.

Grids are cell-centered with the domain endpoints (and, when the domain
straddles the origin, x = 0) placed on cell interfaces.  The quench
coefficient is then constant on every cell and its jump needs no
regularization, while Dirichlet data at the endpoints can be imposed
exactly through ghost cells.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionError, ParameterError

__all__ = [
    "Grid1D",
    "Grid2D",
    "Field1D",
    "Field2D",
    "aligned_grid",
    "mu_at",
    "quench_mu",
    "extend_front",
    "extend_strip",
]


@dataclass(frozen=True)
class Grid1D:
    """Uniform cell-centered grid on [x_min, x_max] with n_cells cells."""

    x_min: float
    x_max: float
    n_cells: int

    def __post_init__(self):
        if not self.x_min < self.x_max:
            raise ParameterError(f"need x_min < x_max, got [{self.x_min}, {self.x_max}]")
        if self.n_cells < 2:
            raise ParameterError("n_cells must be at least 2")

    @property
    def h(self) -> float:
        return (self.x_max - self.x_min) / self.n_cells

    def centers(self) -> np.ndarray:
        return self.x_min + (np.arange(self.n_cells) + 0.5) * self.h

    def interfaces(self) -> np.ndarray:
        return self.x_min + np.arange(self.n_cells + 1) * self.h


@dataclass(frozen=True)
class Grid2D:
    """Tensor product of two 1D grids (gx in x, gy in y)."""

    gx: Grid1D
    gy: Grid1D

    @property
    def n_cells(self) -> int:
        return self.gx.n_cells * self.gy.n_cells


def aligned_grid(x_min: float, x_max: float, h: float) -> Grid1D:
    """Build a Grid1D with spacing close to h whose interfaces contain the
    endpoints and, when x_min < 0 < x_max, the origin.

    The cell count per side is rounded up, so the actual spacing never
    exceeds h; x_max may grow by less than one cell to stay commensurate.
    """
    if h <= 0:
        raise ParameterError("h must be positive")
    if x_min < 0.0 < x_max:
        n_left = int(np.ceil(-x_min / h - 1e-9))
        h_eff = -x_min / n_left
        n_right = int(np.ceil(x_max / h_eff - 1e-9))
        return Grid1D(x_min, n_right * h_eff, n_left + n_right)
    n = int(np.ceil((x_max - x_min) / h - 1e-9))
    n = max(n, 2)
    return Grid1D(x_min, x_max, n)


def _check_finite(values: np.ndarray, what: str):
    if not np.all(np.isfinite(values)):
        raise ParameterError(f"{what} must contain finite values only")


@dataclass(frozen=True)
class Field1D:
    """Values sampled at the cell centers of a Grid1D."""

    grid: Grid1D
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        if v.shape != (self.grid.n_cells,):
            raise DimensionError(
                f"values shape {v.shape} does not match n_cells={self.grid.n_cells}")
        _check_finite(v, "Field1D values")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    def to_csv(self, fh) -> None:
        """Write `x,u` rows, one per cell center, 17 significant digits."""
        fh.write("x,u\n")
        for x, u in zip(self.grid.centers(), self.values):
            fh.write(f"{x:.17g},{u:.17g}\n")

    @staticmethod
    def from_csv(fh) -> "Field1D":
        data = np.loadtxt(fh, delimiter=",", skiprows=1, ndmin=2, comments="#")
        x, u = data[:, 0], data[:, 1]
        h = x[1] - x[0]
        grid = Grid1D(x[0] - h / 2, x[-1] + h / 2, len(x))
        return Field1D(grid, u)


@dataclass(frozen=True)
class Field2D:
    """Values sampled at cell centers of a Grid2D.

    Storage order is fixed: flat index ix * ny + iy, i.e. the y index runs
    fastest.  `values2d()` returns the (nx, ny) view.
    """

    grid: Grid2D
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float).reshape(-1)
        if v.shape != (self.grid.n_cells,):
            raise DimensionError(
                f"values length {v.size} does not match nx*ny={self.grid.n_cells}")
        _check_finite(v, "Field2D values")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    def values2d(self) -> np.ndarray:
        return self.values.reshape(self.grid.gx.n_cells, self.grid.gy.n_cells)

    def to_csv(self, fh) -> None:
        fh.write("x,y,u\n")
        xs = self.grid.gx.centers()
        ys = self.grid.gy.centers()
        v = self.values2d()
        for ix, x in enumerate(xs):
            for iy, y in enumerate(ys):
                fh.write(f"{x:.17g},{y:.17g},{v[ix, iy]:.17g}\n")


def mu_at(x: float) -> float:
    """Quench coefficient: +1 in the wake (x < 0), -1 ahead (x > 0).

    mu(0) = -1 by convention only; solvers keep x = 0 on a cell interface
    so the value at the jump is never used.
    """
    return 1.0 if x < 0.0 else -1.0


def quench_mu(x: np.ndarray) -> np.ndarray:
    """Vectorized mu_at."""
    return np.where(np.asarray(x) < 0.0, 1.0, -1.0)


def extend_front(fld: Field1D, left_value: float, right_value: float):
    """Prolong a 1D field to the whole line.

    Inside the domain: linear interpolation between cell centers, pinned to
    (x_min, left_value) and (x_max, right_value) at the two half-cells so
    the extension is continuous when those values match the boundary data.
    Outside: the constant left/right values.
    """
    knots = np.concatenate(([fld.grid.x_min], fld.grid.centers(), [fld.grid.x_max]))
    kvals = np.concatenate(([left_value], fld.values, [right_value]))

    def evaluate(x):
        return np.interp(x, knots, kvals)

    return evaluate


def extend_strip(fld: Field2D, left_profile: Field1D, right_value: float):
    """Prolong a 2D field to the whole strip R x [y_min, y_max].

    For x <= x_min the field is replaced by left_profile(y), for
    x >= x_max by the constant right_value, and in between by bilinear
    interpolation of the stored values (padded with those two branches at
    the x endpoints).  In y the evaluation clamps to the nearest cell
    center outside the sampled band.
    """
    gx, gy = fld.grid.gx, fld.grid.gy
    if left_profile.grid.n_cells != gy.n_cells or not np.allclose(
            left_profile.grid.centers(), gy.centers()):
        raise DimensionError("left_profile must be sampled on the field's y grid")

    xknots = np.concatenate(([gx.x_min], gx.centers(), [gx.x_max]))
    yc = gy.centers()
    # padded value table: one extra column on each side in x
    table = np.empty((gx.n_cells + 2, gy.n_cells))
    table[0] = left_profile.values
    table[1:-1] = fld.values2d()
    table[-1] = right_value

    def evaluate(x, y):
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        xq = np.clip(x, xknots[0], xknots[-1])
        yq = np.clip(y, yc[0], yc[-1])
        ix = np.clip(np.searchsorted(xknots, xq) - 1, 0, len(xknots) - 2)
        iy = np.clip(np.searchsorted(yc, yq) - 1, 0, len(yc) - 2)
        tx = (xq - xknots[ix]) / (xknots[ix + 1] - xknots[ix])
        ty = (yq - yc[iy]) / (yc[iy + 1] - yc[iy])
        v = ((1 - tx) * (1 - ty) * table[ix, iy]
             + tx * (1 - ty) * table[ix + 1, iy]
             + (1 - tx) * ty * table[ix, iy + 1]
             + tx * ty * table[ix + 1, iy + 1])
        left = np.interp(np.clip(y, yc[0], yc[-1]), yc, left_profile.values)
        out = np.where(x <= gx.x_min, left, np.where(x >= gx.x_max, right_value, v))
        return out if out.ndim else float(out)

    return evaluate
