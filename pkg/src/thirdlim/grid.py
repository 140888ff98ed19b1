"""Uniform periodic 1D mesh and cell-average fields."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

MIN_CELLS = 4

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(5)


@dataclass(frozen=True)
class Grid:
    x_left: float
    x_right: float
    n_cells: int

    def __post_init__(self):
        if not (np.isfinite(self.x_left) and np.isfinite(self.x_right)):
            raise ValueError("domain bounds must be finite")
        if not self.x_left < self.x_right:
            raise ValueError(f"degenerate domain [{self.x_left}, {self.x_right}]")
        if int(self.n_cells) != self.n_cells or self.n_cells < MIN_CELLS:
            raise ValueError(f"n_cells must be an integer >= {MIN_CELLS}, got {self.n_cells}")

    @property
    def length(self) -> float:
        return self.x_right - self.x_left

    @property
    def dx(self) -> float:
        return (self.x_right - self.x_left) / self.n_cells

    def cell_center(self, i):
        # from the index, never accumulated
        return self.x_left + (np.asarray(i) + 0.5) * self.dx

    @property
    def centers(self) -> np.ndarray:
        return self.cell_center(np.arange(self.n_cells))

    @property
    def faces(self) -> np.ndarray:
        """Cell boundaries x_{i-1/2}, length n_cells + 1."""
        return self.x_left + np.arange(self.n_cells + 1) * self.dx


def make_grid(x_left: float, x_right: float, n_cells: int) -> Grid:
    if int(n_cells) != n_cells:
        raise ValueError(f"n_cells must be an integer, got {n_cells}")
    return Grid(float(x_left), float(x_right), int(n_cells))


@dataclass(frozen=True)
class CellField:
    """Cell averages bound to a grid at a given time.

    The values array is copied and marked read-only; produce new fields
    instead of mutating.
    """

    grid: Grid
    values: np.ndarray
    time: float = 0.0

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        if values.shape != (self.grid.n_cells,):
            raise ValueError(
                f"expected {self.grid.n_cells} cell values, got shape {values.shape}"
            )
        if not np.all(np.isfinite(values)):
            raise ValueError("cell averages must be finite")
        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    def value(self, i):
        """Periodic access: any integer index wraps onto the mesh."""
        return self.values[np.mod(i, self.grid.n_cells)]

    def mass(self) -> float:
        return float(np.sum(self.values) * self.grid.dx)

    def with_values(self, values, time: Optional[float] = None) -> "CellField":
        return CellField(self.grid, values, self.time if time is None else time)


def project_function(
    grid: Grid,
    f: Callable[[np.ndarray], np.ndarray],
    antiderivative: Optional[Callable[[np.ndarray], np.ndarray]] = None,
    time: float = 0.0,
) -> CellField:
    """Cell averages of ``f`` over every cell of ``grid``.

    With an antiderivative the averages are exact up to rounding; otherwise
    a 5-point Gauss-Legendre rule is applied per cell.
    """
    faces = grid.faces
    if antiderivative is not None:
        big_f = np.asarray(antiderivative(faces), dtype=float)
        values = np.diff(big_f) / grid.dx
    else:
        centers = grid.centers
        x = centers[:, None] + 0.5 * grid.dx * _GL_NODES[None, :]
        fx = np.broadcast_to(np.asarray(f(x), dtype=float), x.shape)
        if not np.all(np.isfinite(fx)):
            raise ValueError("function returned non-finite values")
        values = 0.5 * fx @ _GL_WEIGHTS
    if not np.all(np.isfinite(values)):
        raise ValueError("function returned non-finite values")
    return CellField(grid, values, time)
