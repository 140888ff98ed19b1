"""Linear advection test problems with exact cell-averaged solutions."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Tuple

import numpy as np

from .grid import CellField, Grid, make_grid
from .solver import ADVECTION, FluxSpec


class ICKind(str, enum.Enum):
    SINE = "sine"
    SQUARE = "square"
    CUSTOM = "custom"


@dataclass(frozen=True)
class Problem:
    flux: FluxSpec
    domain: Tuple[float, float]
    ic_kind: ICKind
    exact_cell_averages: Callable[[Grid, float], CellField]
    alpha_analytic: float

    @property
    def name(self) -> str:
        return self.ic_kind.value

    def grid(self, n_cells: int) -> Grid:
        return make_grid(self.domain[0], self.domain[1], n_cells)

    def initial(self, grid: Grid) -> CellField:
        return self.exact_cell_averages(grid, 0.0)


def _check_domain(grid: Grid, domain):
    if (grid.x_left, grid.x_right) != tuple(domain):
        raise ValueError(f"grid spans [{grid.x_left}, {grid.x_right}], problem needs {domain}")


def sine_problem() -> Problem:
    """u_t + u_x = 0 on [-1, 1] with u0 = sin(pi x)."""
    domain = (-1.0, 1.0)

    def exact(grid: Grid, t: float) -> CellField:
        _check_domain(grid, domain)
        half = 0.5 * np.pi * grid.dx
        # average of sin over a cell = sin(pi x_c) * sin(h) / h, no cancellation
        values = np.sin(np.pi * (grid.centers - t)) * (np.sin(half) / half)
        return CellField(grid, values, t)

    return Problem(ADVECTION, domain, ICKind.SINE, exact, float(np.pi ** 2))


def _interval_overlap(a, b, lo, hi, period):
    """Length of [a, b] intersected with the periodic copies of [lo, hi]."""
    total = np.zeros_like(a)
    for k in (-2, -1, 0, 1, 2):
        total += np.clip(np.minimum(b, hi + k * period) - np.maximum(a, lo + k * period), 0.0, None)
    return total


def square_problem() -> Problem:
    """u_t + u_x = 0 on [-1, 1] with u0 the indicator of [-0.5, 0.5]."""
    domain = (-1.0, 1.0)
    period = domain[1] - domain[0]

    def exact(grid: Grid, t: float) -> CellField:
        _check_domain(grid, domain)
        shift = np.mod(t, period)
        faces = grid.faces
        overlap = _interval_overlap(faces[:-1], faces[1:], -0.5 + shift, 0.5 + shift, period)
        return CellField(grid, overlap / grid.dx, t)

    # the initial data is piecewise constant: the curvature bound is zero
    return Problem(ADVECTION, domain, ICKind.SQUARE, exact, 0.0)


PROBLEMS = {"sine": sine_problem, "square": square_problem}


def get_problem(name: str) -> Problem:
    try:
        return PROBLEMS[name]()
    except KeyError:
        raise ValueError(f"unknown problem {name!r}; choose from {sorted(PROBLEMS)}") from None


def l1_error(a: CellField, b: CellField) -> float:
    """dx * sum |a_i - b_i|."""
    if a.grid != b.grid:
        raise ValueError("fields live on different grids")
    return float(a.grid.dx * np.sum(np.abs(a.values - b.values)))
