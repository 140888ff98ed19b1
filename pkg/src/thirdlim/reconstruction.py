"""Interface values from cell averages on the three-point stencil."""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .grid import CellField
from .limiters import LimiterSpec, SlopePair


class InterfaceStates(NamedTuple):
    left: np.ndarray  # u^(-)_{i+1/2}: right face of cell i, seen from inside cell i
    right: np.ndarray  # u^(+)_{i-1/2}: left face of cell i, seen from inside cell i


def slopes(values: np.ndarray) -> SlopePair:
    """Periodic lateral differences of every cell."""
    delta_plus = np.roll(values, -1) - values
    delta_minus = np.roll(delta_plus, 1)
    return SlopePair(delta_minus, delta_plus)


def reconstruct_values(values: np.ndarray, spec: LimiterSpec, dx: float) -> InterfaceStates:
    values = np.asarray(values, dtype=float)
    if not np.all(np.isfinite(values)):
        raise ValueError("non-finite cell averages")
    s = slopes(values)
    # the left face uses the same limiter with its arguments swapped
    left = values + 0.5 * spec.slope(s, dx)
    right = values - 0.5 * spec.slope((s.delta_plus, s.delta_minus), dx)
    return InterfaceStates(left, right)


def reconstruct(field: CellField, spec: LimiterSpec) -> InterfaceStates:
    return reconstruct_values(field.values, spec, field.grid.dx)
