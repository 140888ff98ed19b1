"""Semi-discrete finite-volume update, Rusanov flux and SSP-RK3 stepping."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .grid import CellField
from .limiters import LimiterSpec
from .reconstruction import reconstruct_values


class SolverError(RuntimeError):
    """Raised when the discrete solution stops being finite."""

    def __init__(self, message: str, time: float):
        super().__init__(f"{message} (t = {time!r})")
        self.time = time


@dataclass(frozen=True)
class FluxSpec:
    f: Callable[[np.ndarray], np.ndarray]
    df: Callable[[np.ndarray], np.ndarray]
    name: str = "custom"


def _advection_f(u):
    return np.asarray(u, dtype=float) * 1.0


def _advection_df(u):
    return np.ones_like(np.asarray(u, dtype=float))


ADVECTION = FluxSpec(_advection_f, _advection_df, "advection")
BURGERS = FluxSpec(lambda u: 0.5 * np.asarray(u) ** 2, lambda u: np.asarray(u, dtype=float), "burgers")


@dataclass(frozen=True)
class SolverConfig:
    limiter: LimiterSpec
    flux: FluxSpec = ADVECTION
    courant: float = 0.8
    t_end: float = 20.0

    def __post_init__(self):
        if not 0 < self.courant <= 1:
            raise ValueError(f"courant number must lie in (0, 1], got {self.courant}")
        if not np.isfinite(self.t_end):
            raise ValueError("t_end must be finite")


def numerical_flux(u_minus, u_plus, flux: FluxSpec):
    """Local Lax-Friedrichs (Rusanov) flux at an interface."""
    u_minus = np.asarray(u_minus, dtype=float)
    u_plus = np.asarray(u_plus, dtype=float)
    speed = np.maximum(np.abs(flux.df(u_minus)), np.abs(flux.df(u_plus)))
    return 0.5 * (flux.f(u_minus) + flux.f(u_plus)) - 0.5 * speed * (u_plus - u_minus)


def rhs_values(values: np.ndarray, dx: float, cfg: SolverConfig, time: float = 0.0) -> np.ndarray:
    if not np.all(np.isfinite(values)):
        raise SolverError("non-finite cell averages", time)
    left, right = reconstruct_values(values, cfg.limiter, dx)
    # f_hat[i] lives on face i+1/2
    f_hat = numerical_flux(left, np.roll(right, -1), cfg.flux)
    out = -(f_hat - np.roll(f_hat, 1)) / dx
    if not np.all(np.isfinite(out)):
        raise SolverError("non-finite right-hand side", time)
    return out


def rhs(field: CellField, cfg: SolverConfig) -> np.ndarray:
    """d(u_bar)/dt for every cell."""
    return rhs_values(field.values, field.grid.dx, cfg, field.time)


def _courant_step(values: np.ndarray, dx: float, cfg: SolverConfig, remaining: float) -> float:
    speed = float(np.max(np.abs(cfg.flux.df(values))))
    if not speed > 0:
        raise ValueError("maximum wave speed is zero; time step undefined")
    dt = cfg.courant * dx / speed
    # take the remainder in one go rather than leave a rounding-sized sliver
    if remaining <= dt * (1.0 + 1e-10):
        return remaining
    return dt


def cfl_dt(field: CellField, cfg: SolverConfig) -> float:
    """Courant-limited step, truncated so the run lands exactly on ``cfg.t_end``."""
    return _courant_step(field.values, field.grid.dx, cfg, cfg.t_end - field.time)


def ssp_rk3(u: np.ndarray, dt: float, operator: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
    """One Shu-Osher SSP-RK3 step of du/dt = operator(u)."""
    u1 = u + dt * operator(u)
    u2 = 0.75 * u + 0.25 * (u1 + dt * operator(u1))
    return u / 3.0 + 2.0 / 3.0 * (u2 + dt * operator(u2))


def step_ssp_rk3(field: CellField, dt: float, cfg: SolverConfig) -> CellField:
    if not dt > 0:
        raise ValueError(f"dt must be positive, got {dt}")
    dx = field.grid.dx
    t = field.time
    new = ssp_rk3(field.values, dt, lambda v: rhs_values(v, dx, cfg, t))
    if not np.all(np.isfinite(new)):
        raise SolverError("non-finite solution after step", t + dt)
    return field.with_values(new, t + dt)


def advance(field: CellField, cfg: SolverConfig) -> CellField:
    """Integrate from ``field.time`` to ``cfg.t_end``."""
    if cfg.t_end < field.time:
        raise ValueError(f"t_end {cfg.t_end} precedes field time {field.time}")
    dx = field.grid.dx
    u = np.array(field.values)
    t = field.time
    while t < cfg.t_end:
        remaining = cfg.t_end - t
        dt = _courant_step(u, dx, cfg, remaining)
        try:
            u = ssp_rk3(u, dt, lambda v: rhs_values(v, dx, cfg, t))
        except SolverError as err:
            raise SolverError("solver blow-up", err.time) from err
        if not np.all(np.isfinite(u)):
            raise SolverError("solver blow-up: non-finite solution", t)
        t = cfg.t_end if dt == remaining else t + dt
    return field.with_values(u, t)
