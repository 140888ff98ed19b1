"""Finite-volume schemes for 1D scalar conservation laws with third-order
three-point limiters and a smooth-extremum switch."""

from .grid import CellField, Grid, make_grid, project_function
from .limiters import (
    LimiterKind,
    LimiterSpec,
    Norm,
    SlopePair,
    SwitchConfig,
    eta,
    phi_as,
    phi_limo3,
    phi_new,
    phi_o3,
    phi_second_order,
    tilde_phi_comb,
    tilde_phi_new,
    tilde_phi_o3,
    two_param,
)
from .problems import Problem, get_problem, l1_error, sine_problem, square_problem
from .reconstruction import InterfaceStates, reconstruct
from .solver import (
    ADVECTION,
    BURGERS,
    FluxSpec,
    SolverConfig,
    SolverError,
    advance,
    cfl_dt,
    numerical_flux,
    rhs,
    step_ssp_rk3,
)

__version__ = "0.1.0"
