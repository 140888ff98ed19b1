"""Runs, convergence sweeps, alpha studies and limiter tables, with CSV/JSON output."""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, replace
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import numpy as np

from . import limiters as lim
from .grid import CellField
from .limiters import LimiterKind, LimiterSpec
from .problems import Problem, get_problem, l1_error
from .solver import SolverConfig, advance

TABLE_COLUMNS = ("phi_o3", "phi_as", "phi_limo3", "phi_new", "phi_second_order")
DEFAULT_CELLS = (40, 80, 160, 320, 640)


def _fmt(x) -> str:
    # shortest round-trip repr keeps output exact and deterministic
    if x is None:
        return ""
    return repr(float(x))


@dataclass(frozen=True)
class RunConfig:
    problem: str = "sine"
    limiter: str = "comb"
    q: float = lim.DEFAULT_Q
    alpha_override: Optional[float] = None
    epsilon: float = lim.DEFAULT_EPSILON
    norm: str = "l2"
    nu: float = 0.8
    t_end: float = 20.0
    cells: Tuple[int, ...] = DEFAULT_CELLS
    output_path: Optional[str] = None
    format: str = "csv"
    workers: int = 1

    def __post_init__(self):
        cells = tuple(int(n) for n in self.cells)
        object.__setattr__(self, "cells", cells)
        if not cells:
            raise ValueError("at least one cell count is required")
        if any(b <= a for a, b in zip(cells, cells[1:])):
            raise ValueError(f"cell counts must be strictly increasing, got {cells}")
        if not 0 < self.nu <= 1:
            raise ValueError(f"nu must lie in (0, 1], got {self.nu}")
        if not (math.isfinite(self.t_end) and self.t_end >= 0):
            raise ValueError(f"t_end must be finite and >= 0, got {self.t_end}")
        if self.format not in ("csv", "json"):
            raise ValueError(f"unknown format {self.format!r}")
        LimiterKind(self.limiter)
        get_problem(self.problem)

    def get_problem(self) -> Problem:
        return get_problem(self.problem)

    def alpha(self) -> float:
        if self.alpha_override is not None:
            return float(self.alpha_override)
        return self.get_problem().alpha_analytic

    def limiter_spec(self) -> LimiterSpec:
        kind = LimiterKind(self.limiter)
        if kind is LimiterKind.COMB:
            return LimiterSpec.combined(self.alpha(), self.epsilon, self.norm)
        return LimiterSpec(kind, q=self.q)

    def solver_config(self) -> SolverConfig:
        problem = self.get_problem()
        return SolverConfig(self.limiter_spec(), problem.flux, self.nu, self.t_end)


@dataclass
class SolveResult:
    numeric: CellField
    exact: CellField

    @property
    def l1_error(self) -> float:
        return l1_error(self.numeric, self.exact)

    def rows(self):
        return zip(self.numeric.grid.centers, self.numeric.values, self.exact.values)


@dataclass(frozen=True)
class ConvergenceRow:
    n_cells: int
    dx: float
    l1_error: float
    observed_order: Optional[float] = None


@dataclass
class ConvergenceReport:
    rows: List[ConvergenceRow]
    problem: str
    limiter: str
    alpha_used: float
    nu: float
    t_end: float

    @classmethod
    def from_errors(cls, cells, dxs, errors, **meta) -> "ConvergenceReport":
        rows = []
        for k, (n, dx, err) in enumerate(zip(cells, dxs, errors)):
            order = None
            if k > 0:
                order = observed_order(errors[k - 1], err, dxs[k - 1], dx)
            rows.append(ConvergenceRow(int(n), float(dx), float(err), order))
        return cls(rows, **meta)

    @property
    def orders(self) -> List[float]:
        return [r.observed_order for r in self.rows[1:]]

    @property
    def errors(self) -> List[float]:
        return [r.l1_error for r in self.rows]

    def error_at(self, n_cells: int) -> float:
        for r in self.rows:
            if r.n_cells == n_cells:
                return r.l1_error
        raise KeyError(n_cells)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["rows"] = [asdict(r) for r in self.rows]
        return d


def observed_order(err_coarse: float, err_fine: float, dx_coarse: float, dx_fine: float) -> float:
    return math.log(err_coarse / err_fine) / math.log(dx_coarse / dx_fine)


def solve(cfg: RunConfig, n_cells: Optional[int] = None) -> SolveResult:
    """Advance the problem's initial data to ``cfg.t_end`` on one grid."""
    problem = cfg.get_problem()
    grid = problem.grid(cfg.cells[0] if n_cells is None else n_cells)
    start = problem.initial(grid)
    numeric = advance(start, cfg.solver_config())
    return SolveResult(numeric, problem.exact_cell_averages(grid, numeric.time))


def _error_for(args) -> float:
    cfg, n = args
    return solve(cfg, n).l1_error


def _errors(cfg: RunConfig) -> List[float]:
    jobs = [(cfg, n) for n in cfg.cells]
    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            return list(pool.map(_error_for, jobs))
    return [_error_for(job) for job in jobs]


# ---------------------------------------------------------------------------
# serialisation

def _write_text(text: str, path) -> None:
    if path is None:
        return
    Path(path).write_text(text, encoding="utf-8")


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def solution_text(result: SolveResult, fmt: str = "csv") -> str:
    if fmt == "json":
        payload = {
            "time": result.numeric.time,
            "l1_error": result.l1_error,
            "rows": [
                {"x_center": float(x), "u_numeric": float(u), "u_exact": float(e)}
                for x, u, e in result.rows()
            ],
        }
        return json.dumps(payload, indent=2) + "\n"
    rows = [(_fmt(x), _fmt(u), _fmt(e)) for x, u, e in result.rows()]
    return _csv_text(("x_center", "u_numeric", "u_exact"), rows)


REPORT_HEADER = (
    "problem", "limiter", "alpha", "nu", "t_end", "n_cells", "dx", "l1_error", "observed_order",
)


def _report_rows(report: ConvergenceReport):
    for r in report.rows:
        yield (
            report.problem, report.limiter, _fmt(report.alpha_used), _fmt(report.nu),
            _fmt(report.t_end), str(r.n_cells), _fmt(r.dx), _fmt(r.l1_error),
            _fmt(r.observed_order),
        )


def reports_text(reports: Sequence[ConvergenceReport], fmt: str = "csv") -> str:
    if fmt == "json":
        return json.dumps([r.to_dict() for r in reports], indent=2) + "\n"
    rows = [row for rep in reports for row in _report_rows(rep)]
    return _csv_text(REPORT_HEADER, rows)


def read_report_csv(text: str) -> List[dict]:
    return list(csv.DictReader(io.StringIO(text)))


# ---------------------------------------------------------------------------
# operations

def run_single(cfg: RunConfig) -> float:
    """Solve on ``cfg.cells[0]`` cells, write the per-cell table, return the L1 error."""
    result = solve(cfg)
    _write_text(solution_text(result, cfg.format), cfg.output_path)
    return result.l1_error


def run_convergence(cfg: RunConfig, write: bool = True) -> ConvergenceReport:
    if len(cfg.cells) < 3:
        raise ValueError("a convergence study needs at least 3 resolutions")
    problem = cfg.get_problem()
    dxs = [problem.grid(n).dx for n in cfg.cells]
    report = ConvergenceReport.from_errors(
        cfg.cells, dxs, _errors(cfg),
        problem=cfg.problem, limiter=cfg.limiter_spec().label,
        alpha_used=cfg.alpha(), nu=cfg.nu, t_end=cfg.t_end,
    )
    if write:
        _write_text(reports_text([report], cfg.format), cfg.output_path)
    return report


def run_alpha_sweep(cfg: RunConfig, alphas: Sequence[float]) -> List[ConvergenceReport]:
    """One convergence study of the combined limiter per alpha, one output file."""
    if not alphas:
        raise ValueError("alphas must be non-empty")
    reports = [
        run_convergence(replace(cfg, limiter="comb", alpha_override=float(a)), write=False)
        for a in alphas
    ]
    _write_text(reports_text(reports, cfg.format), cfg.output_path)
    return reports


def limiter_table(
    columns: Sequence[str] = TABLE_COLUMNS,
    theta_range: Tuple[float, float, int] = (-2.0, 4.0, 601),
    q: float = lim.DEFAULT_Q,
) -> Tuple[np.ndarray, dict]:
    lo, hi, steps = theta_range
    if int(steps) < 2:
        raise ValueError("steps must be >= 2")
    theta = np.linspace(lo, hi, int(steps))
    funcs = {
        "phi_o3": lim.phi_o3,
        "phi_as": lambda t: lim.phi_as(t, q),
        "phi_limo3": lim.phi_limo3,
        "phi_new": lim.phi_new,
        "phi_second_order": lim.phi_second_order,
    }
    unknown = set(columns) - set(funcs)
    if unknown:
        raise ValueError(f"unknown limiter columns {sorted(unknown)}")
    return theta, {name: funcs[name](theta) for name in columns}


def emit_limiter_table(
    limiters: Sequence[str] = TABLE_COLUMNS,
    theta_range: Tuple[float, float, int] = (-2.0, 4.0, 601),
    q: float = lim.DEFAULT_Q,
    output=None,
) -> str:
    """CSV of the ratio-form limiters over an evenly spaced theta grid."""
    theta, table = limiter_table(limiters, theta_range, q)
    names = list(table)
    rows = [
        [_fmt(t)] + [_fmt(table[name][k]) for name in names]
        for k, t in enumerate(theta)
    ]
    text = _csv_text(["theta"] + names, rows)
    _write_text(text, output)
    return text
