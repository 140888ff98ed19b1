"""Three-point limiter functions.

Every ratio-form limiter ``phi(theta)`` takes the slope ratio
``theta = delta_minus / delta_plus``.  The two-parameter form
``phi~(delta_minus, delta_plus) = phi(theta) * delta_plus`` is what the
reconstruction actually uses; it never divides by a vanishing slope.

All functions broadcast over numpy arrays.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional

import numpy as np

# |delta_plus| <= ZERO_SLOPE_TOL * max(1, |delta_minus|) counts as a zero slope
ZERO_SLOPE_TOL = 1e-14

# |p - 1| below this uses the series expansion of phi_as
AS_SERIES_TOL = 1e-4
AS_P_FLOOR = 1e-300

DEFAULT_Q = 1.4
DEFAULT_EPSILON = 1e-6

RatioLimiter = Callable[[np.ndarray], np.ndarray]


class SlopePair(NamedTuple):
    """Lateral differences of one cell (or arrays of them)."""

    delta_minus: np.ndarray  # u_i - u_{i-1}
    delta_plus: np.ndarray  # u_{i+1} - u_i

    def flipped(self) -> "SlopePair":
        """The mirrored situation (-delta_plus, -delta_minus)."""
        return SlopePair(-np.asarray(self.delta_plus), -np.asarray(self.delta_minus))


# ---------------------------------------------------------------------------
# ratio form

def phi_second_order(theta):
    """Unlimited central (Fromm) slope, (1 + theta) / 2."""
    return 0.5 * (1.0 + np.asarray(theta, dtype=float))


def phi_o3(theta):
    """Full third-order reconstruction, (2 + theta) / 3."""
    return (2.0 + np.asarray(theta, dtype=float)) / 3.0


def phi_as(theta, q: float = DEFAULT_Q):
    """Local double logarithmic limiter with sharpness parameter ``q``.

    The closed form has a removable singularity at p = 1, where a series
    in h = p - 1 takes over, and tends to zero as p -> 0.
    """
    if not q > 0:
        raise ValueError(f"q must be positive, got {q}")
    theta = np.asarray(theta, dtype=float)
    a = np.abs(theta)
    with np.errstate(divide="ignore", over="ignore"):
        # 2|t|^q / (1 + |t|^2q) without overflowing for large |t|
        aq = a ** q
        p = 2.0 / (1.0 / aq + aq)
    p = np.where(np.isfinite(p), p, 0.0)
    h = p - 1.0

    near_one = np.abs(h) < AS_SERIES_TOL
    near_zero = p < AS_P_FLOOR
    regular = ~(near_one | near_zero)

    ps = np.where(regular, p, 0.5)
    hs = ps - 1.0
    small = ps < 0.5
    log_p = np.where(small, np.log(ps), np.log1p(np.where(small, 0.0, hs)))
    numer = hs * hs * log_p + (1.0 - theta) * (2.0 * ps * log_p - hs * (ps + 1.0))
    closed = 2.0 * ps * numer / ((ps + 1.0) * hs ** 3)

    series = (2.0 + theta) / 3.0 - (theta / 15.0 + 0.1) * h * h
    out = np.where(near_one, series, np.where(near_zero, 0.0, closed))
    return out[()] if out.ndim == 0 else out


def phi_limo3(theta):
    """Piecewise-linear limiter emulating phi_as at q = 1.4."""
    theta = np.asarray(theta, dtype=float)
    o3 = phi_o3(theta)
    inner = np.minimum(np.minimum(2.0 * theta, o3), 1.6)
    return np.maximum(0.0, np.minimum(o3, np.maximum(-0.5 * theta, inner)))


def phi_new(theta):
    """Symmetry-corrected variant of phi_limo3.

    Its third-order region, theta in [-2, -1/2] U [2/5, 5/2], is closed
    under theta -> 1/theta.
    """
    theta = np.asarray(theta, dtype=float)
    o3 = phi_o3(theta)
    inner = np.minimum(np.minimum(2.0 * theta, o3), 1.5)
    return np.maximum(0.0, np.minimum(o3, np.maximum(-theta, inner)))


# ---------------------------------------------------------------------------
# two-parameter form

def two_param(phi: RatioLimiter, s) -> np.ndarray:
    """phi(delta_minus / delta_plus) * delta_plus, zero on a vanishing delta_plus."""
    dm = np.asarray(s[0], dtype=float)
    dp = np.asarray(s[1], dtype=float)
    zero = np.abs(dp) <= ZERO_SLOPE_TOL * np.maximum(1.0, np.abs(dm))
    safe_dp = np.where(zero, 1.0, dp)
    out = np.where(zero, 0.0, phi(dm / safe_dp) * safe_dp)
    return out[()] if out.ndim == 0 else out


def tilde_phi_o3(s) -> np.ndarray:
    dm = np.asarray(s[0], dtype=float)
    dp = np.asarray(s[1], dtype=float)
    return (2.0 * dp + dm) / 3.0


class Norm(str, enum.Enum):
    L2 = "l2"
    L1 = "l1"


@dataclass(frozen=True)
class SwitchConfig:
    """Parameters of the smooth-extremum switch.

    ``alpha`` bounds |u0''| on the smooth part of the initial data.  The
    constant ``c`` follows from the norm: sqrt(5/2) for L2, 2 for L1.
    """

    alpha: float
    epsilon: float = DEFAULT_EPSILON
    norm: Norm = Norm.L2

    def __post_init__(self):
        object.__setattr__(self, "norm", Norm(self.norm))
        if not (np.isfinite(self.alpha) and self.alpha >= 0):
            raise ValueError(f"alpha must be finite and >= 0, got {self.alpha}")
        if not 0 < self.epsilon <= 0.1:
            raise ValueError(f"epsilon must lie in (0, 0.1], got {self.epsilon}")

    @property
    def c(self) -> float:
        return float(np.sqrt(2.5)) if self.norm is Norm.L2 else 2.0


def eta(s, cfg: SwitchConfig, dx: float):
    """Slope magnitude scaled by c * alpha * dx**2; < 1 flags a smooth extremum.

    With alpha = 0 any nonzero slope gives +inf and a flat stencil gives 0.
    """
    if not dx > 0:
        raise ValueError(f"dx must be positive, got {dx}")
    dm = np.asarray(s[0], dtype=float)
    dp = np.asarray(s[1], dtype=float)
    if cfg.norm is Norm.L2:
        size = np.hypot(dm, dp)
    else:
        size = np.abs(dm) + np.abs(dp)
    scale = cfg.c * cfg.alpha * dx * dx
    if scale > 0:
        out = size / scale
    else:
        out = np.where(size > 0, np.inf, 0.0)
    out = np.asarray(out, dtype=float)
    return out[()] if out.ndim == 0 else out


def tilde_phi_new(s) -> np.ndarray:
    return two_param(phi_new, s)


def tilde_phi_comb(s, cfg: SwitchConfig, dx: float) -> np.ndarray:
    """Full third order where eta < 1 - eps, phi_new where eta > 1 + eps.

    Inside the band the two are blended linearly in eta so that the result
    is continuous across both band edges.
    """
    e = eta(s, cfg, dx)
    o3 = tilde_phi_o3(s)
    new = tilde_phi_new(s)
    eps = cfg.epsilon
    with np.errstate(invalid="ignore"):
        w = np.clip((1.0 + eps - e) / (2.0 * eps), 0.0, 1.0)
    blend = w * o3 + (1.0 - w) * new
    out = np.where(e < 1.0 - eps, o3, np.where(e > 1.0 + eps, new, blend))
    return out[()] if out.ndim == 0 else out


# ---------------------------------------------------------------------------
# tagged limiter choice

class LimiterKind(str, enum.Enum):
    CENTRAL2 = "central2"
    O3 = "o3"
    AS = "as"
    LIMO3 = "limo3"
    NEW = "new"
    COMB = "comb"


_RATIO_FORMS = {
    LimiterKind.CENTRAL2: phi_second_order,
    LimiterKind.LIMO3: phi_limo3,
    LimiterKind.NEW: phi_new,
}


@dataclass(frozen=True)
class LimiterSpec:
    kind: LimiterKind
    q: float = DEFAULT_Q
    switch: Optional[SwitchConfig] = None

    def __post_init__(self):
        object.__setattr__(self, "kind", LimiterKind(self.kind))
        if self.kind is LimiterKind.AS and not self.q > 0:
            raise ValueError(f"q must be positive, got {self.q}")
        if self.kind is LimiterKind.COMB and not isinstance(self.switch, SwitchConfig):
            raise ValueError("combined limiter needs a SwitchConfig")

    @classmethod
    def combined(cls, alpha: float, epsilon: float = DEFAULT_EPSILON, norm="l2"):
        return cls(LimiterKind.COMB, switch=SwitchConfig(alpha, epsilon, norm))

    @property
    def label(self) -> str:
        if self.kind is LimiterKind.AS:
            return f"as(q={self.q!r})"
        if self.kind is LimiterKind.COMB:
            sw = self.switch
            return f"comb(alpha={sw.alpha!r},eps={sw.epsilon!r},{sw.norm.value})"
        return self.kind.value

    def ratio_function(self) -> Optional[RatioLimiter]:
        """The phi(theta) behind this spec, or None for the combined limiter."""
        if self.kind is LimiterKind.AS:
            q = self.q
            return lambda theta: phi_as(theta, q)
        if self.kind is LimiterKind.O3:
            return phi_o3
        return _RATIO_FORMS.get(self.kind)

    def slope(self, s, dx: float) -> np.ndarray:
        """Two-parameter limited increment phi~(delta_minus, delta_plus)."""
        if self.kind is LimiterKind.O3:
            return tilde_phi_o3(s)
        if self.kind is LimiterKind.COMB:
            return tilde_phi_comb(s, self.switch, dx)
        return two_param(self.ratio_function(), s)
