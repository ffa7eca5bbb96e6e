"""Asymptotic rate bounds: q-ary entropy, the MRRW-type rate bound for
constant-weight codes, and the optimized list-decoding rate bound.

The optimized bound is an infimum over ``0 <= sigma < delta`` and
``0 <= omega < 1``. It is approximated by a grid scan followed by coordinate
golden-section refinement; every reported value is the objective at an
evaluated feasible point, so it is itself a valid upper bound.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy.special import xlogy

from .errors import ParameterError

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class OptimizerConfig:
    grid: int = 200
    arg_tol: float = 1e-9
    value_tol: float = 1e-10
    boundary_eps: float = 1e-9
    max_passes: int = 50

    def __post_init__(self):
        if self.grid < 2:
            raise ParameterError("grid needs at least two points per axis")
        if min(self.arg_tol, self.value_tol, self.boundary_eps) <= 0:
            raise ParameterError("tolerances must be positive")


@dataclass(frozen=True)
class RatePoint:
    delta: float
    q: int
    value: float
    sigma_opt: float
    omega_opt: float


def q_ary_entropy(q: int, x):
    """``H_q(x)``, equal to 1 on the plateau ``x > 1 - 1/q``. Accepts arrays."""
    if q < 2:
        raise ParameterError(f"q must be >= 2, got {q}")
    arr = np.asarray(x, dtype=float)
    if np.any((arr < 0) | (arr > 1)):
        raise ParameterError("entropy argument outside [0, 1]")
    lq = math.log(q)
    h = (arr * math.log(q - 1) - xlogy(arr, arr) - xlogy(1 - arr, 1 - arr)) / lq
    out = np.where(arr > 1 - 1 / q, 1.0, h)
    return float(out) if out.ndim == 0 else out


def rlp(delta, omega):
    """Rate bound for binary constant-weight codes of relative distance
    ``delta`` and relative weight ``omega``; zero once
    ``delta >= 2 omega (1 - omega)``. Accepts arrays."""
    d = np.asarray(delta, dtype=float)
    w = np.asarray(omega, dtype=float)
    if np.any((d < 0) | (d > 1) | (w < 0) | (w > 1)):
        raise ParameterError("rlp arguments must lie in [0, 1]")
    spread = 2 * w * (1 - w)
    # clamps only absorb round-off next to the branch boundary
    inner = np.maximum(4 * w * (1 - w) - d * (2 - d), 0.0)
    gap = np.sqrt(inner) - d
    outer = np.clip(1 - gap * gap, 0.0, 1.0)
    x = np.clip(0.5 * (1 - np.sqrt(outer)), 0.0, 0.5)
    h = (-xlogy(x, x) - xlogy(1 - x, 1 - x)) / math.log(2)
    out = np.where(d >= spread, 0.0, h)
    return float(out) if out.ndim == 0 else out


def yasunaga_asymptotic(q: int, delta):
    """``(1 - H_q(delta)) / (1 - delta)``, clamped at 0."""
    d = np.asarray(delta, dtype=float)
    out = np.maximum((1 - q_ary_entropy(q, d)) / (1 - d), 0.0)
    return float(out) if out.ndim == 0 else out


def lp_objective(q: int, delta, sigma, omega):
    """The quantity minimized by :func:`lp_asymptotic`:
    ``(1-sigma)/(1-omega) * (1 - H_q(omega) + rlp(2(delta-sigma)(1-omega)/(1-sigma), omega) / log2 q)``.
    """
    sigma = np.asarray(sigma, dtype=float)
    omega = np.asarray(omega, dtype=float)
    rel = 2 * (delta - sigma) * (1 - omega) / (1 - sigma)
    inner = 1 - q_ary_entropy(q, omega) + rlp(np.clip(rel, 0.0, 1.0), omega) / math.log2(q)
    out = (1 - sigma) / (1 - omega) * inner
    return float(out) if out.ndim == 0 else out


def golden_section(f, lo: float, hi: float, tol: float) -> tuple[float, float]:
    """Minimize a unimodal ``f`` on ``[lo, hi]``; returns ``(x, f(x))``."""
    a, b = lo, hi
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
    return (c, fc) if fc <= fd else (d, fd)


def lp_asymptotic(q: int, delta: float, cfg: OptimizerConfig = OptimizerConfig()) -> RatePoint:
    if not 0 < delta < 1:
        raise ParameterError(f"delta must lie in (0, 1), got {delta}")
    eps = cfg.boundary_eps
    sig_hi = delta - eps
    om_hi = 1 - eps
    sigmas = np.linspace(0.0, sig_hi, cfg.grid)
    omegas = np.linspace(0.0, om_hi, cfg.grid)
    values = lp_objective(q, delta, sigmas[:, None], omegas[None, :])

    best_sigma, best_omega = 0.0, float(delta)
    best = lp_objective(q, delta, best_sigma, best_omega)
    k = int(np.argmin(values))  # first minimum in row-major order
    i, j = divmod(k, cfg.grid)
    if values[i, j] < best:
        best, best_sigma, best_omega = float(values[i, j]), float(sigmas[i]), float(omegas[j])

    # coordinate passes within one grid cell of the incumbent
    h_sig = sig_hi / (cfg.grid - 1)
    h_om = om_hi / (cfg.grid - 1)
    for _ in range(cfg.max_passes):
        start = best
        lo, hi = max(0.0, best_sigma - h_sig), min(sig_hi, best_sigma + h_sig)
        s, v = golden_section(lambda x: lp_objective(q, delta, x, best_omega), lo, hi, cfg.arg_tol)
        moved = 0.0
        if v < best:
            moved, best, best_sigma = abs(s - best_sigma), v, s
        lo, hi = max(0.0, best_omega - h_om), min(om_hi, best_omega + h_om)
        w, v = golden_section(lambda x: lp_objective(q, delta, best_sigma, x), lo, hi, cfg.arg_tol)
        if v < best:
            moved, best, best_omega = max(moved, abs(w - best_omega)), v, w
        if start - best <= cfg.value_tol or moved <= cfg.arg_tol:
            break
    return RatePoint(float(delta), q, max(best, 0.0), best_sigma, best_omega)


def entropy_slope_check(q: int, delta: float, step: float = 1e-5) -> tuple[float, float]:
    """Slope of ``(1 - H_q(w)) / (1 - w)`` at ``w = delta``: the closed form
    ``log_q(q delta / (q-1)) / (1-delta)^2`` and a central difference."""
    if not 0 < delta < 1 - 1 / q:
        raise ParameterError(f"need 0 < delta < 1 - 1/q, got {delta}")
    analytic = math.log(q * delta / (q - 1), q) / (1 - delta) ** 2

    def f(w):
        return (1 - q_ary_entropy(q, w)) / (1 - w)

    numeric = (f(delta + step) - f(delta - step)) / (2 * step)
    return analytic, numeric


@dataclass(frozen=True)
class CurveRow:
    delta: float
    yasunaga: float
    lp: float
    sigma_opt: float
    omega_opt: float


def rate_curve(q: int, deltas: Iterable[float], cfg: OptimizerConfig = OptimizerConfig()) -> list[CurveRow]:
    rows = []
    for delta in sorted(float(x) for x in deltas):
        point = lp_asymptotic(q, delta, cfg)
        rows.append(
            CurveRow(delta, yasunaga_asymptotic(q, delta), point.value, point.sigma_opt, point.omega_opt)
        )
    return rows


CSV_HEADER = ("delta", "yasunaga", "lp", "sigma_opt", "omega_opt")


def curve_to_csv(rows: Sequence[CurveRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in rows:
        writer.writerow([f"{v:.12g}" for v in (r.delta, r.yasunaga, r.lp, r.sigma_opt, r.omega_opt)])
    return buf.getvalue()


def curve_from_csv(text: str) -> list[CurveRow]:
    reader = csv.reader(io.StringIO(text))
    header = tuple(next(reader))
    if header != CSV_HEADER:
        raise ParameterError(f"unexpected CSV header {header}")
    return [CurveRow(*(float(v) for v in row)) for row in reader if row]
