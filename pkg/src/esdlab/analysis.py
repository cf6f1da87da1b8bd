"""Disentanglement-time extraction and parameter sweeps.

The disentanglement time is the first instant where the concurrence reaches
zero with the pre-clamp K function negative immediately after; every channel
in this package decays without revivals, so "first zero" and "stays zero"
coincide (a post-root check warns otherwise).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace

import numpy as np

from .adiabatic import (
    AdiabaticParams,
    adiabatic_concurrence,
    esd_time_dephasing,
    esd_time_optimal,
)
from .constants import BELL_VIOLATION_THRESHOLD, ESD_RELATIVE_TOL
from .errors import ParameterError
from .markov import QuantumNoiseParams, interplay_concurrence
from .states import EWLParams

__all__ = [
    "ConcurrenceCurve",
    "ESDResult",
    "SweepRow",
    "find_esd_time",
    "find_crossing_time",
    "sweep",
]


@dataclass(frozen=True)
class ConcurrenceCurve:
    """Sampled concurrence with optional per-point standard errors."""

    times: np.ndarray
    values: np.ndarray
    stderr: np.ndarray | None = None

    def __post_init__(self) -> None:
        times = np.asarray(self.times, dtype=float)
        values = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "values", values)
        if self.stderr is not None:
            object.__setattr__(self, "stderr", np.asarray(self.stderr, dtype=float))
        if times.ndim != 1 or times.shape != values.shape:
            raise ParameterError("times and values must be matching 1-d arrays")
        if times.size < 2 or np.any(np.diff(times) <= 0.0):
            raise ParameterError("times must be strictly increasing")
        if values.min() < -1e-9 or values.max() > 1.0 + 1e-9:
            raise ParameterError("concurrence samples must lie in [0, 1]")


@dataclass(frozen=True)
class ESDResult:
    """Outcome of a zero/level search on a concurrence curve.

    ``time is None`` means the curve never reaches the target by t_max.
    """

    time: float | None
    bracket: tuple[float, float] | None
    method: str
    never_entangled: bool = False
    note: str = ""

    @property
    def is_infinite(self) -> bool:
        return self.time is None


def _evaluate(c, grid: np.ndarray) -> np.ndarray:
    try:
        vals = np.asarray(c(grid), dtype=float)
        if vals.shape == grid.shape:
            return vals
    except (TypeError, ValueError):
        pass
    return np.array([float(c(t)) for t in grid])


def _bisect_first_zero(c, lo: float, hi: float, tol: float) -> tuple[float, float, float]:
    # invariant: c(lo) > 0 >= c(hi); the curve is clamped at zero past the
    # root, so standard bisection homes in on the first touch point
    while hi - lo > tol * hi:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if float(c(mid)) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi), lo, hi


def find_crossing_time(
    c,
    t_max: float,
    level: float = 0.0,
    tol: float = ESD_RELATIVE_TOL,
    n_grid: int = 10_000,
) -> ESDResult:
    """First time a concurrence function or curve drops to ``level``.

    Callables are scanned on a dense logarithmic grid (plus t=0) and the
    first sign-change bracket is refined by bisection to relative tolerance
    ``tol``; sampled curves are interpolated linearly, with the
    mean +/- 2 stderr crossings reported as the bracket when errors are
    available.
    """
    if isinstance(c, ConcurrenceCurve):
        return _crossing_from_curve(c, level)
    if t_max <= 0.0:
        raise ParameterError("t_max must be positive")
    g = c if level == 0.0 else (lambda t: np.asarray(c(t)) - level)
    v0 = float(np.asarray(g(0.0)))
    if level == 0.0 and v0 < -1e-12:
        raise ParameterError("concurrence must start non-negative")
    if v0 <= 0.0:
        return ESDResult(
            time=0.0,
            bracket=(0.0, 0.0),
            method="bisection",
            never_entangled=level == 0.0,
            note="" if level == 0.0 else "starts at or below the level",
        )
    grid = np.concatenate([[0.0], np.geomspace(t_max * 1e-12, t_max, n_grid)])
    vals = _evaluate(g, grid)
    below = np.nonzero(vals <= 0.0)[0]
    if below.size == 0:
        return ESDResult(time=None, bracket=None, method="bisection")
    i = int(below[0])
    root, lo, hi = _bisect_first_zero(g, grid[i - 1], grid[i], tol)
    if level == 0.0:
        probe = min(t_max, root * (1.0 + 1e3 * tol))
        if probe > hi and float(np.asarray(g(probe))) > 0.0:
            warnings.warn(
                "concurrence recovers right after its first zero; reported "
                "time is the first touch, not a permanent loss",
                stacklevel=2,
            )
    return ESDResult(time=root, bracket=(lo, hi), method="bisection")


def find_esd_time(
    c, t_max: float, tol: float = ESD_RELATIVE_TOL, n_grid: int = 10_000
) -> ESDResult:
    """Disentanglement time: first zero of the concurrence. See
    :func:`find_crossing_time`."""
    return find_crossing_time(c, t_max, level=0.0, tol=tol, n_grid=n_grid)


def _interp_crossing(times, vals, level) -> float | None:
    below = np.nonzero(vals <= level)[0]
    if below.size == 0:
        return None
    i = int(below[0])
    if i == 0:
        return float(times[0])
    t0, t1 = times[i - 1], times[i]
    v0, v1 = vals[i - 1], vals[i]
    if v0 == v1:
        return float(t1)
    return float(t0 + (v0 - level) * (t1 - t0) / (v0 - v1))


def _crossing_from_curve(curve: ConcurrenceCurve, level: float) -> ESDResult:
    t = _interp_crossing(curve.times, curve.values, level)
    if t is None:
        return ESDResult(time=None, bracket=None, method="grid")
    if t == curve.times[0] and curve.values[0] <= level:
        return ESDResult(
            time=float(curve.times[0]),
            bracket=(float(curve.times[0]),) * 2,
            method="grid",
            never_entangled=level == 0.0,
        )
    if curve.stderr is not None:
        lo = _interp_crossing(curve.times, curve.values - 2.0 * curve.stderr, level)
        hi = _interp_crossing(curve.times, curve.values + 2.0 * curve.stderr, level)
        bracket = (
            lo if lo is not None else float(curve.times[0]),
            hi if hi is not None else float(curve.times[-1]),
        )
    else:
        i = int(np.nonzero(curve.values <= level)[0][0])
        bracket = (float(curve.times[i - 1]), float(curve.times[i]))
    return ESDResult(time=t, bracket=bracket, method="grid")


# ---------------------------------------------------------------------------
# sweeps


@dataclass(frozen=True)
class SweepRow:
    """Disentanglement and Bell-threshold times for one grid value."""

    value: float
    esd_phi: ESDResult
    esd_psi: ESDResult
    bell_phi: ESDResult
    bell_psi: ESDResult


def _with_value(state: EWLParams, over: str, value: float) -> EWLParams:
    if over == "r":
        return replace(state, r=float(value))
    if value < 0.0 or value > 1.0:
        raise ParameterError("a2 grid values must lie in [0, 1]")
    return replace(state, a=math.sqrt(value))


def _adiabatic_closed_form(state, ad_a, ad_b) -> ESDResult | None:
    symmetric = (
        ad_a.theta == ad_b.theta
        and ad_a.sigma == ad_b.sigma
        and ad_a.omega == ad_b.omega
    )
    if not symmetric:
        return None
    if abs(ad_a.theta - math.pi / 2.0) <= 1e-12:
        closed = esd_time_optimal(state, ad_a.sigma, ad_a.omega)
    elif ad_a.theta == 0.0:
        closed = esd_time_dephasing(state, ad_a.sigma)
    else:
        return None
    return ESDResult(
        time=closed.time,
        bracket=None,
        method="closed_form",
        never_entangled=closed.never_entangled,
        note=closed.note,
    )


def sweep(
    over: str,
    grid,
    state: EWLParams,
    ad_a: AdiabaticParams,
    ad_b: AdiabaticParams,
    qn: QuantumNoiseParams | None = None,
    channel: str = "adiabatic",
    t_max: float = 0.0,
    sim=None,
    n_workers: int = 1,
) -> list[SweepRow]:
    """ESD and Bell-threshold (C = 1/sqrt2) times over a parameter grid.

    ``over`` selects the swept quantity ("r" or "a2"); all other parameters
    stay fixed. ``channel`` is "adiabatic" (low-frequency noise only,
    flavor independent, closed forms where available), "interplay" (both
    noises through the composed channel) or "monte_carlo" (trajectory
    averages; requires ``sim``). Rows come back in grid order.
    """
    if over not in ("r", "a2"):
        raise ParameterError(f"sweep variable must be 'r' or 'a2', got {over!r}")
    if channel not in ("adiabatic", "interplay", "monte_carlo"):
        raise ParameterError(f"unknown channel {channel!r}")
    if channel == "interplay" and qn is None:
        raise ParameterError("interplay channel needs QuantumNoiseParams")
    if channel == "monte_carlo" and sim is None:
        raise ParameterError("monte_carlo channel needs a SimConfig")
    if t_max <= 0.0:
        raise ParameterError("t_max must be positive")
    grid = [float(v) for v in grid]
    if not grid:
        raise ParameterError("sweep grid must not be empty")

    rows = []
    for value in grid:
        s = _with_value(state, over, value)
        if channel == "adiabatic":
            curve_fn = lambda t, s=s: adiabatic_concurrence(t, ad_a, ad_b, s)
            esd = _adiabatic_closed_form(s, ad_a, ad_b) or find_esd_time(
                curve_fn, t_max
            )
            bell = find_crossing_time(curve_fn, t_max, BELL_VIOLATION_THRESHOLD)
            rows.append(SweepRow(value, esd, esd, bell, bell))
        elif channel == "interplay":
            results = {}
            for flavor in ("phi", "psi"):
                sf = replace(s, flavor=flavor)
                fn = lambda t, sf=sf: interplay_concurrence(t, sf, ad_a, ad_b, qn)
                results[flavor] = (
                    find_esd_time(fn, t_max),
                    find_crossing_time(fn, t_max, BELL_VIOLATION_THRESHOLD),
                )
            rows.append(
                SweepRow(
                    value,
                    results["phi"][0],
                    results["psi"][0],
                    results["phi"][1],
                    results["psi"][1],
                )
            )
        else:
            from .states import ewl_state
            from .stochastic import monte_carlo_concurrence

            results = {}
            for flavor in ("phi", "psi"):
                sf = replace(s, flavor=flavor)
                mc = monte_carlo_concurrence(ewl_state(sf), sim, n_workers=n_workers)
                curve = ConcurrenceCurve(mc.times, mc.concurrence, mc.stderr)
                results[flavor] = (
                    find_esd_time(curve, t_max),
                    find_crossing_time(curve, t_max, BELL_VIOLATION_THRESHOLD),
                )
            rows.append(
                SweepRow(
                    value,
                    results["phi"][0],
                    results["psi"][0],
                    results["phi"][1],
                    results["psi"][1],
                )
            )
    return rows
