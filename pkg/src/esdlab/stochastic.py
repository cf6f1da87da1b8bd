"""Telegraph-noise Monte Carlo engine.

Low-frequency noise is synthesized as a sum of symmetric random telegraph
processes. Each fluctuator holds a switching rate gamma (per direction, so
its autocorrelation decays as exp(-2 gamma |tau|)) and a coupling amplitude;
rates drawn log-uniformly over a wide band give the familiar 1/f spectrum

    S(omega) = pi sigma^2 / (ln(gamma_max/gamma_min) omega)

(two-sided, angular-frequency convention) inside the band. Trajectories are
propagated exactly: between switch events the Hamiltonian is constant and
the step propagator is an exact matrix exponential, so the only errors are
statistical.

Determinism: every random quantity derives from a root seed through
``numpy.random.SeedSequence`` spawn keys indexed by trajectory (or
realization) number, and reductions run over fixed-size chunks in index
order, so results are bit-identical regardless of worker count.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

import numpy as np
from scipy import signal as _signal

from .adiabatic import AdiabaticParams
from .constants import ENSEMBLE_VARIANCE_RTOL
from .errors import ParameterError
from .markov import QuantumNoiseParams
from .qmath import SIGMA_X, SIGMA_Z, wootters_concurrence

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(f):
            return f

        return wrap if not (args and callable(args[0])) else args[0]


__all__ = [
    "FluctuatorEnsemble",
    "RtnPaths",
    "SimConfig",
    "TrajectoryResult",
    "MonteCarloResult",
    "PsdEstimate",
    "OneOverFFit",
    "sample_ensemble",
    "rtn_paths",
    "noise_segments",
    "sampled_noise",
    "evolve_trajectory",
    "monte_carlo_concurrence",
    "psd_estimate",
    "fit_one_over_f",
]

# Trajectories are reduced in fixed chunks of this size; the chunk grid is a
# property of the configuration, not of the execution, which is what makes
# the averages independent of the worker count.
CHUNK_SIZE = 32

_EYE2 = np.eye(2, dtype=complex)


def _rng(seed) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


@dataclass(frozen=True)
class FluctuatorEnsemble:
    """A bath realization: switching rates, couplings and current signs."""

    rates: np.ndarray
    couplings: np.ndarray
    initial_states: np.ndarray
    gamma_min: float
    gamma_max: float
    sigma: float

    def __post_init__(self) -> None:
        rates = np.asarray(self.rates, dtype=float)
        couplings = np.asarray(self.couplings, dtype=float)
        states = np.asarray(self.initial_states, dtype=float)
        object.__setattr__(self, "rates", rates)
        object.__setattr__(self, "couplings", couplings)
        object.__setattr__(self, "initial_states", states)
        if not rates.shape == couplings.shape == states.shape:
            raise ParameterError("rates, couplings and initial_states must align")
        if rates.size and (rates.min() < self.gamma_min - 1e-12 * self.gamma_min
                           or rates.max() > self.gamma_max * (1 + 1e-12)):
            raise ParameterError("switching rates leave the [gamma_min, gamma_max] band")
        if states.size and not np.all(np.abs(states) == 1.0):
            raise ParameterError("initial fluctuator states must be +1 or -1")
        var = float(np.sum(couplings**2))
        target = self.sigma**2
        if target == 0.0:
            ok = var == 0.0
        else:
            ok = abs(var - target) <= ENSEMBLE_VARIANCE_RTOL * target
        if not ok:
            raise ParameterError(
                f"coupling variance {var:.6e} does not realize sigma^2 = {target:.6e}"
            )

    @property
    def n(self) -> int:
        return int(self.rates.size)


def sample_ensemble(
    n: int, gamma_min: float, gamma_max: float, sigma: float, rng_seed
) -> FluctuatorEnsemble:
    """Draw an ensemble: log-uniform rates, equal couplings sigma/sqrt(n).

    Initial signs are equiprobable (the stationary distribution of a
    symmetric telegraph process). Deterministic for a given seed.
    """
    if n < 1:
        raise ParameterError(f"need at least one fluctuator, got {n}")
    if not 0.0 < gamma_min < gamma_max:
        raise ParameterError(
            f"need 0 < gamma_min < gamma_max, got [{gamma_min}, {gamma_max}]"
        )
    rng = _rng(rng_seed)
    rates = gamma_min * (gamma_max / gamma_min) ** rng.random(n)
    signs = rng.integers(0, 2, n) * 2.0 - 1.0
    couplings = np.full(n, sigma / math.sqrt(n))
    return FluctuatorEnsemble(
        rates=rates,
        couplings=couplings,
        initial_states=signs,
        gamma_min=gamma_min,
        gamma_max=gamma_max,
        sigma=sigma,
    )


@dataclass(frozen=True)
class RtnPaths:
    """Switch times of every fluctuator of one ensemble over [0, t_max]."""

    ensemble: FluctuatorEnsemble
    t_max: float
    switch_times: tuple


def rtn_paths(ens: FluctuatorEnsemble, t_max: float, rng_seed) -> RtnPaths:
    """Draw Poisson switch times for each fluctuator (rate = its gamma)."""
    if t_max <= 0.0:
        raise ParameterError(f"t_max must be positive, got {t_max}")
    rng = _rng(rng_seed)
    times = []
    for gamma in ens.rates:
        k = rng.poisson(gamma * t_max)
        times.append(np.sort(rng.random(k)) * t_max if k else np.empty(0))
    return RtnPaths(ensemble=ens, t_max=t_max, switch_times=tuple(times))


def noise_segments(paths: RtnPaths) -> tuple[np.ndarray, np.ndarray]:
    """Piecewise-constant X(t) as (edges, values).

    ``X(t) = values[i]`` for ``edges[i] <= t < edges[i+1]``; the first edge
    is 0 and the last segment extends to t_max.
    """
    ens = paths.ensemble
    x0 = float(np.sum(ens.couplings * ens.initial_states))
    t_all = []
    jump_all = []
    for v, s0, times in zip(ens.couplings, ens.initial_states, paths.switch_times):
        if times.size == 0:
            continue
        # value after the i-th switch is v*s0*(-1)^i, so the i-th jump is
        # 2*v*s0*(-1)^i
        t_all.append(times)
        jump_all.append(2.0 * v * s0 * (-1.0) ** np.arange(1, times.size + 1))
    if not t_all:
        return np.array([0.0]), np.array([x0])
    t_merged = np.concatenate(t_all)
    order = np.argsort(t_merged, kind="stable")
    edges = np.concatenate([[0.0], t_merged[order]])
    values = x0 + np.concatenate([[0.0], np.cumsum(np.concatenate(jump_all)[order])])
    return edges, values


def sampled_noise(paths: RtnPaths, times) -> np.ndarray:
    """Evaluate X(t) on a grid of sample times."""
    edges, values = noise_segments(paths)
    idx = np.searchsorted(edges, np.asarray(times, dtype=float), side="right") - 1
    return values[idx]


# ---------------------------------------------------------------------------
# trajectory propagation


@dataclass(frozen=True)
class SimConfig:
    """Everything a Monte Carlo run needs besides the initial state."""

    qubit_a: AdiabaticParams
    qubit_b: AdiabaticParams
    n_trajectories: int
    t_max: float
    n_samples: int
    seed: int
    coupling_g: float = 0.0
    n_fluctuators: int = 250
    quantum: QuantumNoiseParams | None = None

    def __post_init__(self) -> None:
        if self.n_trajectories < 1:
            raise ParameterError("n_trajectories must be at least 1")
        if self.t_max <= 0.0:
            raise ParameterError("t_max must be positive")
        if self.n_samples < 2:
            raise ParameterError("n_samples must be at least 2")
        if self.n_fluctuators < 1:
            raise ParameterError("n_fluctuators must be at least 1")


@dataclass(frozen=True)
class TrajectoryResult:
    """One noise realization: sampled conditional unitaries and states."""

    times: np.ndarray
    unitaries: np.ndarray  # (n_samples, 4, 4)
    states: np.ndarray     # (n_samples, 4, 4), U rho0 U^dagger

    def unitarity_defect(self) -> float:
        uu = np.einsum("kij,kil->kjl", self.unitaries.conj(), self.unitaries)
        return float(np.abs(uu - np.eye(4)).max())


def _pauli_step(w: float, v: float, taus: np.ndarray) -> np.ndarray:
    """Batched exp(-i (w sz + v sx) tau / 2), exactly unitary."""
    d = math.hypot(w, v)
    if d == 0.0:
        return np.broadcast_to(_EYE2, (taus.size, 2, 2)).copy()
    half = 0.5 * d * taus
    axis = (w * SIGMA_Z + v * SIGMA_X) / d
    return (
        np.cos(half)[:, None, None] * _EYE2
        - 1j * np.sin(half)[:, None, None] * axis
    )


def _segment_values(edges: np.ndarray, values: np.ndarray, t: float) -> float:
    return float(values[np.searchsorted(edges, t, side="right") - 1])


def evolve_trajectory(
    rho0: np.ndarray, paths_a: RtnPaths, paths_b: RtnPaths, cfg: SimConfig
) -> TrajectoryResult:
    """Propagate one noise realization exactly and sample it on a grid.

    The noise is piecewise constant, so between switch events the propagator
    is an exact matrix exponential: a tensor product of 2x2 rotations when
    the qubits are uncoupled, a diagonalized 4x4 exponential otherwise.
    """
    rho0 = np.asarray(rho0, dtype=complex)
    times = np.linspace(0.0, cfg.t_max, cfg.n_samples)
    edges_a, vals_a = noise_segments(paths_a)
    edges_b, vals_b = noise_segments(paths_b)
    brk = np.unique(np.concatenate([edges_a, edges_b, [0.0, cfg.t_max]]))
    brk = brk[brk <= cfg.t_max]
    if brk[-1] < cfg.t_max:
        brk = np.append(brk, cfg.t_max)

    qa, qb = cfg.qubit_a, cfg.qubit_b
    ca, sa = math.cos(qa.theta), math.sin(qa.theta)
    cb, sb = math.cos(qb.theta), math.sin(qb.theta)
    out = np.empty((cfg.n_samples, 4, 4), dtype=complex)

    coupled = cfg.coupling_g != 0.0
    if coupled:
        # the bath couples along the laboratory z axis; in each qubit's
        # eigenbasis that axis reads sin(theta) sx + cos(theta) sz
        axis_a = sa * SIGMA_X + ca * SIGMA_Z
        axis_b = sb * SIGMA_X + cb * SIGMA_Z
        h_int = -0.5 * cfg.coupling_g * np.kron(axis_a, axis_b)
        u_acc = np.eye(4, dtype=complex)
    else:
        ua_acc = _EYE2.copy()
        ub_acc = _EYE2.copy()

    for i in range(brk.size - 1):
        t0, t1 = brk[i], brk[i + 1]
        mid = 0.5 * (t0 + t1)
        xa = _segment_values(edges_a, vals_a, mid)
        xb = _segment_values(edges_b, vals_b, mid)
        k0 = int(np.searchsorted(times, t0, side="left")) if i else 0
        k1 = cfg.n_samples if i == brk.size - 2 else int(
            np.searchsorted(times, t1, side="left")
        )
        taus = times[k0:k1] - t0
        wa, va = qa.omega + ca * xa, sa * xa
        wb, vb = qb.omega + cb * xb, sb * xb
        if coupled:
            h = (
                0.5 * np.kron(wa * SIGMA_Z + va * SIGMA_X, _EYE2)
                + 0.5 * np.kron(_EYE2, wb * SIGMA_Z + vb * SIGMA_X)
                + h_int
            )
            lam, vec = np.linalg.eigh(h)
            if k1 > k0:
                phases = np.exp(-1j * lam[None, :] * taus[:, None])
                seg = (vec[None, :, :] * phases[:, None, :]) @ vec.conj().T
                out[k0:k1] = seg @ u_acc
            step = (vec * np.exp(-1j * lam * (t1 - t0))) @ vec.conj().T
            u_acc = step @ u_acc
        else:
            if k1 > k0:
                seg_a = _pauli_step(wa, va, taus) @ ua_acc
                seg_b = _pauli_step(wb, vb, taus) @ ub_acc
                out[k0:k1] = np.einsum("kab,kcd->kacbd", seg_a, seg_b).reshape(
                    -1, 4, 4
                )
            dt = np.array([t1 - t0])
            ua_acc = _pauli_step(wa, va, dt)[0] @ ua_acc
            ub_acc = _pauli_step(wb, vb, dt)[0] @ ub_acc

    states = out @ rho0 @ out.conj().transpose(0, 2, 1)
    return TrajectoryResult(times=times, unitaries=out, states=states)


# ---------------------------------------------------------------------------
# ensemble averaging


@dataclass(frozen=True)
class MonteCarloResult:
    """Averaged concurrence curve with batch-means error bars."""

    times: np.ndarray
    concurrence: np.ndarray
    stderr: np.ndarray
    rho_mean: np.ndarray
    n_trajectories: int


def _trajectory_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(2, index)))


def _resample_signs(ens: FluctuatorEnsemble, rng: np.random.Generator) -> FluctuatorEnsemble:
    return replace(ens, initial_states=rng.integers(0, 2, ens.n) * 2.0 - 1.0)


def _run_chunk(payload):
    rho0, cfg, ens_a, ens_b, start, stop = payload
    rho_sum = np.zeros((cfg.n_samples, 4, 4), dtype=complex)
    for i in range(start, stop):
        rng = _trajectory_rng(cfg.seed, i)
        a = rtn_paths(_resample_signs(ens_a, rng), cfg.t_max, rng)
        b = rtn_paths(_resample_signs(ens_b, rng), cfg.t_max, rng)
        rho_sum += evolve_trajectory(rho0, a, b, cfg).states
    chunk_mean = rho_sum / (stop - start)
    conc = np.array(
        [wootters_concurrence(r, validate=False) for r in chunk_mean]
    )
    return rho_sum, conc


def monte_carlo_concurrence(
    rho0: np.ndarray, cfg: SimConfig, n_workers: int = 1
) -> MonteCarloResult:
    """Average the conditional states over noise realizations.

    The ensemble average targets the density matrix (concurrence is not
    linear in rho); the reported curve is the concurrence of the averaged
    state, computed with the exact Wootters formula because finite averages
    retain small off-X residuals. ``stderr`` comes from batch means over the
    fixed reduction chunks.

    Fluctuator rates are drawn once from the configuration seed (a device
    realization); switch times and initial signs are redrawn per trajectory.
    Identical (seed, config) give bit-identical results for any
    ``n_workers``.
    """
    if cfg.quantum is not None:
        raise ParameterError(
            "the trajectory engine simulates low-frequency noise only; "
            "combine with the analytic quantum-noise channel instead"
        )
    rho0 = np.asarray(rho0, dtype=complex)
    ens_a = sample_ensemble(
        cfg.n_fluctuators,
        cfg.qubit_a.gamma_min,
        cfg.qubit_a.gamma_max,
        cfg.qubit_a.sigma,
        np.random.SeedSequence(entropy=cfg.seed, spawn_key=(0,)),
    )
    ens_b = sample_ensemble(
        cfg.n_fluctuators,
        cfg.qubit_b.gamma_min,
        cfg.qubit_b.gamma_max,
        cfg.qubit_b.sigma,
        np.random.SeedSequence(entropy=cfg.seed, spawn_key=(1,)),
    )
    bounds = list(range(0, cfg.n_trajectories, CHUNK_SIZE)) + [cfg.n_trajectories]
    payloads = [
        (rho0, cfg, ens_a, ens_b, bounds[i], bounds[i + 1])
        for i in range(len(bounds) - 1)
    ]
    if n_workers > 1 and len(payloads) > 1:
        with ProcessPoolExecutor(max_workers=n_workers) as pool:
            parts = list(pool.map(_run_chunk, payloads))
    else:
        parts = [_run_chunk(p) for p in payloads]

    rho_total = np.zeros((cfg.n_samples, 4, 4), dtype=complex)
    for rho_sum, _ in parts:  # fixed chunk order
        rho_total += rho_sum
    rho_mean = rho_total / cfg.n_trajectories
    conc = np.array([wootters_concurrence(r, validate=False) for r in rho_mean])
    chunk_conc = np.stack([c for _, c in parts])
    if chunk_conc.shape[0] > 1:
        stderr = chunk_conc.std(axis=0, ddof=1) / math.sqrt(chunk_conc.shape[0])
    else:
        stderr = np.zeros(cfg.n_samples)
    times = np.linspace(0.0, cfg.t_max, cfg.n_samples)
    return MonteCarloResult(
        times=times,
        concurrence=conc,
        stderr=stderr,
        rho_mean=rho_mean,
        n_trajectories=cfg.n_trajectories,
    )


# ---------------------------------------------------------------------------
# spectral estimation

# The acceptance-scale workload (N=250 over six decades, hundreds of
# periodogram averages) processes ~1e9 switch events; the jitted kernel keeps
# that inside the runtime budget. The numpy twin below draws from the same
# distributions and serves as fallback and cross-check.


@njit(cache=True)
def _sampled_sum_kernel(rates, couplings, dt, n_samples, seed):  # pragma: no cover
    np.random.seed(seed)
    delta = np.zeros(n_samples)
    base = 0.0
    inv_dt = 1.0 / dt
    horizon = (n_samples - 1) * dt
    for j in range(rates.shape[0]):
        gamma = rates[j]
        x = couplings[j] if np.random.random() < 0.5 else -couplings[j]
        base += x
        if gamma <= 0.0:
            continue
        scale = 1.0 / gamma
        # waiting times drawn inline (-log u is ~2x faster than the
        # library exponential here, and this loop sees ~1e9 events)
        t = -np.log(1.0 - np.random.random()) * scale
        while t <= horizon:
            b = int(t * inv_dt) + 1
            if b >= n_samples:
                break
            x = -x
            delta[b] += 2.0 * x
            t += -np.log(1.0 - np.random.random()) * scale
    out = np.empty(n_samples)
    acc = base
    for k in range(n_samples):
        acc += delta[k]
        out[k] = acc
    return out


def _sampled_sum_numpy(rates, couplings, dt, n_samples, rng):
    delta = np.zeros(n_samples)
    base = 0.0
    horizon = (n_samples - 1) * dt
    for gamma, v in zip(rates, couplings):
        x = v if rng.random() < 0.5 else -v
        base += x
        k = rng.poisson(gamma * horizon)
        if not k:
            continue
        tau = np.sort(rng.random(k)) * horizon
        bins = np.ceil(tau / dt).astype(np.int64)
        jumps = 2.0 * x * (-1.0) ** np.arange(1, k + 1)
        keep = bins < n_samples
        np.add.at(delta, bins[keep], jumps[keep])
    return base + np.cumsum(delta)


@dataclass(frozen=True)
class PsdEstimate:
    """Averaged periodogram of the summed telegraph signal.

    ``s_estimated`` and ``s_target`` are two-sided spectra in the
    angular-frequency convention (integrating over omega/2pi recovers the
    variance); ``s_target`` is the idealized 1/f law.
    """

    omega: np.ndarray
    s_estimated: np.ndarray
    s_target: np.ndarray
    gamma_min: float
    gamma_max: float
    sigma: float
    n_realizations: int
    sample_hz: float
    t_max: float


def psd_estimate(
    ens: FluctuatorEnsemble,
    t_max: float,
    n_realizations: int,
    rng_seed,
    sample_hz: float = 2.0e6,
    engine: str = "auto",
) -> PsdEstimate:
    """Estimate the ensemble power spectrum by periodogram averaging.

    Each realization redraws initial signs and switch times (quenched rates,
    stationary initial conditions), samples the summed signal at
    ``sample_hz`` and accumulates a Hann-windowed, mean-removed periodogram.

    Parameters
    ----------
    ens : FluctuatorEnsemble
        The bath whose spectrum is wanted.
    t_max : float
        Segment duration in seconds; sets the frequency resolution.
    n_realizations : int
        Number of averaged periodograms; at least 100.
    rng_seed : int or SeedSequence
        Root seed; realization k derives its stream from spawn key (k,).
    sample_hz : float
        Sampling rate. Choose at least ~2x the fastest switching rate so
        aliased tail power stays negligible in the band of interest.
    engine : {"auto", "numba", "numpy"}
        Signal generator. "auto" prefers the jitted kernel.
    """
    if n_realizations < 100:
        raise ParameterError("need at least 100 realizations for a stable average")
    if t_max <= 0.0 or sample_hz <= 0.0:
        raise ParameterError("t_max and sample_hz must be positive")
    if engine not in ("auto", "numba", "numpy"):
        raise ParameterError(f"unknown engine {engine!r}")
    use_numba = engine == "numba" or (engine == "auto" and HAVE_NUMBA)
    dt = 1.0 / sample_hz
    # round the segment up to an FFT-friendly length; awkward sizes cost
    # more in the transform than in the signal generation
    from scipy.fft import next_fast_len

    n_samples = next_fast_len(max(4, int(round(t_max * sample_hz))))
    t_max = n_samples * dt
    root = np.random.SeedSequence(rng_seed)
    children = root.spawn(n_realizations)
    acc = None
    freqs = None
    for child in children:
        if use_numba:
            seed = int(child.generate_state(1, dtype=np.uint32)[0])
            x = _sampled_sum_kernel(ens.rates, ens.couplings, dt, n_samples, seed)
        else:
            x = _sampled_sum_numpy(
                ens.rates, ens.couplings, dt, n_samples, np.random.default_rng(child)
            )
        f, pxx = _signal.periodogram(
            x, fs=sample_hz, window="hann", detrend="constant", scaling="density"
        )
        if acc is None:
            freqs, acc = f, pxx
        else:
            acc += pxx
    acc /= n_realizations
    keep = freqs > 0.0
    omega = 2.0 * math.pi * freqs[keep]
    # one-sided Hz density -> two-sided angular density
    s_est = acc[keep] / 2.0
    log_ratio = math.log(ens.gamma_max / ens.gamma_min) if ens.gamma_max > ens.gamma_min else math.nan
    s_target = math.pi * ens.sigma**2 / (log_ratio * omega)
    return PsdEstimate(
        omega=omega,
        s_estimated=s_est,
        s_target=s_target,
        gamma_min=ens.gamma_min,
        gamma_max=ens.gamma_max,
        sigma=ens.sigma,
        n_realizations=n_realizations,
        sample_hz=sample_hz,
        t_max=t_max,
    )


@dataclass(frozen=True)
class OneOverFFit:
    """Log-log fit of an estimated spectrum inside the 1/f band."""

    slope: float
    amplitude_ratio: float
    band_omega: tuple[float, float]
    n_points: int


def fit_one_over_f(est: PsdEstimate, points_per_decade: int = 24) -> OneOverFFit:
    """Fit slope and amplitude over the trustworthy band [10 gm, gM/10] (Hz).

    The band must span at least one decade, i.e. gamma_max/gamma_min >= 1000.
    The amplitude is compared against the 1/f law at the geometric band
    center, where band-edge roll-off is negligible.
    """
    if est.gamma_max / est.gamma_min < 1000.0:
        raise ParameterError(
            "rate band too narrow for a decade of 1/f fit: need "
            "gamma_max/gamma_min >= 1000"
        )
    f_lo, f_hi = 10.0 * est.gamma_min, est.gamma_max / 10.0
    w_lo, w_hi = 2.0 * math.pi * f_lo, 2.0 * math.pi * f_hi
    sel = (est.omega >= w_lo) & (est.omega <= w_hi)
    if sel.sum() < 8:
        raise ParameterError("too few spectral points inside the fit band")
    w = est.omega[sel]
    s = est.s_estimated[sel]
    # average into log-spaced bins so each decade carries equal weight
    n_bins = max(8, int(points_per_decade * math.log10(w_hi / w_lo)))
    bin_edges = np.geomspace(w_lo, w_hi, n_bins + 1)
    idx = np.clip(np.digitize(w, bin_edges) - 1, 0, n_bins - 1)
    counts = np.bincount(idx, minlength=n_bins)
    ok = counts > 0
    w_binned = np.bincount(idx, weights=w, minlength=n_bins)[ok] / counts[ok]
    s_binned = np.bincount(idx, weights=s, minlength=n_bins)[ok] / counts[ok]
    slope, intercept = np.polyfit(np.log(w_binned), np.log(s_binned), 1)
    w_center = math.sqrt(w_lo * w_hi)
    fitted_center = math.exp(intercept + slope * math.log(w_center))
    target_center = math.pi * est.sigma**2 / (
        math.log(est.gamma_max / est.gamma_min) * w_center
    )
    return OneOverFFit(
        slope=float(slope),
        amplitude_ratio=float(fitted_center / target_center),
        band_omega=(w_lo, w_hi),
        n_points=int(ok.sum()),
    )
