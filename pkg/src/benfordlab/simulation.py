"""Monte Carlo experiments on power sequences X_n ** d_n.

Realizations are carried in log10 space as (fractional part, integer
exponent): the mantissa only depends on the fractional part, so powers
far beyond the floating-point range are handled exactly where it
matters.  Replicates draw from independent counter-based substreams
derived from (master_seed, replicate_index); every sampler consumes
exactly one uniform per index, so results are reproducible and
independent of how replicates are scheduled.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import distributions, kernels
from .bounds import RateParams, theorem1_rhs
from .discrepancy import _star_extreme_sorted
from .distributions import CONTINUOUS_UNIFORM, CharFnQuery, DistributionSpec, char_fn
from .errors import ConfigError, DomainError
from .mantissa import digits_from_log10_frac
from .schedules import Schedule

LN10 = math.log(10.0)


@dataclass(frozen=True)
class ExperimentConfig:
    spec: DistributionSpec
    d: Schedule
    n_terms: int
    master_seed: int
    replicates: int = 1
    checkpoints: tuple[int, ...] = ()
    eta: float = 1.0
    h_max: int = 10
    rate_params: RateParams | None = None

    def __post_init__(self):
        if self.n_terms < 1:
            raise ConfigError("n_terms must be >= 1")
        if self.replicates < 1:
            raise ConfigError("replicates must be >= 1")
        if self.eta <= 0:
            raise ConfigError("eta must be > 0")
        if self.h_max < 1:
            raise ConfigError("h_max must be >= 1")
        cks = tuple(int(c) for c in self.checkpoints) or (int(self.n_terms),)
        if any(b <= a for a, b in zip(cks, cks[1:])) or cks[0] < 1:
            raise ConfigError("checkpoints must be strictly increasing and >= 1")
        if cks[-1] > self.n_terms:
            raise ConfigError("last checkpoint exceeds n_terms")
        object.__setattr__(self, "checkpoints", cks)


def substream(master_seed: int, replicate_index: int) -> np.random.Generator:
    """Independent counter-based stream for one replicate."""
    seq = np.random.SeedSequence(int(master_seed), spawn_key=(int(replicate_index),))
    return np.random.Generator(np.random.Philox(seq))


@dataclass(frozen=True)
class PowerRealization:
    """One realization of (X_n ** d_n), held as log10 = exponent + frac."""

    log10_frac: np.ndarray
    exponent: np.ndarray

    @property
    def n(self) -> int:
        return int(self.log10_frac.size)

    def log10_values(self) -> np.ndarray:
        return self.exponent.astype(np.float64) + self.log10_frac

    def mantissas(self) -> np.ndarray:
        return np.power(10.0, self.log10_frac)

    def linear_values(self) -> np.ndarray:
        """Plain floats where representable; overflows become inf."""
        with np.errstate(over="ignore"):
            return np.power(10.0, self.log10_values())


def _degenerate_uniform_mask(spec: DistributionSpec, n_arr: np.ndarray):
    """Indices where a continuous-uniform schedule collapses to a point.

    The point-mass limit keeps index-1 of [1, n]-style schedules usable in
    experiments; the distribution-level sampler still rejects it.
    """
    if spec.family != CONTINUOUS_UNIFORM:
        return None
    a = np.atleast_1d(np.asarray(spec.schedules["a"](n_arr), dtype=float))
    b = np.atleast_1d(np.asarray(spec.schedules["b"](n_arr), dtype=float))
    mask = a == b
    if not mask.any():
        return None
    if np.any(a[mask] <= 0.0):
        raise DomainError("degenerate uniform interval must sit at a positive point")
    return mask, a, b


def _draw_sequence(spec: DistributionSpec, n_arr: np.ndarray, rng: np.random.Generator):
    u = rng.random(n_arr.shape[0])
    deg = _degenerate_uniform_mask(spec, n_arr)
    if deg is None:
        return distributions._inverse_transform(spec, n_arr, u)
    mask, a, b = deg
    bad = (a <= 0.0) | (a > b)
    if np.any(bad):
        raise DomainError("continuous uniform needs 0 < a <= b in experiments")
    return a + u * (b - a)


def generate_powers(config: ExperimentConfig, replicate_index: int) -> PowerRealization:
    """Sample X_1..X_N from the replicate substream and raise to d_n,
    returning the log10-space representation."""
    n_arr = np.arange(1, config.n_terms + 1, dtype=np.int64)
    d_vals = np.atleast_1d(np.asarray(config.d(n_arr), dtype=float))
    if np.any(d_vals <= 0.0):
        raise DomainError("exponent schedule must be positive")
    rng = substream(config.master_seed, replicate_index)
    x = _draw_sequence(config.spec, n_arr, rng)
    log10 = d_vals * np.log10(x)
    exponent = np.floor(log10)
    frac = log10 - exponent
    # a tiny negative log10 can round the fraction up to exactly 1.0
    carry = frac >= 1.0
    if carry.any():
        frac[carry] -= 1.0
        exponent[carry] += 1.0
    return PowerRealization(log10_frac=frac, exponent=exponent.astype(np.int64))


@dataclass(frozen=True)
class FrequencyTable:
    counts: np.ndarray
    frequencies: np.ndarray

    @property
    def n(self) -> int:
        return int(self.counts.sum())


def digit_frequencies(realization: PowerRealization) -> FrequencyTable:
    """First-digit counts 1..9 from the log-space representation."""
    digits = digits_from_log10_frac(realization.log10_frac)
    counts = np.bincount(digits, minlength=10)[1:]
    return FrequencyTable(counts=counts, frequencies=counts / realization.n)


@dataclass(frozen=True)
class TrajectoryRow:
    checkpoint: int
    star: float
    extreme: float
    bound: float | None


@dataclass(frozen=True)
class TrajectoryReport:
    rows: tuple


def discrepancy_trajectory(config: ExperimentConfig, replicate_index: int) -> TrajectoryReport:
    """Both discrepancies of every checkpoint prefix, plus the rate-bound
    overlay when the config carries rate parameters.

    The sorted prefix grows by merging each new block (stable sort on two
    sorted runs is a linear merge), so the total cost is sort-bound.
    """
    realization = generate_powers(config, replicate_index)
    frac = realization.log10_frac
    sorted_run = np.empty(0, dtype=np.float64)
    prev = 0
    rows = []
    for ck in config.checkpoints:
        block = np.sort(frac[prev:ck])
        sorted_run = (
            block
            if sorted_run.size == 0
            else np.sort(np.concatenate([sorted_run, block]), kind="stable")
        )
        prev = ck
        star, extreme = _star_extreme_sorted(sorted_run)
        bound = None
        if config.rate_params is not None and ck >= 2:
            bound = theorem1_rhs(ck, config.rate_params, config.d)
        rows.append(TrajectoryRow(checkpoint=ck, star=star, extreme=extreme, bound=bound))
    return TrajectoryReport(rows=tuple(rows))


def _log1p_pow(n: float, eta: float) -> float:
    """ln(1 + n**eta) without overflowing n**eta."""
    x = eta * math.log(n)
    if x > 700.0:
        return x
    return math.log1p(math.exp(x))


def _expected_phase(spec: DistributionSpec, n: int, t: float, tolerance: float) -> complex:
    deg = _degenerate_uniform_mask(spec, np.asarray([n]))
    if deg is not None:
        a = float(deg[1][0])
        return complex(np.exp(2j * np.pi * t * math.log(a)))
    return char_fn(spec, CharFnQuery(t=t, n=n, tolerance=tolerance))


def cohen_cuny_statistic(
    config: ExperimentConfig, replicate_index: int, char_tolerance: float = 1e-8
) -> float:
    """Normalized squared deviation of centered unit exponentials:

    max over h <= H of |sum_n (e(h L_n) - E e(h L_n))|^2
        / (ln(1+H) ln(1+N^eta) N),

    where e(x) = exp(2i pi x) and L_n = d_n log10 X_n.  Expectations come
    from char_fn at t = h d_n / ln 10 and are cached per (parameters, t).
    """
    realization = generate_powers(config, replicate_index)
    frac = realization.log10_frac
    n_terms = config.n_terms
    n_arr = np.arange(1, n_terms + 1, dtype=np.int64)
    d_vals = np.atleast_1d(np.asarray(config.d(n_arr), dtype=float))
    hs = np.arange(1, config.h_max + 1, dtype=np.float64)
    sums = n_terms * kernels.weyl_sums(frac, hs)

    # indices sharing (parameter values, d_n) share every expectation, so
    # constant schedules collapse to a single characteristic-function call
    cols = [
        np.atleast_1d(np.asarray(s(n_arr), dtype=float))
        for _, s in sorted(config.spec.schedules.items())
    ]
    cols.append(d_vals)
    groups, first, counts = np.unique(
        np.column_stack(cols), axis=0, return_index=True, return_counts=True
    )
    cache: dict = {}
    best = 0.0
    for idx, h in enumerate(hs):
        expected = 0.0 + 0.0j
        for g in range(groups.shape[0]):
            i0 = int(first[g])
            t = float(h * d_vals[i0] / LN10)
            key = (groups[g].tobytes(), t)
            if key not in cache:
                cache[key] = _expected_phase(
                    config.spec, int(n_arr[i0]), t, char_tolerance
                )
            expected += cache[key] * int(counts[g])
        dev = abs(sums[idx] - expected) ** 2
        best = max(best, dev)
    denom = math.log(1.0 + config.h_max) * _log1p_pow(n_terms, config.eta) * n_terms
    return best / denom


@dataclass(frozen=True)
class AggregateSummary:
    checkpoints: tuple
    extreme_mean: np.ndarray
    extreme_median: np.ndarray
    extreme_q05: np.ndarray
    extreme_q95: np.ndarray
    digit_mean: np.ndarray
    digit_stderr: np.ndarray
    trajectories: tuple
    tables: tuple


def _replicate_outputs(config: ExperimentConfig, replicate_index: int):
    trajectory = discrepancy_trajectory(config, replicate_index)
    table = digit_frequencies(generate_powers(config, replicate_index))
    return trajectory, table


def aggregate(config: ExperimentConfig, threads: int = 1) -> AggregateSummary:
    """Run all replicates and summarize: per checkpoint the mean, median
    and 5%/95% quantiles of the extreme discrepancy; per digit the mean
    frequency and its standard error."""
    if config.replicates < 2:
        raise ConfigError("aggregation needs at least 2 replicates")
    indices = range(config.replicates)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda r: _replicate_outputs(config, r), indices))
    else:
        results = [_replicate_outputs(config, r) for r in indices]
    trajectories = tuple(r[0] for r in results)
    tables = tuple(r[1] for r in results)

    extremes = np.array(
        [[row.extreme for row in t.rows] for t in trajectories]
    )  # replicates x checkpoints
    freqs = np.array([t.frequencies for t in tables])  # replicates x 9
    return AggregateSummary(
        checkpoints=config.checkpoints,
        extreme_mean=extremes.mean(axis=0),
        extreme_median=np.median(extremes, axis=0),
        extreme_q05=np.quantile(extremes, 0.05, axis=0),
        extreme_q95=np.quantile(extremes, 0.95, axis=0),
        digit_mean=freqs.mean(axis=0),
        digit_stderr=freqs.std(axis=0, ddof=1) / math.sqrt(config.replicates),
        trajectories=trajectories,
        tables=tables,
    )
