"""Weyl sums and every explicit deviation bound used by the library.

Contents: averaged exponential sums, the Erdos-Turan majorant for the
extreme discrepancy, the partial-sum bound for sum_j exp(2i pi h ln j),
the Van der Corput bound for the discrete uniform characteristic
function, the two-term decay form c1*h^-gamma + c2*h^delta*r_n, the
discrepancy rate evaluator and the frequency cutoff H that optimizes it.

Convention: log in every bound formula is the natural logarithm; the
mantissa side of the library works in log10.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .discrepancy import SamplePoints
from .errors import DomainError, SizeGuardError
from .schedules import Schedule

HARMONIC_SUM_GUARD = 10**7


@dataclass(frozen=True)
class RateParams:
    """Constants entering the discrepancy rate bound.

    C0 stands in for the almost-sure random constant of the bound; it is
    a user-supplied scalar so bound curves can be overlaid on simulated
    trajectories (the shape, not the constant, is what experiments show).
    r_schedule defaults to n**(-beta).
    """

    alpha: float = 1.0
    beta: float = 1.0
    gamma: float = 1.0
    delta: float = 1.0
    theta: float = 0.0
    c0: float = 1.0
    c1: float = 1.0
    c2: float = 1.0
    C0: float = 1.0
    r_schedule: Schedule | None = field(default=None)

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta"):
            if not getattr(self, name) > 0:
                raise DomainError(f"RateParams.{name} must be > 0")
        # zero is allowed for the multiplicative constants so individual
        # terms of the bound can be isolated when plotting
        for name in ("c0", "c1", "c2", "C0"):
            if getattr(self, name) < 0:
                raise DomainError(f"RateParams.{name} must be >= 0")
        if self.theta < 0:
            raise DomainError("RateParams.theta must be >= 0")
        if self.r_schedule is None:
            object.__setattr__(
                self, "r_schedule", Schedule.polynomial(1.0, -self.beta)
            )

    def r(self, n):
        return self.r_schedule(n)


def weyl_sum(sp: SamplePoints, h: int) -> complex:
    """(1/N) sum_n exp(2i pi h u_n).  h is a nonzero integer; the
    criterion this feeds is over nonzero frequencies only."""
    h = int(h)
    if h == 0:
        raise DomainError("frequency h must be a nonzero integer")
    return complex(kernels.weyl_sums(sp.points, np.asarray([h], dtype=float))[0])


def weyl_sum_grid(sp: SamplePoints, hs) -> np.ndarray:
    """Vectorized weyl_sum over a grid of nonzero integer frequencies."""
    hs = np.asarray(hs, dtype=np.int64)
    if np.any(hs == 0):
        raise DomainError("frequency h must be a nonzero integer")
    return kernels.weyl_sums(sp.points, hs.astype(np.float64))


def erdos_turan_bound(sp: SamplePoints, H: int, safety: float = 1.0) -> float:
    """safety * (1/(H+1) + sum_{h<=H} |weyl_sum(sp, h)| / h).

    safety defaults to 1, the bare form of the inequality; classical
    statements carry absolute constants, so callers may raise it.
    The harmonic sum is evaluated directly (no asymptotics), with a guard.
    """
    H = int(H)
    if H < 1:
        raise DomainError("H must be >= 1")
    if H > HARMONIC_SUM_GUARD:
        raise SizeGuardError(f"H = {H} exceeds direct-summation guard")
    if safety < 1.0:
        raise DomainError("safety multiplier must be >= 1")
    hs = np.arange(1, H + 1, dtype=np.float64)
    moduli = np.abs(kernels.weyl_sums(sp.points, hs))
    return float(safety * (1.0 / (H + 1) + math.fsum(moduli / hs)))


def partial_exponential_sum(k: int, h: int) -> complex:
    """sum_{j=1}^{k} exp(2i pi h ln j), natural logarithm, exact summation."""
    k = int(k)
    h = int(h)
    if k < 1 or h < 1:
        raise DomainError("need k >= 1 and h >= 1")
    j = np.arange(1, k + 1, dtype=np.float64)
    z = np.exp(2j * np.pi * h * np.log(j))
    return complex(math.fsum(z.real), math.fsum(z.imag))


def partial_exponential_sum_scan(k_max: int, h: int) -> np.ndarray:
    """Moduli of the partial sums for every k = 1..k_max at once."""
    k_max = int(k_max)
    h = int(h)
    if k_max < 1 or h < 1:
        raise DomainError("need k_max >= 1 and h >= 1")
    return kernels.partial_log_exp_moduli(k_max, float(h))


def lemma_bound(k: int, h: int) -> float:
    """k/(2 pi h) + 1 + pi h ln k, a bound on |sum_{j<=k} exp(2i pi h ln j)|."""
    k = int(k)
    h = int(h)
    if k < 1 or h < 1:
        raise DomainError("need k >= 1 and h >= 1")
    return k / (2.0 * math.pi * h) + 1.0 + math.pi * h * math.log(k)


def van_der_corput_bound(n: int, h: int) -> float:
    """8/sqrt(h) + (1 + 4 sqrt(h))/sqrt(n) + 6/n + 3h/(n sqrt(n)).

    Upper-bounds |E[exp(2i pi h ln X)]| for X uniform on {1, ..., n}.
    """
    n = int(n)
    h = int(h)
    if n < 1 or h < 1:
        raise DomainError("need n >= 1 and h >= 1")
    rh = math.sqrt(h)
    rn = math.sqrt(n)
    return 8.0 / rh + (1.0 + 4.0 * rh) / rn + 6.0 / n + 3.0 * h / (n * rn)


def prop_bound_form(h: int, n: int, params: RateParams) -> float:
    """The two-term decay form c1 * h**(-gamma) + c2 * h**delta * r_n."""
    h = int(h)
    n = int(n)
    if h < 1 or n < 1:
        raise DomainError("need h >= 1 and n >= 1")
    return params.c1 * h ** (-params.gamma) + params.c2 * h**params.delta * params.r(n)


def _decay_exponent(params: RateParams) -> float:
    return min(params.beta - params.delta * params.theta, 1.0) / (params.delta + 1.0)


def theorem1_rhs(N: int, params: RateParams, d: Schedule) -> float:
    """Discrepancy rate bound at sample size N for exponent schedule d.

    C0 * (ln N)^2 / sqrt(N)
      + c0 * ( (1/N) sum_{n<=N} d_n^-gamma
               + (ln N)^{1/(delta+1)} * N^{-min(beta - delta*theta, 1)/(delta+1)} )

    When beta - delta*theta <= 0 the last exponent is non-positive and the
    bound does not decay; the value is still returned.
    """
    N = int(N)
    if N < 2:
        raise DomainError("need N >= 2 so that ln N > 0")
    d_vals = np.asarray(d(np.arange(1, N + 1)), dtype=np.float64)
    if np.any(d_vals <= 0):
        raise DomainError("exponent schedule must be positive")
    log_n = math.log(N)
    mean_term = float(np.mean(d_vals ** (-params.gamma)))
    tail_term = log_n ** (1.0 / (params.delta + 1.0)) * N ** (-_decay_exponent(params))
    return params.C0 * log_n**2 / math.sqrt(N) + params.c0 * (mean_term + tail_term)


def optimal_H(N: int, params: RateParams) -> int:
    """floor((ln N)^{-1/(delta+1)} * N^{min(beta - delta*theta, 1)/(delta+1)}) + 1."""
    N = int(N)
    if N < 2:
        raise DomainError("need N >= 2 so that ln N > 0")
    value = math.log(N) ** (-1.0 / (params.delta + 1.0)) * N ** _decay_exponent(params)
    return int(math.floor(value)) + 1
