"""Base-10 mantissa decomposition and the logarithmic reference measure.

Every positive real x factors uniquely as m * 10**k with m in [1, 10) and
integer k.  The fractional part of log10(x) equals log10(m), which is the
coordinate in which equidistribution statements about mantissae are made.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

LOG10_DIGIT_PROBS = np.log10(1.0 + 1.0 / np.arange(1, 10))
"""First-digit probabilities log10(1 + 1/k), k = 1..9."""


@dataclass(frozen=True)
class MantissaDecomposition:
    """x = mantissa * 10**exponent with mantissa in [1, 10)."""

    mantissa: float
    exponent: int

    @property
    def first_digit(self) -> int:
        return int(self.mantissa)

    def reconstruct(self) -> float:
        return _scale_pow10(self.mantissa, self.exponent)


def _check_positive(x: float) -> float:
    x = float(x)
    if math.isnan(x) or math.isinf(x) or x <= 0.0:
        raise DomainError(f"expected a positive finite real, got {x!r}")
    return x


def _scale_pow10(x: float, k: int) -> float:
    # x * 10**k in chunks so the power of ten itself never overflows
    while k > 300:
        x *= 1e300
        k -= 300
    while k < -300:
        x *= 1e-300
        k += 300
    return x * 10.0**k


def decompose(x: float) -> MantissaDecomposition:
    """Split a positive finite x into mantissa in [1, 10) and integer exponent.

    floor(log10 x) can be off by one ulp near powers of ten; the correction
    loop below restores the half-open invariant bit-exactly.
    """
    x = _check_positive(x)
    e = math.floor(math.log10(x))
    m = _scale_pow10(x, -e)
    while m >= 10.0:
        m /= 10.0
        e += 1
    while m < 1.0:
        m *= 10.0
        e -= 1
    return MantissaDecomposition(m, e)


def _decompose_array(x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized decomposition; same correction logic as decompose()."""
    x = np.asarray(x, dtype=float)
    if x.size and (np.any(~np.isfinite(x)) or np.any(x <= 0.0)):
        raise DomainError("all inputs must be positive finite reals")
    e = np.floor(np.log10(x))
    m = x * np.power(10.0, -e)
    hi = m >= 10.0
    while np.any(hi):
        m = np.where(hi, m / 10.0, m)
        e = np.where(hi, e + 1, e)
        hi = m >= 10.0
    lo = m < 1.0
    while np.any(lo):
        m = np.where(lo, m * 10.0, m)
        e = np.where(lo, e - 1, e)
        lo = m < 1.0
    return m, e


def log10_frac(x):
    """Fractional part of log10(x), i.e. log10 of the mantissa, in [0, 1).

    Accepts a scalar or an array; the array path uses the same
    decomposition so both agree near powers of ten.
    """
    if np.ndim(x) == 0:
        m, _ = _decompose_array(np.asarray([x], dtype=float))
        return float(np.log10(m[0]))
    m, _ = _decompose_array(x)
    return np.log10(m)


def first_digit(x):
    """Leading decimal digit of x, in {1, ..., 9}. Scalar or array."""
    if np.ndim(x) == 0:
        return decompose(x).first_digit
    m, _ = _decompose_array(x)
    return np.floor(m).astype(np.int64)


def benford_measure(s: float, t: float) -> float:
    """Measure of the mantissa interval [s, t), equal to log10(t/s).

    Requires 1 <= s < t <= 10.  benford_measure(k, k+1) is the probability
    of first digit k.
    """
    s = float(s)
    t = float(t)
    if not (1.0 <= s < t <= 10.0):
        raise DomainError(f"need 1 <= s < t <= 10, got [{s}, {t})")
    return math.log10(t / s)


def digits_from_log10_frac(frac) -> np.ndarray:
    """First digits from fractional log10 values, floor(10**frac) clipped to 1..9.

    The clip guards against a last-ulp rounding of 10**frac to exactly 10.
    """
    frac = np.asarray(frac, dtype=float)
    return np.clip(np.floor(np.power(10.0, frac)).astype(np.int64), 1, 9)
