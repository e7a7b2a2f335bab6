"""Star and extreme discrepancy of finite point sets mod 1.

The extreme discrepancy is the supremum over all half-open intervals
[a, b) in [0, 1) of |empirical frequency - length|; the star variant
restricts to anchored intervals [0, b).  Both suprema are computed
exactly for finite point sets: the closed formulas below and the
brute-force enumeration oracle take one-sided limits at sample points,
so the value is the supremum even when it is not attained.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels, mantissa
from .errors import DomainError, SizeGuardError

ORACLE_MAX_POINTS = 2000


@dataclass(frozen=True)
class SamplePoints:
    """Sorted points in [0, 1) with multiplicity."""

    points: np.ndarray

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=np.float64)
        if pts.ndim != 1 or pts.size == 0:
            raise DomainError("need a non-empty 1-d collection of points")
        if np.any(~np.isfinite(pts)) or np.any(pts < 0.0) or np.any(pts >= 1.0):
            raise DomainError("all points must lie in [0, 1)")
        pts = np.sort(pts)
        pts.flags.writeable = False
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_values(cls, values) -> "SamplePoints":
        return cls(np.array(values, dtype=np.float64, copy=True))

    @property
    def n(self) -> int:
        return int(self.points.size)


@dataclass(frozen=True)
class DiscrepancyReport:
    n: int
    star: float
    extreme: float


def _star_extreme_sorted(u: np.ndarray) -> tuple[float, float]:
    """Both discrepancies of an already sorted array in [0, 1)."""
    n = u.size
    i = np.arange(1, n + 1, dtype=np.float64)
    up = np.max(i / n - u)
    down = np.max(u - (i - 1.0) / n)
    star = max(up, down)
    return float(star), float(up + down)


def star_discrepancy(sp: SamplePoints) -> float:
    """Exact sup over anchored intervals [0, b): max_i of the larger of
    i/N - u_(i) and u_(i) - (i-1)/N."""
    return _star_extreme_sorted(sp.points)[0]


def extreme_discrepancy(sp: SamplePoints) -> float:
    """Exact sup over all intervals [a, b), via the closed formula
    max_i(i/N - u_(i)) + max_j(u_(j) - (j-1)/N).

    The formula is validated against extreme_discrepancy_oracle, which is
    the normative definition.
    """
    return _star_extreme_sorted(sp.points)[1]


def extreme_discrepancy_oracle(sp: SamplePoints) -> float:
    """Brute-force enumeration of all candidate interval endpoints.

    Quadratic in the number of distinct points, guarded at
    ORACLE_MAX_POINTS total points.
    """
    if sp.n > ORACLE_MAX_POINTS:
        raise SizeGuardError(
            f"oracle is quadratic; refuses N = {sp.n} > {ORACLE_MAX_POINTS}"
        )
    values, counts = np.unique(sp.points, return_counts=True)
    return float(kernels.extreme_oracle(values, counts.astype(np.float64), sp.n))


def benford_discrepancy(xs) -> DiscrepancyReport:
    """Discrepancy of the mantissa distribution of a positive sequence.

    Maps each entry to the fractional part of its log10 and measures both
    discrepancies of the resulting point set, which equals the sup over
    mantissa intervals [s, t) of the deviation from log10(t/s).
    """
    frac = mantissa.log10_frac(np.asarray(xs, dtype=np.float64))
    frac = np.atleast_1d(frac)
    sp = SamplePoints.from_values(frac)
    star, extreme = _star_extreme_sorted(sp.points)
    return DiscrepancyReport(n=sp.n, star=star, extreme=extreme)
