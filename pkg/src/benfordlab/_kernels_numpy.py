"""Pure NumPy implementations of the hot kernels.

Drop-in twin of the compiled extension; selected at import time by
benfordlab.kernels when the extension is unavailable or disabled.
"""

from __future__ import annotations

import numpy as np

BACKEND = "numpy"

_TWO_PI = 2.0 * np.pi
_H_BLOCK = 64  # rows of the phase matrix held at once


def weyl_sums(points: np.ndarray, hs: np.ndarray) -> np.ndarray:
    """Averaged exponentials (1/N) sum_n exp(2i pi h u_n) for each h."""
    points = np.ascontiguousarray(points, dtype=np.float64)
    hs = np.asarray(hs, dtype=np.float64)
    out = np.empty(hs.shape[0], dtype=np.complex128)
    for start in range(0, hs.shape[0], _H_BLOCK):
        block = hs[start : start + _H_BLOCK]
        phase = _TWO_PI * block[:, None] * points[None, :]
        out[start : start + block.shape[0]] = np.exp(1j * phase).mean(axis=1)
    return out


def partial_log_exp_moduli(k_max: int, h: float) -> np.ndarray:
    """|sum_{j<=k} exp(2i pi h ln j)| for k = 1..k_max."""
    j = np.arange(1, k_max + 1, dtype=np.float64)
    z = np.exp(1j * _TWO_PI * h * np.log(j))
    return np.abs(np.cumsum(z))


def extreme_oracle(values: np.ndarray, counts: np.ndarray, n_total: int) -> float:
    """Exact sup-deviation over all half-open intervals, by enumeration.

    values: distinct sorted points in [0,1); counts: multiplicities.
    For every pair i <= j considers the tightest interval containing
    points i..j (one-sided limits included) and the widest interval
    containing exactly those points; empty intervals reduce to gaps.
    """
    v = np.asarray(values, dtype=np.float64)
    c = np.asarray(counts, dtype=np.float64)
    m = v.shape[0]
    cum = np.concatenate(([0.0], np.cumsum(c)))  # cum[i] = count of first i values
    prev = np.concatenate(([0.0], v[:-1]))  # open lower neighbour per i
    nxt = np.concatenate((v[1:], [1.0]))  # open upper neighbour per j

    best = max(v[0], 1.0 - v[-1])
    if m > 1:
        best = max(best, float(np.max(v[1:] - v[:-1])))

    mass = (cum[None, 1:] - cum[:-1, None]) / float(n_total)  # mass[i-1, j-1]
    tight = mass - (v[None, :] - v[:, None])
    wide = (nxt[None, :] - prev[:, None]) - mass
    upper = np.triu(np.ones((m, m), dtype=bool))
    best = max(best, float(np.max(tight[upper])), float(np.max(wide[upper])))
    return best
