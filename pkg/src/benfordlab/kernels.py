"""Kernel dispatch: compiled extension when available, NumPy otherwise.

Set BENFORDLAB_PURE_PYTHON=1 to force the NumPy backend (useful for the
benchmark and for debugging).  Both backends implement:

    weyl_sums(points, hs) -> complex128[len(hs)]
    partial_log_exp_moduli(k_max, h) -> float64[k_max]
    extreme_oracle(values, counts, n_total) -> float
"""

from __future__ import annotations

import os

from . import _kernels_numpy

if os.environ.get("BENFORDLAB_PURE_PYTHON", "").strip() not in ("", "0"):
    _impl = _kernels_numpy
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_numpy

BACKEND: str = _impl.BACKEND
weyl_sums = _impl.weyl_sums
partial_log_exp_moduli = _impl.partial_log_exp_moduli
extreme_oracle = _impl.extreme_oracle
