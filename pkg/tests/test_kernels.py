"""Equivalence of the compiled kernels and the NumPy fallback."""

import numpy as np
import pytest

from benfordlab import _kernels_numpy, kernels

try:
    from benfordlab import _kernels as compiled
except ImportError:
    compiled = None

from conftest import fuzz_point_set

needs_compiled = pytest.mark.skipif(
    compiled is None, reason="compiled extension not built"
)


def test_active_backend_is_reported():
    assert kernels.BACKEND in ("compiled", "numpy")


@needs_compiled
def test_weyl_sums_backends_agree(rng):
    for _ in range(20):
        u = rng.random(int(rng.integers(1, 3000)))
        hs = rng.integers(1, 500, size=17).astype(float)
        a = compiled.weyl_sums(u, hs)
        b = _kernels_numpy.weyl_sums(u, hs)
        assert np.max(np.abs(a - b)) <= 1e-12


@needs_compiled
def test_partial_log_exp_backends_agree():
    for h in (1.0, 7.0, 50.0):
        a = compiled.partial_log_exp_moduli(5000, h)
        b = _kernels_numpy.partial_log_exp_moduli(5000, h)
        assert np.max(np.abs(a - b)) <= 1e-9


@needs_compiled
def test_extreme_oracle_backends_agree(rng):
    for _ in range(50):
        pts = np.sort(fuzz_point_set(rng, max_n=300))
        vals, counts = np.unique(pts, return_counts=True)
        a = compiled.extreme_oracle(vals, counts.astype(float), pts.size)
        b = _kernels_numpy.extreme_oracle(vals, counts.astype(float), pts.size)
        assert abs(a - b) <= 1e-13


def test_pure_python_env_forces_fallback(monkeypatch):
    import importlib

    monkeypatch.setenv("BENFORDLAB_PURE_PYTHON", "1")
    import benfordlab.kernels as mod

    fresh = importlib.reload(mod)
    try:
        assert fresh.BACKEND == "numpy"
    finally:
        monkeypatch.delenv("BENFORDLAB_PURE_PYTHON")
        importlib.reload(mod)
