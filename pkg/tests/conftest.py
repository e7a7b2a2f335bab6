import numpy as np
import pytest


def fuzz_point_set(rng: np.random.Generator, max_n: int = 200) -> np.ndarray:
    """Random point sets mixing lattice, uniform and clustered shapes."""
    n = int(rng.integers(1, max_n + 1))
    kind = rng.integers(0, 4)
    if kind == 0:
        pts = rng.random(n)
    elif kind == 1:
        pts = (np.arange(n) + rng.random()) / n
    elif kind == 2:
        centers = rng.random(max(1, n // 20 + 1))
        pts = rng.choice(centers, size=n) + 0.01 * rng.standard_normal(n)
        pts = np.mod(pts, 1.0)
    else:
        half = n // 2
        pts = np.concatenate(
            [rng.random(n - half), (np.arange(half) + 0.5) / max(half, 1)]
        )
    pts = np.mod(pts, 1.0)
    pts[pts >= 1.0] = 0.0
    return pts


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)
