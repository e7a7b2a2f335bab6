"""Oscillatory expectation integrals E[exp(2i pi t ln X)].

Working in u = ln x turns the phase into the linear 2 pi t u, so the
integrand is a smooth weight times a fixed-frequency oscillation.  The
support is cut where the remaining probability mass is negligible, split
into panels no wider than half an oscillation period, and integrated
with Gauss-Legendre per panel.  Panel counts double until two successive
refinements agree; panel results are combined with compensated summation.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import ConvergenceError

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(12)
MAX_PANELS = 2**18


def oscillatory_expectation(
    weight,
    u_lo: float,
    u_hi: float,
    t: float,
    abs_tol: float,
    max_panels: int = MAX_PANELS,
) -> complex:
    """Integral of weight(u) * exp(2i pi t u) over [u_lo, u_hi].

    weight is a vectorized density of u = ln X restricted to the window;
    abs_tol is the certification target for the refinement loop.
    """
    span = u_hi - u_lo
    if span <= 0.0:
        return 0.0 + 0.0j
    if t == 0.0:
        width = span / 8.0
    else:
        width = min(1.0 / (2.0 * abs(t)), span / 8.0)
    m = max(8, int(math.ceil(span / width)))
    prev = None
    while m <= max_panels:
        edges = np.linspace(u_lo, u_hi, m + 1)
        mid = 0.5 * (edges[:-1] + edges[1:])
        half = 0.5 * (edges[1:] - edges[:-1])
        u = (mid[:, None] + half[:, None] * _GL_NODES[None, :]).ravel()
        w = (half[:, None] * _GL_WEIGHTS[None, :]).ravel()
        vals = w * weight(u) * np.exp(2j * np.pi * t * u)
        total = complex(math.fsum(vals.real), math.fsum(vals.imag))
        if prev is not None and abs(total - prev) < abs_tol:
            return total
        prev = total
        m *= 2
    raise ConvergenceError(
        f"quadrature did not certify tolerance {abs_tol:g} within "
        f"{max_panels} panels (t = {t:g})"
    )
