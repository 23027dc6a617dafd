"""Independent oracles used by the test suite.

Everything here is deliberately implemented through a different route
than the library code it checks: the arithmetic-geometric mean for
complete elliptic integrals, Gauss-Jacobi quadrature for Fermat path
integrals, and cofactor expansion for exact determinants.
"""

from __future__ import annotations

import numpy as np
from scipy.special import roots_jacobi


def agm(a: float, b: float) -> float:
    """Arithmetic-geometric mean of two positive reals.

    Quadratic convergence reaches machine precision in well under 30
    iterations; the iteration cap guards against a one-ulp oscillation
    once a and b are adjacent floats.
    """
    for _ in range(30):
        if a == b:
            break
        a, b = (a + b) / 2.0, (a * b) ** 0.5
    return a


def elliptic_K(k: float) -> float:
    """Complete elliptic integral of the first kind via the AGM."""
    return np.pi / (2.0 * agm(1.0, (1.0 - k * k) ** 0.5))


def fermat_path_integral(d: int, r: int, s: int, n: int = 200) -> float:
    """Quadrature of x^(r-1) (1 - x^d)^((s-d)/d) dx over [0, 1].

    Writes (1 - x^d) = (1 - x) * q(x) with q the geometric-sum factor and
    absorbs the (1 - x)^(s/d - 1) endpoint singularity into a
    Gauss-Jacobi rule; q is smooth and positive on [0, 1].
    """
    alpha = s / d - 1.0
    x, w = roots_jacobi(n, alpha, 0.0)
    t = (x + 1.0) / 2.0
    q = np.polyval(np.ones(d), t)  # 1 + t + ... + t^(d-1)
    vals = t ** (r - 1) * q**alpha
    return float(0.5 ** (alpha + 1.0) * np.sum(w * vals))


def fermat_translated_path_integral(d: int, r: int, s: int, a: int, b: int, n: int = 200) -> complex:
    """Path integral over the (a, b) automorphism translate, with y
    continued along the path by nearest-root tracking.

    The path is x(t) = zeta^a * t for t in (0, 1); y starts on the sheet
    zeta^b at t = 0 and is continued by picking, at each node, the d-th
    root of 1 - x^d closest to the previous value.  No closed-form
    phase factor is assumed anywhere.
    """
    zeta = np.exp(2j * np.pi / d)
    alpha = s / d - 1.0
    xg, w = roots_jacobi(n, alpha, 0.0)
    t = (xg + 1.0) / 2.0
    order = np.argsort(t)
    roots_of_unity = zeta ** np.arange(d)
    y_prev = zeta**b  # value at t = 0, where 1 - x^d = 1
    y_vals = np.empty_like(t, dtype=complex)
    for idx in order:
        target = (1.0 - (zeta**a * t[idx]) ** d) ** (1.0 / d)  # principal magnitude/phase
        candidates = target * roots_of_unity
        y_vals[idx] = candidates[np.argmin(np.abs(candidates - y_prev))]
        y_prev = y_vals[idx]
    x = zeta**a * t
    # strip the (1 - t)^alpha factor absorbed by the quadrature weight
    smooth = x ** (r - 1) * (y_vals ** (s - d)) * (1.0 - t) ** (-alpha) * zeta**a
    return complex(0.5 ** (alpha + 1.0) * np.sum(w * smooth))


def cofactor_determinant(m) -> int:
    """Exact integer determinant by cofactor expansion along row 0."""
    n = len(m)
    if n == 1:
        return int(m[0][0])
    total = 0
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [[row[c] for c in range(n) if c != j] for row in m[1:]]
        total += (-1) ** j * int(m[0][j]) * cofactor_determinant(minor)
    return total
