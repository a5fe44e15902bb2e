"""C-infinity transition primitives shared by the cutoff family and test weights.

``smoothstep`` is the standard exp(-1/x) unit step: 0 on (-inf, 0], 1 on
[1, inf), strictly increasing in between, with the symmetry
S(x) + S(1-x) = 1 (so its integral over [0,1] is exactly 1/2).
"""

from __future__ import annotations

import numpy as np


def _sigma(y: np.ndarray) -> np.ndarray:
    """exp(-1/y) for y > 0, 0 for y <= 0 (no warnings, no overflow)."""
    y = np.asarray(y, dtype=float)
    pos = y > 0
    out = np.zeros_like(y)
    safe = np.where(pos, y, 1.0)
    out[pos] = np.exp(-1.0 / safe[pos])
    return out


def smoothstep(x):
    """S(x) = sigma(x) / (sigma(x) + sigma(1-x)); scalar in, scalar out."""
    x_arr = np.asarray(x, dtype=float)
    s, s1 = _sigma(x_arr), _sigma(1.0 - x_arr)
    out = np.where(x_arr >= 1.0, 1.0, np.where(x_arr <= 0.0, 0.0, s / np.where(s + s1 == 0, 1.0, s + s1)))
    return float(out) if np.isscalar(x) or x_arr.ndim == 0 else out


def smoothstep_deriv(x):
    """dS/dx; positive on (0,1), zero outside."""
    x_arr = np.asarray(x, dtype=float)
    inside = (x_arr > 0.0) & (x_arr < 1.0)
    out = np.zeros_like(x_arr)
    xi = x_arr[inside]
    s, s1 = _sigma(xi), _sigma(1.0 - xi)
    ds = s / xi ** 2
    ds1 = s1 / (1.0 - xi) ** 2
    out[inside] = (ds * s1 + s * ds1) / (s + s1) ** 2
    return float(out) if np.isscalar(x) or x_arr.ndim == 0 else out


def plateau_bump(x, rho: float):
    """Bump that is 1 on [rho, 1-rho], 0 outside [0, 1], C-infinity throughout."""
    return smoothstep(np.asarray(x, dtype=float) / rho) * smoothstep((1.0 - np.asarray(x, dtype=float)) / rho)
