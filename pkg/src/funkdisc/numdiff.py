"""Central finite differences used as independent checks of closed forms.

First derivatives use step 1e-5. Second derivatives use base step 1e-4
with one Richardson extrapolation, (4 D(h) - D(2h)) / 3: at 1e-5 the
rounding floor of a second central difference, about eps |f| / h^2, sits
near 1e-5 and would mask true agreement at the 1e-6 level.
"""

from __future__ import annotations

from typing import Callable

import numpy as np

STEP_GRADIENT = 1e-5
STEP_HESSIAN = 1e-4


def fd_gradient(f: Callable[[np.ndarray], float], x: np.ndarray, h: float = STEP_GRADIENT) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    g = np.zeros(x.shape)
    for i in range(x.size):
        xp = x.copy()
        xm = x.copy()
        xp[i] += h
        xm[i] -= h
        g[i] = (f(xp) - f(xm)) / (2.0 * h)
    return g


def _hessian_once(f: Callable[[np.ndarray], float], x: np.ndarray, h: float) -> np.ndarray:
    n = x.size
    out = np.zeros((n, n))
    for i in range(n):
        for j in range(i, n):
            xpp = x.copy()
            xpm = x.copy()
            xmp = x.copy()
            xmm = x.copy()
            xpp[i] += h
            xpp[j] += h
            xpm[i] += h
            xpm[j] -= h
            xmp[i] -= h
            xmp[j] += h
            xmm[i] -= h
            xmm[j] -= h
            val = (f(xpp) - f(xpm) - f(xmp) + f(xmm)) / (4.0 * h * h)
            out[i, j] = val
            out[j, i] = val
    return out


def fd_hessian(f: Callable[[np.ndarray], float], x: np.ndarray, h: float = STEP_HESSIAN) -> np.ndarray:
    """Richardson-refined central second differences of a scalar field."""
    x = np.asarray(x, dtype=float)
    d1 = _hessian_once(f, x, h)
    d2 = _hessian_once(f, x, 2.0 * h)
    return (4.0 * d1 - d2) / 3.0
