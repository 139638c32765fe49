"""Piecewise evaluation: seam Taylor branch near z = 1, closed forms away.

All public modules funnel their coefficient-function evaluations through
`evaluate` (numpy, binary64) or `evaluate_mp` (mpmath scalar).  The split
point is SEAM_W from the seam module; both branches agree there to well
under 1e-12, which the test suite checks explicitly.
"""

from __future__ import annotations

import numpy as np

from . import _seam, _symbolic
from ._seam import SEAM_W, SEAM_W_MP

# registry: evaluate() name -> (seam series, seam derivative order)
_SEAM_MAP = {
    "zeta": ("zeta", 0),
    "sigma": ("sigma", 0),
    "psi": ("psi", 0),
    "zeta_d1": ("zeta", 1), "zeta_d2": ("zeta", 2),
    "zeta_d3": ("zeta", 3), "zeta_d4": ("zeta", 4),
    "sigma_d1": ("sigma", 1), "sigma_d2": ("sigma", 2),
}
for _j in "123":
    _SEAM_MAP[f"ups{_j}"] = (f"ups{_j}", 0)
    _SEAM_MAP[f"zhat{_j}"] = (f"zhat{_j}", 0)
    _SEAM_MAP[f"zhat{_j}_d1"] = (f"zhat{_j}", 1)
    for _k in "123":
        _SEAM_MAP[f"ups{_j}_d{_k}"] = (f"ups{_j}", int(_k))
        _SEAM_MAP[f"ups{_j}_dot{_k}"] = (f"ups{_j}_dot{_k}", 0)


def zeta_sigma_closed(z):
    """Closed-form (zeta, sigma) for z comfortably above 1 (numpy)."""
    z = np.asarray(z, dtype=float)
    x = np.sqrt(z * z - 1.0) - np.arccos(1.0 / z)
    zeta = -(1.5 * x) ** (2.0 / 3.0)
    sigma = np.sqrt(zeta / (1.0 - z * z))
    return zeta, sigma


def zeta_sigma_closed_mp(z):
    from mpmath import mpf, sqrt, acos

    z = mpf(z)
    x = sqrt(z * z - 1) - acos(1 / z)
    zeta = -((mpf(3) / 2 * x) ** (mpf(2) / 3))
    sigma = sqrt(zeta / (1 - z * z))
    return zeta, sigma


def evaluate(name, z):
    """Evaluate the named coefficient function at z >= 1 (scalar or array)."""
    z = np.asarray(z, dtype=float)
    scalar = z.ndim == 0
    z = np.atleast_1d(z)
    out = np.empty_like(z)
    # names with no seam branch (pure closed-form cross-checks) are always
    # evaluated via the closed forms
    near = ((z - 1.0) <= SEAM_W) if name in _SEAM_MAP \
        else np.zeros(z.shape, dtype=bool)
    if near.any():
        series, order = _SEAM_MAP[name]
        out[near] = _seam.seam_eval(series, z[near] - 1.0, order)
    far = ~near
    if far.any():
        zf = z[far]
        zeta, sigma = zeta_sigma_closed(zf)
        if name == "zeta":
            out[far] = zeta
        elif name == "sigma":
            out[far] = sigma
        elif name == "zeta_d1":
            out[far] = -1.0 / (zf * sigma)
        else:
            out[far] = _symbolic.fn(name)(zf, sigma, zeta)
    return float(out[0]) if scalar else out


def evaluate_mp(name, z):
    """mpmath scalar version of evaluate.  The exact-coefficient seam
    series truncates below 1e-40 at its switch point; the closed forms run
    with guard digits to absorb the turning-point cancellation."""
    import mpmath as mp

    z = mp.mpf(z)
    if z - 1 <= SEAM_W_MP and name in _SEAM_MAP:
        series, order = _SEAM_MAP[name]
        return _seam.seam_eval_mp(series, z - 1, order)
    with mp.workdps(mp.mp.dps + 25):
        zeta, sigma = zeta_sigma_closed_mp(z)
        if name == "zeta":
            val = zeta
        elif name == "sigma":
            val = sigma
        elif name == "zeta_d1":
            val = -1 / (z * sigma)
        else:
            val = _symbolic.fn(name, "mpmath")(z, sigma, zeta)
    return +val
