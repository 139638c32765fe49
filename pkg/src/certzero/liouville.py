"""The Liouville change of variables zeta(z) and the weight sigma(z).

zeta is defined for z >= 1 by (2/3)(-zeta)^{3/2} = sqrt(z^2-1) - arcsec(z)
(principal branch, arcsec(z) = arccos(1/z)) and maps [1, inf) onto
(-inf, 0]; sigma = (zeta/(1-z^2))^{1/2} with a removable singularity at the
turning point z = 1, where sigma(1) = 2^{-1/3}.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._eval import evaluate, evaluate_mp, zeta_sigma_closed_mp
from ._seam import SEAM_W

__all__ = [
    "MappedPoint", "zeta_of_z", "sigma_of_z", "zeta_derivatives",
    "z_of_zeta", "mapped_point", "SEAM_W",
]


@dataclass(frozen=True)
class MappedPoint:
    """A z-location with its Liouville frame: zeta, sigma, derivatives."""

    z: float
    zeta: float
    sigma: float
    dzeta: tuple  # d zeta/dz through d^4 zeta/dz^4
    dsigma: float


def _check_z(z):
    z = np.asarray(z, dtype=float)
    if not np.all(np.isfinite(z)) or np.any(z < 1.0):
        raise ValueError("z must be finite and >= 1")
    return z


def zeta_of_z(z):
    """zeta(z) for z >= 1; scalar or array."""
    _check_z(z)
    return evaluate("zeta", z)


def sigma_of_z(z):
    """sigma(z) for z >= 1; scalar or array."""
    _check_z(z)
    return evaluate("sigma", z)


def zeta_derivatives(z, order):
    """d^order zeta / dz^order for order in 1..4."""
    _check_z(z)
    if order not in (1, 2, 3, 4):
        raise ValueError("order must be in 1..4")
    return evaluate(f"zeta_d{order}", z)


def zeta_d4_closed_form(z):
    """The explicit closed form of the fourth derivative (cross-check for
    the chain-rule assembly used by zeta_derivatives)."""
    _check_z(z)
    return evaluate("zeta_d4_closed", z)


def sigma_derivatives(z, order):
    """d^order sigma / dz^order for order in 1..2."""
    _check_z(z)
    if order not in (1, 2):
        raise ValueError("order must be in 1..2")
    return evaluate(f"sigma_d{order}", z)


def mapped_point(z):
    """Bundle z with zeta, sigma and the derivative stack."""
    z = float(z)
    _check_z(z)
    return MappedPoint(
        z=z,
        zeta=zeta_of_z(z),
        sigma=sigma_of_z(z),
        dzeta=tuple(zeta_derivatives(z, k) for k in (1, 2, 3, 4)),
        dsigma=sigma_derivatives(z, 1),
    )


def z_of_zeta(zeta):
    """Inverse map: the unique z >= 1 with zeta_of_z(z) = zeta <= 0.

    Newton with the exact derivative -1/(z sigma), safeguarded by bisection
    on [1, (2/3)|zeta|^{3/2} + 4]; zeta is globally monotone so the bracket
    is certain.
    """
    zeta = float(zeta)
    if not np.isfinite(zeta) or zeta > 0.0:
        raise ValueError("zeta must be finite and <= 0")
    if zeta == 0.0:
        return 1.0
    lo, hi = 1.0, (2.0 / 3.0) * abs(zeta) ** 1.5 + 4.0
    # seeds: turning-point series for small |zeta|, asymptote for large
    if abs(zeta) < 1.0:
        z = 1.0 - 2.0 ** (-1.0 / 3.0) * zeta
    else:
        z = (2.0 / 3.0) * abs(zeta) ** 1.5 + 0.5 * np.pi
    for _ in range(60):
        f = zeta_of_z(z) - zeta
        if f > 0.0:
            lo = z
        else:
            hi = z
        step = f * z * sigma_of_z(z)  # Newton: f' = -1/(z sigma)
        z_new = z + step
        if not lo < z_new < hi:
            z_new = 0.5 * (lo + hi)
        if abs(z_new - z) <= 1e-16 * z:
            z = z_new
            break
        z = z_new
    if abs(zeta_of_z(z) - zeta) > 1e-13 * max(1.0, abs(zeta)):
        raise RuntimeError(f"z_of_zeta did not converge; last iterate {z}")
    return z


def z_of_zeta_mp(zeta):
    """Extended-precision inverse map (mpmath scalar)."""
    from mpmath import mp, mpf

    zeta = mpf(zeta)
    if zeta == 0:
        return mpf(1)
    z = mpf(z_of_zeta(float(zeta)))
    for _ in range(mp.dps // 10 + 3):
        f = evaluate_mp("zeta", z) - zeta
        z = z + f * z * evaluate_mp("sigma", z)
    return z
