"""Certified zero enclosures from the three-term expansion.

For nu >= 1 and m >= 1 the main theorem gives

    (z_{m,3}/nu^6)(0.969746 - chi_m/nu^{5/3})
        < j_{nu,m}/nu - bold_z_{nu,m}
        < (z_{m,3}/nu^6)(1.013023 + chi_m/nu^{5/3}),

with bold_z = z_{m,0} + z_{m,1}/nu^2 + z_{m,2}/nu^4 and
chi_m = 2.297225 sigma(1.01354 z_{m,0}) / |a_{m,0}|^{1/2}.  The theorem
constants are stored as the paper's decimal literals, never recomputed.

Enclosure widths shrink like z_{m,3}/nu^6, which for large (nu, m) drops
below binary64 resolution relative to j; `precise=True` therefore runs the
whole assembly under mpmath.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import airy, expansion, liouville
from ._eval import evaluate_mp

__all__ = [
    "ExpansionCoefficients", "ZeroEnclosure", "solve_zm0", "point_estimate",
    "chi", "enclosure", "F_m", "zhat_root", "coefficients",
]

LOWER_CONST = "0.969746"
UPPER_CONST = "1.013023"
CHI_CONST = "2.297225"
SIGMA_ARG_FACTOR = "1.01354"


@dataclass(frozen=True)
class ExpansionCoefficients:
    nu: float
    m: int
    zm0: float
    zm1: float
    zm2: float
    zm3: float
    zeta_m0: float
    sigma_m0: float


@dataclass(frozen=True)
class ZeroEnclosure:
    """Certified interval (point + lower_offset, point + upper_offset)."""

    nu: float
    m: int
    point: float
    lower_offset: float
    upper_offset: float
    scale: str = "j"  # "j" encloses j_{nu,m}; "z" encloses j_{nu,m}/nu

    @staticmethod
    def _add(a, b):
        # mp fields must not be rounded at the ambient working precision:
        # the interval can be narrower than 1 ulp of the float sum
        if isinstance(a, float) and isinstance(b, float):
            return a + b
        from mpmath import fadd

        return fadd(a, b, exact=True)

    @property
    def lower(self):
        return self._add(self.point, self.lower_offset)

    @property
    def upper(self):
        return self._add(self.point, self.upper_offset)

    @property
    def width(self):
        return self._add(self.upper_offset, -self.lower_offset)


def _check(nu, m):
    if not (np.isfinite(nu) and nu >= 1.0):
        raise ValueError("nu must be finite and >= 1 (theorem hypothesis)")
    if int(m) != m or m < 1:
        raise ValueError("m must be a positive integer")


def solve_zm0(nu, m):
    """z_{m,0}: the solution of zeta(z) = nu^{-2/3} a_m."""
    _check(nu, m)
    return liouville.z_of_zeta(airy.airy_zero(m).a_m / nu ** (2.0 / 3.0))


def coefficients(nu, m):
    _check(nu, m)
    zm0 = solve_zm0(nu, m)
    return ExpansionCoefficients(
        nu=float(nu), m=int(m), zm0=zm0,
        zm1=expansion.zhat(1, zm0),
        zm2=expansion.zhat(2, zm0),
        zm3=expansion.zhat(3, zm0),
        zeta_m0=liouville.zeta_of_z(zm0),
        sigma_m0=liouville.sigma_of_z(zm0),
    )


def point_estimate(nu, m):
    """bold_z_{nu,m} = z_{m,0} + z_{m,1}/nu^2 + z_{m,2}/nu^4."""
    c = coefficients(nu, m)
    return c.zm0 + c.zm1 / nu ** 2 + c.zm2 / nu ** 4


def chi(nu, m):
    """chi_m = 2.297225 sigma(1.01354 z_{m,0}) / |a_{m,0}|^{1/2}."""
    _check(nu, m)
    zm0 = solve_zm0(nu, m)
    sigma = liouville.sigma_of_z(float(SIGMA_ARG_FACTOR) * zm0)
    return float(CHI_CONST) * sigma / abs(airy.airy_zero(m).a_m0) ** 0.5


def enclosure(nu, m, scale="j", precise=False):
    """Certified enclosure of j_{nu,m} (scale 'j') or j_{nu,m}/nu ('z')."""
    _check(nu, m)
    if scale not in ("j", "z"):
        raise ValueError("scale must be 'j' or 'z'")
    if precise:
        return _enclosure_mp(nu, m, scale)
    c = coefficients(nu, m)
    point = c.zm0 + c.zm1 / nu ** 2 + c.zm2 / nu ** 4
    chi_term = chi(nu, m) / nu ** (5.0 / 3.0)
    base = c.zm3 / nu ** 6
    lower = base * (float(LOWER_CONST) - chi_term)
    upper = base * (float(UPPER_CONST) + chi_term)
    mult = nu if scale == "j" else 1.0
    return ZeroEnclosure(nu=float(nu), m=int(m), point=mult * point,
                         lower_offset=mult * lower, upper_offset=mult * upper,
                         scale=scale)


def _enclosure_mp(nu, m, scale):
    from mpmath import mp, mpf

    with mp.workdps(30):
        nu_mp = mpf(nu)
        a = airy.airy_zero(m)
        # the Airy zero itself redone in extended precision
        from mpmath import airyaizero

        a_m = airyaizero(m)
        zm0 = liouville.z_of_zeta_mp(a_m / nu_mp ** (mpf(2) / 3))
        zm1 = evaluate_mp("zhat1", zm0)
        zm2 = evaluate_mp("zhat2", zm0)
        zm3 = evaluate_mp("zhat3", zm0)
        point = zm0 + zm1 / nu_mp ** 2 + zm2 / nu_mp ** 4
        sigma = evaluate_mp("sigma", mpf(SIGMA_ARG_FACTOR) * zm0)
        chi_m = mpf(CHI_CONST) * sigma / abs(mpf(a.a_m0)) ** mpf("0.5")
        chi_term = chi_m / nu_mp ** (mpf(5) / 3)
        base = zm3 / nu_mp ** 6
        lower = base * (mpf(LOWER_CONST) - chi_term)
        upper = base * (mpf(UPPER_CONST) + chi_term)
        mult = nu_mp if scale == "j" else mpf(1)
        return ZeroEnclosure(nu=float(nu), m=int(m), point=mult * point,
                             lower_offset=mult * lower,
                             upper_offset=mult * upper, scale=scale)


def F_m(nu, z, m):
    """F_m(nu, z) = Z3(nu, z) - a_m nu^{-2/3}; strictly decreasing in z."""
    _check(nu, m)
    return expansion.script_Z3(nu, z) - airy.airy_zero(m).a_m / nu ** (2.0 / 3.0)


def zhat_root(nu, m):
    """The unique root of F_m; lies in (z_{m,0}, z_{m,0} + 1/73)."""
    import scipy.optimize as spo

    _check(nu, m)
    zm0 = solve_zm0(nu, m)
    lo, hi = zm0, zm0 + 1.0 / 73.0
    root = spo.brentq(lambda z: F_m(nu, z, m), lo, hi, xtol=1e-15)
    # one Newton polish with the exact derivative of Z3
    root -= F_m(nu, root, m) / expansion.script_Z3_z_derivative(nu, root)
    return root


def zhat_root_mp(nu, m):
    """Extended-precision zhat root (Newton from the float64 value)."""
    from mpmath import mp, mpf, airyaizero

    with mp.workdps(30):
        nu_mp = mpf(nu)
        a_m = airyaizero(m)
        target = a_m / nu_mp ** (mpf(2) / 3)
        z = mpf(zhat_root(nu, m))
        for _ in range(6):
            f = expansion.script_Z3_mp(nu_mp, z) - target
            d = (-1 / (z * evaluate_mp("sigma", z))
                 + sum(evaluate_mp(f"ups{j}_d1", z) / nu_mp ** (2 * j)
                       for j in (1, 2, 3)))
            z = z - f / d
        return z
