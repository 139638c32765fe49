"""Independent Bessel oracle: J_nu evaluation and reference zeros.

This module never touches the expansion machinery; it exists to check it.
Standard mode runs on scipy (binary64); extended mode runs on mpmath with
at least 25 significant digits and certifies every returned zero with a
sign change across a final bracket.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.optimize as spo
import scipy.special as sps

__all__ = ["PrecisionPolicy", "STANDARD", "EXTENDED", "bessel_j",
           "reference_zero"]


@dataclass(frozen=True)
class PrecisionPolicy:
    mode: str = "standard"            # "standard" | "extended"
    target_residual: float = 1e-11
    digits: int = 30                  # working digits, extended mode only

    def __post_init__(self):
        if self.mode not in ("standard", "extended"):
            raise ValueError("mode must be 'standard' or 'extended'")


STANDARD = PrecisionPolicy("standard", 1e-11)
EXTENDED = PrecisionPolicy("extended", 1e-24, 30)


def _check_args(nu, x):
    if not (np.isfinite(nu) and 0 < nu <= 200):
        raise ValueError("nu must satisfy 0 < nu <= 200")
    if not (np.isfinite(x) and 0 <= x <= 1e4):
        raise ValueError("x must satisfy 0 <= x <= 1e4")


def bessel_j(nu, x, policy=STANDARD):
    """J_nu(x); float in standard mode, mpf in extended mode."""
    _check_args(nu, x)
    if policy.mode == "standard":
        return float(sps.jv(nu, x))
    from mpmath import mp, besselj, mpf

    with mp.workdps(policy.digits + 10):
        return besselj(mpf(nu), mpf(x))


def _jprime(nu, x):
    # J_nu' = J_{nu-1} - (nu/x) J_nu
    return sps.jv(nu - 1, x) - (nu / x) * sps.jv(nu, x)


def reference_zero(nu, m, policy=STANDARD, seed_bracket=None):
    """The m-th positive zero j_{nu,m}, certified by a sign change.

    The initial bracket comes from `seed_bracket` if given, otherwise from
    a coarse sign scan; refinement is Brent + Newton (standard) or
    mpmath's dedicated zero finder plus a bracket certificate (extended).
    """
    if not (np.isfinite(nu) and nu >= 1):
        raise ValueError("nu must be finite and >= 1")
    m = int(m)
    if m < 1:
        raise ValueError("m must be a positive integer")

    if policy.mode == "extended":
        return _reference_zero_mp(nu, m, policy)

    if seed_bracket is None:
        seed_bracket = _scan_bracket(nu, m)
    lo, hi = seed_bracket
    flo, fhi = sps.jv(nu, lo), sps.jv(nu, hi)
    if flo * fhi >= 0:
        # widen a few times before giving up; a failure here means the
        # caller's enclosure (or the scan) is wrong
        for _ in range(6):
            w = hi - lo
            lo, hi = lo - w, hi + w
            flo, fhi = sps.jv(nu, lo), sps.jv(nu, hi)
            if flo * fhi < 0:
                break
        else:
            raise RuntimeError(f"no sign-change bracket for nu={nu}, m={m}")
    root = spo.brentq(lambda x: sps.jv(nu, x), lo, hi, xtol=1e-13)
    for _ in range(2):
        root -= sps.jv(nu, root) / _jprime(nu, root)
    h = max(2.5e-12, 2.0 * np.spacing(root))
    if not sps.jv(nu, root - h) * sps.jv(nu, root + h) < 0:
        raise RuntimeError(f"certification failed for nu={nu}, m={m}")
    if abs(sps.jv(nu, root)) > policy.target_residual:
        raise RuntimeError(f"residual too large for nu={nu}, m={m}")
    return root


def _scan_bracket(nu, m):
    """Coarse sign scan: walk x upward until the m-th sign change of J_nu."""
    # zeros are spaced by ~pi once oscillation starts near x ~ nu
    x = max(nu, 1e-3)
    step = 0.5
    prev = sps.jv(nu, x)
    crossings = 0
    while x < 1e4 + 10:
        xn = x + step
        cur = sps.jv(nu, xn)
        if prev * cur < 0:
            crossings += 1
            if crossings == m:
                return x, xn
        prev, x = cur, xn
    raise RuntimeError(f"zero j_{{{nu},{m}}} not found below 1e4")


def _reference_zero_mp(nu, m, policy):
    from mpmath import mp, besselj, besseljzero, mpf

    with mp.workdps(policy.digits):
        j = besseljzero(mpf(nu), m)
    # certificate: sign change across a width-1e-20 bracket, evaluated
    # with enough guard digits that the endpoint values are trustworthy
    h = mpf("5e-21")
    with mp.workdps(policy.digits + 15):
        f_lo = besselj(mpf(nu), j - h)
        f_hi = besselj(mpf(nu), j + h)
        f_at = besselj(mpf(nu), j)
    if not (f_lo * f_hi < 0):
        raise RuntimeError(f"certification failed for nu={nu}, m={m}")
    if abs(f_at) > mpf(policy.target_residual) * max(1, abs(j)):
        raise RuntimeError(f"residual too large for nu={nu}, m={m}")
    return j
