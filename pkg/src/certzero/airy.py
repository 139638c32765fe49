"""Airy evaluation, negative zeros, and the Qu-Wong interval data.

Point evaluation is delegated to scipy.special.airy, which meets the
accuracy contract on the needed domain [-200, 2] (verified against an
extended-precision oracle in the test suite).  The zero records combine
the McMahon-type approximation a_{m,0} = -{(3/8) pi (4m-1)}^{2/3} with a
Newton-refined true zero and the interval radii

    a_m - r_m^- = a_{m,0} (1 + (0.01 + 0.03 delta_m)/(4m-1)),
    a_m + r_m^+ = a_{m,0} (1 - 0.01/(4m-1)),

where delta_m = 1 for m = 1, 2 and 0 otherwise.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass

import numpy as np
import scipy.special as sps

__all__ = [
    "AiryZeroRecord", "airy_ai", "airy_bi", "airy_ai_prime",
    "modulus_M", "mcmahon_zero", "airy_zero", "quwong_minima",
]


@dataclass(frozen=True)
class AiryZeroRecord:
    m: int
    a_m: float
    a_m0: float
    r_minus: float
    r_plus: float


def airy_ai(x):
    return sps.airy(x)[0]


def airy_ai_prime(x):
    return sps.airy(x)[1]


def airy_bi(x):
    return sps.airy(x)[2]


def modulus_M(x):
    """Airy modulus (Ai^2 + Bi^2)^{1/2}; increasing, ~ pi^{-1/2}|x|^{-1/4}
    as x -> -inf."""
    ai, _, bi, _ = sps.airy(x)
    return np.hypot(ai, bi)


def mcmahon_zero(m):
    """McMahon-type approximation to the m-th negative Airy zero."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    return -((3.0 / 8.0) * math.pi * (4 * m - 1)) ** (2.0 / 3.0)


_zero_cache: dict[int, AiryZeroRecord] = {}
_zero_lock = threading.Lock()


def airy_zero(m):
    """Record for the m-th negative zero of Ai; memoized."""
    m = int(m)
    rec = _zero_cache.get(m)
    if rec is not None:
        return rec
    a_m0 = mcmahon_zero(m)
    a = a_m0
    for _ in range(50):
        ai, aip, _, _ = sps.airy(a)
        step = ai / aip
        a -= step
        if abs(step) <= 1e-15 * abs(a):
            break
    if abs(airy_ai(a)) > 1e-12:
        raise RuntimeError(f"Airy zero refinement failed at m={m}")
    delta = 1.0 if m in (1, 2) else 0.0
    r_minus = a - a_m0 * (1.0 + (0.01 + 0.03 * delta) / (4 * m - 1))
    r_plus = a_m0 * (1.0 - 0.01 / (4 * m - 1)) - a
    rec = AiryZeroRecord(m=m, a_m=a, a_m0=a_m0, r_minus=r_minus, r_plus=r_plus)
    with _zero_lock:
        _zero_cache[m] = rec
    return rec


def _golden_min(f, lo, hi, tol=1e-12):
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - inv_phi * (b - a)
    d = a + inv_phi * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x)


def quwong_minima(m):
    """(endpoint_min, derivative_min) over [a_m - r_m^-, a_m + r_m^+].

    endpoint_min is min |Ai| at the interval ends; derivative_min is the
    minimum of |Ai'| over the interval (512-point grid, then golden-section
    refinement around the grid minimum).
    """
    rec = airy_zero(m)
    lo, hi = rec.a_m - rec.r_minus, rec.a_m + rec.r_plus
    endpoint_min = min(abs(airy_ai(lo)), abs(airy_ai(hi)))
    grid = np.linspace(lo, hi, 512)
    vals = np.abs(sps.airy(grid)[1])
    k = int(np.argmin(vals))
    glo = grid[max(k - 1, 0)]
    ghi = grid[min(k + 1, len(grid) - 1)]
    _, derivative_min = _golden_min(lambda x: abs(airy_ai_prime(x)), glo, ghi)
    return endpoint_min, derivative_min
