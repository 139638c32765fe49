"""Exact Taylor branches about the turning point z = 1.

Every coefficient function in this package (zeta, sigma, the zhat and
Upsilon families, psi, and their derivatives) is a rational expression in
z, sigma and 1/zeta whose closed form is indeterminate at z = 1.  This
module builds the Taylor series of each of them in w = z - 1 with exact
rational arithmetic, so the seam branch carries no cancellation error at
all; coefficients are folded to float once at table-build time.

Values have the form 2^(e/3) * P(w) with e in {0, 1, 2} (the cube-root
grading visible in the printed leading values such as sigma(1) = 2^(-1/3)),
so series are stored as (e, coefficients) pairs.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import numpy as np

# Two seam half-widths.  Float closed forms lose up to 13 digits to
# cancellation as z -> 1, so the float branch switch sits at w = 3/8 where
# the order-36 series still truncates below 1e-12.  The extended-precision
# path runs closed forms with guard digits and can switch much earlier.
SEAM_W = 0.375        # float evaluation switch; closed forms cancel badly below
SEAM_W_MP = 1.0 / 16.0  # high-precision switch; mp closed forms are fine beyond

_ORDER = 48   # internal working order; survives division by zeta^8
_KEEP = 36    # published order; truncation stays below 1e-12 at w = 3/8

_F = Fraction


def _mul(a, b, n=_ORDER):
    c = [_F(0)] * (n + 1)
    for i, ai in enumerate(a):
        if i > n:
            break
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if i + j > n:
                break
            c[i + j] += ai * bj
    return c


def _add(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else _F(0)) + (b[i] if i < len(b) else _F(0))
            for i in range(n)]


def _diff(a):
    return [a[i + 1] * (i + 1) for i in range(len(a) - 1)]


def _inv(a, n=_ORDER):
    b = [_F(0)] * (n + 1)
    b[0] = 1 / a[0]
    for k in range(1, n + 1):
        s = _F(0)
        for i in range(1, k + 1):
            if i < len(a):
                s += a[i] * b[k - i]
        b[k] = -s / a[0]
    return b


def _sqrt1(a, n=_ORDER):
    # square root of a series with a[0] == 1
    t = [_F(0)] * (n + 1)
    t[0] = _F(1)
    for k in range(1, n + 1):
        s = sum(t[i] * t[k - i] for i in range(1, k))
        ak = a[k] if k < len(a) else _F(0)
        t[k] = (ak - s) / 2
    return t


class _G:
    """Graded series: value = 2^(e/3) * sum c[n] w^n, e reduced mod 3."""

    __slots__ = ("e", "c")

    def __init__(self, e, c):
        q, r = divmod(e, 3)
        self.e = r
        self.c = [x * _F(2) ** q for x in c]

    def __add__(self, other):
        assert self.e == other.e
        return _G(self.e, _add(self.c, other.c))

    def __sub__(self, other):
        return self + _G(other.e, [-x for x in other.c])

    def __neg__(self):
        return _G(self.e, [-x for x in self.c])

    def __mul__(self, other):
        if isinstance(other, _G):
            return _G(self.e + other.e, _mul(self.c, other.c))
        return _G(self.e, [x * _F(other) for x in self.c])

    __rmul__ = __mul__

    def __pow__(self, k):
        r = _G(0, [_F(1)])
        for _ in range(k):
            r = r * self
        return r


def _pole_div(a, b, p):
    """a / b where both have an exact zero of order p at w = 0.

    The leading coefficients must cancel identically; that is asserted, not
    rounded away, which is what catches transcription errors in the inputs.
    """
    assert all(x == 0 for x in a.c[:p]), "numerator pole mismatch"
    assert all(x == 0 for x in b.c[:p]) and b.c[p] != 0
    return _G(a.e - b.e, _mul(a.c[p:], _inv(b.c[p:])))


def _gdiff(a):
    return _G(a.e, _diff(a.c) + [_F(0)])


def _build_graded():
    # zeta = -2^{1/3} s(w):  s (s')^2 = (z^2-1)/(2 z^2), s(0)=0, s'(0)=1.
    n = _ORDER
    z2m1 = [_F(0), _F(2), _F(1)]
    z2 = [_F(1), _F(2), _F(1)]
    rhs = [c / 2 for c in _mul(z2m1, _inv(z2))]
    s = [_F(0), _F(1)] + [_F(0)] * (n - 1)
    for k in range(2, n + 1):
        sp = _diff(s) + [_F(0)]
        prod = _mul(s, _mul(sp, sp))
        s[k] = (rhs[k] - prod[k]) / (1 + 2 * k)
    # sigma = 2^{-1/3} t(w): t^2 = 2 (s/w) / (2 + w)
    s_over_w = s[1:] + [_F(0)]
    t = _sqrt1(_mul([2 * c for c in s_over_w], _inv([_F(2), _F(1)])))

    ZT = _G(1, [-c for c in s])
    SG = _G(2, [c / 2 for c in t])
    Z = _G(0, [_F(1), _F(1)])

    def K(x):
        return _G(0, [_F(x)])

    U1 = _pole_div(10 * SG ** 3 - 6 * SG * ZT - K(5), ZT ** 2 * K(48), 2)
    U2 = _pole_div(
        11050 * SG ** 9 - 19890 * SG ** 7 * ZT + 9558 * SG ** 5 * ZT ** 2
        - 125 * SG ** 6 + 150 * SG ** 4 * ZT - 45 * SG ** 2 * ZT ** 2
        - 250 * SG ** 3 * (3 * ZT ** 3 - K(2)) - 300 * SG * ZT - K(1600),
        ZT ** 5 * K(11520), 5)
    U3 = _pole_div(
        156539250 * SG ** 15 - 469617750 * SG ** 13 * ZT
        + 509154660 * SG ** 11 * ZT ** 2 - 580125 * SG ** 12
        + 1392300 * SG ** 10 * ZT - 1128330 * SG ** 8 * ZT ** 2
        - 140 * SG ** 9 * (1681389 * ZT ** 3 - K(8350))
        + 90 * SG ** 7 * ZT * (450441 * ZT ** 3 - K(23380))
        - 378 * SG ** 5 * ZT ** 2 * (3219 * ZT ** 3 - K(2680))
        + 147 * SG ** 6 * (2316 * ZT ** 3 - K(625))
        - 7875 * SG ** 4 * ZT * (3 * ZT ** 3 - K(14))
        - 33075 * SG ** 2 * ZT ** 2
        - 6720 * SG ** 3 * (12 * ZT ** 3 - K(125))
        - 504000 * SG * ZT - K(5398750),
        ZT ** 8 * K(5806080), 8)

    ZS = Z * SG
    half = _G(0, [_F(1, 2)])
    sixth = _G(0, [_F(1, 6)])
    zpp = _gdiff(_gdiff(ZT))
    zppp = _gdiff(zpp)
    U1p, U2p = _gdiff(U1), _gdiff(U2)
    U1pp = _gdiff(U1p)
    # zhat_2 and zhat_3 from the perturbative root expansion of
    # Z3(nu, z) = a_m nu^{-2/3}; zhat_1 is the printed closed form.
    C1 = ZS * U1
    C2 = ZS * (half * C1 * C1 * zpp + C1 * U1p + U2)
    C3 = ZS * (sixth * C1 ** 3 * zppp + C1 * C2 * zpp
               + half * C1 * C1 * U1pp + C2 * U1p + C1 * U2p + U3)

    # psi = 5/(16 zeta^2) + zeta z^2 (z^2+4) / (4 (z^2-1)^3); both terms
    # diverge at w = 0 but the w^{-2} and w^{-1} parts cancel exactly.
    w2 = _G(0, [_F(0), _F(0), _F(1)])
    a_term = _pole_div(5 * w2, ZT ** 2 * K(16), 2)          # 5 w^2/(16 zt^2)
    zt_over_w = _G(ZT.e, ZT.c[1:] + [_F(0)])
    wp2_3 = _mul([_F(2), _F(1)], _mul([_F(2), _F(1)], [_F(2), _F(1)]))
    b_term = zt_over_w * Z ** 2 * (Z ** 2 + K(4)) * _G(0, [c / 4 for c in _inv(wp2_3)])
    combined = a_term + b_term
    assert combined.c[0] == 0 and combined.c[1] == 0, "psi pole cancellation"
    PSI = _G(combined.e, combined.c[2:] + [_F(0), _F(0)])

    series = {
        "zeta": ZT, "sigma": SG,
        "ups1": U1, "ups2": U2, "ups3": U3,
        "zhat1": C1, "zhat2": C2, "zhat3": C3,
        "psi": PSI,
    }
    # zeta-derivative (dot) series for the Upsilons: dot = -z sigma d/dz
    for j, u in (("1", U1), ("2", U2), ("3", U3)):
        d = u
        for k in range(1, 4):
            d = -1 * (ZS * _gdiff(d))
            series[f"ups{j}_dot{k}"] = d
    return series


@lru_cache(maxsize=1)
def tables():
    """name -> (e, float coefficient array) for all seam series."""
    out = {}
    for name, g in _build_graded().items():
        out[name] = (g.e, np.array([float(c) for c in g.c[:_KEEP + 1]]))
    return out


@lru_cache(maxsize=1)
def exact_tables():
    """name -> (e, tuple of Fractions); used by the extended-precision path."""
    out = {}
    for name, g in _build_graded().items():
        out[name] = (g.e, tuple(g.c[:_KEEP + 1]))
    return out


def seam_eval(name, w, deriv=0):
    """Evaluate the named series (or its deriv-th w-derivative) at w = z-1."""
    e, c = tables()[name]
    c = c.copy()
    for _ in range(deriv):
        c = c[1:] * np.arange(1, len(c))
    w = np.asarray(w, dtype=float)
    acc = np.zeros_like(w)
    for ck in c[::-1]:
        acc = acc * w + ck
    return acc * 2.0 ** (e / 3.0)


def seam_eval_mp(name, w, deriv=0):
    """Same, scalar mpmath evaluation with exact coefficients."""
    from mpmath import mp, mpf

    e, cf = exact_tables()[name]
    c = list(cf)
    for _ in range(deriv):
        c = [c[i + 1] * (i + 1) for i in range(len(c) - 1)]
    w = mpf(w)
    acc = mpf(0)
    for ck in c[::-1]:
        acc = acc * w + mpf(ck.numerator) / ck.denominator
    return acc * mpf(2) ** (mpf(e) / 3)
