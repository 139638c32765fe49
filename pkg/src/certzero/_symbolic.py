"""Closed-form derivative engine for the coefficient functions.

The zhat and Upsilon families are rational in (z, sigma, 1/zeta).  Their z
and zeta derivatives stay inside that ring because dzeta/dz = -1/(z sigma)
and dsigma/dz = (2 z^2 sigma^3 - 1)/(2 z zeta).  We build each needed
derivative once with sympy's total-derivative operator and lambdify it for
both numpy (vectorized scans) and mpmath (the extended-precision engine
path); callers supply (z, sigma, zeta) from the liouville module.
"""

from __future__ import annotations

from functools import lru_cache


@lru_cache(maxsize=1)
def _expressions():
    import sympy as sp

    z, sg, zt = sp.symbols("z sg zt")
    dzt = -1 / (z * sg)
    dsg = (2 * z ** 2 * sg ** 3 - 1) / (2 * z * zt)

    def D(e):
        # total d/dz through the sigma(z), zeta(z) dependence
        return sp.diff(e, z) + sp.diff(e, zt) * dzt + sp.diff(e, sg) * dsg

    def Ddot(e):
        # d/dzeta = -z sigma d/dz
        return -z * sg * D(e)

    U1 = (10 * sg ** 3 - 6 * sg * zt - 5) / (48 * zt ** 2)
    U2 = (11050 * sg ** 9 - 19890 * sg ** 7 * zt + 9558 * sg ** 5 * zt ** 2
          - 125 * sg ** 6 + 150 * sg ** 4 * zt - 45 * sg ** 2 * zt ** 2
          - 250 * (3 * zt ** 3 - 2) * sg ** 3 - 300 * sg * zt
          - 1600) / (11520 * zt ** 5)
    U3 = (156539250 * sg ** 15 - 469617750 * sg ** 13 * zt
          + 509154660 * sg ** 11 * zt ** 2 - 580125 * sg ** 12
          + 1392300 * sg ** 10 * zt - 1128330 * sg ** 8 * zt ** 2
          - 140 * (1681389 * zt ** 3 - 8350) * sg ** 9
          + 90 * (450441 * zt ** 3 - 23380) * sg ** 7 * zt
          - 378 * (3219 * zt ** 3 - 2680) * sg ** 5 * zt ** 2
          + 147 * (2316 * zt ** 3 - 625) * sg ** 6
          - 7875 * (3 * zt ** 3 - 14) * sg ** 4 * zt
          - 33075 * sg ** 2 * zt ** 2
          - 6720 * (12 * zt ** 3 - 125) * sg ** 3
          - 504000 * sg * zt - 5398750) / (5806080 * zt ** 8)

    # zhat_1 printed; zhat_2/zhat_3 rebuilt from the root expansion of
    # Z3(nu, z) = a_m nu^{-2/3} (same construction as the seam tables).
    C1 = z * sg * U1
    C2 = z * sg * (C1 ** 2 * D(D(zt)) / 2 + C1 * D(U1) + U2)
    C3 = z * sg * (C1 ** 3 * D(D(D(zt))) / 6 + C1 * C2 * D(D(zt))
                   + C1 ** 2 * D(D(U1)) / 2 + C2 * D(U1) + C1 * D(U2) + U3)

    psi = 5 / (16 * zt ** 2) + zt * z ** 2 * (z ** 2 + 4) / (4 * (z ** 2 - 1) ** 3)

    zeta4_closed = (6 / (z ** 4 * sg)
                    + (6 * z ** 2 * sg ** 3 - 11) / (2 * z ** 4 * sg ** 2 * zt)
                    + (6 - 5 * z ** 2 * sg ** 3) / (z ** 4 * sg ** 3 * zt ** 2)
                    + (2 * z ** 2 * sg ** 3 - 1)
                    * (3 * z ** 4 * sg ** 6 + 2 * z ** 2 * sg ** 3 + 7)
                    / (2 * z ** 4 * sg ** 4 * zt ** 3))

    exprs = {"psi": psi, "zeta_d4_closed": zeta4_closed,
             "sigma_d1": dsg, "sigma_d2": D(dsg)}
    d = dzt
    for k in (2, 3, 4):
        d = D(d)
        exprs[f"zeta_d{k}"] = d
    for j, u in (("1", U1), ("2", U2), ("3", U3)):
        exprs[f"ups{j}"] = u
        dz = u
        for k in (1, 2, 3):
            dz = D(dz)
            exprs[f"ups{j}_d{k}"] = dz
        dd = u
        for k in (1, 2, 3):
            dd = Ddot(dd)
            exprs[f"ups{j}_dot{k}"] = dd
    for j, c in (("1", C1), ("2", C2), ("3", C3)):
        exprs[f"zhat{j}"] = c
        exprs[f"zhat{j}_d1"] = D(c)
    return (z, sg, zt), exprs


@lru_cache(maxsize=None)
def fn(name, backend="numpy"):
    """Lambdified (z, sigma, zeta) -> value for the named expression."""
    import sympy as sp

    syms, exprs = _expressions()
    return sp.lambdify(syms, exprs[name], backend)


def names():
    return sorted(_expressions()[1])
