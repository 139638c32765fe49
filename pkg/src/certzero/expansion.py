"""Coefficient functions of the three-term expansion.

zhat_1 is the printed closed form (z sigma/48 zeta^2){10 sigma^3 - 6 sigma
zeta - 5}; zhat_2 and zhat_3 are assembled from the same perturbative root
construction that generates them (see _symbolic / _seam), which reproduces
all their printed turning-point values and the z -> inf asymptote
zhat_3 ~ (6673/58320) z^{-5}.  Upsilon_1..3 are the printed closed forms;
eta(nu, z) = sum_j Upsilon_j(z)/nu^{2j} and Z3(nu, z) = zeta + eta.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._eval import evaluate, evaluate_mp

__all__ = [
    "UpsilonSet", "CoefficientSet", "zhat", "zhat_derivative", "upsilon",
    "upsilon_derivatives", "upsilon_zeta_derivatives", "eta",
    "eta_z_derivative", "eta_zeta_derivatives", "script_Z3",
    "script_Z3_z_derivative",
]


@dataclass(frozen=True)
class UpsilonSet:
    """Upsilon_1..3 at a point with z-derivatives through order 3."""

    z: float
    values: tuple
    d1: tuple
    d2: tuple
    d3: tuple


@dataclass(frozen=True)
class CoefficientSet:
    """zhat_1..3 at a point with first z-derivatives."""

    z: float
    zhat1: float
    zhat2: float
    zhat3: float
    d1: tuple


def _check(z):
    z = np.asarray(z, dtype=float)
    if not np.all(np.isfinite(z)) or np.any(z < 1.0):
        raise ValueError("z must be finite and >= 1")


def _check_j(j):
    if j not in (1, 2, 3):
        raise ValueError("j must be in 1..3")


def zhat(j, z):
    """zhat_j(z) for j in 1..3, z >= 1."""
    _check_j(j)
    _check(z)
    return evaluate(f"zhat{j}", z)


def zhat_derivative(j, z):
    """d zhat_j / dz."""
    _check_j(j)
    _check(z)
    return evaluate(f"zhat{j}_d1", z)


def upsilon(j, z):
    """Upsilon_j(z) for j in 1..3, z >= 1."""
    _check_j(j)
    _check(z)
    return evaluate(f"ups{j}", z)


def upsilon_derivatives(j, z, order):
    """d^order Upsilon_j / dz^order, order in 1..3."""
    _check_j(j)
    _check(z)
    if order not in (1, 2, 3):
        raise ValueError("order must be in 1..3")
    return evaluate(f"ups{j}_d{order}", z)


def upsilon_zeta_derivatives(j, z, order):
    """d^order Upsilon_j / dzeta^order (dots), order in 1..3."""
    _check_j(j)
    _check(z)
    if order not in (1, 2, 3):
        raise ValueError("order must be in 1..3")
    return evaluate(f"ups{j}_dot{order}", z)


def upsilon_set(z):
    z = float(z)
    return UpsilonSet(
        z=z,
        values=tuple(upsilon(j, z) for j in (1, 2, 3)),
        d1=tuple(upsilon_derivatives(j, z, 1) for j in (1, 2, 3)),
        d2=tuple(upsilon_derivatives(j, z, 2) for j in (1, 2, 3)),
        d3=tuple(upsilon_derivatives(j, z, 3) for j in (1, 2, 3)),
    )


def coefficient_set(z):
    z = float(z)
    return CoefficientSet(
        z=z,
        zhat1=zhat(1, z), zhat2=zhat(2, z), zhat3=zhat(3, z),
        d1=tuple(zhat_derivative(j, z) for j in (1, 2, 3)),
    )


def _check_nu(nu):
    if not np.isfinite(nu) or nu < 1.0:
        raise ValueError("nu must be finite and >= 1")


def eta(nu, z):
    """eta(nu, z) = sum_j Upsilon_j(z) / nu^{2j}."""
    _check_nu(nu)
    _check(z)
    return sum(evaluate(f"ups{j}", z) / nu ** (2 * j) for j in (1, 2, 3))


def eta_z_derivative(nu, z, order):
    """d^order eta / dz^order, order in 1..3."""
    _check_nu(nu)
    _check(z)
    if order not in (1, 2, 3):
        raise ValueError("order must be in 1..3")
    return sum(evaluate(f"ups{j}_d{order}", z) / nu ** (2 * j)
               for j in (1, 2, 3))


def eta_zeta_derivatives(nu, z, order):
    """d^order eta / dzeta^order (the dotted derivatives), order in 1..3."""
    _check_nu(nu)
    _check(z)
    if order not in (1, 2, 3):
        raise ValueError("order must be in 1..3")
    return sum(evaluate(f"ups{j}_dot{order}", z) / nu ** (2 * j)
               for j in (1, 2, 3))


def script_Z3(nu, z):
    """Z3(nu, z) = zeta(z) + eta(nu, z)."""
    _check_nu(nu)
    _check(z)
    return evaluate("zeta", z) + eta(nu, z)


def script_Z3_z_derivative(nu, z):
    """dZ3/dz = -1/(z sigma) + eta'; strictly below -1/(z sigma) < 0."""
    _check_nu(nu)
    _check(z)
    return evaluate("zeta_d1", z) + eta_z_derivative(nu, z, 1)


def script_Z3_mp(nu, z):
    from mpmath import mpf

    nu = mpf(nu)
    return evaluate_mp("zeta", z) + sum(
        evaluate_mp(f"ups{j}", z) / nu ** (2 * j) for j in (1, 2, 3))
