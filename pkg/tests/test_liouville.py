"""Liouville map: closed forms, seam branch, inverse, derivatives."""


import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from certzero import liouville

# frozen extended-precision oracles at z = 2 (mpmath, 40 digits)
ZETA_AT_2 = -1.018104888567116020080946
SIGMA_AT_2 = 0.5825532560968470574911146


def test_turning_point_values():
    assert liouville.zeta_of_z(1.0) == 0.0
    assert abs(liouville.sigma_of_z(1.0) - 2.0 ** (-1.0 / 3.0)) < 1e-15


def test_frozen_oracle_z2():
    assert abs(liouville.zeta_of_z(2.0) - ZETA_AT_2) < 1e-14 * abs(ZETA_AT_2)
    assert abs(liouville.sigma_of_z(2.0) - SIGMA_AT_2) < 1e-14 * SIGMA_AT_2


def test_zeta_monotone_decreasing():
    z = np.linspace(1.0, 50.0, 400)
    vals = np.array([liouville.zeta_of_z(t) for t in z])
    assert np.all(np.diff(vals) < 0.0)


@settings(max_examples=200, deadline=None)
@given(st.floats(min_value=1.0 + 1e-8, max_value=1e4))
def test_round_trip(z):
    back = liouville.z_of_zeta(liouville.zeta_of_z(z))
    assert abs(back - z) <= 1e-12 * z


def test_round_trip_at_turning_point():
    assert liouville.z_of_zeta(0.0) == 1.0
    assert liouville.z_of_zeta(-1e-12) == pytest.approx(1.0, abs=1e-11)


def test_zeta_derivative_is_inverse_sigma():
    # d zeta / dz = -1/(z sigma); 4th-order central stencil
    h = 1e-4
    for z in (1.05, 1.2, 1.9, 3.0, 7.0):
        fd = (-liouville.zeta_of_z(z + 2 * h) + 8 * liouville.zeta_of_z(z + h)
              - 8 * liouville.zeta_of_z(z - h)
              + liouville.zeta_of_z(z - 2 * h)) / (12 * h)
        exact = -1.0 / (z * liouville.sigma_of_z(z))
        assert abs(fd - exact) < 1e-9 * abs(exact)


def test_sigma_derivative_identity():
    # d sigma / dz = (2 z^2 sigma^3 - 1) / (2 z zeta)
    h = 1e-4
    for z in (1.1, 1.7, 2.5, 6.0):
        fd = (-liouville.sigma_of_z(z + 2 * h) + 8 * liouville.sigma_of_z(z + h)
              - 8 * liouville.sigma_of_z(z - h)
              + liouville.sigma_of_z(z - 2 * h)) / (12 * h)
        s = liouville.sigma_of_z(z)
        exact = (2 * z * z * s ** 3 - 1.0) / (2 * z * liouville.zeta_of_z(z))
        assert abs(fd - exact) < 1e-8 * abs(exact)
        d1 = liouville.sigma_derivatives(z, 1)
        assert abs(d1 - exact) < 1e-11 * abs(exact)


def test_zeta_d4_closed_vs_chain():
    # the two independent zeta'''' routes; sampled away from the turning
    # point, where the float closed form starts to cancel
    for z in (1.25, 1.6, 2.0, 3.0, 5.0, 10.0):
        closed = liouville.zeta_d4_closed_form(z)
        chain = liouville.zeta_derivatives(z, 4)
        assert abs(closed - chain) <= 1e-10 * abs(closed)


def test_mapped_point_consistency():
    p = liouville.mapped_point(1.5)
    assert p.zeta == liouville.zeta_of_z(1.5)
    assert p.sigma == liouville.sigma_of_z(1.5)


def test_domain_errors():
    with pytest.raises(ValueError):
        liouville.zeta_of_z(0.5)
    with pytest.raises(ValueError):
        liouville.z_of_zeta(1.0)
    with pytest.raises(ValueError):
        liouville.zeta_of_z(float("nan"))
