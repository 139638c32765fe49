"""Independent Bessel zero oracle: evaluation, bracketing, policies."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from certzero import oracle

# frozen mpmath besseljzero references (40 digits)
FROZEN = {
    (1.0, 1): 3.831705970207512315614436,
    (1.0, 5): 16.47063005087763281255246,
    (2.0, 3): 11.61984117214905942709414,
    (5.0, 10): 38.15986856196713209707748,
    (10.0, 1): 14.47550068655454123845164,
}


def test_frozen_reference_zeros():
    for (nu, m), ref in FROZEN.items():
        got = oracle.reference_zero(nu, m)
        assert abs(got - ref) < 1e-12 * ref


def test_standard_vs_extended():
    for (nu, m) in FROZEN:
        std = oracle.reference_zero(nu, m, oracle.STANDARD)
        ext = float(oracle.reference_zero(nu, m, oracle.EXTENDED))
        assert abs(std - ext) < 1e-11 * ext


def test_zero_residual():
    for (nu, m) in ((1.0, 1), (3.0, 7)):
        root = oracle.reference_zero(nu, m)
        assert abs(oracle.bessel_j(nu, root)) < 1e-11


def test_recurrence_identity():
    # J_{nu-1}(x) + J_{nu+1}(x) = (2 nu / x) J_nu(x)
    for nu in (1.5, 3.0, 10.0):
        for x in (2.0, 7.5, 40.0):
            lhs = oracle.bessel_j(nu - 1, x) + oracle.bessel_j(nu + 1, x)
            rhs = 2.0 * nu / x * oracle.bessel_j(nu, x)
            assert abs(lhs - rhs) < 1e-12


def test_seed_bracket_respected():
    ref = oracle.reference_zero(1.0, 1)
    got = oracle.reference_zero(1.0, 1, seed_bracket=(3.5, 4.2))
    assert abs(got - ref) < 1e-12


@settings(max_examples=40, deadline=None)
@given(st.floats(min_value=1.0, max_value=30.0),
       st.integers(min_value=1, max_value=8))
def test_zeros_increase_in_m(nu, m):
    assert oracle.reference_zero(nu, m) < oracle.reference_zero(nu, m + 1)


def test_policy_validation():
    with pytest.raises(ValueError):
        oracle.PrecisionPolicy("fast")
    with pytest.raises(ValueError):
        oracle.reference_zero(0.5, 1)
    with pytest.raises(ValueError):
        oracle.reference_zero(1.0, 0)
    with pytest.raises(ValueError):
        oracle.bessel_j(1.0, -1.0)
