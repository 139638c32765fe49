"""Enclosure engine: coefficients, window constants, certified intervals."""

import pytest
from hypothesis import given, settings, strategies as st

from certzero import engine, oracle


def test_enclosure_invariants():
    # both window offsets are positive: the point estimate sits just below
    # the certified interval
    e = engine.enclosure(2.0, 3)
    assert 0.0 < e.lower_offset < e.upper_offset
    assert e.point < e.lower < e.upper
    assert e.width == pytest.approx(e.upper - e.lower, rel=1e-12)


def test_scale_relation():
    ej = engine.enclosure(3.0, 2, scale="j")
    ez = engine.enclosure(3.0, 2, scale="z")
    assert ej.point == pytest.approx(3.0 * ez.point, rel=1e-14)
    assert ej.width == pytest.approx(3.0 * ez.width, rel=1e-12)


def test_containment_small_grid():
    for nu in (1.0, 2.0, 7.5):
        for m in (1, 2, 5, 12):
            e = engine.enclosure(nu, m)
            ref = oracle.reference_zero(nu, m)
            assert e.lower < ref < e.upper, (nu, m)


def test_precise_path_agrees():
    for (nu, m) in ((1.0, 1), (2.0, 3), (10.0, 7)):
        e0 = engine.enclosure(nu, m)
        e1 = engine.enclosure(nu, m, precise=True)
        assert float(e1.point) == pytest.approx(e0.point, rel=1e-12)
        assert float(e1.lower) == pytest.approx(e0.lower, rel=1e-12)


def test_precise_path_resolves_thin_intervals():
    # at nu=1, m=44 the float64 interval is a few ulps wide; the extended
    # path must still certify strict containment
    ref = oracle.reference_zero(1.0, 44, oracle.EXTENDED)
    e = engine.enclosure(1.0, 44, precise=True)
    assert e.lower < ref < e.upper


def test_zhat_root_bracket_and_mp():
    for (nu, m) in ((1.0, 1), (4.0, 6)):
        zm0 = engine.solve_zm0(nu, m)
        root = engine.zhat_root(nu, m)
        assert zm0 < root < zm0 + 1.0 / 73.0
        assert abs(float(engine.zhat_root_mp(nu, m)) - root) < 1e-11 * root


def test_chi_positive_decreasing_in_m():
    vals = [engine.chi(1.0, m) for m in (1, 2, 5, 20)]
    assert all(v > 0.0 for v in vals)
    assert vals == sorted(vals, reverse=True)


def test_coefficients_are_cached_consistently():
    c = engine.coefficients(2.0, 3)
    assert c.zm0 == engine.solve_zm0(2.0, 3)
    assert engine.point_estimate(2.0, 3) == \
        c.zm0 + c.zm1 / 4.0 + c.zm2 / 16.0


@settings(max_examples=40, deadline=None)
@given(st.floats(min_value=1.0, max_value=50.0),
       st.integers(min_value=1, max_value=20))
def test_enclosures_ordered_in_m(nu, m):
    assert engine.enclosure(nu, m).upper < engine.enclosure(nu, m + 1).lower


def test_hypothesis_gates():
    with pytest.raises(ValueError):
        engine.enclosure(0.5, 1)
    with pytest.raises(ValueError):
        engine.enclosure(1.0, 0)
    with pytest.raises(ValueError):
        engine.enclosure(1.0, 1, scale="x")
