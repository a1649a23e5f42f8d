import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chronobound import (ENERGY, LENGTH, TIME, ClockGeometry, DimensionError,
                         HorizonError, Quantity, contract, default_constants,
                         dilate, in_meters, joules, schwarzschild_radius)
from conftest import rel_err


def t(x):
    return Quantity(x, TIME)


def l(x):
    return Quantity(x, LENGTH)


class TestSchwarzschildRadius:
    def test_zero_energy(self):
        assert schwarzschild_radius(Quantity(0.0, ENERGY)).magnitude == 0.0

    def test_unit_planck_energy(self):
        r_s = schwarzschild_radius(Quantity(1.0, ENERGY))
        assert r_s.magnitude == 2.0
        assert r_s.dimension == LENGTH

    def test_solar_rest_energy(self, constants):
        # 2 G M / c^2 for M = 1.989e30 kg, via the energy route.
        m_sun = 1.989e30
        energy = joules(m_sun * constants.c_si ** 2, constants)
        r_s = in_meters(schwarzschild_radius(energy), constants)
        expected = 2.0 * constants.G_si * m_sun / constants.c_si ** 2
        assert rel_err(r_s, expected) < 1e-12
        assert rel_err(r_s, 2.954126555055405e3) < 1e-12

    def test_negative_energy_rejected(self):
        with pytest.raises(ValueError):
            schwarzschild_radius(Quantity(-1.0, ENERGY))

    def test_dimension_checked(self):
        with pytest.raises(DimensionError):
            schwarzschild_radius(Quantity(1.0, TIME))


class TestDilate:
    def test_flat_space(self):
        assert dilate(t(1.0), l(0.0), l(10.0)).magnitude == 1.0

    def test_factor_two(self):
        assert dilate(t(1.0), l(3.0), l(4.0)).magnitude == 2.0

    def test_sqrt_two(self):
        assert rel_err(dilate(t(1.0), l(1.0), l(2.0)).magnitude,
                       math.sqrt(2.0)) < 1e-15

    def test_horizon_rejected(self):
        with pytest.raises(HorizonError):
            dilate(t(1.0), l(2.0), l(2.0))

    def test_interior_rejected(self):
        with pytest.raises(HorizonError):
            dilate(t(1.0), l(3.0), l(2.0))

    def test_negative_inputs_rejected(self):
        with pytest.raises(ValueError):
            dilate(t(-1.0), l(0.0), l(1.0))
        with pytest.raises(ValueError):
            dilate(t(1.0), l(-0.5), l(1.0))

    def test_never_below_proper_time(self):
        assert dilate(t(1.0), l(1.0), l(100.0)).magnitude >= 1.0


class TestContract:
    def test_inverse_of_factor_two(self):
        assert contract(t(2.0), l(3.0), l(4.0)).magnitude == 1.0

    def test_flat_space(self):
        assert contract(t(5.0), l(0.0), l(1.0)).magnitude == 5.0

    def test_two_thirds(self):
        assert rel_err(contract(t(1.0), l(1.0), l(3.0)).magnitude,
                       math.sqrt(2.0 / 3.0)) < 1e-15


@given(st.floats(min_value=1e-3, max_value=1e3),
       st.floats(min_value=1e-6, max_value=1e6),
       st.floats(min_value=1.001, max_value=1e6))
def test_round_trip(t_c, r_s, ratio):
    r = r_s * ratio
    out = contract(dilate(t(t_c), l(r_s), l(r)), l(r_s), l(r))
    assert rel_err(out.magnitude, t_c) < 1e-12


@given(st.floats(min_value=1e-3, max_value=1e3),
       st.floats(min_value=0.1, max_value=100.0),
       st.floats(min_value=1e-4, max_value=0.5))
def test_strictly_increasing_in_r_s(t_c, r, frac):
    r_s_lo = frac * r
    r_s_hi = min(1.5 * frac, 0.9) * r
    lo = dilate(t(t_c), l(r_s_lo), l(r)).magnitude
    hi = dilate(t(t_c), l(r_s_hi), l(r)).magnitude
    assert hi > lo


@given(st.floats(min_value=1e-3, max_value=1e3),
       st.floats(min_value=0.1, max_value=100.0),
       st.floats(min_value=1.1, max_value=1e3))
def test_strictly_decreasing_in_r(t_c, r_s, ratio):
    near = dilate(t(t_c), l(r_s), l(r_s * ratio)).magnitude
    far = dilate(t(t_c), l(r_s), l(r_s * ratio * 2.0)).magnitude
    assert far < near


def test_far_field_limit():
    out = dilate(t(1.0), l(1.0), l(1e10)).magnitude
    assert rel_err(out, 1.0) < 1e-9


class TestClockGeometry:
    def test_from_energy(self):
        geom = ClockGeometry.from_energy(Quantity(1.0, ENERGY), l(10.0))
        assert geom.r_s.magnitude == 2.0
        assert rel_err(geom.dilation_factor, math.sqrt(0.8)) < 1e-15

    def test_from_schwarzschild(self):
        geom = ClockGeometry.from_schwarzschild(l(2.0), l(6.0))
        assert geom.energy.magnitude == 1.0

    def test_horizon_rejected(self):
        with pytest.raises(HorizonError):
            ClockGeometry.from_energy(Quantity(1.0, ENERGY), l(2.0))

    def test_inconsistent_pair_rejected(self):
        with pytest.raises(ValueError):
            ClockGeometry(r=l(10.0), r_s=l(2.0),
                          energy=Quantity(1.5, ENERGY))

    def test_flat_space_degenerate(self):
        geom = ClockGeometry.from_energy(Quantity(0.0, ENERGY), l(1.0))
        assert geom.dilation_factor == 1.0
