import math

import pytest

from chronobound import (DILATION_MODEL, DIMENSIONLESS, ENERGY, LENGTH, TIME,
                         TIME_SQUARED, DifferentiableModel, DimensionError,
                         Dual, HorizonError, ParamSpec, Quantity,
                         delta_rs_from_delta_e, dilate, dilation_variance,
                         gradient_check, in_meters, joules, min_delta_rs,
                         propagate, seconds)
from conftest import log_uniform, rel_err


def t(x):
    return Quantity(x, TIME)


def l(x):
    return Quantity(x, LENGTH)


def dilation_params(rng, ratio_lo=1.1, ratio_hi=1e6):
    t_c = log_uniform(rng, 1e-3, 1e3)
    r_s = log_uniform(rng, 1e-3, 1e3)
    r = r_s * log_uniform(rng, ratio_lo, ratio_hi)
    dt_c = t_c * log_uniform(rng, 1e-6, 1e-1)
    dr_s = r_s * log_uniform(rng, 1e-6, 1e-1)
    return t_c, dt_c, r_s, dr_s, r


class TestDual:
    def test_product_rule(self):
        x = Dual(3.0, 1.0)
        y = x * x + 2.0 * x
        assert y.val == 15.0 and y.dot == 8.0

    def test_quotient_rule(self):
        x = Dual(2.0, 1.0)
        y = 1.0 / x
        assert y.val == 0.5 and y.dot == -0.25

    def test_power_rule(self):
        x = Dual(4.0, 1.0)
        y = x ** 0.5
        assert y.val == 2.0 and rel_err(y.dot, 0.25) < 1e-15

    def test_dual_exponent_rejected(self):
        with pytest.raises(TypeError):
            Dual(2.0, 1.0) ** Dual(2.0, 1.0)


class TestPropagate:
    def test_identity_model(self):
        model = DifferentiableModel(fn=lambda x: x,
                                    inputs={"x": TIME}, output=TIME)
        value, var = propagate(model, [ParamSpec("x", t(3.0), t(0.5))])
        assert value.magnitude == 3.0
        assert var.magnitude == 0.25
        assert var.dimension == TIME_SQUARED

    def test_pythagorean_sum(self):
        model = DifferentiableModel(fn=lambda x, y: x + y,
                                    inputs={"x": TIME, "y": TIME},
                                    output=TIME)
        _, var = propagate(model, [ParamSpec("x", t(1.0), t(3.0)),
                                   ParamSpec("y", t(1.0), t(4.0))])
        assert rel_err(var.magnitude, 25.0) < 1e-15

    def test_matches_closed_form_example(self):
        params = [ParamSpec("t_c", t(1.0), t(0.01)),
                  ParamSpec("r_s", l(1.0), l(0.02)),
                  ParamSpec("r", l(4.0), l(0.0))]
        value, var = propagate(DILATION_MODEL, params)
        closed = dilation_variance(t(1.0), t(0.01), l(1.0), l(0.02), l(4.0))
        assert rel_err(var.magnitude, closed.magnitude) < 1e-10
        assert rel_err(value.magnitude,
                       dilate(t(1.0), l(1.0), l(4.0)).magnitude) < 1e-15

    def test_engine_equals_closed_form_sweep(self, rng):
        for _ in range(300):
            t_c, dt_c, r_s, dr_s, r = dilation_params(rng)
            _, var = propagate(DILATION_MODEL,
                               [ParamSpec("t_c", t(t_c), t(dt_c)),
                                ParamSpec("r_s", l(r_s), l(dr_s)),
                                ParamSpec("r", l(r), l(0.0))])
            closed = dilation_variance(t(t_c), t(dt_c), l(r_s), l(dr_s),
                                       l(r))
            assert rel_err(var.magnitude, closed.magnitude) < 1e-10

    def test_variance_zero_iff_sigmas_zero(self, rng):
        params = [ParamSpec("t_c", t(2.0), t(0.0)),
                  ParamSpec("r_s", l(1.0), l(0.0)),
                  ParamSpec("r", l(5.0), l(0.0))]
        _, var = propagate(DILATION_MODEL, params)
        assert var.magnitude == 0.0
        params[0] = ParamSpec("t_c", t(2.0), t(1e-9))
        _, var = propagate(DILATION_MODEL, params)
        assert var.magnitude > 0.0

    def test_model_domain_error_propagates(self):
        params = [ParamSpec("t_c", t(1.0), t(0.1)),
                  ParamSpec("r_s", l(2.0), l(0.1)),
                  ParamSpec("r", l(2.0), l(0.0))]
        with pytest.raises(HorizonError):
            propagate(DILATION_MODEL, params)

    def test_wrong_parameter_names_rejected(self):
        with pytest.raises(ValueError):
            propagate(DILATION_MODEL, [ParamSpec("t_c", t(1.0), t(0.1))])

    def test_wrong_dimension_rejected(self):
        params = [ParamSpec("t_c", l(1.0), l(0.1)),
                  ParamSpec("r_s", l(1.0), l(0.0)),
                  ParamSpec("r", l(4.0), l(0.0))]
        with pytest.raises(DimensionError):
            propagate(DILATION_MODEL, params)

    def test_sigma_dimension_mismatch_rejected(self):
        with pytest.raises(DimensionError):
            ParamSpec("t_c", t(1.0), l(0.1))

    def test_negative_sigma_rejected(self):
        with pytest.raises(ValueError):
            ParamSpec("t_c", t(1.0), t(-0.1))


class TestGradientCheck:
    POLY = DifferentiableModel(
        fn=lambda x, y: x * x * y + 3.0 * x / y + y ** 1.5,
        inputs={"x": DIMENSIONLESS, "y": DIMENSIONLESS},
        output=DIMENSIONLESS)

    def test_smooth_polynomial(self):
        point = {"x": Quantity(1.7), "y": Quantity(2.3)}
        assert gradient_check(self.POLY, point, 1e-6) <= 1e-6

    def test_dilate_far_from_horizon(self):
        point = {"t_c": t(1.0), "r_s": l(1.0), "r": l(100.0)}
        assert gradient_check(DILATION_MODEL, point, 1e-6) <= 1e-6

    def test_near_horizon_degrades_but_does_not_raise(self):
        far = gradient_check(DILATION_MODEL,
                             {"t_c": t(1.0), "r_s": l(1.0), "r": l(100.0)},
                             1e-6)
        near = gradient_check(DILATION_MODEL,
                              {"t_c": t(1.0), "r_s": l(1.0), "r": l(1.0001)},
                              1e-6)
        assert near > 1e-6
        assert near > 100.0 * far

    def test_step_validation(self):
        point = {"x": Quantity(1.0), "y": Quantity(1.0)}
        with pytest.raises(ValueError):
            gradient_check(self.POLY, point, 0.0)
        with pytest.raises(ValueError):
            gradient_check(self.POLY, point, 0.5)


class TestDilationVariance:
    def test_flat_space_only_dt_c_term(self):
        var = dilation_variance(t(1.0), t(0.1), l(0.0), l(0.0), l(1.0))
        assert rel_err(var.magnitude, 0.01) < 1e-15

    def test_direct_substitution(self):
        var = dilation_variance(t(2.0), t(0.0), l(1.0), l(0.1), l(2.0))
        assert rel_err(var.magnitude, 0.02) < 1e-14

    def test_horizon_rejected(self):
        with pytest.raises(HorizonError):
            dilation_variance(t(1.0), t(0.1), l(2.0), l(0.1), l(2.0))

    def test_dimension(self):
        var = dilation_variance(t(1.0), t(0.1), l(1.0), l(0.1), l(4.0))
        assert var.dimension == TIME_SQUARED


class TestDeltaRs:
    def test_zero(self):
        assert delta_rs_from_delta_e(Quantity(0.0, ENERGY)).magnitude == 0.0

    def test_unit_planck_energy(self):
        out = delta_rs_from_delta_e(Quantity(1.0, ENERGY))
        assert out.magnitude == 2.0 and out.dimension == LENGTH

    def test_si_value(self, constants):
        # 2 G dE / c^4 for dE = 3.557e-6 J, frozen from direct evaluation.
        out = delta_rs_from_delta_e(joules(3.557e-6, constants))
        assert rel_err(in_meters(out, constants),
                       5.878097328881182e-50) < 1e-12

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            delta_rs_from_delta_e(Quantity(-1.0, ENERGY))


class TestMinDeltaRs:
    def test_two_planck_times(self):
        assert min_delta_rs(t(2.0)).magnitude == 1.0

    def test_si_value(self, constants):
        # 2 G hbar / (c^4 dt_c) for dt_c = 2.965e-29 s, frozen from
        # direct evaluation.
        out = min_delta_rs(seconds(2.965e-29, constants))
        assert rel_err(in_meters(out, constants),
                       5.877658788974239e-50) < 1e-12

    def test_inverse_proportionality(self):
        assert rel_err(min_delta_rs(t(1e10)).magnitude, 2e-10) < 1e-15

    def test_nonpositive_rejected(self):
        with pytest.raises(ValueError):
            min_delta_rs(t(0.0))

    def test_substitution_reproduces_saturated_variance(self, rng):
        # Feeding the saturated dr_s into the generic variance must equal
        # the dedicated full-variance expression.
        from chronobound import full_variance
        for _ in range(300):
            t_c, dt_c, r_s, _, r = dilation_params(rng)
            dr_s = min_delta_rs(t(dt_c))
            via_variance = dilation_variance(t(t_c), t(dt_c), l(r_s), dr_s,
                                             l(r))
            direct = full_variance(t(t_c), t(dt_c), l(r), l(r_s))
            assert rel_err(via_variance.magnitude, direct.magnitude) < 1e-12
