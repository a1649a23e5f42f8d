# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernel backend.

Twin of ``_kernels_py``: same operations, same Planck-unit conventions,
same operation order inside every formula so the two backends agree to
floating-point roundoff.  Inputs are assumed valid; see the pure twin.
"""
from libc.math cimport sqrt, M_PI

from cpython cimport array
import array

cdef double _TWO_PI = 2.0 * M_PI
cdef double _THIRD = 1.0 / 3.0
cdef double _SQRT2_CBRT_PI = sqrt(2.0) * M_PI ** (1.0 / 3.0)
cdef double _SQRT3_CBRT_PI = sqrt(3.0) * M_PI ** (1.0 / 3.0)

cdef array.array _DOUBLE_TEMPLATE = array.array("d", [])


def dilate(double t_c, double r_s, double r):
    """Distant-observer time for proper time t_c near radius r_s < r."""
    return t_c / sqrt(1.0 - r_s / r)


def contract(double t, double r_s, double r):
    """Proper time for distant-observer time t; inverse of dilate."""
    return t * sqrt(1.0 - r_s / r)


def schwarzschild_radius(double energy):
    """Horizon radius of an energy concentration: 2E in Planck units."""
    return 2.0 * energy


def delta_rs_from_delta_e(double delta_e):
    """Horizon-radius uncertainty produced by an energy uncertainty."""
    return 2.0 * delta_e


def min_delta_rs(double dt_c):
    """Smallest horizon-radius uncertainty at saturated resolution dt_c."""
    return 2.0 / dt_c


def dilation_variance(double t_c, double dt_c, double r_s, double dr_s,
                      double r):
    """First-order variance of the dilated time from (dt_c, dr_s)."""
    cdef double s = 1.0 - r_s / r
    return 0.25 * t_c * t_c * dr_s * dr_s / (s * s * s * r * r) \
        + dt_c * dt_c / s


def full_variance(double t_c, double dt_c, double r, double r_s):
    """dilation_variance with dr_s already saturated via min_delta_rs."""
    cdef double s = 1.0 - r_s / r
    return t_c * t_c / (s * s * s * r * r * dt_c * dt_c) + dt_c * dt_c / s


def lower_bound_objective(double dt_c, double t, double r):
    """Flat-space lower bound of full_variance at distant-observer time t."""
    return t * t / (r * r * dt_c * dt_c) + dt_c * dt_c


def constrained_objective_terms(double dt_c, double t, double v):
    """Both terms of the objective once 2*pi*r = v*dt_c fixes the size."""
    cdef double x2 = dt_c * dt_c
    return 4.0 * M_PI * M_PI * t * t / (v * v * x2 * x2), x2


def constrained_objective(double dt_c, double t, double v):
    """Variance objective on the constraint 2*pi*r = v*dt_c."""
    cdef double x2 = dt_c * dt_c
    return 4.0 * M_PI * M_PI * t * t / (v * v * x2 * x2) + x2


def optimal_delta_tc(double t, double v):
    """Resolution minimizing constrained_objective: sqrt(2) pi^(1/3) (t/v)^(1/3)."""
    return _SQRT2_CBRT_PI * (t / v) ** _THIRD


def optimal_delta_tc_light(double t):
    """optimal_delta_tc at v = c, the overall optimum."""
    return _SQRT2_CBRT_PI * t ** _THIRD


def fundamental_bound(double t):
    """Minimum achievable time uncertainty: sqrt(3) pi^(1/3) t^(1/3)."""
    return _SQRT3_CBRT_PI * t ** _THIRD


def fractional_uncertainty(double t):
    """fundamental_bound(t) / t; strictly decreasing in t."""
    return _SQRT3_CBRT_PI * t ** _THIRD / t


def salecker_wigner(double t, double mass):
    """Quantum-only reference bound sqrt(t / mass) for a clock of given mass."""
    return sqrt(t / mass)


def ng_lloyd(double t):
    """Cube-root reference scaling t^(1/3) with unit prefactor."""
    return t ** _THIRD


def clock_profile(double t):
    """Optimal light-speed clock for duration t; see the pure twin."""
    cdef double dt_c = _SQRT2_CBRT_PI * t ** _THIRD
    cdef double dt = _SQRT3_CBRT_PI * t ** _THIRD
    cdef double r = dt_c / _TWO_PI
    cdef double r_s = r / 3.0
    cdef double energy = 0.5 * r_s
    cdef double delta_e = 1.0 / dt_c
    return (dt_c, dt, r, r_s, energy, delta_e, delta_e / energy, dt / t)


def clock_profile_batch(double[::1] t):
    """clock_profile over a buffer of durations; returns array('d') columns."""
    cdef Py_ssize_t n = t.shape[0]
    cdef Py_ssize_t i
    cdef array.array dt_c_a = array.clone(_DOUBLE_TEMPLATE, n, zero=False)
    cdef array.array dt_a = array.clone(_DOUBLE_TEMPLATE, n, zero=False)
    cdef array.array r_a = array.clone(_DOUBLE_TEMPLATE, n, zero=False)
    cdef array.array r_s_a = array.clone(_DOUBLE_TEMPLATE, n, zero=False)
    cdef array.array energy_a = array.clone(_DOUBLE_TEMPLATE, n, zero=False)
    cdef array.array delta_e_a = array.clone(_DOUBLE_TEMPLATE, n, zero=False)
    cdef array.array frac_de_a = array.clone(_DOUBLE_TEMPLATE, n, zero=False)
    cdef array.array frac_dt_a = array.clone(_DOUBLE_TEMPLATE, n, zero=False)
    cdef double[::1] dt_c_v = dt_c_a
    cdef double[::1] dt_v = dt_a
    cdef double[::1] r_v = r_a
    cdef double[::1] r_s_v = r_s_a
    cdef double[::1] energy_v = energy_a
    cdef double[::1] delta_e_v = delta_e_a
    cdef double[::1] frac_de_v = frac_de_a
    cdef double[::1] frac_dt_v = frac_dt_a
    cdef double ti, dt_c, dt, r, r_s, energy, delta_e
    for i in range(n):
        ti = t[i]
        dt_c = _SQRT2_CBRT_PI * ti ** _THIRD
        dt = _SQRT3_CBRT_PI * ti ** _THIRD
        r = dt_c / _TWO_PI
        r_s = r / 3.0
        energy = 0.5 * r_s
        delta_e = 1.0 / dt_c
        dt_c_v[i] = dt_c
        dt_v[i] = dt
        r_v[i] = r
        r_s_v[i] = r_s
        energy_v[i] = energy
        delta_e_v[i] = delta_e
        frac_de_v[i] = delta_e / energy
        frac_dt_v[i] = dt / ti
    return (dt_c_a, dt_a, r_a, r_s_a, energy_a, delta_e_a, frac_de_a,
            frac_dt_a)
