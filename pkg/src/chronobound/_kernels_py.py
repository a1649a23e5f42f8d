"""Pure-Python kernel backend.

Scalar formulas of the bound pipeline in Planck units (G = hbar = c = 1,
so the Planck time is 1).  These are the hot inner-loop functions: they
assume valid, finite inputs and do no checking.  Argument validation and
dimension handling live in the public wrapper modules.

The compiled twin in ``_kernels_cy.pyx`` mirrors this module operation for
operation; keep the two in sync.
"""
import math
from array import array

_PI = math.pi
_TWO_PI = 2.0 * math.pi
_THIRD = 1.0 / 3.0
_SQRT2_CBRT_PI = math.sqrt(2.0) * math.pi ** _THIRD
_SQRT3_CBRT_PI = math.sqrt(3.0) * math.pi ** _THIRD


def dilate(t_c, r_s, r):
    """Distant-observer time for proper time t_c near radius r_s < r."""
    return t_c / math.sqrt(1.0 - r_s / r)


def contract(t, r_s, r):
    """Proper time for distant-observer time t; inverse of dilate."""
    return t * math.sqrt(1.0 - r_s / r)


def schwarzschild_radius(energy):
    """Horizon radius of an energy concentration: 2E in Planck units."""
    return 2.0 * energy


def delta_rs_from_delta_e(delta_e):
    """Horizon-radius uncertainty produced by an energy uncertainty."""
    return 2.0 * delta_e


def min_delta_rs(dt_c):
    """Smallest horizon-radius uncertainty once the time-energy
    uncertainty relation is saturated at resolution dt_c."""
    return 2.0 / dt_c


def dilation_variance(t_c, dt_c, r_s, dr_s, r):
    """First-order variance of the dilated time from (dt_c, dr_s)."""
    s = 1.0 - r_s / r
    return 0.25 * t_c * t_c * dr_s * dr_s / (s * s * s * r * r) \
        + dt_c * dt_c / s


def full_variance(t_c, dt_c, r, r_s):
    """dilation_variance with dr_s already saturated via min_delta_rs."""
    s = 1.0 - r_s / r
    return t_c * t_c / (s * s * s * r * r * dt_c * dt_c) + dt_c * dt_c / s


def lower_bound_objective(dt_c, t, r):
    """Flat-space lower bound of full_variance at distant-observer time t."""
    return t * t / (r * r * dt_c * dt_c) + dt_c * dt_c


def constrained_objective_terms(dt_c, t, v):
    """Both terms of the objective once 2*pi*r = v*dt_c fixes the size."""
    x2 = dt_c * dt_c
    return 4.0 * _PI * _PI * t * t / (v * v * x2 * x2), x2


def constrained_objective(dt_c, t, v):
    """Variance objective on the constraint 2*pi*r = v*dt_c."""
    first, second = constrained_objective_terms(dt_c, t, v)
    return first + second


def optimal_delta_tc(t, v):
    """Resolution minimizing constrained_objective: sqrt(2) pi^(1/3) (t/v)^(1/3)."""
    return _SQRT2_CBRT_PI * (t / v) ** _THIRD


def optimal_delta_tc_light(t):
    """optimal_delta_tc at v = c, the overall optimum."""
    return _SQRT2_CBRT_PI * t ** _THIRD


def fundamental_bound(t):
    """Minimum achievable time uncertainty: sqrt(3) pi^(1/3) t^(1/3)."""
    return _SQRT3_CBRT_PI * t ** _THIRD


def fractional_uncertainty(t):
    """fundamental_bound(t) / t; strictly decreasing in t."""
    return fundamental_bound(t) / t


def salecker_wigner(t, mass):
    """Quantum-only reference bound sqrt(t / mass) for a clock of given mass."""
    return math.sqrt(t / mass)


def ng_lloyd(t):
    """Cube-root reference scaling t^(1/3) with unit prefactor."""
    return t ** _THIRD


def clock_profile(t):
    """Optimal light-speed clock for duration t.

    Returns (dt_c, dt, r, r_s, energy, delta_e, fractional_de,
    fractional_dt) with r fixed by 2*pi*r = c*dt_c and r = 3*r_s.
    """
    dt_c = optimal_delta_tc_light(t)
    dt = fundamental_bound(t)
    r = dt_c / _TWO_PI
    r_s = r / 3.0
    energy = 0.5 * r_s
    delta_e = 1.0 / dt_c
    return (dt_c, dt, r, r_s, energy, delta_e, delta_e / energy, dt / t)


def clock_profile_batch(t):
    """clock_profile over a sequence of durations.

    Returns eight array('d') columns in the clock_profile field order.
    """
    n = len(t)
    cols = tuple(array("d", [0.0]) * n for _ in range(8))
    for i in range(n):
        row = clock_profile(t[i])
        for j in range(8):
            cols[j][i] = row[j]
    return cols
