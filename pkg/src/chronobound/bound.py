"""The minimum-uncertainty clock pipeline.

Combines the saturated time-energy uncertainty relation with gravitational
time dilation: the observed-time variance picks up one term that shrinks
with the clock's resolution dt_c and one that grows with it, so a floor
appears.  With the clock size tied to its internal oscillation speed
(2 pi r = v dt_c) the objective has a unique minimum in dt_c, fastest
clocks (v = c) win, and the resulting floor on the observed-time
uncertainty is sqrt(3) pi^(1/3) t^(1/3) t_planck^(2/3).

All functions take and return Planck-unit quantities; the closed-form
optima here are validated elsewhere against the brute-force oracle in
``minimize``.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .quantities import (DIMENSIONLESS, ENERGY, LENGTH, MASS, SPEED, TIME,
                         TIME_SQUARED, Quantity, _require_dimension)
from .dilation import _check_geometry


@dataclass(frozen=True)
class BoundInputs:
    """Target duration t (distant observer) and mean internal speed v.

    v is a fraction of c in Planck units, so 0 < v <= 1.
    """

    t: Quantity
    v: Quantity

    def __post_init__(self):
        _require_dimension(self.t, TIME, "t")
        _require_dimension(self.v, SPEED, "v")
        if self.t.magnitude <= 0.0:
            raise ValueError(f"t must be positive, got {self.t.magnitude!r}")
        if not 0.0 < self.v.magnitude <= 1.0:
            raise ValueError(f"v must lie in (0, c], got {self.v.magnitude!r} c")


@dataclass(frozen=True)
class OptimalClock:
    """The optimal light-speed clock profile for a target duration."""

    t: Quantity
    dt_c_opt: Quantity
    dt_min: Quantity
    r: Quantity
    r_s: Quantity
    energy: Quantity
    delta_e: Quantity
    fractional_de: Quantity
    fractional_dt: Quantity


@dataclass(frozen=True)
class ReferenceBounds:
    """Literature reference bounds next to this library's floor.

    ng_lloyd is a scaling reference with a conventional unit prefactor.
    """

    salecker_wigner: Quantity
    ng_lloyd: Quantity
    fundamental: Quantity


def _positive_time(q: Quantity, name: str) -> float:
    _require_dimension(q, TIME, name)
    if q.magnitude <= 0.0:
        raise ValueError(f"{name} must be positive, got {q.magnitude!r}")
    return q.magnitude


def full_variance(t_c: Quantity, dt_c: Quantity, r: Quantity,
                  r_s: Quantity) -> Quantity:
    """Observed-time variance with the horizon-radius uncertainty saturated.

    t_c^2 / ((1 - r_s/r)^3 r^2 dt_c^2) + dt_c^2 / (1 - r_s/r).
    """
    tc = _positive_time(t_c, "t_c")
    dtc = _positive_time(dt_c, "dt_c")
    _require_dimension(r, LENGTH, "r")
    _require_dimension(r_s, LENGTH, "r_s")
    _check_geometry(r_s.magnitude, r.magnitude)
    return Quantity(kernels.full_variance(tc, dtc, r.magnitude,
                                          r_s.magnitude), TIME_SQUARED)


def lower_bound_objective(dt_c: Quantity, t: Quantity,
                          r: Quantity) -> Quantity:
    """Strict lower bound of full_variance once t_c is rewritten as the
    distant-observer duration t: t^2 / (r^2 dt_c^2) + dt_c^2.

    Equality holds only in the flat-space limit r_s -> 0.
    """
    dtc = _positive_time(dt_c, "dt_c")
    tm = _positive_time(t, "t")
    _require_dimension(r, LENGTH, "r")
    if r.magnitude <= 0.0:
        raise ValueError(f"r must be positive, got {r.magnitude!r}")
    return Quantity(kernels.lower_bound_objective(dtc, tm, r.magnitude),
                    TIME_SQUARED)


def constrained_objective(dt_c: Quantity, inputs: BoundInputs) -> Quantity:
    """lower_bound_objective with the size fixed by 2 pi r = v dt_c.

    4 pi^2 t^2 / (v^2 dt_c^4) + dt_c^2; strictly convex on ln dt_c with a
    unique minimum at optimal_delta_tc(inputs).
    """
    dtc = _positive_time(dt_c, "dt_c")
    return Quantity(kernels.constrained_objective(dtc, inputs.t.magnitude,
                                                  inputs.v.magnitude),
                    TIME_SQUARED)


def constrained_objective_terms(dt_c: Quantity,
                                inputs: BoundInputs) -> tuple[Quantity, Quantity]:
    """The two competing terms of constrained_objective, separately.

    At the optimum their ratio is exactly 1:2, which is where the factor
    sqrt(3) in fundamental_bound comes from.
    """
    dtc = _positive_time(dt_c, "dt_c")
    first, second = kernels.constrained_objective_terms(
        dtc, inputs.t.magnitude, inputs.v.magnitude)
    return Quantity(first, TIME_SQUARED), Quantity(second, TIME_SQUARED)


def optimal_delta_tc(inputs: BoundInputs) -> Quantity:
    """Resolution minimizing constrained_objective:
    sqrt(2) pi^(1/3) (t / v)^(1/3) in Planck units."""
    return Quantity(kernels.optimal_delta_tc(inputs.t.magnitude,
                                             inputs.v.magnitude), TIME)


def optimal_delta_tc_light(t: Quantity) -> Quantity:
    """optimal_delta_tc at v = c, the best possible internal speed."""
    return Quantity(kernels.optimal_delta_tc_light(_positive_time(t, "t")),
                    TIME)


def fundamental_bound(t: Quantity) -> Quantity:
    """The floor on the observed-time uncertainty for a duration t:
    sqrt(3) pi^(1/3) t^(1/3) in Planck units.

    This is the infimum of the variance objective; it is approached (not
    attained) by real clocks, and the r = 3 r_s profile of
    saturating_clock comes close.
    """
    return Quantity(kernels.fundamental_bound(_positive_time(t, "t")), TIME)


def fractional_uncertainty(t: Quantity) -> Quantity:
    """fundamental_bound(t) / t; strictly decreasing in t."""
    return Quantity(kernels.fractional_uncertainty(_positive_time(t, "t")),
                    DIMENSIONLESS)


def saturating_clock(t: Quantity) -> OptimalClock:
    """The v = c clock profile that approximately attains the floor.

    Built from the defining relations: dt_c from optimal_delta_tc_light,
    size from 2 pi r = c dt_c, radius at three times the horizon radius
    (r = 3 r_s, the innermost stable circular orbit of a non-rotating
    black hole), energy from r_s = 2E, and delta_e from saturating the
    time-energy uncertainty relation.
    """
    tm = _positive_time(t, "t")
    dt_c, dt, r, r_s, energy, delta_e, frac_de, frac_dt = \
        kernels.clock_profile(tm)
    return OptimalClock(
        t=Quantity(tm, TIME),
        dt_c_opt=Quantity(dt_c, TIME),
        dt_min=Quantity(dt, TIME),
        r=Quantity(r, LENGTH),
        r_s=Quantity(r_s, LENGTH),
        energy=Quantity(energy, ENERGY),
        delta_e=Quantity(delta_e, ENERGY),
        fractional_de=Quantity(frac_de, DIMENSIONLESS),
        fractional_dt=Quantity(frac_dt, DIMENSIONLESS),
    )


def reference_bounds(t: Quantity, clock_mass: Quantity) -> ReferenceBounds:
    """This library's floor next to two literature reference bounds.

    salecker_wigner = sqrt(hbar t / (m c^2)) depends on the clock mass;
    ng_lloyd = t^(1/3) t_planck^(2/3) is quoted as a scaling only, so its
    prefactor is conventionally 1.  fundamental / ng_lloyd is the constant
    sqrt(3) pi^(1/3) ~ 2.5367 at every t.
    """
    tm = _positive_time(t, "t")
    _require_dimension(clock_mass, MASS, "clock_mass")
    if clock_mass.magnitude <= 0.0:
        raise ValueError(f"clock_mass must be positive, "
                         f"got {clock_mass.magnitude!r}")
    return ReferenceBounds(
        salecker_wigner=Quantity(
            kernels.salecker_wigner(tm, clock_mass.magnitude), TIME),
        ng_lloyd=Quantity(kernels.ng_lloyd(tm), TIME),
        fundamental=Quantity(kernels.fundamental_bound(tm), TIME),
    )
