"""chronobound: the minimum achievable uncertainty of time measurements.

Combines the time-energy uncertainty relation with gravitational time
dilation to compute the floor on clock precision, the optimal clock that
approaches it, and literature reference bounds; every closed-form optimum
is checkable against a brute-force minimization oracle.  All internal
arithmetic uses Planck natural units; SI values cross the boundary through
the quantities module.
"""
from .kernels import BACKEND
from .quantities import (DIMENSIONLESS, ENERGY, LENGTH, MASS, SPEED, TIME,
                         TIME_SQUARED, Constants, Dimension, DimensionError,
                         Quantity, default_constants, dimensionless,
                         in_joules, in_kilograms, in_meters, in_seconds,
                         joules, kilograms, load_constants, meters, qadd,
                         qdiv, qmul, qpow, qsub, seconds, to_planck, to_si)
from .dilation import (ClockGeometry, HorizonError, contract, dilate,
                       schwarzschild_radius)
from .errorprop import (DILATION_MODEL, DifferentiableModel, Dual, ParamSpec,
                        delta_rs_from_delta_e, dilation_variance,
                        gradient_check, min_delta_rs, propagate)
from .minimize import (Bracket, MinimizationResult, grid_refine_2d,
                       minimize_unimodal)
from .bound import (BoundInputs, OptimalClock, ReferenceBounds,
                    constrained_objective, constrained_objective_terms,
                    fractional_uncertainty, full_variance, fundamental_bound,
                    lower_bound_objective, optimal_delta_tc,
                    optimal_delta_tc_light, reference_bounds,
                    saturating_clock)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BoundInputs",
    "Bracket",
    "ClockGeometry",
    "Constants",
    "DILATION_MODEL",
    "DIMENSIONLESS",
    "DifferentiableModel",
    "Dimension",
    "DimensionError",
    "Dual",
    "ENERGY",
    "HorizonError",
    "LENGTH",
    "MASS",
    "MinimizationResult",
    "OptimalClock",
    "ParamSpec",
    "Quantity",
    "ReferenceBounds",
    "SPEED",
    "TIME",
    "TIME_SQUARED",
    "constrained_objective",
    "constrained_objective_terms",
    "contract",
    "default_constants",
    "delta_rs_from_delta_e",
    "dilate",
    "dilation_variance",
    "dimensionless",
    "fractional_uncertainty",
    "full_variance",
    "fundamental_bound",
    "gradient_check",
    "grid_refine_2d",
    "in_joules",
    "in_kilograms",
    "in_meters",
    "in_seconds",
    "joules",
    "kilograms",
    "load_constants",
    "lower_bound_objective",
    "meters",
    "min_delta_rs",
    "minimize_unimodal",
    "optimal_delta_tc",
    "optimal_delta_tc_light",
    "propagate",
    "qadd",
    "qdiv",
    "qmul",
    "qpow",
    "qsub",
    "reference_bounds",
    "saturating_clock",
    "schwarzschild_radius",
    "seconds",
    "to_planck",
    "to_si",
    "__version__",
]
