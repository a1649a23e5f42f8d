"""First-order uncertainty propagation through scalar models.

The generic engine evaluates a model forward with dual numbers, so each
derivative in Var(f) = sum_i (df/dp_i)^2 sigma_i^2 is exact to roundoff.
Central finite differences are kept only as a validator (gradient_check),
never as the propagation mechanism.  The closed-form variance of the
dilation map and the saturated horizon-radius uncertainty are separate
code paths so the engine can be tested against them.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Mapping, Sequence

from . import kernels
from .dilation import HorizonError, _check_geometry
from .quantities import (DimensionError, Dimension, ENERGY, LENGTH, TIME,
                         TIME_SQUARED, Quantity, _require_dimension)

_TINY = 1e-30

Numeric = Any  # float or Dual, mixed freely inside model expressions


@dataclass(frozen=True)
class Dual:
    """A value and its first derivative, a + b*eps with eps^2 = 0."""

    val: float
    dot: float = 0.0

    def __add__(self, other):
        if isinstance(other, Dual):
            return Dual(self.val + other.val, self.dot + other.dot)
        return Dual(self.val + other, self.dot)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Dual):
            return Dual(self.val - other.val, self.dot - other.dot)
        return Dual(self.val - other, self.dot)

    def __rsub__(self, other):
        return Dual(other - self.val, -self.dot)

    def __neg__(self):
        return Dual(-self.val, -self.dot)

    def __mul__(self, other):
        if isinstance(other, Dual):
            return Dual(self.val * other.val,
                        self.val * other.dot + self.dot * other.val)
        return Dual(self.val * other, self.dot * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Dual):
            return Dual(self.val / other.val,
                        (self.dot * other.val - self.val * other.dot)
                        / (other.val * other.val))
        return Dual(self.val / other, self.dot / other)

    def __rtruediv__(self, other):
        return Dual(other / self.val,
                    -other * self.dot / (self.val * self.val))

    def __pow__(self, p):
        if isinstance(p, Dual):
            raise TypeError("dual-valued exponents are not supported")
        return Dual(self.val ** p,
                    p * self.val ** (p - 1.0) * self.dot)


def _real(x: Numeric) -> float:
    return x.val if isinstance(x, Dual) else x


@dataclass(frozen=True)
class ParamSpec:
    """A named input value with its standard uncertainty."""

    name: str
    value: Quantity
    sigma: Quantity

    def __post_init__(self):
        if self.sigma.dimension != self.value.dimension:
            raise DimensionError(
                f"sigma of {self.name!r} has dimension "
                f"[{self.sigma.dimension}], expected [{self.value.dimension}]")
        if self.sigma.magnitude < 0.0:
            raise ValueError(f"sigma of {self.name!r} must be non-negative, "
                             f"got {self.sigma.magnitude!r}")


@dataclass(frozen=True)
class DifferentiableModel:
    """A scalar map over named parameters, evaluable on floats or Duals.

    ``fn`` receives Planck magnitudes as keyword arguments and must be
    written with generic arithmetic (+, -, *, /, **) so the same code path
    produces values and forward derivatives.
    """

    fn: Callable[..., Numeric]
    inputs: Mapping[str, Dimension]
    output: Dimension
    name: str = ""

    def _check_names(self, params: Mapping[str, Quantity]) -> None:
        if set(params) != set(self.inputs):
            raise ValueError(
                f"model {self.name or 'anonymous'!r} expects parameters "
                f"{sorted(self.inputs)}, got {sorted(params)}")
        for pname, q in params.items():
            _require_dimension(q, self.inputs[pname], pname)

    def value(self, params: Mapping[str, Quantity]) -> Quantity:
        """Evaluate the model at the given parameter point."""
        self._check_names(params)
        result = self.fn(**{n: q.magnitude for n, q in params.items()})
        return Quantity(_real(result), self.output)

    def value_and_derivative(self, params: Mapping[str, Quantity],
                             wrt: str) -> tuple[Quantity, Quantity]:
        """Forward evaluation with a unit dual seed on parameter ``wrt``."""
        self._check_names(params)
        if wrt not in self.inputs:
            raise ValueError(f"unknown parameter {wrt!r}")
        seeded = {n: Dual(q.magnitude, 1.0 if n == wrt else 0.0)
                  for n, q in params.items()}
        result = self.fn(**seeded)
        if not isinstance(result, Dual):
            result = Dual(_real(result), 0.0)
        return (Quantity(result.val, self.output),
                Quantity(result.dot, self.output / self.inputs[wrt]))


def propagate(model: DifferentiableModel,
              params: Sequence[ParamSpec]) -> tuple[Quantity, Quantity]:
    """Uncorrelated first-order propagation.

    Returns (value, variance) with variance = sum (df/dp_i)^2 sigma_i^2
    and dimension equal to the squared output dimension.
    """
    names = [p.name for p in params]
    if len(set(names)) != len(names):
        raise ValueError(f"duplicate parameter names in {names}")
    point = {p.name: p.value for p in params}
    value = model.value(point)
    variance = 0.0
    for p in params:
        _, deriv = model.value_and_derivative(point, p.name)
        variance += (deriv.magnitude * p.sigma.magnitude) ** 2
    return value, Quantity(variance, model.output ** 2)


def gradient_check(model: DifferentiableModel,
                   params: Mapping[str, Quantity],
                   step: float) -> float:
    """Largest relative gap between forward and central-difference slopes.

    ``step`` is a relative step size in (0, 1e-2].  The result is returned,
    not raised on: near-singular points (e.g. a clock close to its horizon)
    legitimately degrade the comparison.
    """
    if not 0.0 < step <= 1e-2:
        raise ValueError(f"step must lie in (0, 1e-2], got {step!r}")
    model._check_names(params)
    point = {n: q.magnitude for n, q in params.items()}
    worst = 0.0
    for name in params:
        _, deriv = model.value_and_derivative(params, name)
        h = step * abs(point[name]) if point[name] != 0.0 else step
        upper = dict(point)
        lower = dict(point)
        upper[name] = point[name] + h
        lower[name] = point[name] - h
        central = (_real(model.fn(**upper)) - _real(model.fn(**lower))) \
            / (2.0 * h)
        gap = abs(deriv.magnitude - central) / max(abs(deriv.magnitude),
                                                   _TINY)
        worst = max(worst, gap)
    return worst


def _dilation_fn(t_c: Numeric, r_s: Numeric, r: Numeric) -> Numeric:
    shrink = 1.0 - r_s / r
    if _real(shrink) <= 0.0:
        raise HorizonError(
            f"clock radius {_real(r)!r} must strictly exceed the "
            f"Schwarzschild radius {_real(r_s)!r}")
    return t_c / shrink ** 0.5


#: The gravitational dilation map as a differentiable model, for feeding
#: the generic engine; its closed-form variance is dilation_variance.
DILATION_MODEL = DifferentiableModel(
    fn=_dilation_fn,
    inputs={"t_c": TIME, "r_s": LENGTH, "r": LENGTH},
    output=TIME,
    name="dilate",
)


def dilation_variance(t_c: Quantity, dt_c: Quantity, r_s: Quantity,
                      dr_s: Quantity, r: Quantity) -> Quantity:
    """Closed-form variance of the dilated time.

    (1/4) t_c^2 dr_s^2 / ((1 - r_s/r)^3 r^2) + dt_c^2 / (1 - r_s/r),
    the uncorrelated first-order rule applied to the dilation map.
    """
    _require_dimension(t_c, TIME, "t_c")
    _require_dimension(dt_c, TIME, "dt_c")
    _require_dimension(r_s, LENGTH, "r_s")
    _require_dimension(dr_s, LENGTH, "dr_s")
    _require_dimension(r, LENGTH, "r")
    if t_c.magnitude < 0.0 or dt_c.magnitude < 0.0 or dr_s.magnitude < 0.0:
        raise ValueError("t_c, dt_c and dr_s must be non-negative")
    _check_geometry(r_s.magnitude, r.magnitude)
    return Quantity(
        kernels.dilation_variance(t_c.magnitude, dt_c.magnitude,
                                  r_s.magnitude, dr_s.magnitude, r.magnitude),
        TIME_SQUARED)


def delta_rs_from_delta_e(delta_e: Quantity) -> Quantity:
    """Horizon-radius uncertainty 2G dE/c^4 from an energy uncertainty."""
    _require_dimension(delta_e, ENERGY, "delta_e")
    if delta_e.magnitude < 0.0:
        raise ValueError(f"delta_e must be non-negative, "
                         f"got {delta_e.magnitude!r}")
    return Quantity(kernels.delta_rs_from_delta_e(delta_e.magnitude), LENGTH)


def min_delta_rs(dt_c: Quantity) -> Quantity:
    """Smallest horizon-radius uncertainty at resolution dt_c.

    Saturating the time-energy uncertainty relation gives dE = hbar/dt_c,
    hence dr_s = 2 G hbar / (c^4 dt_c); 2/dt_c in Planck units.
    """
    _require_dimension(dt_c, TIME, "dt_c")
    if dt_c.magnitude <= 0.0:
        raise ValueError(f"dt_c must be positive, got {dt_c.magnitude!r}")
    return Quantity(kernels.min_delta_rs(dt_c.magnitude), LENGTH)
