"""Dimension-checked quantities in Planck natural units.

All internal arithmetic happens in Planck units (G = hbar = c = 1), where
the bound pipeline is well scaled: the SI value of the recurring
combination G^2 hbar^2 / c^8 is ~7.6e-157, a few factors away from
double-precision underflow, while its Planck value is exactly 1.  SI
magnitudes appear only at the I/O boundary through ``to_planck`` and
``to_si``.

Dimensions are exact rationals over (length, mass, time); fractional
exponents such as time^(1/3) arise from the cube roots in the optimum
formulas, so exponent arithmetic is done with ``fractions.Fraction`` and
never floats.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

Rational = Union[int, Fraction]

#: |ln factor| above which a conversion factor cannot be formed directly
#: in double precision and the log-space path is used instead.
_DIRECT_EXP_LIMIT = Fraction(2)


class DimensionError(ValueError):
    """Operands or arguments carry incompatible dimensions."""


def _as_fraction(x: Rational) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"exponent must be int or Fraction, got {type(x).__name__}")


@dataclass(frozen=True)
class Dimension:
    """Exact rational exponents over the (length, mass, time) base."""

    length_exp: Fraction = Fraction(0)
    mass_exp: Fraction = Fraction(0)
    time_exp: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "length_exp", _as_fraction(self.length_exp))
        object.__setattr__(self, "mass_exp", _as_fraction(self.mass_exp))
        object.__setattr__(self, "time_exp", _as_fraction(self.time_exp))

    @property
    def is_dimensionless(self) -> bool:
        return not (self.length_exp or self.mass_exp or self.time_exp)

    def __mul__(self, other: "Dimension") -> "Dimension":
        if not isinstance(other, Dimension):
            return NotImplemented
        return Dimension(self.length_exp + other.length_exp,
                         self.mass_exp + other.mass_exp,
                         self.time_exp + other.time_exp)

    def __truediv__(self, other: "Dimension") -> "Dimension":
        if not isinstance(other, Dimension):
            return NotImplemented
        return Dimension(self.length_exp - other.length_exp,
                         self.mass_exp - other.mass_exp,
                         self.time_exp - other.time_exp)

    def __pow__(self, p: Rational) -> "Dimension":
        p = _as_fraction(p)
        return Dimension(self.length_exp * p, self.mass_exp * p,
                         self.time_exp * p)

    def __str__(self) -> str:
        if self.is_dimensionless:
            return "1"
        parts = [f"{sym}^{exp}" for sym, exp in
                 (("L", self.length_exp), ("M", self.mass_exp),
                  ("T", self.time_exp)) if exp]
        return " ".join(parts)


DIMENSIONLESS = Dimension()
LENGTH = Dimension(length_exp=1)
MASS = Dimension(mass_exp=1)
TIME = Dimension(time_exp=1)
SPEED = LENGTH / TIME
ENERGY = MASS * LENGTH ** 2 / TIME ** 2
TIME_SQUARED = TIME ** 2


@dataclass(frozen=True)
class Quantity:
    """A finite magnitude in Planck units plus its dimension."""

    magnitude: float
    dimension: Dimension = DIMENSIONLESS

    def __post_init__(self):
        object.__setattr__(self, "magnitude", float(self.magnitude))
        if not math.isfinite(self.magnitude):
            raise ValueError(f"quantity magnitude must be finite, "
                             f"got {self.magnitude!r}")

    def _require_same_dimension(self, other: "Quantity", op: str) -> None:
        if self.dimension != other.dimension:
            raise DimensionError(
                f"cannot {op} quantities of dimension [{self.dimension}] "
                f"and [{other.dimension}]")

    def __add__(self, other):
        if not isinstance(other, Quantity):
            return NotImplemented
        self._require_same_dimension(other, "add")
        return Quantity(self.magnitude + other.magnitude, self.dimension)

    def __sub__(self, other):
        if not isinstance(other, Quantity):
            return NotImplemented
        self._require_same_dimension(other, "subtract")
        return Quantity(self.magnitude - other.magnitude, self.dimension)

    def __neg__(self):
        return Quantity(-self.magnitude, self.dimension)

    def __mul__(self, other):
        if isinstance(other, Quantity):
            return Quantity(self.magnitude * other.magnitude,
                            self.dimension * other.dimension)
        if isinstance(other, (int, float)):
            return Quantity(self.magnitude * other, self.dimension)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Quantity):
            return Quantity(self.magnitude / other.magnitude,
                            self.dimension / other.dimension)
        if isinstance(other, (int, float)):
            return Quantity(self.magnitude / other, self.dimension)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, float)):
            return Quantity(other / self.magnitude,
                            DIMENSIONLESS / self.dimension)
        return NotImplemented

    def __pow__(self, p: Rational):
        return qpow(self, p)

    def _compare(self, other, op):
        if not isinstance(other, Quantity):
            return NotImplemented
        self._require_same_dimension(other, "compare")
        return op(self.magnitude, other.magnitude)

    def __lt__(self, other):
        return self._compare(other, lambda a, b: a < b)

    def __le__(self, other):
        return self._compare(other, lambda a, b: a <= b)

    def __gt__(self, other):
        return self._compare(other, lambda a, b: a > b)

    def __ge__(self, other):
        return self._compare(other, lambda a, b: a >= b)

    def __str__(self) -> str:
        return f"{self.magnitude:.12g} [{self.dimension}]"


def qadd(a: Quantity, b: Quantity) -> Quantity:
    """Sum of two quantities of identical dimension."""
    return a + b


def qsub(a: Quantity, b: Quantity) -> Quantity:
    """Difference of two quantities of identical dimension."""
    return a - b


def qmul(a: Quantity, b: Quantity) -> Quantity:
    """Product; dimensions combine by exact exponent addition."""
    return a * b


def qdiv(a: Quantity, b: Quantity) -> Quantity:
    """Quotient; dimensions combine by exact exponent subtraction."""
    return a / b


def qpow(a: Quantity, p: Rational) -> Quantity:
    """Rational power; the dimension exponents scale exactly by p.

    A negative magnitude is rejected when p has an even denominator
    (no real root); odd denominators keep the sign of the base.
    """
    p = _as_fraction(p)
    mag = a.magnitude
    if mag < 0.0:
        if p.denominator == 1:
            new_mag = mag ** p.numerator
        elif p.denominator % 2 == 0:
            raise ValueError(
                f"cannot raise negative magnitude {mag!r} to power {p} "
                "(even root of a negative number)")
        else:
            root = (-mag) ** float(p)
            new_mag = -root if p.numerator % 2 else root
    else:
        new_mag = mag ** float(p)
    return Quantity(new_mag, a.dimension ** p)


@dataclass(frozen=True)
class Constants:
    """SI values of G, hbar and c; Planck scales are always re-derived.

    Defaults are the CODATA 2018 recommended values (c is exact by the
    definition of the metre).
    """

    G_si: float = 6.67430e-11
    hbar_si: float = 1.054571817e-34
    c_si: float = 299792458.0

    def __post_init__(self):
        for name in ("G_si", "hbar_si", "c_si"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0.0):
                raise ValueError(f"{name} must be positive and finite, "
                                 f"got {value!r}")

    @property
    def t_planck_si(self) -> float:
        return math.sqrt(self.hbar_si * self.G_si / self.c_si ** 5)

    @property
    def l_planck_si(self) -> float:
        return self.c_si * self.t_planck_si

    @property
    def m_planck_si(self) -> float:
        return self.hbar_si / (self.c_si ** 2 * self.t_planck_si)

    @property
    def energy_planck_si(self) -> float:
        return self.m_planck_si * self.c_si ** 2


def default_constants() -> Constants:
    """CODATA 2018 constant set."""
    return Constants()


def load_constants(path) -> Constants:
    """Read a flat JSON override file with keys G, hbar, c (SI units).

    Missing keys keep their CODATA defaults; unknown keys are rejected so
    that typos never silently fall back.  Derived Planck values are always
    recomputed, never read from the file.
    """
    with open(path, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    if not isinstance(raw, dict):
        raise ValueError(f"constants file {path} must hold a JSON object")
    unknown = set(raw) - {"G", "hbar", "c"}
    if unknown:
        raise ValueError(f"unknown constants file keys: {sorted(unknown)}; "
                         "expected only G, hbar, c")
    defaults = Constants()
    return Constants(G_si=float(raw.get("G", defaults.G_si)),
                     hbar_si=float(raw.get("hbar", defaults.hbar_si)),
                     c_si=float(raw.get("c", defaults.c_si)))


def _log_si_factor(dim: Dimension, k: Constants) -> float:
    """ln of the SI magnitude of one Planck unit of the given dimension."""
    total = 0.0
    for exp, base in ((dim.time_exp, k.t_planck_si),
                      (dim.length_exp, k.l_planck_si),
                      (dim.mass_exp, k.m_planck_si)):
        if exp:
            total += float(exp) * math.log(base)
    return total


def _direct_si_factor(dim: Dimension, k: Constants):
    """The SI-per-Planck factor as a plain product, or None when any
    exponent is large enough that partial products could leave the normal
    double range (t_planck^4 * l_planck^4 is already subnormal)."""
    for exp in (dim.time_exp, dim.length_exp, dim.mass_exp):
        if abs(exp) > _DIRECT_EXP_LIMIT:
            return None
    factor = 1.0
    for exp, base in ((dim.time_exp, k.t_planck_si),
                      (dim.length_exp, k.l_planck_si),
                      (dim.mass_exp, k.m_planck_si)):
        if exp:
            factor *= base ** float(exp)
    return factor


def _scale(value: float, dim: Dimension, k: Constants, to_si_units: bool) -> float:
    if value == 0.0:
        return 0.0
    factor = _direct_si_factor(dim, k)
    if factor is not None:
        result = value * factor if to_si_units else value / factor
        if math.isfinite(result) and result != 0.0:
            return result
    # Large exponents (or an out-of-range direct product): combine in log
    # space so intermediates never underflow before the final rounding.
    log_factor = _log_si_factor(dim, k)
    log_result = math.log(abs(value)) + (log_factor if to_si_units
                                         else -log_factor)
    try:
        magnitude = math.exp(log_result)
    except OverflowError:
        raise OverflowError(
            f"conversion result exceeds double range (ln |result| = "
            f"{log_result:.1f})") from None
    if magnitude == 0.0:
        raise OverflowError(
            f"conversion result underflows double range (ln |result| = "
            f"{log_result:.1f})")
    return math.copysign(magnitude, value)


def to_planck(value: float, dim: Dimension, k: Constants) -> Quantity:
    """Convert an SI magnitude of dimension ``dim`` into Planck units."""
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"SI value must be finite, got {value!r}")
    return Quantity(_scale(value, dim, k, to_si_units=False), dim)


def to_si(q: Quantity, k: Constants) -> float:
    """Convert a Planck-unit quantity back to its SI magnitude."""
    return _scale(q.magnitude, q.dimension, k, to_si_units=True)


def seconds(value: float, k: Constants) -> Quantity:
    """SI seconds -> Planck time quantity."""
    return to_planck(value, TIME, k)


def meters(value: float, k: Constants) -> Quantity:
    """SI meters -> Planck length quantity."""
    return to_planck(value, LENGTH, k)


def kilograms(value: float, k: Constants) -> Quantity:
    """SI kilograms -> Planck mass quantity."""
    return to_planck(value, MASS, k)


def joules(value: float, k: Constants) -> Quantity:
    """SI joules -> Planck energy quantity."""
    return to_planck(value, ENERGY, k)


def _require_dimension(q: Quantity, dim: Dimension, name: str) -> None:
    if q.dimension != dim:
        raise DimensionError(f"{name} must have dimension [{dim}], "
                             f"got [{q.dimension}]")


def in_seconds(q: Quantity, k: Constants) -> float:
    """Planck time quantity -> SI seconds."""
    _require_dimension(q, TIME, "quantity")
    return to_si(q, k)


def in_meters(q: Quantity, k: Constants) -> float:
    """Planck length quantity -> SI meters."""
    _require_dimension(q, LENGTH, "quantity")
    return to_si(q, k)


def in_kilograms(q: Quantity, k: Constants) -> float:
    """Planck mass quantity -> SI kilograms."""
    _require_dimension(q, MASS, "quantity")
    return to_si(q, k)


def in_joules(q: Quantity, k: Constants) -> float:
    """Planck energy quantity -> SI joules."""
    _require_dimension(q, ENERGY, "quantity")
    return to_si(q, k)


def dimensionless(value: float) -> Quantity:
    """Wrap a bare ratio as a dimensionless quantity."""
    return Quantity(value, DIMENSIONLESS)
