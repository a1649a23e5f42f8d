"""Gravitational time dilation and the horizon radius of a clock.

A clock of energy E occupies a region of radius r; the energy sets a
Schwarzschild radius r_s = 2GE/c^4 (2E in Planck units) and proper time
near the clock relates to distant-observer time through the factor
sqrt(1 - r_s/r).  The radius must strictly exceed r_s: a clock at or
inside its own horizon is rejected rather than mapped to infinity, so
invalid geometry can never propagate as NaN.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import kernels
from .quantities import ENERGY, LENGTH, TIME, Quantity, _require_dimension


class HorizonError(ValueError):
    """Clock radius does not strictly exceed its Schwarzschild radius."""


def _check_geometry(r_s: float, r: float) -> None:
    if r_s < 0.0:
        raise ValueError(f"Schwarzschild radius must be non-negative, "
                         f"got {r_s!r}")
    if r <= r_s:
        raise HorizonError(f"clock radius {r!r} must strictly exceed the "
                           f"Schwarzschild radius {r_s!r}")


def schwarzschild_radius(energy: Quantity) -> Quantity:
    """Horizon radius of an energy concentration: 2GE/c^4."""
    _require_dimension(energy, ENERGY, "energy")
    if energy.magnitude < 0.0:
        raise ValueError(f"energy must be non-negative, "
                         f"got {energy.magnitude!r}")
    return Quantity(kernels.schwarzschild_radius(energy.magnitude), LENGTH)


def dilate(t_c: Quantity, r_s: Quantity, r: Quantity) -> Quantity:
    """Distant-observer time t = t_c / sqrt(1 - r_s/r); always >= t_c."""
    _require_dimension(t_c, TIME, "t_c")
    _require_dimension(r_s, LENGTH, "r_s")
    _require_dimension(r, LENGTH, "r")
    if t_c.magnitude < 0.0:
        raise ValueError(f"t_c must be non-negative, got {t_c.magnitude!r}")
    _check_geometry(r_s.magnitude, r.magnitude)
    return Quantity(kernels.dilate(t_c.magnitude, r_s.magnitude, r.magnitude),
                    TIME)


def contract(t: Quantity, r_s: Quantity, r: Quantity) -> Quantity:
    """Proper time t_c = t * sqrt(1 - r_s/r); inverse of dilate."""
    _require_dimension(t, TIME, "t")
    _require_dimension(r_s, LENGTH, "r_s")
    _require_dimension(r, LENGTH, "r")
    if t.magnitude < 0.0:
        raise ValueError(f"t must be non-negative, got {t.magnitude!r}")
    _check_geometry(r_s.magnitude, r.magnitude)
    return Quantity(kernels.contract(t.magnitude, r_s.magnitude, r.magnitude),
                    TIME)


@dataclass(frozen=True)
class ClockGeometry:
    """A clock's radius, Schwarzschild radius and energy, kept consistent.

    Invariants enforced at construction: r > r_s >= 0 and
    r_s = 2 * energy (Planck units) to a relative 1e-12.
    """

    r: Quantity
    r_s: Quantity
    energy: Quantity

    def __post_init__(self):
        _require_dimension(self.r, LENGTH, "r")
        _require_dimension(self.r_s, LENGTH, "r_s")
        _require_dimension(self.energy, ENERGY, "energy")
        _check_geometry(self.r_s.magnitude, self.r.magnitude)
        expected = kernels.schwarzschild_radius(self.energy.magnitude)
        scale = max(abs(expected), abs(self.r_s.magnitude))
        if abs(expected - self.r_s.magnitude) > 1e-12 * scale:
            raise ValueError(
                f"r_s = {self.r_s.magnitude!r} is inconsistent with "
                f"energy (expected {expected!r})")

    @classmethod
    def from_energy(cls, energy: Quantity, r: Quantity) -> "ClockGeometry":
        return cls(r=r, r_s=schwarzschild_radius(energy), energy=energy)

    @classmethod
    def from_schwarzschild(cls, r_s: Quantity, r: Quantity) -> "ClockGeometry":
        _require_dimension(r_s, LENGTH, "r_s")
        return cls(r=r, r_s=r_s, energy=Quantity(0.5 * r_s.magnitude, ENERGY))

    @property
    def dilation_factor(self) -> float:
        """sqrt(1 - r_s/r), the proper-per-observer time ratio in (0, 1]."""
        return math.sqrt(1.0 - self.r_s.magnitude / self.r.magnitude)


__all__ = ["ClockGeometry", "HorizonError", "contract", "dilate",
           "schwarzschild_radius"]
