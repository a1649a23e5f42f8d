"""Instrumented evaluation of the Planck-unit pipeline.

Re-derives the optimal-clock chain step by step with every intermediate
named and recorded, so range safety can be asserted over wide sweeps: in
Planck units no intermediate should approach the double-precision
underflow or overflow regions even for durations between a nanosecond and
1e18 seconds.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

_TWO_PI = 2.0 * math.pi


def clock_chain_intermediates(t: float) -> dict[str, float]:
    """Every intermediate of the bound-plus-clock chain at Planck time t."""
    values: dict[str, float] = {"t": t}
    values["t_squared"] = t * t
    dt_c = math.sqrt(2.0) * math.pi ** (1.0 / 3.0) * t ** (1.0 / 3.0)
    values["dt_c"] = dt_c
    dt_c_sq = dt_c * dt_c
    values["dt_c_squared"] = dt_c_sq
    values["dt_c_fourth"] = dt_c_sq * dt_c_sq
    strength = 4.0 * math.pi * math.pi * values["t_squared"]
    values["objective_scale"] = strength
    term1 = strength / values["dt_c_fourth"]
    term2 = dt_c_sq
    values["objective_term1"] = term1
    values["objective_term2"] = term2
    variance = term1 + term2
    values["variance"] = variance
    dt = math.sqrt(variance)
    values["dt"] = dt
    values["dt_over_t"] = dt / t
    r = dt_c / _TWO_PI
    values["r"] = r
    r_s = r / 3.0
    values["r_s"] = r_s
    energy = 0.5 * r_s
    values["energy"] = energy
    delta_e = 1.0 / dt_c
    values["delta_e"] = delta_e
    values["fractional_de"] = delta_e / energy
    return values


@dataclass(frozen=True)
class SweepStats:
    """Extremes of the recorded intermediates over a sweep."""

    points: int
    smallest: float
    smallest_name: str
    largest: float
    largest_name: str
    all_finite: bool


def scan_intermediates(t_values: Iterable[float]) -> SweepStats:
    """Run the instrumented chain over each t and track the extremes."""
    points = 0
    smallest = math.inf
    largest = 0.0
    smallest_name = ""
    largest_name = ""
    all_finite = True
    for t in t_values:
        points += 1
        for name, value in clock_chain_intermediates(t).items():
            if not math.isfinite(value):
                all_finite = False
                continue
            mag = abs(value)
            if mag == 0.0:
                continue
            if mag < smallest:
                smallest, smallest_name = mag, name
            if mag > largest:
                largest, largest_name = mag, name
    return SweepStats(points=points, smallest=smallest,
                      smallest_name=smallest_name, largest=largest,
                      largest_name=largest_name, all_finite=all_finite)
