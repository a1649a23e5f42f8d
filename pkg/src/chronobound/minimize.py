"""Derivative-free minimization on a logarithmic axis.

This is the independent oracle used to validate every closed-form optimum:
golden-section bracket shrinkage for one scalar, and a refining log-grid
scan for two.  It deliberately shares no code with the differentiation
machinery or the closed forms it checks.  Optima of the bound pipeline
span many decades, so both searches work on ln(x) and tolerances are
relative widths.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Tuple, Union

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0
_EPS = 2.0 ** -52


@dataclass(frozen=True)
class Bracket:
    """A positive search interval, interpreted on a logarithmic axis."""

    lo: float
    hi: float

    def __post_init__(self):
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)
                and 0.0 < self.lo < self.hi):
            raise ValueError(f"bracket must satisfy 0 < lo < hi, "
                             f"got [{self.lo!r}, {self.hi!r}]")


@dataclass(frozen=True)
class MinimizationResult:
    """Outcome of a search; min_value is the objective at argmin."""

    argmin: Union[float, Tuple[float, float]]
    min_value: float
    evaluations: int
    converged: bool
    bracket_final_width: float
    skipped: int = 0


#: Log-axis spacing of the final parabolic refinement; a few decades above
#: the sqrt(eps) zone where objective values are flat to roundoff, small
#: enough that the quadratic model holds for smooth minima.
_POLISH_SPACING = 3e-5

#: Largest refinement shift accepted beyond the converged bracket itself:
#: roundoff can displace a smooth bracket by at most ~sqrt(eps), so a fit
#: proposing more than ~10x that is evidence of a non-quadratic minimum.
_MAX_NOISE_SHIFT = 2e-7


def minimize_unimodal(objective: Callable[[float], float],
                      bracket: Bracket,
                      rel_tol: float = 1e-9,
                      max_evals: int = 200) -> MinimizationResult:
    """Golden-section search for a unimodal objective on the bracket.

    Shrinks the log-transformed interval until its relative width is at
    most rel_tol or the evaluation budget runs out; in the latter case the
    result carries converged=False rather than a silently wrong answer.
    Unimodality on the bracket is the caller's responsibility.

    Pure value comparison cannot place a smooth minimum better than about
    sqrt(eps) ~ 1e-8 relative (the objective is flat to roundoff there),
    so after convergence one three-point parabolic fit with well-separated
    abscissae refines the argmin.  The refinement is skipped whenever its
    premises fail: minimum at a bracket edge, no budget, locally flat or
    non-convex values, or a proposed shift larger than value-noise
    displacement can explain (as at a kinked minimum, where the bracket
    midpoint is already the better estimate).
    """
    if not (math.isfinite(rel_tol) and rel_tol >= 1e-12):
        raise ValueError(f"rel_tol must be at least 1e-12, got {rel_tol!r}")
    if max_evals < 4:
        raise ValueError(f"max_evals must be at least 4, got {max_evals!r}")

    lo = math.log(bracket.lo)
    hi = math.log(bracket.hi)
    a, b = lo, hi
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    f_c = objective(math.exp(c))
    f_d = objective(math.exp(d))
    evaluations = 2

    # One evaluation is reserved for reporting min_value at the midpoint.
    while math.expm1(b - a) > rel_tol and evaluations < max_evals - 1:
        if f_c < f_d:
            b, d, f_d = d, c, f_c
            c = b - _INVPHI * (b - a)
            f_c = objective(math.exp(c))
        else:
            a, c, f_c = c, d, f_d
            d = a + _INVPHI * (b - a)
            f_d = objective(math.exp(d))
        evaluations += 1

    width = math.expm1(b - a)
    converged = width <= rel_tol
    u = 0.5 * (a + b)
    argmin = math.exp(u)
    min_value = objective(argmin)
    evaluations += 1

    h = _POLISH_SPACING
    if converged and u - h >= lo and u + h <= hi \
            and evaluations + 3 <= max_evals:
        f_lo = objective(math.exp(u - h))
        f_hi = objective(math.exp(u + h))
        evaluations += 2
        curvature = f_lo - 2.0 * min_value + f_hi
        scale = max(abs(f_lo), abs(min_value), abs(f_hi))
        max_shift = max(0.5 * (b - a), _MAX_NOISE_SHIFT)
        if curvature > 8.0 * _EPS * scale:
            offset = 0.5 * h * (f_lo - f_hi) / curvature
            if abs(offset) < max_shift:
                argmin = math.exp(u + offset)
                min_value = objective(argmin)
                evaluations += 1

    return MinimizationResult(argmin=argmin, min_value=min_value,
                              evaluations=evaluations,
                              converged=converged,
                              bracket_final_width=width)


def _log_grid(lo: float, hi: float, points: int) -> list[float]:
    step = (hi - lo) / (points - 1)
    grid = [lo + i * step for i in range(points)]
    grid[-1] = hi
    return grid


def grid_refine_2d(objective: Callable[[float, float], float],
                   box: Tuple[Bracket, Bracket],
                   levels: int = 6,
                   points_per_axis: int = 16) -> MinimizationResult:
    """Logarithmic grid scan with recursive 4x refinement around the best cell.

    Objective errors (ValueError/ArithmeticError) and non-finite values mark
    excluded cells: they are counted in ``skipped`` and the scan continues,
    so domains with forbidden regions (such as r <= r_s) are handled.  The
    refined window is always clamped to the original box.  Deterministic for
    fixed inputs; converged is False only if every cell was excluded.
    """
    if levels < 1:
        raise ValueError(f"levels must be at least 1, got {levels!r}")
    if points_per_axis < 8:
        raise ValueError(f"points_per_axis must be at least 8, "
                         f"got {points_per_axis!r}")

    bx, by = box
    orig_x = (math.log(bx.lo), math.log(bx.hi))
    orig_y = (math.log(by.lo), math.log(by.hi))
    lo_x, hi_x = orig_x
    lo_y, hi_y = orig_y

    best: tuple[float, float, float] | None = None  # (value, ux, uy)
    evaluations = 0
    skipped = 0

    for _ in range(levels):
        for ux in _log_grid(lo_x, hi_x, points_per_axis):
            x = math.exp(ux)
            for uy in _log_grid(lo_y, hi_y, points_per_axis):
                evaluations += 1
                try:
                    value = objective(x, math.exp(uy))
                except (ValueError, ArithmeticError):
                    skipped += 1
                    continue
                if not math.isfinite(value):
                    skipped += 1
                    continue
                if best is None or value < best[0]:
                    best = (value, ux, uy)
        if best is None:
            break
        lo_x, hi_x = _shrink(best[1], lo_x, hi_x, orig_x)
        lo_y, hi_y = _shrink(best[2], lo_y, hi_y, orig_y)

    width = max(math.expm1(hi_x - lo_x), math.expm1(hi_y - lo_y))
    if best is None:
        return MinimizationResult(argmin=(math.nan, math.nan),
                                  min_value=math.nan,
                                  evaluations=evaluations, converged=False,
                                  bracket_final_width=width, skipped=skipped)
    return MinimizationResult(argmin=(math.exp(best[1]), math.exp(best[2])),
                              min_value=best[0], evaluations=evaluations,
                              converged=True, bracket_final_width=width,
                              skipped=skipped)


def _shrink(center: float, lo: float, hi: float,
            orig: tuple[float, float]) -> tuple[float, float]:
    width = (hi - lo) / 4.0
    new_lo = max(orig[0], center - 0.5 * width)
    new_hi = new_lo + width
    if new_hi > orig[1]:
        new_hi = orig[1]
        new_lo = max(orig[0], new_hi - width)
    return new_lo, new_hi
