"""Constrained minimization of the deployment cost objective.

The design space is two-coordinate (drones per link, capacity step) with the
box constraints n_dr >= 1 and c_step >= 1. The workhorse is projected cyclic
coordinate descent with a backtracking line search per coordinate; an
exhaustive integer-lattice search acts as the verification oracle. The
analytic gradient is derived from the evaluated cost expressions and is
gated against central finite differences in the tests.
"""

import math
from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from . import _kernels_py
from .costmodel import CostParams, DesignPoint
from .errors import DomainError, ValidationError
from .sensitivity import SweepGrid

__all__ = [
    "DescentConfig",
    "OptimizationResult",
    "analytic_gradient",
    "finite_difference_gradient",
    "coordinate_descent",
    "grid_search",
]


@dataclass(frozen=True)
class DescentConfig:
    """Tuning knobs for coordinate_descent.

    grad_tolerance is relative to the projected gradient norm at the start
    point; fd_epsilon is the half-width used when a finite-difference
    gradient stands in for an analytic one.
    """

    step: float = 0.1
    grad_tolerance: float = 1e-3
    max_iterations: int = 10_000
    fd_epsilon: float = 1e-5

    def __post_init__(self):
        if not self.step > 0:
            raise ValidationError(f"step must be > 0 (got {self.step})")
        if not self.grad_tolerance > 0:
            raise ValidationError(
                f"grad_tolerance must be > 0 (got {self.grad_tolerance})")
        if self.max_iterations < 1:
            raise ValidationError(
                f"max_iterations must be >= 1 (got {self.max_iterations})")
        if not self.fd_epsilon > 0:
            raise ValidationError(f"fd_epsilon must be > 0 (got {self.fd_epsilon})")


@dataclass(frozen=True)
class OptimizationResult:
    """Outcome of a descent run.

    trace holds (point, objective) for the projected start and every accepted
    step, in order; objective values strictly decrease after the first entry.
    minimizer_integer is the best feasible lattice point found by rounding
    the continuous minimizer and probing its 8-neighborhood; objective_value
    is the objective there.
    """

    minimizer_continuous: DesignPoint
    minimizer_integer: DesignPoint
    objective_value: float
    trace: tuple
    converged: bool
    iterations: int


def analytic_gradient(point: DesignPoint, params: CostParams,
                      horizon: int = 1) -> tuple:
    """Partial derivatives (d/dn_dr, d/dc_step) of the horizon objective."""
    if point.n_dr < 1 or point.c_step < 1:
        raise DomainError(f"gradient requested outside the feasible region "
                          f"({point.n_dr}, {point.c_step})")
    return kernels.gradient(point.n_dr, point.c_step, params.pack(), float(horizon))


def finite_difference_gradient(f, n_dr: float, c_step: float,
                               epsilon: float = 1e-5) -> tuple:
    """Central-difference gradient of f(n_dr, c_step); the independent
    oracle the analytic gradient is checked against."""
    gn = (f(n_dr + epsilon, c_step) - f(n_dr - epsilon, c_step)) / (2.0 * epsilon)
    gs = (f(n_dr, c_step + epsilon) - f(n_dr, c_step - epsilon)) / (2.0 * epsilon)
    return gn, gs


def _integer_refine(f, n: float, s: float, n_max: float, c_max: float):
    """Best feasible lattice point in the 8-neighborhood of round((n, s)).

    Ties break toward smaller n_dr, then smaller c_step, matching the grid
    oracle. Candidates are scanned in lexicographic order with a strict
    improvement test, so the first best wins.
    """
    n0 = math.floor(n + 0.5)
    s0 = math.floor(s + 0.5)
    best = None
    best_f = math.inf
    for ni in (n0 - 1, n0, n0 + 1):
        if ni < 1 or ni > n_max:
            continue
        for si in (s0 - 1, s0, s0 + 1):
            if si < 1 or si > c_max:
                continue
            fi = f(float(ni), float(si))
            if fi < best_f:
                best = (float(ni), float(si))
                best_f = fi
    return best, best_f


def coordinate_descent(start: DesignPoint, params: CostParams,
                       config: DescentConfig = DescentConfig(),
                       horizon: int = 1,
                       n_max: float = math.inf,
                       c_max: float = math.inf,
                       objective_fn=None,
                       gradient_fn=None) -> OptimizationResult:
    """Minimize the horizon objective from ``start`` by projected cyclic
    coordinate descent.

    Each cycle visits n_dr then c_step; a coordinate move steps against the
    sign of its partial derivative, halving the trial step from config.step
    until the objective strictly decreases (giving up below 1e-6), and every
    candidate is projected onto [1, n_max] x [1, c_max]. The run stops when
    the projected gradient norm falls to config.grad_tolerance times its
    starting value, when a full cycle accepts no move (a coordinate-wise
    minimum at step resolution), or at config.max_iterations; only the last
    leaves converged False. The continuous minimizer is then rounded and
    refined over its integer 8-neighborhood.

    ``objective_fn`` (with optional ``gradient_fn``) replaces the cost model
    with an arbitrary f(n_dr, c_step); without gradient_fn a central
    finite-difference gradient with half-width config.fd_epsilon is used.
    Intended for testing the descent machinery against stub objectives.
    """
    if horizon < 1:
        raise DomainError(f"horizon must be >= 1 (got {horizon})")
    if n_max < 1 or c_max < 1:
        raise DomainError("upper bounds must be >= 1")

    if objective_fn is None:
        packed = params.pack()
        h = float(horizon)
        n, s, fval, converged, cycles, raw_trace = kernels.descend(
            start.n_dr, start.c_step, packed, h, config.step,
            config.grad_tolerance, config.max_iterations, n_max, c_max)

        def f(ni, si):
            return kernels.objective(ni, si, packed, h)
    else:
        f = objective_fn
        if gradient_fn is None:
            eps = config.fd_epsilon

            def gradient_fn(ni, si):
                return finite_difference_gradient(f, ni, si, eps)

        n, s, fval, converged, cycles, raw_trace = _kernels_py.descend_loop(
            f, gradient_fn, start.n_dr, start.c_step, config.step,
            config.grad_tolerance, config.max_iterations, n_max, c_max)

    (best_n, best_s), best_f = _integer_refine(f, n, s, n_max, c_max)
    trace = tuple((DesignPoint(tn, ts), tf) for tn, ts, tf in raw_trace)
    return OptimizationResult(
        minimizer_continuous=DesignPoint(n, s),
        minimizer_integer=DesignPoint(best_n, best_s),
        objective_value=best_f,
        trace=trace,
        converged=converged,
        iterations=cycles,
    )


def grid_search(params: CostParams, n_range: tuple, c_range: tuple,
                horizon: int = 1):
    """Exhaustively evaluate the horizon objective on an integer lattice.

    ``n_range`` and ``c_range`` are inclusive (lo, hi) integer bounds. Returns
    (argmin point, its objective value, the full grid); ties break toward
    smaller n_dr, then smaller c_step.
    """
    n_lo, n_hi = int(n_range[0]), int(n_range[1])
    c_lo, c_hi = int(c_range[0]), int(c_range[1])
    if n_lo < 1 or c_lo < 1:
        raise DomainError(f"lattice must lie within the constraints "
                          f"(got n >= {n_lo}, c >= {c_lo})")
    if n_hi < n_lo or c_hi < c_lo:
        raise DomainError(f"empty lattice range (n {n_lo}..{n_hi}, c {c_lo}..{c_hi})")
    if horizon < 1:
        raise DomainError(f"horizon must be >= 1 (got {horizon})")

    cells = kernels.grid_scan(params.pack(), float(horizon), n_lo, n_hi, c_lo, c_hi)
    # row-major first occurrence == lexicographic (n_dr, c_step) tie-break
    flat = int(np.argmin(cells))
    i, j = divmod(flat, cells.shape[1])
    point = DesignPoint(float(n_lo + i), float(c_lo + j))
    grid = SweepGrid.build(
        row_label="n_dr",
        row_values=tuple(range(n_lo, n_hi + 1)),
        col_label="c_step",
        col_values=tuple(range(c_lo, c_hi + 1)),
        cells=cells,
    )
    return point, float(cells[i, j]), grid
