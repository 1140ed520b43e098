"""Descent and grid-search tests.

The analytic gradient is checked against central finite differences (the
only independent oracle available for it), the descent driver against
stub objectives with known minimizers, and the full pipeline against the
exhaustive lattice scan.
"""

from __future__ import annotations

import dataclasses
import math
import random

import pytest

from dronetco import (
    CapacityMapping,
    CostParams,
    DescentConfig,
    DesignPoint,
    DomainError,
    ValidationError,
    analytic_gradient,
    coordinate_descent,
    finite_difference_gradient,
    grid_search,
    objective,
)
from dronetco.optimizer import _integer_refine
from helpers import is_integral, random_params, rel_err


def _fd_oracle(params, point, horizon=1, eps=1e-5):
    def f(n, s):
        return objective_at(params, n, s, horizon)
    return finite_difference_gradient(f, point.n_dr, point.c_step, eps)


def objective_at(params, n, s, horizon=1):
    from dronetco._backend import kernels
    return kernels.objective(n, s, params.pack(), float(horizon))


# ---------------------------------------------------------------- gradient

def test_gradient_matches_finite_differences_randomized():
    rng = random.Random(4242)
    worst = 0.0
    for _ in range(200):
        p = random_params(rng, vary_variants=True)
        # keep clear of the n,c >= 1 boundary so central differences stay
        # inside the feasible region
        pt = DesignPoint(rng.uniform(1.5, 30.0), rng.uniform(1.5, 9.5))
        gn, gs = analytic_gradient(pt, p)
        fn, fs = _fd_oracle(p, pt)
        scale = max(abs(gn), abs(gs), 1.0)
        worst = max(worst, abs(gn - fn) / scale, abs(gs - fs) / scale)
    assert worst <= 1e-6, f"worst gradient mismatch {worst:.3e}"


def test_gradient_horizon_scales_recurring_terms():
    p = CostParams()
    pt = DesignPoint(7.0, 2.0)
    g1 = analytic_gradient(pt, p, horizon=1)
    g5 = analytic_gradient(pt, p, horizon=5)
    f1 = _fd_oracle(p, pt, horizon=1)
    f5 = _fd_oracle(p, pt, horizon=5)
    for got, want in zip(g1 + g5, f1 + f5):
        assert abs(got - want) / max(abs(want), 1.0) <= 1e-6


def test_gradient_limit_large_n():
    # as n grows the per-cell terms die off like 1/n^2, so the n-partial
    # approaches the pure drone-fleet slope 2^(c_step-1) * d
    p = CostParams()
    for s in (1.0, 3.0):
        gn, _ = analytic_gradient(DesignPoint(1e6, s), p)
        expected = 2.0 ** (s - 1.0) * p.drone_unit_cost
        assert rel_err(gn, expected) <= 1e-6


def test_gradient_sign_at_origin_default():
    # at (1, 1) the default scenario still gains from adding drones
    gn, _ = analytic_gradient(DesignPoint(1, 1), CostParams())
    assert gn < 0.0


def test_finite_difference_matches_parabola():
    fn, fs = finite_difference_gradient(lambda n, s: (n - 3) ** 2 + (s - 2) ** 2,
                                        5.0, 1.0)
    assert abs(fn - 4.0) <= 1e-6
    assert abs(fs + 2.0) <= 1e-6


# ------------------------------------------------------------------ config

@pytest.mark.parametrize("kwargs", [
    {"step": 0.0},
    {"step": -1.0},
    {"grad_tolerance": 0.0},
    {"max_iterations": 0},
    {"fd_epsilon": 0.0},
    {"step": math.nan},
])
def test_descent_config_validation(kwargs):
    with pytest.raises(ValidationError):
        DescentConfig(**kwargs)


def test_descent_rejects_bad_horizon_and_bounds():
    p = CostParams()
    with pytest.raises(DomainError):
        coordinate_descent(DesignPoint(1, 1), p, horizon=0)
    with pytest.raises(DomainError):
        coordinate_descent(DesignPoint(1, 1), p, n_max=0.5)


# ------------------------------------------------------------- stub walks

def test_descent_on_quadratic_stub():
    result = coordinate_descent(
        DesignPoint(8, 8), CostParams(),
        objective_fn=lambda n, s: (n - 3.0) ** 2 + (s - 2.0) ** 2,
        n_max=10, c_max=10)
    assert abs(result.minimizer_continuous.n_dr - 3.0) <= 1e-3
    assert abs(result.minimizer_continuous.c_step - 2.0) <= 1e-3
    assert result.minimizer_integer == DesignPoint(3, 2)
    assert result.converged


def test_descent_stub_with_explicit_gradient():
    result = coordinate_descent(
        DesignPoint(8, 8), CostParams(),
        objective_fn=lambda n, s: (n - 3.0) ** 2 + (s - 2.0) ** 2,
        gradient_fn=lambda n, s: (2.0 * (n - 3.0), 2.0 * (s - 2.0)),
        n_max=10, c_max=10)
    assert result.minimizer_integer == DesignPoint(3, 2)
    assert result.converged


def test_descent_pinned_at_corner():
    # gradient points out of the box at (1, 1); projection keeps the walk
    # there and the projected gradient norm is zero, so it converges in
    # one cycle without moving
    result = coordinate_descent(
        DesignPoint(1, 1), CostParams(),
        objective_fn=lambda n, s: n + s,
        n_max=10, c_max=10)
    assert result.minimizer_continuous == DesignPoint(1, 1)
    assert result.minimizer_integer == DesignPoint(1, 1)
    assert result.converged
    assert result.iterations == 1
    assert len(result.trace) == 1


def test_descent_respects_upper_bounds():
    result = coordinate_descent(DesignPoint(1, 1), CostParams(),
                                n_max=1, c_max=1)
    assert result.minimizer_integer == DesignPoint(1, 1)
    for pt, _ in result.trace:
        assert pt.n_dr <= 1.0 and pt.c_step <= 1.0


def test_descent_hits_iteration_cap():
    cfg = DescentConfig(max_iterations=2)
    result = coordinate_descent(DesignPoint(1, 1), CostParams(),
                                config=cfg, n_max=30, c_max=10)
    assert result.iterations == 2
    assert not result.converged


# ----------------------------------------------------------- full pipeline

def test_descent_agrees_with_lattice_default_scenario():
    p = CostParams()
    result = coordinate_descent(DesignPoint(1, 1), p, n_max=30, c_max=10)
    oracle_point, oracle_value, _ = grid_search(p, (1, 30), (1, 10))
    assert result.converged
    assert result.minimizer_integer == oracle_point
    assert rel_err(result.objective_value, oracle_value) <= 1e-12
    # frozen regression: the exhaustive scan lands on (19, 1) for the
    # default parameters over this lattice
    assert oracle_point == DesignPoint(19, 1)


def test_descent_trace_feasible_and_strictly_decreasing():
    result = coordinate_descent(DesignPoint(1, 1), CostParams(),
                                n_max=30, c_max=10)
    values = [v for _, v in result.trace]
    assert all(b < a for a, b in zip(values, values[1:]))
    for pt, _ in result.trace:
        assert 1.0 <= pt.n_dr <= 30.0
        assert 1.0 <= pt.c_step <= 10.0


def test_descent_deterministic():
    p = CostParams()
    r1 = coordinate_descent(DesignPoint(1, 1), p, n_max=30, c_max=10)
    r2 = coordinate_descent(DesignPoint(1, 1), p, n_max=30, c_max=10)
    assert r1.trace == r2.trace
    assert r1.minimizer_continuous == r2.minimizer_continuous
    assert r1.objective_value == r2.objective_value
    assert r1.iterations == r2.iterations


def test_descent_hook_path_matches_kernel_path():
    # driving the pure-python loop with the packed kernel objective and
    # analytic gradient must retrace the compiled walk step for step
    p = CostParams()
    packed = p.pack()
    from dronetco._backend import kernels

    kernel_result = coordinate_descent(DesignPoint(1, 1), p, n_max=30, c_max=10)
    hook_result = coordinate_descent(
        DesignPoint(1, 1), p, n_max=30, c_max=10,
        objective_fn=lambda n, s: kernels.objective(n, s, packed, 1.0),
        gradient_fn=lambda n, s: kernels.gradient(n, s, packed, 1.0))
    assert hook_result.trace == kernel_result.trace
    assert hook_result.minimizer_integer == kernel_result.minimizer_integer


def test_integer_minimizer_is_integral():
    rng = random.Random(7)
    for _ in range(20):
        p = random_params(rng)
        result = coordinate_descent(DesignPoint(1, 1), p, n_max=25, c_max=8)
        assert is_integral(result.minimizer_integer.n_dr)
        assert is_integral(result.minimizer_integer.c_step)


# ------------------------------------------------------------ grid search

def test_grid_search_argmin_is_minimum():
    p = CostParams()
    point, value, grid = grid_search(p, (1, 12), (1, 6))
    assert value == grid.cells.min()
    assert value == objective_at(p, point.n_dr, point.c_step)


def test_grid_search_single_cell():
    point, value, grid = grid_search(CostParams(), (7, 7), (2, 2))
    assert point == DesignPoint(7, 2)
    assert grid.cells.shape == (1, 1)


def test_grid_search_tie_breaks_lexicographically():
    # kill every component so the surface is identically zero: free drones,
    # free upgrades, and the product mapping at step 1 carries no traffic
    p = CostParams(drone_unit_cost=0.0, smc=0.0,
                   capacity_mapping=CapacityMapping.PRODUCT)
    point, value, _ = grid_search(p, (1, 5), (1, 1))
    assert value == 0.0
    assert point == DesignPoint(1, 1)
    point, _, _ = grid_search(p, (3, 3), (1, 1))
    assert point == DesignPoint(3, 1)


def test_grid_search_validation():
    p = CostParams()
    with pytest.raises(DomainError):
        grid_search(p, (0, 5), (1, 3))
    with pytest.raises(DomainError):
        grid_search(p, (5, 1), (1, 3))
    with pytest.raises(DomainError):
        grid_search(p, (1, 5), (1, 3), horizon=0)


def test_grid_matches_direct_objective():
    p = CostParams()
    _, _, grid = grid_search(p, (1, 8), (1, 4), horizon=3)
    for i, n in enumerate(grid.row_values):
        for j, s in enumerate(grid.col_values):
            assert grid.cells[i, j] == objective_at(p, float(n), float(s), 3)


# --------------------------------------------------------- integer refine

def test_integer_refine_rounds_then_improves():
    (n, s), v = _integer_refine(lambda a, b: (a - 3.4) ** 2 + (b - 2.0) ** 2,
                                3.4, 2.0, 10, 10)
    assert (n, s) == (3.0, 2.0)
    assert v == pytest.approx(0.16)


def test_integer_refine_prefers_lexicographic_on_ties():
    # symmetric bowl centred between four lattice points: all neighbours of
    # the rounded point tie, so the first strict improvement in scan order
    # must win and further ties must not displace it
    (n, s), _ = _integer_refine(lambda a, b: (a - 2.5) ** 2 + (b - 2.5) ** 2,
                                2.5, 2.5, 10, 10)
    assert (n, s) == (2.0, 2.0)


def test_integer_refine_respects_bounds():
    (n, s), _ = _integer_refine(lambda a, b: a + b, 1.2, 1.2, 10, 10)
    assert (n, s) == (1.0, 1.0)
