"""Shared fixtures for the test suite.

The random-parameter generator below draws from wide but physically sane
ranges so property tests exercise the model far from the default scenario.
Seeds are fixed by the callers so every run sees the same cases.
"""

from __future__ import annotations

import math
import random

from dronetco.costmodel import BackhaulVariant, CapacityMapping, CostParams, DesignPoint


def random_params(rng: random.Random, *, vary_variants: bool = False) -> CostParams:
    """Draw a feasible CostParams uniformly from broad ranges.

    With ``vary_variants`` the backhaul variant and capacity mapping are
    also randomised; otherwise both stay at their defaults so numeric
    comparisons against the additive/inverse-chain formulas stay valid.
    """
    kwargs = dict(
        city_area=rng.uniform(10.0, 500.0),
        drone_reach=rng.uniform(0.1, 0.5),
        drone_unit_cost=rng.uniform(1_000.0, 30_000.0),
        cost_a=rng.uniform(500.0, 10_000.0),
        cost_b=rng.uniform(0.05, 0.8),
        smc=rng.uniform(500.0, 10_000.0),
        fhc=rng.uniform(50.0, 5_000.0),
        bhc=rng.uniform(50.0, 5_000.0),
        bbu=rng.randint(1, 20),
        mux=rng.uniform(1.0, 3.0),
        c_base=rng.uniform(100.0, 1_000.0),
        c_step_size=rng.uniform(50.0, 200.0),
    )
    if vary_variants:
        kwargs["backhaul_variant"] = rng.choice(list(BackhaulVariant))
        kwargs["capacity_mapping"] = rng.choice(list(CapacityMapping))
        kwargs["fh_rate_multiplier"] = rng.uniform(1.0, 3.0)
    return CostParams(**kwargs)


def random_point(rng: random.Random, n_max: float = 30.0, c_max: float = 10.0) -> DesignPoint:
    """Draw a feasible (possibly fractional) design point inside the box."""
    return DesignPoint(
        n_dr=rng.uniform(1.0, n_max),
        c_step=rng.uniform(1.0, c_max),
    )


def rel_err(value: float, reference: float) -> float:
    """Relative error against a reference, safe at reference == 0."""
    if reference == 0.0:
        return abs(value)
    return abs(value - reference) / abs(reference)


def assert_close(value: float, reference: float, rel: float = 1e-12) -> None:
    err = rel_err(value, reference)
    assert err <= rel, f"{value!r} vs {reference!r}: rel err {err:.3e} > {rel:.1e}"


def is_integral(x: float) -> bool:
    return math.isfinite(x) and x == math.floor(x)
