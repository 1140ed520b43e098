"""Parameter sweeps and functional-split comparison.

Three numerical studies over the cost model: TCO against (drone unit cost,
n_dr) at the base capacity step, TCO against (c_step, n_dr) at a chosen
horizon, and a CAPEX/OPEX comparison of two RAN centralization splits at a
fixed design point. Results come back as SweepGrid matrices (with per-row
argmins precomputed) or breakdown rows; no plotting here.
"""

from dataclasses import dataclass, replace
from enum import Enum

import numpy as np

from .costmodel import CostParams, DesignPoint, tco
from .errors import DomainError, ValidationError

__all__ = [
    "SplitName",
    "SplitProfile",
    "SweepGrid",
    "apply_profile",
    "sweep_drone_cost",
    "sweep_capacity",
    "compare_splits",
]


class SplitName(str, Enum):
    """RAN centralization split identifiers.

    SPLIT2 cuts at the PDCP layer: the drone carries more processing
    (costlier unit) but the fronthaul sees near-user-rate traffic. SPLIT7
    cuts at the PHY layer: a cheaper radio kit, but the fronthaul must carry
    an inflated I/Q-like rate.
    """

    SPLIT2 = "split2"
    SPLIT7 = "split7"


@dataclass(frozen=True)
class SplitProfile:
    """Parameter overrides a centralization split applies to the base model.

    fronthaul_rate_multiplier scales the per-drone capacity burden placed on
    the fronthaul lease; smc_override, when set, replaces the small-cell
    upgrade cost.
    """

    name: SplitName
    drone_unit_cost: float
    fronthaul_rate_multiplier: float
    smc_override: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "name", SplitName(self.name))
        if not self.drone_unit_cost > 0:
            raise ValidationError(
                f"drone_unit_cost must be > 0 (got {self.drone_unit_cost})")
        if not self.fronthaul_rate_multiplier >= 1:
            raise ValidationError(
                f"fronthaul_rate_multiplier must be >= 1 "
                f"(got {self.fronthaul_rate_multiplier})")
        if self.smc_override is not None and not self.smc_override > 0:
            raise ValidationError(
                f"smc_override must be > 0 (got {self.smc_override})")


def apply_profile(base: CostParams, profile: SplitProfile) -> CostParams:
    """Base parameters with a split's drone cost, fronthaul burden, and
    (optional) small-cell cost swapped in."""
    smc = base.smc if profile.smc_override is None else profile.smc_override
    return replace(
        base,
        drone_unit_cost=profile.drone_unit_cost,
        fh_rate_multiplier=profile.fronthaul_rate_multiplier,
        smc=smc,
    )


@dataclass(frozen=True, eq=False)
class SweepGrid:
    """A labeled TCO matrix: rows × columns of euro values.

    cells[i, j] is the TCO at (row_values[i], col_values[j]); the array is
    read-only. row_argmin[i] is the first column index attaining the row
    minimum — first occurrence, so with ascending axes ties resolve to the
    smaller column value.
    """

    row_label: str
    row_values: tuple
    col_label: str
    col_values: tuple
    cells: np.ndarray
    row_argmin: tuple

    def __post_init__(self):
        if not self.row_label or not self.col_label:
            raise ValidationError("axis labels must be non-empty")
        if not self.row_values or not self.col_values:
            raise ValidationError("axis values must be non-empty")
        arr = np.array(self.cells, dtype=np.float64)
        if arr.shape != (len(self.row_values), len(self.col_values)):
            raise ValidationError(
                f"cells shape {arr.shape} does not match axes "
                f"({len(self.row_values)}, {len(self.col_values)})")
        arr.setflags(write=False)
        object.__setattr__(self, "cells", arr)
        expected = tuple(int(i) for i in np.argmin(arr, axis=1))
        if tuple(self.row_argmin) != expected:
            raise ValidationError(
                f"row_argmin {self.row_argmin} inconsistent with cells "
                f"(expected {expected})")
        object.__setattr__(self, "row_argmin", expected)

    @classmethod
    def build(cls, row_label: str, row_values: tuple, col_label: str,
              col_values: tuple, cells: np.ndarray) -> "SweepGrid":
        """Construct with row_argmin derived from the cells."""
        arr = np.asarray(cells, dtype=np.float64)
        argmin = tuple(int(i) for i in np.argmin(arr, axis=1))
        return cls(row_label, tuple(row_values), col_label, tuple(col_values),
                   arr, argmin)


def _check_axis(values, name: str, integral: bool):
    if len(values) == 0:
        raise DomainError(f"{name} must be non-empty")
    out = []
    for v in values:
        f = float(v)
        if integral and f != int(f):
            raise DomainError(f"{name} entries must be integers (got {v})")
        out.append(int(f) if integral else f)
    for lo, hi in zip(out, out[1:]):
        if hi <= lo:
            raise DomainError(f"{name} must be strictly ascending")
    return tuple(out)


def sweep_drone_cost(params: CostParams, d_values, n_values,
                     horizon: int = 1) -> SweepGrid:
    """TCO over (drone unit cost, n_dr) at c_step = 1.

    Rows are d_values (ascending euros), columns n_values (ascending
    integers >= 1).
    """
    d_axis = _check_axis(d_values, "d_values", integral=False)
    n_axis = _check_axis(n_values, "n_values", integral=True)
    if d_axis[0] <= 0:
        raise DomainError(f"d_values must be positive (got {d_axis[0]})")
    if n_axis[0] < 1:
        raise DomainError(f"n_values must be >= 1 (got {n_axis[0]})")

    cells = np.empty((len(d_axis), len(n_axis)), dtype=np.float64)
    for i, d in enumerate(d_axis):
        p = replace(params, drone_unit_cost=d)
        for j, n in enumerate(n_axis):
            cells[i, j] = tco(DesignPoint(n, 1), p, horizon).tco
    return SweepGrid.build("drone_unit_cost", d_axis, "n_dr", n_axis, cells)


def sweep_capacity(params: CostParams, c_steps, n_values,
                   horizon: int = 1) -> SweepGrid:
    """TCO over (c_step, n_dr) at the given horizon.

    Rows are c_steps (ascending integers >= 1), columns n_values.
    """
    c_axis = _check_axis(c_steps, "c_steps", integral=True)
    n_axis = _check_axis(n_values, "n_values", integral=True)
    if c_axis[0] < 1:
        raise DomainError(f"c_steps must be >= 1 (got {c_axis[0]})")
    if n_axis[0] < 1:
        raise DomainError(f"n_values must be >= 1 (got {n_axis[0]})")

    cells = np.empty((len(c_axis), len(n_axis)), dtype=np.float64)
    for i, c in enumerate(c_axis):
        for j, n in enumerate(n_axis):
            cells[i, j] = tco(DesignPoint(n, c), params, horizon).tco
    return SweepGrid.build("c_step", c_axis, "n_dr", n_axis, cells)


def compare_splits(base: CostParams, p2: SplitProfile, p7: SplitProfile,
                   point: DesignPoint, horizons=(1, 5)) -> tuple:
    """CAPEX/OPEX breakdowns for two splits at one design point.

    Returns ((split_name, horizon, CostBreakdown), ...) ordered split2
    horizons first, then split7.
    """
    if len(horizons) == 0:
        raise DomainError("horizons must be non-empty")
    rows = []
    for profile in (p2, p7):
        p = apply_profile(base, profile)
        for h in horizons:
            rows.append((profile.name, int(h), tco(point, p, int(h))))
    return tuple(rows)
