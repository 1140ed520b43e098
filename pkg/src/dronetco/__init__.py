"""Techno-economic modeling of drone-relayed small-cell deployments.

Evaluates and minimizes the total cost of ownership (one-off equipment
CAPEX plus leased fronthaul/backhaul OPEX) of a city-wide emergency
connectivity service carried by chained drone radio links, sweeps the cost
drivers, compares RAN centralization splits, and maps capacity targets to
link SNR requirements.
"""

__version__ = "0.1.0"

from ._backend import active_backend
from .costmodel import (
    BackhaulVariant,
    CapacityMapping,
    CostBreakdown,
    CostParams,
    DesignPoint,
    backhaul_cost_annual,
    capacity_increment,
    drone_cost,
    fronthaul_cost_annual,
    objective,
    small_cell_count,
    small_cell_upgrade_cost,
    tco,
)
from .errors import (
    DomainError,
    DroneTcoError,
    ScenarioParseError,
    UnknownKeyError,
    ValidationError,
)
from .linkcap import (
    DB_PER_DOUBLING,
    DEFAULT_BANDWIDTH_HZ,
    LinkBudget,
    required_snr,
    shannon_capacity,
)
from .optimizer import (
    DescentConfig,
    OptimizationResult,
    analytic_gradient,
    coordinate_descent,
    finite_difference_gradient,
    grid_search,
)
from .scenario import (
    Scenario,
    SweepAxes,
    default_scenario,
    load_scenario,
    serialize_scenario,
)
from .sensitivity import (
    SplitName,
    SplitProfile,
    SweepGrid,
    apply_profile,
    compare_splits,
    sweep_capacity,
    sweep_drone_cost,
)
from .report import ReportTable, format_coord, format_euro, format_flag
from .cli import cmd_compare_splits, cmd_evaluate, cmd_optimize, cmd_sweep

__all__ = [
    "__version__",
    "active_backend",
    # cost model
    "BackhaulVariant", "CapacityMapping", "CostBreakdown", "CostParams",
    "DesignPoint", "backhaul_cost_annual", "capacity_increment", "drone_cost",
    "fronthaul_cost_annual", "objective", "small_cell_count",
    "small_cell_upgrade_cost", "tco",
    # errors
    "DomainError", "DroneTcoError", "ScenarioParseError", "UnknownKeyError",
    "ValidationError",
    # link capacity
    "DB_PER_DOUBLING", "DEFAULT_BANDWIDTH_HZ", "LinkBudget", "required_snr",
    "shannon_capacity",
    # optimizer
    "DescentConfig", "OptimizationResult", "analytic_gradient",
    "coordinate_descent", "finite_difference_gradient", "grid_search",
    # scenarios
    "Scenario", "SweepAxes", "default_scenario", "load_scenario",
    "serialize_scenario",
    # sensitivity
    "SplitName", "SplitProfile", "SweepGrid", "apply_profile",
    "compare_splits", "sweep_capacity", "sweep_drone_cost",
    # reporting / CLI
    "ReportTable", "format_coord", "format_euro", "format_flag",
    "cmd_compare_splits", "cmd_evaluate", "cmd_optimize", "cmd_sweep",
]
