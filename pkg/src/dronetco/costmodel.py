"""Cost decomposition for drone-relayed 5G coverage.

A wireless link of ``n_dr`` chained drones reaches farther the longer it is,
so fewer ground small cells need upgrading (the count falls off as 1/n_dr^2),
while drone CAPEX grows with the chain length and doubles with every
provisioned capacity step. Leased fronthaul and backhaul capacity is priced
by the concave curve a*x^b and accrues annually. Every operation here is a
pure function of its inputs.
"""

import math
from dataclasses import dataclass, field
from enum import Enum

from ._backend import kernels
from .errors import DomainError, ValidationError

__all__ = [
    "BackhaulVariant",
    "CapacityMapping",
    "CostParams",
    "DesignPoint",
    "CostBreakdown",
    "capacity_increment",
    "small_cell_count",
    "drone_cost",
    "small_cell_upgrade_cost",
    "fronthaul_cost_annual",
    "backhaul_cost_annual",
    "tco",
    "objective",
]


class CapacityMapping(str, Enum):
    """How a capacity step index maps to provisioned Mbps.

    ADDITIVE (default): c = c_base + (c_step - 1) * c_step_size; each step
    adds a fixed increment on top of the base capacity. PRODUCT:
    c = c_base * (c_step - 1) * 100, retained as an auditable variant; note
    that under it step 1 provisions zero capacity.
    """

    ADDITIVE = "additive"
    PRODUCT = "product"


class BackhaulVariant(str, Enum):
    """Form of the city-wide backhaul capacity increment.

    INVERSE_CHAIN (default): increment = c * k / n_dr, falling as chains
    lengthen because fewer ground cells feed the backhaul. LINEAR_CHAIN:
    increment = n_dr * c * k, growing with chain length; retained as an
    auditable variant. The optimizer minimizes the default form.
    """

    INVERSE_CHAIN = "inverse_chain"
    LINEAR_CHAIN = "linear_chain"


def _check(cond: bool, message: str) -> None:
    if not cond:
        raise ValidationError(message)


def _finite(value: float, name: str) -> None:
    _check(isinstance(value, (int, float)) and not isinstance(value, bool)
           and math.isfinite(value), f"{name} must be a finite number (got {value!r})")


@dataclass(frozen=True)
class CostParams:
    """All model constants. Defaults are the baseline evaluation scenario.

    Units: areas in km^2, reach in km, capacities in Mbps, costs in euros.
    """

    city_area: float = 100.0
    drone_reach: float = 0.2
    drone_unit_cost: float = 9120.0
    cost_a: float = 3840.0
    cost_b: float = 0.2
    smc: float = 2550.0
    fhc: float = 799.0
    bhc: float = 833.0
    bbu: int = 6
    mux: float = 1.5
    c_base: float = 665.0
    c_step_size: float = 100.0
    fh_rate_multiplier: float = 1.0
    backhaul_variant: BackhaulVariant = BackhaulVariant.INVERSE_CHAIN
    capacity_mapping: CapacityMapping = CapacityMapping.ADDITIVE
    _packed: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        for name in ("city_area", "drone_reach", "drone_unit_cost", "cost_a",
                     "cost_b", "smc", "fhc", "bhc", "mux", "c_base",
                     "c_step_size", "fh_rate_multiplier"):
            _finite(getattr(self, name), name)
        _check(self.city_area > 0, f"city_area must be > 0 (got {self.city_area})")
        _check(self.drone_reach > 0, f"drone_reach must be > 0 (got {self.drone_reach})")
        _check(self.drone_unit_cost >= 0,
               f"drone_unit_cost must be >= 0 (got {self.drone_unit_cost})")
        _check(self.cost_a > 0, f"cost_a must be > 0 (got {self.cost_a})")
        _check(0 < self.cost_b < 1, f"cost_b must lie in (0, 1) (got {self.cost_b})")
        _check(self.smc >= 0, f"smc must be >= 0 (got {self.smc})")
        _check(self.fhc >= 0, f"fhc must be >= 0 (got {self.fhc})")
        _check(self.bhc >= 0, f"bhc must be >= 0 (got {self.bhc})")
        _check(type(self.bbu) is int, f"bbu must be an integer (got {self.bbu!r})")
        _check(self.bbu >= 1, f"bbu must be >= 1 (got {self.bbu})")
        _check(self.mux >= 1, f"mux must be >= 1 (got {self.mux})")
        _check(self.c_base > 0, f"c_base must be > 0 (got {self.c_base})")
        _check(self.c_step_size > 0,
               f"c_step_size must be > 0 (got {self.c_step_size})")
        _check(self.fh_rate_multiplier >= 1,
               f"fh_rate_multiplier must be >= 1 (got {self.fh_rate_multiplier})")
        _check(isinstance(self.backhaul_variant, BackhaulVariant),
               f"backhaul_variant must be a BackhaulVariant (got {self.backhaul_variant!r})")
        _check(isinstance(self.capacity_mapping, CapacityMapping),
               f"capacity_mapping must be a CapacityMapping (got {self.capacity_mapping!r})")
        object.__setattr__(self, "_packed", (
            self.k,
            float(self.drone_unit_cost),
            float(self.cost_a),
            float(self.cost_b),
            float(self.smc),
            float(self.fhc),
            float(self.bhc),
            float(self.bbu),
            float(self.mux),
            float(self.c_base),
            float(self.c_step_size),
            float(self.fh_rate_multiplier),
            0.0 if self.capacity_mapping is CapacityMapping.ADDITIVE else 1.0,
            0.0 if self.backhaul_variant is BackhaulVariant.INVERSE_CHAIN else 1.0,
        ))

    @property
    def k(self) -> float:
        """Small-cell scaling constant city_area / (pi * drone_reach^2);
        the upgraded-cell count at a design point is k / n_dr^2."""
        return self.city_area / (math.pi * self.drone_reach * self.drone_reach)

    def pack(self) -> tuple:
        """Flat parameter tuple consumed by the evaluation kernels."""
        return self._packed


@dataclass(frozen=True)
class DesignPoint:
    """A candidate design: drones per wireless link and capacity step index.

    Both coordinates are continuous during optimization and integer at the
    deployment lattice; each must be >= 1.
    """

    n_dr: float
    c_step: float

    def __post_init__(self):
        for name in ("n_dr", "c_step"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and not isinstance(value, bool)
                    and math.isfinite(value)):
                raise DomainError(f"{name} must be a finite number (got {value!r})")
            if value < 1:
                raise DomainError(f"{name} must be >= 1 (got {value})")
            object.__setattr__(self, name, float(value))


@dataclass(frozen=True)
class CostBreakdown:
    """Per-component costs and the horizon-aggregated total.

    c_dr and c_sc are one-off CAPEX; c_fh_annual and c_bh_annual are yearly
    OPEX multiplied by horizon_years inside tco.
    """

    c_dr: float
    c_sc: float
    c_fh_annual: float
    c_bh_annual: float
    horizon_years: int
    tco: float

    def __post_init__(self):
        if self.horizon_years < 1:
            raise DomainError(f"horizon_years must be >= 1 (got {self.horizon_years})")
        for name in ("c_dr", "c_sc", "c_fh_annual", "c_bh_annual"):
            if getattr(self, name) < 0:
                raise ValidationError(f"{name} must be >= 0 (got {getattr(self, name)})")
        expected = self.c_dr + self.c_sc + self.horizon_years * (
            self.c_fh_annual + self.c_bh_annual)
        if abs(self.tco - expected) > 1e-12 * abs(self.tco):
            raise ValidationError(
                f"tco {self.tco!r} does not decompose into its components "
                f"(expected {expected!r})")

    @property
    def capex(self) -> float:
        return self.c_dr + self.c_sc

    @property
    def opex_total(self) -> float:
        return self.horizon_years * (self.c_fh_annual + self.c_bh_annual)


def capacity_increment(c_step: float, params: CostParams) -> float:
    """Provisioned link capacity in Mbps at the given capacity step."""
    if c_step < 1:
        raise DomainError(f"c_step must be >= 1 (got {c_step})")
    return kernels.capacity_increment(float(c_step), params.pack())


def small_cell_count(n_dr: float, params: CostParams, ceil: bool = False) -> float:
    """Ground small cells to upgrade for a link of n_dr drones: k / n_dr^2.

    A continuous provisioning estimate by default; ``ceil=True`` rounds up
    for reporting. The optimizer always consumes the continuous value.
    """
    if n_dr < 1:
        raise DomainError(f"n_dr must be >= 1 (got {n_dr})")
    count = params.k / (float(n_dr) * float(n_dr))
    return math.ceil(count) if ceil else count


def drone_cost(point: DesignPoint, params: CostParams) -> float:
    """Drone CAPEX 2^(c_step-1) * n_dr * d: unit cost doubles per capacity
    step and scales with the chain length."""
    return kernels.components(point.n_dr, point.c_step, params.pack())[0]


def small_cell_upgrade_cost(point: DesignPoint, params: CostParams) -> float:
    """Small-cell upgrade CAPEX n_sc * n_dr * smc, i.e. (k / n_dr) * smc."""
    return kernels.components(point.n_dr, point.c_step, params.pack())[1]


def fronthaul_cost_annual(point: DesignPoint, params: CostParams) -> float:
    """Yearly fronthaul lease increment over the upgraded cells:
    n_sc * a * [(fhc + n_dr*c*fh_rate_multiplier)^b - fhc^b]."""
    return kernels.components(point.n_dr, point.c_step, params.pack())[2]


def backhaul_cost_annual(point: DesignPoint, params: CostParams) -> float:
    """Yearly backhaul lease increment over the BBU sites, after the
    multiplexing gain; the capacity increment form follows
    params.backhaul_variant."""
    return kernels.components(point.n_dr, point.c_step, params.pack())[3]


def tco(point: DesignPoint, params: CostParams, horizon_years: int = 1) -> CostBreakdown:
    """Total cost of ownership: CAPEX plus horizon_years of accumulated OPEX."""
    if horizon_years < 1:
        raise DomainError(f"horizon_years must be >= 1 (got {horizon_years})")
    c_dr, c_sc, c_fh, c_bh = kernels.components(
        point.n_dr, point.c_step, params.pack())
    total = c_dr + c_sc + horizon_years * (c_fh + c_bh)
    return CostBreakdown(c_dr=c_dr, c_sc=c_sc, c_fh_annual=c_fh,
                         c_bh_annual=c_bh, horizon_years=horizon_years, tco=total)


def objective(point: DesignPoint, params: CostParams) -> float:
    """The minimized objective: the one-year total cost at a (possibly
    continuous) design point. Equals tco(point, params, 1).tco exactly."""
    return kernels.objective(point.n_dr, point.c_step, params.pack(), 1.0)
