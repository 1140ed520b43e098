"""Scenario files: model constants, split profiles, and sweep axes as JSON.

A scenario document is a JSON object with up to four sections — "metadata",
"params", "splits", "sweeps" — every one optional; whatever is omitted takes
the built-in defaults. Keys are strict: anything the schema does not define
is rejected, so a typo in a cost constant cannot silently evaluate the
default model. Units are fixed by the schema (euros, Mbps, km^2); values are
plain JSON numbers.

The complete annotated schema, with an example, lives in docs/scenarios.md.
"""

import json
from dataclasses import dataclass, fields
from pathlib import Path

from .costmodel import BackhaulVariant, CapacityMapping, CostParams
from .errors import ScenarioParseError, UnknownKeyError, ValidationError
from .sensitivity import SplitName, SplitProfile

__all__ = [
    "SweepAxes",
    "Scenario",
    "default_scenario",
    "load_scenario",
    "serialize_scenario",
]

# Split profiles shipped with the default scenario. Only the qualitative
# relationships are established (the PHY-layer split uses a cheaper radio
# kit but multiplies the fronthaul burden); the magnitudes below are assumed
# working values, not measurements: split7 drone at ~2/3 of the split2 unit
# cost, a 2.5x fronthaul rate burden, and a 20% dearer small-cell upgrade
# for the heavier fronthaul termination.
DEFAULT_SPLIT2 = SplitProfile(SplitName.SPLIT2, drone_unit_cost=9120.0,
                              fronthaul_rate_multiplier=1.0)
DEFAULT_SPLIT7 = SplitProfile(SplitName.SPLIT7, drone_unit_cost=6120.0,
                              fronthaul_rate_multiplier=2.5,
                              smc_override=3060.0)


def _ascending(values, name: str, integral: bool, minimum: float):
    if not isinstance(values, (list, tuple)) or len(values) == 0:
        raise ValidationError(f"{name} must be a non-empty list")
    out = []
    for v in values:
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise ValidationError(f"{name} entries must be numbers (got {v!r})")
        if integral and float(v) != int(v):
            raise ValidationError(f"{name} entries must be integers (got {v!r})")
        if v < minimum:
            raise ValidationError(f"{name} entries must be >= {minimum} (got {v!r})")
        out.append(int(v) if integral else float(v))
    for lo, hi in zip(out, out[1:]):
        if hi <= lo:
            raise ValidationError(f"{name} must be strictly ascending")
    return tuple(out)


@dataclass(frozen=True)
class SweepAxes:
    """Default axes for the two sweep studies.

    Drone-cost sweeps walk the unit cost up in 4000-euro steps from the
    baseline; capacity sweeps walk the first five capacity steps. Both scan
    1..15 drones per link.
    """

    drone_cost_d_values: tuple = (9120.0, 13120.0, 17120.0, 21120.0)
    drone_cost_n_values: tuple = tuple(range(1, 16))
    capacity_c_steps: tuple = (1, 2, 3, 4, 5)
    capacity_n_values: tuple = tuple(range(1, 16))

    def __post_init__(self):
        object.__setattr__(self, "drone_cost_d_values", _ascending(
            self.drone_cost_d_values, "drone_cost_d_values",
            integral=False, minimum=1e-9))
        object.__setattr__(self, "drone_cost_n_values", _ascending(
            self.drone_cost_n_values, "drone_cost_n_values",
            integral=True, minimum=1))
        object.__setattr__(self, "capacity_c_steps", _ascending(
            self.capacity_c_steps, "capacity_c_steps",
            integral=True, minimum=1))
        object.__setattr__(self, "capacity_n_values", _ascending(
            self.capacity_n_values, "capacity_n_values",
            integral=True, minimum=1))


@dataclass(frozen=True)
class Scenario:
    """A fully validated set of model inputs.

    splits, when present, is the (split2, split7) profile pair; the PHY-layer
    split must not cost more per drone nor burden the fronthaul less than
    the PDCP-layer split.
    """

    params: CostParams = CostParams()
    splits: tuple | None = (DEFAULT_SPLIT2, DEFAULT_SPLIT7)
    sweeps: SweepAxes = SweepAxes()
    name: str = "default"
    description: str = ""

    def __post_init__(self):
        if not isinstance(self.name, str) or not self.name:
            raise ValidationError(f"name must be a non-empty string (got {self.name!r})")
        if not isinstance(self.description, str):
            raise ValidationError("description must be a string")
        if self.splits is not None:
            splits = tuple(self.splits)
            if len(splits) != 2 or not all(isinstance(s, SplitProfile) for s in splits):
                raise ValidationError("splits must be a (split2, split7) pair")
            s2, s7 = splits
            if s2.name is not SplitName.SPLIT2 or s7.name is not SplitName.SPLIT7:
                raise ValidationError(
                    f"splits must be ordered (split2, split7) "
                    f"(got {s2.name.value}, {s7.name.value})")
            if s7.fronthaul_rate_multiplier < s2.fronthaul_rate_multiplier:
                raise ValidationError(
                    "fronthaul_rate_multiplier of split7 must be >= split2's "
                    f"(got {s7.fronthaul_rate_multiplier} < "
                    f"{s2.fronthaul_rate_multiplier})")
            if s7.drone_unit_cost > s2.drone_unit_cost:
                raise ValidationError(
                    "drone_unit_cost of split7 must be <= split2's "
                    f"(got {s7.drone_unit_cost} > {s2.drone_unit_cost})")
            object.__setattr__(self, "splits", splits)

    def split(self, name: SplitName) -> SplitProfile:
        """The profile for ``name``; error if the scenario carries none."""
        if self.splits is None:
            raise ValidationError(f"scenario {self.name!r} defines no split profiles")
        for profile in self.splits:
            if profile.name is SplitName(name):
                return profile
        raise ValidationError(f"scenario {self.name!r} has no profile {name}")


def default_scenario() -> Scenario:
    """The built-in baseline scenario (all defaults, both split fixtures)."""
    return Scenario()


_PARAM_FIELDS = tuple(f.name for f in fields(CostParams) if f.init)
_ENUM_FIELDS = {
    "backhaul_variant": BackhaulVariant,
    "capacity_mapping": CapacityMapping,
}
_SPLIT_KEYS = ("drone_unit_cost", "fronthaul_rate_multiplier", "smc_override")
_SWEEP_SECTIONS = {
    "drone_cost": ("d_values", "n_values"),
    "capacity": ("c_steps", "n_values"),
}


def _reject_unknown(mapping: dict, allowed, where: str):
    for key in mapping:
        if key not in allowed:
            raise UnknownKeyError(
                f"unknown key {key!r} in {where} "
                f"(allowed: {', '.join(sorted(allowed))})")


def _parse_params(raw: dict) -> CostParams:
    if not isinstance(raw, dict):
        raise ValidationError("params must be an object")
    _reject_unknown(raw, _PARAM_FIELDS, "params")
    kwargs = {}
    for key, value in raw.items():
        if key in _ENUM_FIELDS:
            enum_cls = _ENUM_FIELDS[key]
            try:
                kwargs[key] = enum_cls(value)
            except ValueError:
                allowed = ", ".join(m.value for m in enum_cls)
                raise ValidationError(
                    f"{key} must be one of {allowed} (got {value!r})") from None
        else:
            kwargs[key] = value
    return CostParams(**kwargs)


def _parse_split(raw: dict, name: SplitName) -> SplitProfile:
    where = f"splits.{name.value}"
    if not isinstance(raw, dict):
        raise ValidationError(f"{where} must be an object")
    _reject_unknown(raw, _SPLIT_KEYS, where)
    for required in ("drone_unit_cost", "fronthaul_rate_multiplier"):
        if required not in raw:
            raise ValidationError(f"{where} is missing {required}")
    return SplitProfile(name, raw["drone_unit_cost"],
                        raw["fronthaul_rate_multiplier"],
                        raw.get("smc_override"))


def _parse_splits(raw: dict) -> tuple:
    if not isinstance(raw, dict):
        raise ValidationError("splits must be an object")
    _reject_unknown(raw, ("split2", "split7"), "splits")
    for required in ("split2", "split7"):
        if required not in raw:
            raise ValidationError(f"splits must define both profiles "
                                  f"(missing {required!r})")
    return (_parse_split(raw["split2"], SplitName.SPLIT2),
            _parse_split(raw["split7"], SplitName.SPLIT7))


def _parse_sweeps(raw: dict) -> SweepAxes:
    if not isinstance(raw, dict):
        raise ValidationError("sweeps must be an object")
    _reject_unknown(raw, tuple(_SWEEP_SECTIONS), "sweeps")
    defaults = SweepAxes()
    kwargs = {}
    for section, keys in _SWEEP_SECTIONS.items():
        body = raw.get(section)
        if body is None:
            continue
        if not isinstance(body, dict):
            raise ValidationError(f"sweeps.{section} must be an object")
        _reject_unknown(body, keys, f"sweeps.{section}")
        for key in keys:
            if key in body:
                kwargs[f"{section}_{key}"] = body[key]
    for name in ("drone_cost_d_values", "drone_cost_n_values",
                 "capacity_c_steps", "capacity_n_values"):
        kwargs.setdefault(name, getattr(defaults, name))
    return SweepAxes(**kwargs)


def load_scenario(source) -> Scenario:
    """Parse and validate a scenario from a path or a JSON string.

    ``source`` may be a Path, or a str holding either JSON text (detected by
    a leading '{' or '[') or a filesystem path.
    """
    if isinstance(source, Path):
        text = source.read_text(encoding="utf-8")
    elif isinstance(source, str) and source.lstrip().startswith(("{", "[")):
        text = source
    elif isinstance(source, str):
        text = Path(source).read_text(encoding="utf-8")
    else:
        raise TypeError(f"source must be a Path or str (got {type(source).__name__})")

    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ScenarioParseError(
            f"invalid scenario JSON at line {e.lineno}, column {e.colno}: "
            f"{e.msg}") from None
    if not isinstance(doc, dict):
        raise ScenarioParseError(
            f"scenario must be a JSON object (got {type(doc).__name__})")

    _reject_unknown(doc, ("metadata", "params", "splits", "sweeps"), "scenario")

    metadata = doc.get("metadata", {})
    if not isinstance(metadata, dict):
        raise ValidationError("metadata must be an object")
    _reject_unknown(metadata, ("name", "description"), "metadata")

    defaults = default_scenario()
    params = _parse_params(doc["params"]) if "params" in doc else defaults.params
    if "splits" not in doc:
        splits = defaults.splits
    elif doc["splits"] is None:
        splits = None  # explicit null: a scenario with no split profiles
    else:
        splits = _parse_splits(doc["splits"])
    sweeps = _parse_sweeps(doc["sweeps"]) if "sweeps" in doc else defaults.sweeps

    return Scenario(
        params=params,
        splits=splits,
        sweeps=sweeps,
        name=metadata.get("name", defaults.name),
        description=metadata.get("description", defaults.description),
    )


def serialize_scenario(scenario: Scenario) -> str:
    """Scenario as canonical JSON text; load_scenario inverts it exactly."""
    params = {}
    for name in _PARAM_FIELDS:
        value = getattr(scenario.params, name)
        params[name] = value.value if name in _ENUM_FIELDS else value

    doc = {
        "metadata": {"name": scenario.name, "description": scenario.description},
        "params": params,
    }
    if scenario.splits is None:
        doc["splits"] = None
    else:
        splits = {}
        for profile in scenario.splits:
            body = {
                "drone_unit_cost": profile.drone_unit_cost,
                "fronthaul_rate_multiplier": profile.fronthaul_rate_multiplier,
            }
            if profile.smc_override is not None:
                body["smc_override"] = profile.smc_override
            splits[profile.name.value] = body
        doc["splits"] = splits
    doc["sweeps"] = {
        "drone_cost": {
            "d_values": list(scenario.sweeps.drone_cost_d_values),
            "n_values": list(scenario.sweeps.drone_cost_n_values),
        },
        "capacity": {
            "c_steps": list(scenario.sweeps.capacity_c_steps),
            "n_values": list(scenario.sweeps.capacity_n_values),
        },
    }
    return json.dumps(doc, indent=2) + "\n"
