"""Scenario JSON loading, validation, and round-trip tests."""

from __future__ import annotations

import dataclasses
import json
from pathlib import Path

import pytest

from dronetco import (
    BackhaulVariant,
    CapacityMapping,
    Scenario,
    ScenarioParseError,
    SplitName,
    SplitProfile,
    SweepAxes,
    UnknownKeyError,
    ValidationError,
    default_scenario,
    load_scenario,
    serialize_scenario,
)
from dronetco.scenario import DEFAULT_SPLIT2, DEFAULT_SPLIT7


def test_default_scenario_shape():
    sc = default_scenario()
    assert sc.name == "default"
    assert sc.params.drone_unit_cost == 9120.0
    assert sc.splits == (DEFAULT_SPLIT2, DEFAULT_SPLIT7)
    assert sc.sweeps == SweepAxes()
    assert sc.split(SplitName.SPLIT2) is DEFAULT_SPLIT2


def test_empty_object_is_the_default():
    assert load_scenario("{}") == default_scenario()


def test_round_trip_default():
    sc = default_scenario()
    assert load_scenario(serialize_scenario(sc)) == sc


def test_round_trip_customized():
    sc = Scenario(
        params=dataclasses.replace(
            default_scenario().params,
            drone_unit_cost=13120.0,
            capacity_mapping=CapacityMapping.PRODUCT,
            backhaul_variant=BackhaulVariant.LINEAR_CHAIN,
        ),
        splits=(SplitProfile(SplitName.SPLIT2, 9000.0, 1.0),
                SplitProfile(SplitName.SPLIT7, 6000.0, 2.0, smc_override=3000.0)),
        sweeps=SweepAxes(capacity_c_steps=(1, 2, 3)),
        name="custom",
        description="round-trip check",
    )
    assert load_scenario(serialize_scenario(sc)) == sc


def test_round_trip_without_splits():
    sc = Scenario(splits=None)
    text = serialize_scenario(sc)
    assert json.loads(text)["splits"] is None
    again = load_scenario(text)
    assert again.splits is None
    assert again == sc


def test_missing_splits_key_keeps_default_fixtures():
    # omission means "use the built-ins"; an explicit null means "none"
    assert load_scenario("{}").splits == (DEFAULT_SPLIT2, DEFAULT_SPLIT7)
    assert load_scenario('{"splits": null}').splits is None


def test_load_from_file(tmp_path):
    path = tmp_path / "scenario.json"
    path.write_text(serialize_scenario(default_scenario()), encoding="utf-8")
    assert load_scenario(path) == default_scenario()
    assert load_scenario(str(path)) == default_scenario()


def test_load_rejects_other_types():
    with pytest.raises(TypeError):
        load_scenario(42)


def test_single_field_override():
    sc = load_scenario('{"params": {"drone_unit_cost": 13120}}')
    base = default_scenario()
    assert sc.params.drone_unit_cost == 13120.0
    assert dataclasses.replace(sc.params, drone_unit_cost=9120.0) == base.params
    assert sc.splits == base.splits


def test_metadata_parsing():
    sc = load_scenario('{"metadata": {"name": "x", "description": "y"}}')
    assert sc.name == "x"
    assert sc.description == "y"


def test_sweeps_partial_override():
    sc = load_scenario('{"sweeps": {"capacity": {"c_steps": [1, 2, 3]}}}')
    assert sc.sweeps.capacity_c_steps == (1, 2, 3)
    defaults = SweepAxes()
    assert sc.sweeps.capacity_n_values == defaults.capacity_n_values
    assert sc.sweeps.drone_cost_d_values == defaults.drone_cost_d_values


# ------------------------------------------------------------ bad inputs

def test_malformed_json_reports_position():
    with pytest.raises(ScenarioParseError) as exc:
        load_scenario("{not json")
    msg = str(exc.value)
    assert "line 1" in msg and "column" in msg


def test_top_level_must_be_object():
    with pytest.raises(ScenarioParseError):
        load_scenario("[1, 2]")


def test_unknown_keys_rejected_everywhere():
    with pytest.raises(UnknownKeyError):
        load_scenario('{"paramz": {}}')
    with pytest.raises(UnknownKeyError) as exc:
        load_scenario('{"params": {"drone_cost": 1}}')
    assert "drone_cost" in str(exc.value)
    with pytest.raises(UnknownKeyError):
        load_scenario('{"metadata": {"author": "x"}}')
    with pytest.raises(UnknownKeyError):
        load_scenario('{"sweeps": {"foo": {}}}')
    with pytest.raises(UnknownKeyError):
        load_scenario(
            '{"splits": {"split2": {"drone_unit_cost": 1, '
            '"fronthaul_rate_multiplier": 1}, "split9": {}}}')


def test_unknown_key_error_lists_allowed():
    with pytest.raises(UnknownKeyError) as exc:
        load_scenario('{"params": {"nope": 1}}')
    assert "drone_unit_cost" in str(exc.value)


def test_invalid_param_names_offending_field():
    with pytest.raises(ValidationError) as exc:
        load_scenario('{"params": {"mux": 0.5}}')
    assert "mux" in str(exc.value)


def test_invalid_enum_value_lists_choices():
    with pytest.raises(ValidationError) as exc:
        load_scenario('{"params": {"capacity_mapping": "sideways"}}')
    msg = str(exc.value)
    assert "additive" in msg and "product" in msg


def test_bbu_type_checked_through_json():
    with pytest.raises(ValidationError) as exc:
        load_scenario('{"params": {"bbu": 6.5}}')
    assert "bbu" in str(exc.value)


def test_params_section_must_be_object():
    with pytest.raises(ValidationError):
        load_scenario('{"params": [1, 2]}')


def test_splits_must_define_both_profiles():
    with pytest.raises(ValidationError) as exc:
        load_scenario(
            '{"splits": {"split2": {"drone_unit_cost": 9120, '
            '"fronthaul_rate_multiplier": 1.0}}}')
    assert "split7" in str(exc.value)


def test_split_missing_required_field():
    with pytest.raises(ValidationError):
        load_scenario(
            '{"splits": {"split2": {"drone_unit_cost": 9120}, '
            '"split7": {"drone_unit_cost": 6120, '
            '"fronthaul_rate_multiplier": 2.5}}}')


def test_split_cross_invariants():
    # the lighter-drone split must be the one shipping more fronthaul
    # traffic; contradictory fixtures are rejected at scenario level
    with pytest.raises(ValidationError):
        load_scenario(json.dumps({"splits": {
            "split2": {"drone_unit_cost": 9120, "fronthaul_rate_multiplier": 2.0},
            "split7": {"drone_unit_cost": 6120, "fronthaul_rate_multiplier": 1.0},
        }}))
    with pytest.raises(ValidationError):
        load_scenario(json.dumps({"splits": {
            "split2": {"drone_unit_cost": 6120, "fronthaul_rate_multiplier": 1.0},
            "split7": {"drone_unit_cost": 9120, "fronthaul_rate_multiplier": 2.5},
        }}))


def test_sweep_axis_validation_through_json():
    with pytest.raises(ValidationError):
        load_scenario('{"sweeps": {"capacity": {"n_values": [3, 2, 1]}}}')
    with pytest.raises(ValidationError):
        load_scenario('{"sweeps": {"capacity": {"n_values": [1, 2.5]}}}')
    with pytest.raises(ValidationError):
        load_scenario('{"sweeps": {"drone_cost": {"d_values": []}}}')


def test_scenario_split_lookup_without_fixtures():
    sc = Scenario(splits=None)
    with pytest.raises(ValidationError):
        sc.split(SplitName.SPLIT2)


def test_scenario_rejects_misordered_split_pair():
    with pytest.raises(ValidationError):
        Scenario(splits=(DEFAULT_SPLIT7, DEFAULT_SPLIT2))


def test_scenario_name_validation():
    with pytest.raises(ValidationError):
        Scenario(name="")
