"""Command-line surface: evaluate, optimize, sweep, compare-splits.

Each subcommand loads a scenario (built-in defaults unless --scenario is
given), runs the corresponding library call, and emits one deterministic
table as CSV (default) or JSON. Exit codes: 0 success, 2 usage error,
3 scenario/validation error, 4 domain error (infeasible point or horizon).
Convergence failures are reported in-band, not via the exit code.
"""

import argparse
import sys

from .costmodel import DesignPoint, capacity_increment, tco
from .errors import DomainError, DroneTcoError, ScenarioParseError, ValidationError
from .linkcap import DEFAULT_BANDWIDTH_HZ, DB_PER_DOUBLING, required_snr
from .optimizer import DescentConfig, coordinate_descent, grid_search
from .report import ReportTable, format_coord, format_euro, format_flag
from .scenario import Scenario, default_scenario, load_scenario
from .sensitivity import (SplitName, compare_splits, sweep_capacity,
                          sweep_drone_cost)

__all__ = [
    "cmd_evaluate",
    "cmd_optimize",
    "cmd_sweep",
    "cmd_compare_splits",
    "build_parser",
    "main",
    "console_main",
]

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_SCENARIO = 3
EXIT_DOMAIN = 4


def _tool_version() -> str:
    from . import __version__
    return __version__


def _base_provenance(scenario: Scenario, extra=()) -> tuple:
    return (
        ("scenario", scenario.name),
        ("capacity_mapping", scenario.params.capacity_mapping.value),
        ("backhaul_variant", scenario.params.backhaul_variant.value),
        *extra,
        ("tool_version", _tool_version()),
    )


def cmd_evaluate(scenario: Scenario, n_dr: float, c_step: float,
                 horizon: int = 1) -> ReportTable:
    """Single-point cost breakdown table."""
    point = DesignPoint(n_dr, c_step)
    b = tco(point, scenario.params, horizon)
    row = (
        format_coord(point.n_dr),
        format_coord(point.c_step),
        str(int(horizon)),
        format_euro(b.c_dr),
        format_euro(b.c_sc),
        format_euro(b.c_fh_annual),
        format_euro(b.c_bh_annual),
        format_euro(b.capex),
        format_euro(b.opex_total),
        format_euro(b.tco),
    )
    return ReportTable(
        columns=("n_dr", "c_step", "horizon", "C_dr", "C_sc", "C_fh_annual",
                 "C_bh_annual", "CAPEX", "OPEX_total", "TCO"),
        rows=(row,),
        provenance=_base_provenance(scenario, (("horizon", str(int(horizon))),)),
    )


def cmd_optimize(scenario: Scenario, horizon: int = 1, n_max: int = 30,
                 c_max: int = 10, objective_fn=None,
                 gradient_fn=None) -> ReportTable:
    """Descent minimizer vs exhaustive lattice oracle, one row.

    ``objective_fn``/``gradient_fn`` swap in an arbitrary objective
    f(n_dr, c_step) for exercising the optimizer machinery; the oracle then
    scans the same lattice over that function.
    """
    if n_max < 1 or c_max < 1:
        raise DomainError(f"bounds must be >= 1 (got n_max={n_max}, c_max={c_max})")
    start = DesignPoint(1, 1)
    result = coordinate_descent(
        start, scenario.params, config=DescentConfig(), horizon=horizon,
        n_max=n_max, c_max=c_max, objective_fn=objective_fn,
        gradient_fn=gradient_fn)

    if objective_fn is None:
        oracle_point, oracle_value, _ = grid_search(
            scenario.params, (1, n_max), (1, c_max), horizon)
    else:
        oracle_point, oracle_value = None, None
        for n in range(1, int(n_max) + 1):
            for c in range(1, int(c_max) + 1):
                value = objective_fn(float(n), float(c))
                if oracle_value is None or value < oracle_value:
                    oracle_point, oracle_value = DesignPoint(n, c), value

    agree = result.minimizer_integer == oracle_point
    row = (
        f"{result.minimizer_continuous.n_dr:.6f}",
        f"{result.minimizer_continuous.c_step:.6f}",
        format_coord(result.minimizer_integer.n_dr),
        format_coord(result.minimizer_integer.c_step),
        format_euro(result.objective_value),
        format_coord(oracle_point.n_dr),
        format_coord(oracle_point.c_step),
        format_euro(oracle_value),
        str(result.iterations),
        format_flag(result.converged),
        format_flag(agree),
    )
    return ReportTable(
        columns=("n_dr_continuous", "c_step_continuous", "n_dr", "c_step",
                 "TCO", "n_dr_oracle", "c_step_oracle", "TCO_oracle",
                 "iterations", "converged", "agreement"),
        rows=(row,),
        provenance=_base_provenance(scenario, (
            ("horizon", str(int(horizon))),
            ("bounds", f"n 1..{int(n_max)}, c_step 1..{int(c_max)}"),
        )),
    )


def _snr_footer(scenario: Scenario, c_steps) -> tuple:
    """Per-step SNR requirements over the fixed allocation, plus the
    asymptotic-step caveat."""
    entries = []
    for step in c_steps:
        cap = capacity_increment(step, scenario.params)
        if cap > 0:
            snr = required_snr(cap, DEFAULT_BANDWIDTH_HZ)
            entries.append((f"snr_db_step_{step}", f"{snr:.2f}"))
        else:
            entries.append((f"snr_db_step_{step}", "n/a (zero capacity)"))
    mhz = DEFAULT_BANDWIDTH_HZ / 1e6
    entries.append((
        "snr_note",
        f"required SNR from Shannon capacity over {mhz:.0f} MHz; each added "
        f"bit/s/Hz needs at least {DB_PER_DOUBLING:.4f} dB more SNR, "
        f"approaching that floor only at high SNR",
    ))
    return tuple(entries)


def cmd_sweep(scenario: Scenario, mode: str, horizon: int = 1,
              d_values=None, n_values=None, c_steps=None) -> ReportTable:
    """Long-form sweep table: one row per grid cell, row-major ascending."""
    axes = scenario.sweeps
    if mode == "drone-cost":
        d_axis = tuple(d_values) if d_values is not None else axes.drone_cost_d_values
        n_axis = tuple(n_values) if n_values is not None else axes.drone_cost_n_values
        grid = sweep_drone_cost(scenario.params, d_axis, n_axis, horizon)
        row_fmt = format_euro
        extra_footer = ()
    elif mode == "capacity":
        c_axis = tuple(c_steps) if c_steps is not None else axes.capacity_c_steps
        n_axis = tuple(n_values) if n_values is not None else axes.capacity_n_values
        grid = sweep_capacity(scenario.params, c_axis, n_axis, horizon)
        row_fmt = format_coord
        extra_footer = _snr_footer(scenario, c_axis)
    else:
        raise ValidationError(f"mode must be drone-cost or capacity (got {mode!r})")

    rows = []
    for i, rv in enumerate(grid.row_values):
        for j, n in enumerate(grid.col_values):
            rows.append((
                row_fmt(rv),
                format_coord(n),
                format_euro(grid.cells[i, j]),
                format_flag(j == grid.row_argmin[i]),
            ))
    return ReportTable(
        columns=("row_value", "n_dr", "TCO", "is_row_argmin"),
        rows=tuple(rows),
        provenance=_base_provenance(scenario, (
            ("mode", mode),
            ("row_label", grid.row_label),
            ("horizon", str(int(horizon))),
            *extra_footer,
        )),
    )


def cmd_compare_splits(scenario: Scenario, n_dr: float = 7, c_step: float = 1,
                       horizons=(1, 5)) -> ReportTable:
    """CAPEX/OPEX/TCO per (split, horizon) at one design point."""
    p2 = scenario.split(SplitName.SPLIT2)
    p7 = scenario.split(SplitName.SPLIT7)
    point = DesignPoint(n_dr, c_step)
    rows = []
    for name, h, b in compare_splits(scenario.params, p2, p7, point, horizons):
        rows.append((
            name.value,
            str(h),
            format_euro(b.capex),
            format_euro(b.opex_total),
            format_euro(b.tco),
        ))
    return ReportTable(
        columns=("split", "horizon", "CAPEX", "OPEX_total", "TCO"),
        rows=tuple(rows),
        provenance=_base_provenance(scenario, (
            ("n_dr", format_coord(n_dr)),
            ("c_step", format_coord(c_step)),
        )),
    )


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--scenario", metavar="PATH",
                   help="scenario JSON file (default: built-in baseline)")
    p.add_argument("--format", choices=("csv", "json"), default="csv",
                   help="output format (default: csv)")
    p.add_argument("--out", metavar="PATH",
                   help="write output to PATH instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dronetco",
        description="Deployment cost evaluation and optimization for "
                    "drone-relayed small-cell networks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("evaluate", help="cost breakdown at one design point")
    _add_common(p)
    p.add_argument("--n-dr", type=float, default=7, help="drones per link (default 7)")
    p.add_argument("--c-step", type=float, default=1, help="capacity step (default 1)")
    p.add_argument("--horizon", type=int, default=1, help="years of operation (default 1)")

    p = sub.add_parser("optimize", help="descent minimizer with lattice-oracle cross-check")
    _add_common(p)
    p.add_argument("--horizon", type=int, default=1, help="years of operation (default 1)")
    p.add_argument("--n-max", type=int, default=30,
                   help="search n_dr in 1..N-MAX (default 30)")
    p.add_argument("--c-steps", type=int, default=10,
                   help="search c_step in 1..C-STEPS (default 10)")

    p = sub.add_parser("sweep", help="TCO grid in long form")
    _add_common(p)
    p.add_argument("mode", choices=("drone-cost", "capacity"))
    p.add_argument("--horizon", type=int, default=1, help="years of operation (default 1)")
    p.add_argument("--d-min", type=float, help="lowest drone unit cost")
    p.add_argument("--d-max", type=float, help="highest drone unit cost")
    p.add_argument("--d-step", type=float, default=4000.0,
                   help="drone-cost increment (default 4000)")
    p.add_argument("--n-max", type=int, help="sweep n_dr over 1..N-MAX")
    p.add_argument("--c-steps", type=int, help="sweep c_step over 1..C-STEPS")

    p = sub.add_parser("compare-splits",
                       help="CAPEX/OPEX breakdown for both centralization splits")
    _add_common(p)
    p.add_argument("--n-dr", type=float, default=7, help="drones per link (default 7)")
    p.add_argument("--c-step", type=float, default=1, help="capacity step (default 1)")
    p.add_argument("--horizons", default="1,5",
                   help="comma-separated list of horizons (default 1,5)")
    return parser


def _sweep_axes_from_args(args):
    d_values = None
    if args.d_min is not None or args.d_max is not None:
        if args.d_min is None or args.d_max is None:
            raise ValidationError("--d-min and --d-max must be given together")
        if args.d_step <= 0:
            raise ValidationError(f"--d-step must be > 0 (got {args.d_step})")
        if args.d_max < args.d_min:
            raise ValidationError("--d-max must be >= --d-min")
        d_values = []
        d = args.d_min
        while d <= args.d_max * (1 + 1e-12):
            d_values.append(round(d, 6))
            d += args.d_step
    n_values = tuple(range(1, args.n_max + 1)) if args.n_max is not None else None
    c_steps = tuple(range(1, args.c_steps + 1)) if args.c_steps is not None else None
    return d_values, n_values, c_steps


def _parse_horizons(text: str) -> tuple:
    try:
        horizons = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValidationError(
            f"--horizons must be comma-separated integers (got {text!r})") from None
    if not horizons:
        raise ValidationError("--horizons must be non-empty")
    return horizons


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        scenario = load_scenario(args.scenario) if args.scenario else default_scenario()
        if args.command == "evaluate":
            table = cmd_evaluate(scenario, args.n_dr, args.c_step, args.horizon)
        elif args.command == "optimize":
            table = cmd_optimize(scenario, args.horizon, args.n_max, args.c_steps)
        elif args.command == "sweep":
            d_values, n_values, c_steps = _sweep_axes_from_args(args)
            table = cmd_sweep(scenario, args.mode, args.horizon,
                              d_values, n_values, c_steps)
        else:
            table = cmd_compare_splits(scenario, args.n_dr, args.c_step,
                                       _parse_horizons(args.horizons))
        text = table.render(args.format)
        if args.out:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return EXIT_OK
    except DomainError as e:
        print(f"dronetco: domain error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except (ScenarioParseError, ValidationError) as e:
        print(f"dronetco: {e}", file=sys.stderr)
        return EXIT_SCENARIO
    except DroneTcoError as e:
        print(f"dronetco: {e}", file=sys.stderr)
        return EXIT_SCENARIO
    except OSError as e:
        print(f"dronetco: {e}", file=sys.stderr)
        return EXIT_SCENARIO


def console_main() -> None:
    raise SystemExit(main())
