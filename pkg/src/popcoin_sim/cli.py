"""Command-line entry point.

Subcommands::

    popcoin-sim run <config.json> --out <dir> [--plot-data]
    popcoin-sim validate <config.json>
    popcoin-sim agent <problems.json> [--out <file.csv>] [--alpha A]
    popcoin-sim exchange <scenario.json> [--out <dir>]

Exit codes: 0 on success, 2 for invalid configs or inputs, 3 for a model
invariant violated at runtime. The only environment influence is
POPCOIN_SIM_LOG, which sets stderr log verbosity (debug, info, warning,
error); it never changes outputs.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys

from .errors import ConfigError, PopcoinError
from .scenario import (
    _validate_exchange_params,
    load_config,
    run_agent_batch,
    run_exchange_grid,
    run_scenario,
    validate_agent_problem,
    validate_config,
)

log = logging.getLogger("popcoin_sim.cli")

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_INVARIANT = 3


def _configure_logging() -> None:
    level_name = os.environ.get("POPCOIN_SIM_LOG", "warning").upper()
    level = getattr(logging, level_name, None)
    if not isinstance(level, int):
        level = logging.WARNING
    logging.basicConfig(
        stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s"
    )


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except FileNotFoundError:
        raise ConfigError([f"{path}: file not found"]) from None
    except json.JSONDecodeError as err:
        raise ConfigError([f"{path}: not valid JSON ({err})"]) from None


def _cmd_run(args) -> int:
    config = load_config(args.config)
    summary = run_scenario(config, args.out, include_plot_data=args.plot_data)
    print(f"wrote {', '.join(summary['files'])} to {summary['out_dir']}")
    return EXIT_OK


def _cmd_validate(args) -> int:
    doc = _load_json(args.config)
    diagnostics = validate_config(doc)
    if diagnostics:
        for line in diagnostics:
            print(line, file=sys.stderr)
        return EXIT_CONFIG
    print(f"{args.config}: valid")
    return EXIT_OK


def _parse_agent_input(doc) -> tuple[list[dict], float]:
    """Accept either a bare problem list or {demurrage_alpha, problems}."""
    diagnostics: list[str] = []
    if isinstance(doc, list):
        problems, alpha = doc, 0.0
        if not problems:
            diagnostics.append("problems: must be a non-empty list")
    elif isinstance(doc, dict):
        for key in doc:
            if key not in ("problems", "demurrage_alpha"):
                diagnostics.append(f"input: unknown key {key!r}")
        problems = doc.get("problems")
        alpha = doc.get("demurrage_alpha", 0.0)
        if not isinstance(problems, list) or not problems:
            diagnostics.append("problems: must be a non-empty list")
            problems = []
        if not isinstance(alpha, (int, float)) or isinstance(alpha, bool) or not 0 <= alpha < 1:
            diagnostics.append(f"demurrage_alpha: must lie in [0, 1), got {alpha!r}")
    else:
        raise ConfigError(["input: must be a problem list or an object with 'problems'"])
    for i, problem in enumerate(problems):
        validate_agent_problem(problem, f"problems[{i}]", diagnostics)
    if diagnostics:
        raise ConfigError(diagnostics)
    return problems, float(alpha)


def _write_rows(header, rows, out_path) -> None:
    from .scenario import _format_cell

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_format_cell(cell) for cell in row])
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as handle:
            handle.write(buffer.getvalue())
        print(f"wrote {out_path}")
    else:
        sys.stdout.write(buffer.getvalue())


def _cmd_agent(args) -> int:
    doc = _load_json(args.problems)
    problems, alpha = _parse_agent_input(doc)
    if args.alpha is not None:
        if not 0 <= args.alpha < 1:
            raise ConfigError([f"--alpha: must lie in [0, 1), got {args.alpha}"])
        alpha = args.alpha
    rows = run_agent_batch(problems, alpha)
    _write_rows(["in1", "out1", "savings", "tax_rate"], rows, args.out)
    return EXIT_OK


def _cmd_exchange(args) -> int:
    doc = _load_json(args.scenario)
    diagnostics: list[str] = []
    if not isinstance(doc, dict):
        raise ConfigError(["input: must be an object"])
    _validate_exchange_params(doc, "input", diagnostics)
    if diagnostics:
        raise ConfigError(diagnostics)
    from .scenario import DEFAULT_ELASTICITIES, DEFAULT_EXCHANGE_FIELDS, DEFAULT_FIAT_SHOCKS

    scenario = dict(DEFAULT_EXCHANGE_FIELDS)
    scenario.update(doc.get("scenario", {}))
    params = {
        "scenario": scenario,
        "fiat_supply_shocks": list(doc.get("fiat_supply_shocks", DEFAULT_FIAT_SHOCKS)),
        "elasticities": list(doc.get("elasticities", DEFAULT_ELASTICITIES)),
    }
    rows, summary = run_exchange_grid(params)
    header = [
        "shock",
        "eta",
        "spot_before",
        "longrun_before",
        "spot_after",
        "longrun_after",
        "rate_pop",
        "rate_fiat_before",
        "rate_fiat_after",
        "overshoot",
    ]
    if args.out:
        from pathlib import Path

        from .scenario import _write_csv, _write_json

        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        _write_csv(out / "exchange.csv", header, rows)
        _write_json(out / "exchange_summary.json", summary)
        print(f"wrote exchange.csv, exchange_summary.json to {out}")
    else:
        _write_rows(header, rows, None)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="popcoin-sim",
        description="Deterministic ledger and economy simulator for a "
        "demurrage-funded basic-income currency.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run a scenario config and write output files")
    p_run.add_argument("config", help="scenario config JSON")
    p_run.add_argument("--out", required=True, help="output directory")
    p_run.add_argument(
        "--plot-data", action="store_true", help="also write long-format plot_data.csv"
    )
    p_run.set_defaults(func=_cmd_run)

    p_val = sub.add_parser("validate", help="validate a scenario config")
    p_val.add_argument("config", help="scenario config JSON")
    p_val.set_defaults(func=_cmd_validate)

    p_agent = sub.add_parser("agent", help="solve a batch of two-period problems")
    p_agent.add_argument("problems", help="JSON problem list (or object with 'problems')")
    p_agent.add_argument("--out", help="CSV output path (default stdout)")
    p_agent.add_argument(
        "--alpha", type=float, help="demurrage rate for the tax column (overrides input)"
    )
    p_agent.set_defaults(func=_cmd_agent)

    p_ex = sub.add_parser("exchange", help="run the overshooting grid for a scenario")
    p_ex.add_argument("scenario", help="exchange scenario JSON")
    p_ex.add_argument("--out", help="output directory (default: CSV to stdout)")
    p_ex.set_defaults(func=_cmd_exchange)
    return parser


def main(argv=None) -> int:
    _configure_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as err:
        for line in err.diagnostics:
            print(line, file=sys.stderr)
        return EXIT_CONFIG
    except PopcoinError as err:
        # model or ledger guarantee broken at runtime, distinct from bad input
        print(f"invariant violation: {err}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
