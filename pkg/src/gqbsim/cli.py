"""Command-line interface.

Verbs: run, preset, sweep, verify, list-presets. Exit codes: 0 success,
1 usage or config error, 2 numerical failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import InputError, NumericalError
from .scenario import (
    get_preset,
    load_config,
    preset_catalog,
    run_scenario,
    run_sweep,
    verify_tables,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERICAL = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gqbsim",
        description="Spin-valley quantum battery simulator: charge a "
                    "four-level battery with a Gaussian pulse, dissipate it "
                    "through configurable channels, record energy, purity, "
                    "coherence and ergotropy.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run a scenario from a YAML config file")
    p_run.add_argument("config", type=Path)
    p_run.add_argument("--output-dir", type=Path, default=None,
                       help="override the config's output directory")

    p_preset = sub.add_parser("preset", help="run a named preset scenario")
    p_preset.add_argument("name")
    p_preset.add_argument("--output-dir", type=Path, default=Path("out"))

    p_sweep = sub.add_parser("sweep", help="run one scenario per axis value")
    p_sweep.add_argument("config", type=Path)
    p_sweep.add_argument("--axis", required=True,
                         help="dotted path of a numeric field, e.g. channel.rate.gamma")
    p_sweep.add_argument("--values", required=True,
                         help="comma-separated numbers, e.g. 0.1,0.5,1.0")
    p_sweep.add_argument("--output-dir", type=Path, default=None)

    p_verify = sub.add_parser(
        "verify", help="run all presets and compare against the reference tables")
    p_verify.add_argument("--skip-calibration", action="store_true",
                          help="use the bundled pulse amplitude instead of "
                               "re-running the calibration sweep")
    p_verify.add_argument("--output-dir", type=Path, default=Path("out"))

    sub.add_parser("list-presets", help="list available presets")
    return parser


def _cmd_run(args: argparse.Namespace) -> int:
    if not args.config.exists():
        raise InputError(f"config file not found: {args.config}")
    cfg = load_config(args.config)
    record = run_scenario(cfg, output_dir=args.output_dir)
    out = (args.output_dir or cfg.output_dir) / cfg.label
    print(f"{cfg.label}: {len(record.times)} samples -> {out}")
    for message in record.warnings:
        print(f"warning: {message}", file=sys.stderr)
    return EXIT_OK


def _cmd_preset(args: argparse.Namespace) -> int:
    cfg = get_preset(args.name)
    record = run_scenario(cfg, output_dir=args.output_dir)
    print(f"{cfg.label}: {len(record.times)} samples -> {args.output_dir / cfg.label}")
    for message in record.warnings:
        print(f"warning: {message}", file=sys.stderr)
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    if not args.config.exists():
        raise InputError(f"config file not found: {args.config}")
    cfg = load_config(args.config)
    try:
        values = [float(x) for x in args.values.split(",") if x.strip() != ""]
    except ValueError as exc:
        raise InputError(f"--values must be comma-separated numbers: {exc}") from exc
    summary = run_sweep(cfg, args.axis, values, output_dir=args.output_dir)
    print(f"swept {args.axis} over {len(summary)} value(s)")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    report = verify_tables(skip_calibration=args.skip_calibration,
                           output_dir=args.output_dir)
    cal = report["calibration"]
    if cal["skipped"]:
        print(f"calibration skipped; bundled pulse amplitude {cal['pulse_amplitude']}")
    else:
        print(f"calibration: pulse amplitude {cal['pulse_amplitude']:.4f} "
              f"(coherence residual {cal['residual']:.2e})")
        print(f"  grid: {cal['grid']}")

    within = sum(1 for c in report["quantitative"]
                 if c.get("within_tolerance") is True)
    gauged = sum(1 for c in report["quantitative"] if "within_tolerance" in c)
    print(f"quantitative cells within tolerance: {within}/{gauged} (informative)")

    for check in report["qualitative"]:
        status = "PASS" if check["pass"] else "FAIL"
        print(f"{status} {check['check']}")
    print(f"report -> {Path(args.output_dir) / 'verify_report.json'}")
    return EXIT_OK if report["all_qualitative_pass"] else EXIT_NUMERICAL


def _cmd_list_presets(_args: argparse.Namespace) -> int:
    for name, cfg in sorted(preset_catalog().items()):
        kind = cfg.channel.kind.value
        rate = cfg.channel.rate
        print(f"{name:15s} {kind:18s} {rate}")
    return EXIT_OK


_COMMANDS = {
    "run": _cmd_run,
    "preset": _cmd_preset,
    "sweep": _cmd_sweep,
    "verify": _cmd_verify,
    "list-presets": _cmd_list_presets,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
