#!/usr/bin/env python3
"""
#exonware/xwecho/src/exonware/xwecho/cli.py
Command-line interface for xwecho.
Company: eXonware.com
Author: eXonware Backend Team
Email: connect@exonware.com
Version: 0.1.0.1
Generation Date: 18-Oct-2026
Usage:
  xwecho extract AUDIO... --out run/             # GCC peaks and measurements
  xwecho template NOISE... --out run/            # noise template bank
  xwecho track-tdoa run/measurements.csv         # per-sensor TDOA tracks
  xwecho track-3d run/tdoa_estimates.csv         # 3-D tracks
  xwecho track run/measurements.csv              # both tracking stages
  xwecho pipeline AUDIO...                       # extract + track
  xwecho simulate --whales 1 2 --runs 100        # Monte-Carlo study
"""

from __future__ import annotations
import argparse
import sys
from dataclasses import replace
from typing import Sequence
from exonware.xwsystem import get_logger
from .config import XWEchoConfig, load_config
from .defs import ExitCode, WeightingKind
from .errors import XWEchoError
from .pipeline import (
    cmd_extract,
    cmd_pipeline,
    cmd_simulate,
    cmd_template,
    cmd_track,
    cmd_track_3d,
    cmd_track_tdoa,
)
from .version import __version__
logger = get_logger(__name__)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="Configuration file (JSON or YAML)")
    common.add_argument("--seed", type=int, help="Random seed")
    common.add_argument("--out", help="Output directory")
    common.add_argument("--geometry", help="Array geometry file")
    common.add_argument("--hyperparameters", help="Tracking hyperparameter file")
    common.add_argument("--weighting", choices=[k.value for k in WeightingKind], help="GCC weighting")
    common.add_argument("--template", help="Noise template bank (.npz) for WIN weighting")
    common.add_argument("--tm", type=float, help="Tracking step length T_M, seconds")
    common.add_argument("--ptdoa", type=float, help="GCC peak threshold")
    common.add_argument("--reverse-time", action="store_true", help="Process measurements last step first")
    parser = argparse.ArgumentParser(prog="xwecho", description="Echolocation click TDOA extraction and tracking")
    parser.add_argument("--version", action="version", version=f"xwecho {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("extract", "GCC peaks and TDOA measurements from audio"),
        ("template", "Noise template bank from noise-only audio"),
        ("pipeline", "Extraction followed by both tracking stages"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("audio", nargs="+", help="Audio files, channels in array order")
    for name, help_text in (
        ("track-tdoa", "Per-sensor TDOA tracking"),
        ("track-3d", "3-D tracking of TDOA estimates"),
        ("track", "Both tracking stages"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("measurements", help="Measurement table (step,sensor,delay_s,amplitude)")
    p = sub.add_parser("simulate", parents=[common], help="Monte-Carlo comparison study")
    p.add_argument("--runs", type=int, help="Runs per whale count")
    p.add_argument("--whales", type=int, nargs="+", help="Whale counts")
    p.add_argument("--workers", type=int, help="Worker processes")
    return parser


def resolve_config(args: argparse.Namespace) -> XWEchoConfig:
    """Configuration file (or defaults) with command-line overrides."""
    config = load_config(args.config) if args.config else XWEchoConfig.default()
    signal = config.signal
    if args.weighting:
        signal = replace(signal, weighting=WeightingKind(args.weighting))
    if args.template:
        signal = replace(signal, noise_template_path=args.template)
    if args.ptdoa is not None:
        signal = replace(signal, p_tdoa=args.ptdoa)
    cluster = replace(config.cluster, step_length=args.tm) if args.tm is not None else config.cluster
    pipeline = config.pipeline
    for key, value in (
        ("seed", args.seed),
        ("output_dir", args.out),
        ("geometry_path", args.geometry),
        ("hyperparameter_path", args.hyperparameters),
    ):
        if value is not None:
            pipeline = replace(pipeline, **{key: value})
    if args.reverse_time:
        pipeline = replace(pipeline, reverse_time=True)
    study, scenario = config.study, config.scenario
    if getattr(args, "runs", None) is not None:
        study = replace(study, runs=args.runs)
    if getattr(args, "whales", None):
        study = replace(study, n_whales=tuple(args.whales))
    if getattr(args, "workers", None) is not None:
        study = replace(study, workers=args.workers)
    if args.tm is not None:
        scenario = replace(scenario, step_length=args.tm)
    return replace(config, signal=signal, cluster=cluster, pipeline=pipeline, study=study, scenario=scenario)


def run(args: argparse.Namespace) -> str:
    """Execute one subcommand; returns the summary line."""
    config = resolve_config(args)
    out = config.pipeline.output_dir
    if args.command == "extract":
        result = cmd_extract(args.audio, config, out)
        return f"extract: {len(result.peaks)} peaks, {sum(len(s) for s in result.sets)} measurements -> {out}"
    if args.command == "template":
        bank = cmd_template(args.audio, config)
        return f"template: {len(bank)} channels -> {out}"
    if args.command == "track-tdoa":
        results = cmd_track_tdoa(args.measurements, config, out)
        return f"track-tdoa: {sum(len(r.tracks) for r in results.values())} tracks on {len(results)} sensors -> {out}"
    if args.command == "track-3d":
        result = cmd_track_3d(args.measurements, config, out)
        return f"track-3d: {len(result.tracks)} tracks -> {out}"
    if args.command == "track":
        result = cmd_track(args.measurements, config, out)
        return f"track: {len(result.tracks)} 3-D tracks -> {out}"
    if args.command == "pipeline":
        result = cmd_pipeline(args.audio, config, out)
        return f"pipeline: {len(result.tracks)} 3-D tracks -> {out}"
    study = cmd_simulate(config, out)
    return f"simulate: {len(study.rmse_runs)} runs -> {out}"


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point of the xwecho console script; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        summary = run(args)
    except XWEchoError as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"xwecho {args.command}: {e}", file=sys.stderr)
        return int(e.exit_code)
    except Exception as e:
        logger.error(f"{args.command} failed unexpectedly: {e}")
        print(f"xwecho {args.command}: {XWEchoError('Unexpected failure', cause=e)}", file=sys.stderr)
        return int(ExitCode.INTERNAL)
    print(summary)
    return int(ExitCode.OK)


if __name__ == "__main__":
    sys.exit(main())
