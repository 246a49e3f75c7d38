"""Command-line front end.

    nrdcsk run CONFIG [--workers N] [--seed S] [--out PATH] [--no-plot]
    nrdcsk analyze CONFIG [--out PATH] [--no-plot]
    nrdcsk optimal-rho --ebn0 DB --jsr DB --beta N --p N [--plot PATH]

Exit status is 0 on success, 2 for configuration errors and 3 for runtime
failures.
"""
from __future__ import annotations

import argparse
import logging
import sys
import time
from dataclasses import replace
from pathlib import Path

import numpy as np

from . import engine
from .analysis import AnalysisPoint, ber_ptj, optimal_rho
from .config import ConfigError, RunConfig, parse_config
from .report import ResultRow, emit_csv, summary

EXIT_OK, EXIT_CONFIG, EXIT_RUNTIME = 0, 2, 3
DEFAULT_OUT = "results.csv"

log = logging.getLogger("nrdcsk")


def load_config(path: str, seed: int | None = None) -> RunConfig:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from None
    cfg = parse_config(text)
    if seed is not None:
        if not 0 <= seed < 2**64:
            raise ConfigError("seed must be a 64-bit unsigned integer", "--seed")
        cfg = replace(cfg, base=replace(cfg.base, seed=seed))
    return cfg


def simulate(cfg: RunConfig, workers: int | None = None) -> list[ResultRow]:
    workers = workers or cfg.workers
    rows = []
    for cell in cfg.cells():
        for i, scenario in enumerate(cell.scenarios):
            t0 = time.perf_counter()
            est = engine.run(scenario, workers)
            log.info("cell %d point %d: %d/%d errors in %.2fs", cell.index, i, est.errors, est.bits,
                     time.perf_counter() - t0)
            ana = est.analytic_ref if cfg.analysis_overlay else None
            rows.append(ResultRow(f"{cell.index}-{i}", scenario, est, ana, cell.index))
    return rows


def analyze(cfg: RunConfig) -> list[ResultRow]:
    rows = []
    for cell in cfg.cells():
        for i, scenario in enumerate(cell.scenarios):
            ana = engine.analytic_reference(scenario)
            if ana is None:
                raise ConfigError(f"no closed-form BER for jammer kind {scenario.jammer.kind!r}", "jammer.kind")
            rows.append(ResultRow(f"{cell.index}-{i}", scenario, None, ana, cell.index))
    return rows


def _write(cfg: RunConfig, rows: list[ResultRow], out: str | None, plot: bool) -> None:
    path = Path(out or cfg.out or DEFAULT_OUT)
    emit_csv(rows, path)
    print(summary(rows))
    print(f"wrote {path}")
    if plot:
        from .plotting import plot_ber

        tags = {cell.index: cell.tags for cell in cfg.cells()}
        fig = plot_ber(rows, cfg.axis, cfg.values, tags, path.with_suffix(".png"))
        print(f"wrote {fig}")


def cmd_run(args) -> int:
    cfg = load_config(args.config, args.seed)
    if args.workers is not None and args.workers < 1:
        raise ConfigError("must be >= 1", "--workers")
    rows = simulate(cfg, args.workers)
    _write(cfg, rows, args.out, not args.no_plot)
    return EXIT_OK


def cmd_analyze(args) -> int:
    cfg = load_config(args.config)
    rows = analyze(cfg)
    _write(cfg, rows, args.out, not args.no_plot)
    return EXIT_OK


def cmd_optimal_rho(args) -> int:
    try:
        AnalysisPoint(args.ebn0, args.jsr, args.beta, args.p)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    t0 = time.perf_counter()
    rho, ber = optimal_rho(args.ebn0, args.jsr, args.beta, args.p)
    elapsed = time.perf_counter() - t0
    print(f"rho_star = {rho:.6f}")
    print(f"ber_star = {ber:.6e}")
    log.info("search took %.3fs", elapsed)
    if args.plot:
        from .plotting import plot_rho_curve

        rhos = np.geomspace(1e-4, 1.0, 400)
        bers = [ber_ptj(AnalysisPoint(args.ebn0, args.jsr, args.beta, args.p, r)) for r in rhos]
        print(f"wrote {plot_rho_curve(rhos, bers, rho, ber, args.plot)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nrdcsk", description="NR-DCSK anti-jamming BER simulator")
    parser.add_argument("-v", "--verbose", action="store_true", help="log per-point progress")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="Monte-Carlo simulation of a config")
    p.add_argument("config")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--seed", type=int, default=None, help="overrides run.seed")
    p.add_argument("--out", default=None, help="CSV path (figure goes next to it as .png)")
    p.add_argument("--no-plot", action="store_true")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("analyze", help="closed-form BER only, no simulation")
    p.add_argument("config")
    p.add_argument("--out", default=None)
    p.add_argument("--no-plot", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("optimal-rho", help="jammer-optimal partial-time duty factor")
    p.add_argument("--ebn0", type=float, required=True, help="Eb/N0 in dB")
    p.add_argument("--jsr", type=float, required=True, help="jamming power over signal power in dB")
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--plot", default=None, help="write BER-versus-rho figure to this path")
    p.set_defaults(func=cmd_optimal_rho)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_CONFIG
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except Exception as exc:  # noqa: BLE001
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
