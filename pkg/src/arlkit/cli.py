"""Command-line interface.

Subcommands:
    sweep      run the 1/sigma^2 sweep and write the CSV
    crb        one-shot Fisher matrix and CRB printout for the scenario
    arl        one-shot three-way resolution limit
    validate   run the oracle suite; nonzero exit on any failure

Exit codes: 0 success, 1 validation/solve failure, 2 config error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from .config import (
    ExperimentConfig,
    build_scenario,
    default_delta_max,
    load_config,
    scenario_warnings,
    with_seed,
)
from .crb import crb_closed_form
from .errors import ArlError, ConfigError
from .fim import crb_numeric, fim_slepian_bangs
from .linearize import linear_coeffs
from .solver import compute_arl, select_arl_root, solve_biquadratic, solve_quartic
from .sweep import run_sweep, write_csv
from .validate import run_validation

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_CONFIG = 2
EXIT_IO = 3


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--config", type=Path, default=None, help="config file path")
    sub.add_argument("--out", type=Path, default=None, help="output file path")
    sub.add_argument("--seed", type=int, default=None, help="override the signal seed")
    sub.add_argument("--quiet", action="store_true", help="suppress informational output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arlkit",
        description="Angular resolution limit for one planar and one curved "
                    "wavefront source on a uniform linear array.")
    subs = parser.add_subparsers(dest="command", required=True)
    for name, text in (
        ("sweep", "run the 1/sigma^2 sweep and write a CSV"),
        ("crb", "print the Fisher matrix and CRBs for the configured scenario"),
        ("arl", "print the three resolution-limit values"),
        ("validate", "run the oracle suite"),
    ):
        _add_common(subs.add_parser(name, help=text))
    return parser


def _load(args: argparse.Namespace) -> ExperimentConfig:
    config = load_config(args.config) if args.config else ExperimentConfig()
    if args.seed is not None:
        config = with_seed(config, args.seed)
    config.validate()
    return config


def _emit_warnings(config: ExperimentConfig, quiet: bool) -> None:
    if quiet:
        return
    for warning in scenario_warnings(config):
        print(f"warning: {warning}", file=sys.stderr)


def _cmd_sweep(args: argparse.Namespace) -> int:
    config = _load(args)
    _emit_warnings(config, args.quiet)
    out = args.out or Path("arl_sweep.csv")
    records = run_sweep(config)
    write_csv(records, out)
    if not args.quiet:
        ok = sum(1 for r in records if r.status == "ok")
        print(f"wrote {len(records)} sweep points ({ok} ok) to {out}")
    return EXIT_OK


def _scenario_header(config: ExperimentConfig) -> list[str]:
    scenario = build_scenario(config)
    el = scenario.electrical
    return [
        f"L = {config.geometry.L}, d = {config.geometry.d_meters} m, "
        f"lambda = {scenario.geometry.wavelength:.6f} m",
        f"omega1 = {el.omega1:.9e} rad, delta = {el.delta:.9e} rad, "
        f"phi = {el.phi:.9e} rad",
        f"T = {scenario.signals.num_snapshots}, sigma^2 = {scenario.sigma2:.6e}",
    ]


def _cmd_crb(args: argparse.Namespace) -> int:
    config = _load(args)
    _emit_warnings(config, args.quiet)
    scenario = build_scenario(config)
    fim = fim_slepian_bangs(scenario)
    closed = crb_closed_form(scenario)
    numeric = crb_numeric(fim)
    lines = _scenario_header(config)
    lines.append("Fisher information matrix (omega1, omega2, phi):")
    lines.extend("  " + "  ".join(f"{v:+.9e}" for v in row) for row in fim.entries)
    lines += [
        f"CRB(omega1)        closed {closed.crb_omega1:.12e}   numeric {numeric.crb_omega1:.12e}",
        f"CRB(omega2)        closed {closed.crb_omega2:.12e}   numeric {numeric.crb_omega2:.12e}",
        f"CRB(omega1,omega2) closed {closed.crb_cross:.12e}   numeric {numeric.crb_cross_12:.12e}",
        f"CRB(phi)           numeric {numeric.crb_phi:.12e}",
        f"CRB(delta)         closed {closed.crb_delta:.12e}",
    ]
    return _emit(lines, args)


def _cmd_arl(args: argparse.Namespace) -> int:
    config = _load(args)
    _emit_warnings(config, args.quiet)
    scenario = build_scenario(config)
    result = compute_arl(scenario, delta_max=default_delta_max(config),
                         tol=config.solver.tol)
    coeffs = linear_coeffs(scenario)
    quartic = solve_quartic(*coeffs.quartic())
    biquad = solve_biquadratic(coeffs)
    selected = select_arl_root(quartic, coeffs)
    lines = _scenario_header(config)
    lines += [
        f"closed-form ARL     {result.arl_closed:.12e} rad",
        f"low-noise ARL       {result.arl_low_noise:.12e} rad",
        f"exact-Smith ARL     {result.arl_numeric:.12e} rad",
        f"selected quartic root {selected:.12e} rad",
        f"quartic positive roots: "
        + ", ".join(f"{r:.9e}" for r in quartic.positive_real_roots),
        f"reduced-poly roots:     "
        + ", ".join(f"{r:.9e}" for r in biquad.positive_delta_roots()),
        f"discriminant        {result.discriminant:.9e}",
    ]
    return _emit(lines, args)


def _cmd_validate(args: argparse.Namespace) -> int:
    config = _load(args)
    _emit_warnings(config, args.quiet)
    report = run_validation(config)
    text = "\n".join(report.lines()) + "\n"
    if args.out:
        args.out.write_text(text, encoding="utf-8")
    if not args.quiet or not report.passed:
        sys.stdout.write(text)
    return EXIT_OK if report.passed else EXIT_VALIDATION


def _emit(lines: list[str], args: argparse.Namespace) -> int:
    text = "\n".join(lines) + "\n"
    if args.out:
        args.out.write_text(text, encoding="utf-8")
        if not args.quiet:
            print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    np.seterr(all="raise", under="ignore")
    handlers = {
        "sweep": _cmd_sweep,
        "crb": _cmd_crb,
        "arl": _cmd_arl,
        "validate": _cmd_validate,
    }
    try:
        return handlers[args.command](args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ArlError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
