"""Command-line interface: basis checks, experiment campaigns, reconstruction."""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .basis import NumericalError, build_basis, orthonormality_defect
from .detect import reconstruct
from .harness import (
    EXPERIMENT_IDS,
    config_from_dict,
    default_config,
    load_config,
    run_experiment,
)
from .sampling import load_problem, measure, synthesize

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NUMERIC = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hermite-cs",
        description="Compressive sensing in the discrete Hermite transform basis",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_basis = sub.add_parser("basis", help="construct a basis and report diagnostics")
    p_basis.add_argument("--order", type=int, required=True, help="basis size M")
    p_basis.add_argument("--check", action="store_true",
                         help="print the orthonormality defect")

    p_exp = sub.add_parser("experiment", help="run a seeded experiment campaign")
    p_exp.add_argument("id", choices=EXPERIMENT_IDS, nargs="?",
                       help="experiment identifier (omit when --config names one)")
    p_exp.add_argument("--config", help="JSON config file")
    p_exp.add_argument("--seed", type=int, help="master seed")
    p_exp.add_argument("--trials", type=int, help="trials per sweep point")
    p_exp.add_argument("--out", help="output directory")
    p_exp.add_argument("--pnn", type=float, help="noise-suppression probability")
    p_exp.add_argument("--svg", action="store_true", help="also write SVG figures")

    p_rec = sub.add_parser("reconstruct", help="reconstruct a sparse signal from a problem file")
    p_rec.add_argument("--config", required=True,
                       help='JSON problem: {"M", "components", "mask": {"M_A", "seed"}}')
    p_rec.add_argument("--pnn", type=float, default=0.99)
    p_rec.add_argument("--out", help="write recovered coefficients to this CSV")
    return parser


def _cmd_basis(args) -> int:
    basis = build_basis(args.order)
    print(f"order {basis.order}: roots in [{basis.roots[0]:.6f}, {basis.roots[-1]:.6f}]")
    if args.check:
        print(f"orthonormality defect: {orthonormality_defect(basis):.6e}")
    return EXIT_OK


def _cmd_experiment(args) -> int:
    if args.config:
        config = load_config(args.config)
        if args.id and args.id != config.experiment:
            raise ValueError(
                f"experiment id {args.id!r} conflicts with config {config.experiment!r}"
            )
    elif args.id:
        config = default_config(args.id)
    else:
        raise ValueError("give an experiment id or a --config file naming one")
    overrides = {}
    if args.seed is not None:
        overrides["master_seed"] = args.seed
    if args.trials is not None:
        overrides["trials"] = args.trials
    if args.out is not None:
        overrides["out_dir"] = args.out
    if args.pnn is not None:
        overrides["p_nn"] = args.pnn
    if args.svg:
        overrides["svg"] = True
    if overrides:
        config = config_from_dict({**_config_as_dict(config), **_overrides_as_dict(overrides)})
    result = run_experiment(config)
    paths = getattr(result, "paths", None) or (result.path,)
    for path in paths:
        print(f"wrote {path}")
    return EXIT_OK


def _config_as_dict(config) -> dict:
    out = {
        "experiment": config.experiment,
        "M": config.M,
        "trials": config.trials,
        "seed": config.master_seed,
        "pnn": config.p_nn,
        "out": config.out_dir,
        "svg": config.svg,
        "bins": config.bins,
        "variant": config.variant,
        "M_A": list(config.m_a_values),
    }
    if config.p0_values is not None:
        out["p0"] = list(config.p0_values)
    if config.components is not None:
        out["components"] = [{"p": p, "A": a} for p, a in config.components]
    return out


def _overrides_as_dict(overrides: dict) -> dict:
    renames = {"master_seed": "seed", "p_nn": "pnn", "out_dir": "out"}
    return {renames.get(k, k): v for k, v in overrides.items()}


def _cmd_reconstruct(args) -> int:
    spec, mask = load_problem(args.config)
    if mask is None:
        raise ValueError("the problem file must define a mask for reconstruction")
    basis = build_basis(spec.length)
    signal = synthesize(spec, basis)
    result = reconstruct(measure(signal, mask), basis, p_nn=args.pnn)
    mse = float(np.mean((signal - result.reconstructed_signal) ** 2))
    print(f"status: {result.status}")
    print(f"threshold: {result.threshold_used:.6g}")
    print(f"support ({result.support.size}): {result.support.tolist()}")
    for p, c in zip(result.support, result.coefficients):
        print(f"  p={int(p):4d}  c={c:+.6f}")
    print(f"residual norm: {result.residual_norm:.3e}")
    print(f"signal mse vs clean synthesis: {mse:.3e}")
    if args.out:
        lines = ["p,coefficient"]
        lines += [f"{p},{repr(float(c))}" for p, c in enumerate(result.full_coefficients)]
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")
        print(f"wrote {args.out}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "basis":
            return _cmd_basis(args)
        if args.command == "experiment":
            return _cmd_experiment(args)
        return _cmd_reconstruct(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except NumericalError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
