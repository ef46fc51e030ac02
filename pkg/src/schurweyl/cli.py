"""Command line front end.

Three subcommands: ``verify`` runs a deterministic suite, ``experiment``
runs a config-driven bound-check sweep and writes CSV + JSON reports,
``table`` runs the same sweep for a named bound and pretty-prints it.

Exit codes: 0 all checks passed, 1 at least one failure, 2 no failures
but at least one inconclusive verdict, 3 usage or config error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from . import harness
from .harness import ConfigError


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; the contract here reserves 2 for
    # inconclusive runs, so remap usage errors to 3
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(harness.EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="schurweyl",
                     description="Deterministic checks and seeded experiments "
                                 "for random diagram shapes.")
    parser.add_argument("--seed", type=int, default=None,
                        help="override the seed (suite default 0, else the config value)")
    parser.add_argument("--jobs", type=int, default=1,
                        help="worker processes for experiment grids")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run a deterministic verification suite")
    p_verify.add_argument("suite", choices=sorted(harness.SUITES))
    p_verify.add_argument("--max-n", type=int, default=None)
    p_verify.add_argument("--max-d", type=int, default=None)
    p_verify.add_argument("--trials", type=int, default=None)

    p_exp = sub.add_parser("experiment", help="run a config-driven bound-check sweep")
    p_exp.add_argument("config", help="path to a JSON experiment config")

    p_table = sub.add_parser("table", help="print a bound-check sweep as a text table")
    p_table.add_argument("theorem", choices=sorted(harness.EXPERIMENTS),
                         help="bound id to tabulate")
    p_table.add_argument("config", help="path to a JSON config supplying the grid")
    return parser


def cmd_verify(args) -> int:
    result = harness.run_suite(args.suite, args.max_n, args.max_d, args.trials,
                               seed=args.seed if args.seed is not None else 0)
    print(result.summary())
    return harness.EXIT_PASS if result.passed else harness.EXIT_FAIL


def _load(args) -> harness.ExperimentConfig:
    cfg = harness.load_config(args.config)
    if args.seed is not None:
        cfg = replace(cfg, seed=args.seed)
    return cfg


def cmd_experiment(args) -> int:
    cfg = _load(args)
    report = harness.run_experiment(cfg, jobs=args.jobs)
    base = cfg.output if cfg.output else cfg.experiment
    csv_path, json_path = harness.write_report(report, base)
    counts = report.verdict_counts()
    print(f"wrote {csv_path} and {json_path}: "
          f"{counts['pass']} pass, {counts['fail']} fail, "
          f"{counts['inconclusive']} inconclusive")
    return report.exit_code()


def cmd_table(args) -> int:
    cfg = _load(args)
    if cfg.experiment != args.theorem:
        cfg = replace(cfg, experiment=args.theorem)
        if cfg.alpha is None and args.theorem != "lis-plancherel":
            raise ConfigError(f"experiment {args.theorem!r} needs an alpha spec")
    report = harness.run_experiment(cfg, jobs=args.jobs)
    print(harness.render_table(report))
    return report.exit_code()


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "experiment":
            return cmd_experiment(args)
        return cmd_table(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return harness.EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
