"""Command-line harness.

    qjunta test --fn "x0x1 ^ x2" --var 2 --trials 100 --seed 7
    qjunta test --table n=2 0x8 --all --trials 1000 --seed 3 --format csv
    qjunta validate [--n-max 8] [--golden FILE] [--eq6-only]
    qjunta sweep --n-min 4 --n-max 10 --fixture junta --trials 200 --seed 1

Exit codes: 0 success, 1 bad spec, 2 validation failure. When ``--out`` is a
relative path and ``QJUNTA_OUTPUT_DIR`` is set, the file is written there.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

import numpy as np

from . import generators as gen
from . import harness, validation
from .boolfn import (
    ArityError,
    CapacityError,
    ParseError,
    parse_anf,
    parse_table_spec,
    to_truth_table,
)
from .statevec import SIM_ARITY_CAP
from .tester import reports_to_csv

EXIT_OK, EXIT_SPEC, EXIT_VALIDATION = 0, 1, 2
OUTPUT_DIR_ENV = "QJUNTA_OUTPUT_DIR"


class SpecError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_SPEC, f"{self.prog}: error: {message}\n")


def _output_path(out: str | None) -> Path | None:
    if out is None:
        return None
    path = Path(out)
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not path.is_absolute():
        path = Path(base) / path
    return path


def _emit(text: str, out: str | None) -> None:
    path = _output_path(out)
    if path is None:
        sys.stdout.write(text)
    else:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)


def _load_function(args):
    sources = [args.fn is not None, args.table is not None, args.gen is not None]
    if sum(sources) != 1:
        raise SpecError("give exactly one of --fn, --table, --gen")
    if args.fn is not None:
        return to_truth_table(parse_anf(args.fn, args.n))
    if args.table is not None:
        return parse_table_spec(args.table)
    if args.n is None:
        raise SpecError("--gen needs --n")
    return gen.generate(args.gen, args.n, np.random.default_rng(args.seed), m=args.m)


def cmd_test(args) -> int:
    f = _load_function(args)
    if f.arity > SIM_ARITY_CAP:
        raise CapacityError(f"arity {f.arity} exceeds the simulation cap of {SIM_ARITY_CAP}")
    if args.trials < 1:
        raise SpecError("--trials must be at least 1")
    if args.all:
        variables = list(range(f.arity))
    elif args.var is None:
        raise SpecError("give --var K or --all")
    else:
        if not 0 <= args.var < f.arity:
            raise ArityError(f"variable x{args.var} does not exist for arity {f.arity}")
        variables = [args.var]
    reports = harness.run_trials(
        f, variables, args.trials, args.seed,
        cutoff_multiplier=args.cutoff, workers=args.workers,
    )
    trials = [k for _ in variables for k in range(args.trials)]
    if args.format == "json":
        text = "".join(r.to_json(with_trace=args.trace) + "\n" for r in reports)
    else:
        text = _csv_with_trial(reports, trials)
    _emit(text, args.out)
    return EXIT_OK


def _csv_with_trial(reports, trials) -> str:
    body = reports_to_csv(reports).splitlines()
    rows = ["trial," + body[0]]
    rows += [f"{k},{line}" for k, line in zip(trials, body[1:])]
    return "\n".join(rows) + "\n"


def cmd_validate(args) -> int:
    if args.eq6_only:
        lines = ["n,M,q_star,P_s"]
        lines += [f"{n},{M},{q},{ps:.15g}" for n, M, q, ps in validation.eq6_table(2, args.n_max)]
        _emit("\n".join(lines) + "\n", args.out)
        return EXIT_OK
    checks = validation.run_all(args.n_max, args.golden)
    ok = True
    for c in checks:
        status = "PASS" if c.passed else "FAIL"
        print(f"{status}  {c.name}: worst {c.worst:.3e} (tol {c.tolerance:.0e})")
        for v in c.violations:
            print(f"      {v}")
        ok &= c.passed
    for flag in validation.coverage_flags(2, args.n_max):
        print(f"NOTE  P_s(q*) below 1/2 at {flag}")
    return EXIT_OK if ok else EXIT_VALIDATION


def cmd_sweep(args) -> int:
    if args.trials < 1:
        raise SpecError("--trials must be at least 1")
    fixtures = args.fixture or list(harness.SWEEP_FIXTURES)
    rows = harness.run_sweep(
        range(args.n_min, args.n_max + 1), fixtures, args.trials, args.seed,
        cutoff_multiplier=args.cutoff, workers=args.workers,
    )
    _emit(harness.sweep_to_csv(rows), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qjunta", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--trials", type=int, default=1)
        p.add_argument("--cutoff", type=float, default=3.0,
                       help="post-cap iteration budget multiplier (default 3)")
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--out", help="output file (default: stdout)")

    t = sub.add_parser("test", help="test variables of one function")
    t.add_argument("--fn", help='ANF spec such as "x0x1 ^ x2 ^ 1"')
    t.add_argument("--table", nargs=2, metavar=("n=N", "HEX"), help="truth table in hex")
    t.add_argument("--gen", choices=gen.GENERATORS, help="named generator (seeded by --seed)")
    t.add_argument("--n", type=int, help="arity for --gen, or to widen --fn")
    t.add_argument("--m", type=int, help="term width for single-term-m")
    which = t.add_mutually_exclusive_group()
    which.add_argument("--var", type=int)
    which.add_argument("--all", action="store_true")
    t.add_argument("--format", choices=("csv", "json"), default="json")
    t.add_argument("--trace", action="store_true", help="include per-round traces in JSON")
    common(t)
    t.set_defaults(func=cmd_test)

    v = sub.add_parser("validate", help="check the simulator against the closed forms")
    v.add_argument("--n-max", type=int, default=8)
    v.add_argument("--golden", help="golden grid CSV (default: packaged file)")
    v.add_argument("--eq6-only", action="store_true",
                   help="print the (n, M, q*, P_s) table and exit")
    v.add_argument("--out")
    v.set_defaults(func=cmd_validate)

    s = sub.add_parser("sweep", help="query-count scaling table")
    s.add_argument("--n-min", type=int, default=4)
    s.add_argument("--n-max", type=int, default=10)
    s.add_argument("--fixture", action="append", choices=harness.SWEEP_FIXTURES)
    common(s)
    s.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SpecError, ParseError, ArityError, CapacityError, ValueError, OSError) as exc:
        print(f"qjunta {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_SPEC


if __name__ == "__main__":
    sys.exit(main())
