"""Command line front end.

Commands: ``grundy`` (interval engine, huge positions), ``naive`` (dense
table as CSV), ``converge`` (sweep steps-to-convergence over a start range),
``verify`` (interval engine against the naive oracle), ``analyze``
(bottleneck/conducive residue profile and the proven step bound).

Exit codes: 0 success, 1 no convergence (engine error or sweep outcome),
2 usage or validation error.
"""

import argparse
import sys

from .convergence import measure_convergence_range
from .fast import NoConvergenceError, grundy_fast_range, verify_against_naive
from .game import GameSpec
from .naive import TableTooLargeError, build_table, export_csv
from .structure import bottleneck_residues, conducive_residues, proven_bound


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="imark",
        description="Sprague-Grundy engines for subtraction-division games.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_spec_args(p):
        p.add_argument("--sub", type=_int_list, default=(), help="subtraction amounts, comma-separated")
        p.add_argument("--div", type=_int_list, default=(), help="divisors, comma-separated")

    p = sub.add_parser("grundy", help="Grundy values at a (possibly huge) position")
    add_spec_args(p)
    p.add_argument("--pos", type=int, required=True, help="position to evaluate")
    p.add_argument("--count", type=int, default=1, help="evaluate pos..pos+count-1")
    p.add_argument("--c", type=int, default=None, help="convergence step bound (defaults to the proven bound when available)")

    p = sub.add_parser("naive", help="dense Grundy table as CSV")
    add_spec_args(p)
    p.add_argument("--max", type=int, required=True, help="top position of the table")
    p.add_argument("--out", default=None, help="output path (default: stdout)")

    p = sub.add_parser("converge", help="sweep steps-to-convergence over a start range")
    add_spec_args(p)
    p.add_argument("--from", dest="start_from", type=int, required=True, help="first start")
    p.add_argument("--to", dest="start_to", type=int, required=True, help="last start")
    p.add_argument("--cap", type=int, default=10**4, help="give up on a start after this many steps (default 10000)")
    p.add_argument("--jobs", type=int, default=1, help="parallel sweep workers")

    p = sub.add_parser("verify", help="check the interval engine against the naive oracle")
    add_spec_args(p)
    p.add_argument("--max", type=int, required=True, help="verify all positions up to this")
    p.add_argument("--c", type=int, default=None, help="convergence step bound")

    p = sub.add_parser("analyze", help="bottleneck/conducive profile and proven bound")
    add_spec_args(p)
    p.add_argument("--max", type=int, required=True, help="profile positions 0..max")

    return parser


def _make_spec(args) -> GameSpec:
    return GameSpec(subtractions=args.sub, divisors=args.div)


def _cmd_grundy(args) -> int:
    spec = _make_spec(args)
    values = grundy_fast_range(spec, args.pos, args.count, args.c)
    print(" ".join(str(v) for v in values))
    return 0


def _cmd_naive(args) -> int:
    spec = _make_spec(args)
    table = build_table(spec, args.max)
    if args.out is None:
        export_csv(table, sys.stdout.buffer)
        sys.stdout.buffer.flush()
    else:
        with open(args.out, "wb") as sink:
            export_csv(table, sink)
    return 0


def _cmd_converge(args) -> int:
    spec = _make_spec(args)
    if spec.divisors:
        needed = (args.start_to + spec.max_sub + args.cap) // min(spec.divisors) + 1
    else:
        needed = 1
    table = build_table(spec, needed)
    summary = measure_convergence_range(
        spec, args.start_from, args.start_to, table, args.cap, jobs=args.jobs
    )
    if not summary.converged:
        print("no convergence")
        print(
            f"start {summary.failed_start} did not converge within {summary.cap} steps",
            file=sys.stderr,
        )
        return 1
    print(f"max_steps {summary.max_steps}")
    return 0


def _cmd_verify(args) -> int:
    spec = _make_spec(args)
    mismatch = verify_against_naive(spec, args.max, args.c)
    if mismatch is not None:
        print(f"mismatch at n={mismatch}", file=sys.stderr)
        return 1
    print(f"fast and naive agree on 0..{args.max}")
    return 0


def _cmd_analyze(args) -> int:
    spec = _make_spec(args)
    subs = ",".join(str(s) for s in spec.subtractions)
    divs = ",".join(str(d) for d in spec.divisors)
    print(f"game sub={subs} div={divs} range 0..{args.max}")
    bn = bottleneck_residues(spec, args.max)
    total = sum(bn.values())
    residues = " ".join(f"{r}:{c}" for r, c in sorted(bn.items()))
    print(f"bottlenecks {total} residues {residues}")
    for d in spec.divisors:
        cn = conducive_residues(spec, d, args.max)
        total = sum(cn.values())
        residues = " ".join(f"{r}:{c}" for r, c in sorted(cn.items()))
        print(f"{d}-conducive {total} residues {residues}")
    if spec.subtractions == (1,):
        print(f"proven_bound {proven_bound(*spec.divisors)}")
    else:
        print("proven_bound n/a")
    return 0


_COMMANDS = {
    "grundy": _cmd_grundy,
    "naive": _cmd_naive,
    "converge": _cmd_converge,
    "verify": _cmd_verify,
    "analyze": _cmd_analyze,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except NoConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, IndexError, OverflowError, NotImplementedError, TableTooLargeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
