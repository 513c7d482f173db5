"""Command-line interface: ``parfrac decompose | verify | bench``."""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .bench import ALGORITHMS, DEFAULT_PRIME, fit_slopes, mean_metric, run_bench, write_csv
from .exceptions import ParfracError, ParseError
from .expansion import PartialFractionExpansion
from .fields import field_from_name
from .formatting import STYLES, expansion_from_json, format_expansion
from .full_expansion import full_pfd, verify_full
from .oracle import verify_expansion
from .parsing import MODES, InputSpec, parse_expansion_text, parse_expression
from .pfd_linear import GROUPING, POLE_SERIES, pfd_split
from .pfd_quotient import pfd_general, ppfraction

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_MATH = 3

COMMANDS = ("decompose", "verify", "bench")


def _read_source(arg: str) -> str:
    return sys.stdin.read() if arg == "-" else arg


def _field(name: str):
    try:
        return field_from_name(name)
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def decompose(spec: InputSpec, parallel: bool = False, strategy: str = GROUPING):
    """Run the algorithm selected by ``spec.mode``."""
    N, den = spec.numerator, spec.denominator
    if spec.mode == "full":
        return full_pfd(N, den, parallel=parallel)
    if spec.mode == "ppfrac":
        return ppfraction(N, den)
    split = den.as_split()
    if split is not None:
        return pfd_split(N, split, parallel=parallel, strategy=strategy)
    return pfd_general(N, den, parallel=parallel)


def check(result, spec: InputSpec) -> bool:
    """Exact verification of a decomposition against its input."""
    if spec.mode == "full":
        return verify_full(result, spec.numerator, spec.denominator)
    # ppfrac terms sit over whole prime powers, which recombine the same way
    return verify_expansion(result, spec.numerator, spec.denominator)


def _load_expansion(text: str, spec: InputSpec) -> PartialFractionExpansion:
    if text.lstrip().startswith("{"):
        return expansion_from_json(text, spec.field)
    return parse_expansion_text(text, spec.field)


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("expression", help='rational function, e.g. "t/((t+1)^2*(t-2))"; "-" reads stdin')
    p.add_argument("--field", default="rational", help="rational or fp:<prime> (default: rational)")
    p.add_argument("--mode", choices=MODES, default="pfd")
    p.add_argument("--parallel", action="store_true", help="one task per denominator factor")
    p.add_argument(
        "--group-strategy", choices=(GROUPING, POLE_SERIES), default=GROUPING,
        help="cofactor series construction for split denominators",
    )


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="parfrac", description="Exact partial fraction decomposition.")
    sub = ap.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decompose", help="print the expansion of an expression")
    _add_common(d)
    d.add_argument("--format", choices=STYLES, default="text")
    d.add_argument("--verify", action="store_true", help="also check the result exactly (exit 1 on mismatch)")

    v = sub.add_parser("verify", help="recombine an expansion and compare with the input")
    _add_common(v)
    v.add_argument("--expansion", metavar="FILE", help="text or JSON expansion to check ('-' for stdin); "
                   "defaults to the freshly computed one")

    b = sub.add_parser("bench", help="scaling benchmark over F_p, CSV on stdout")
    b.add_argument("--sizes", default="64,128,256,512", help="comma-separated M values")
    b.add_argument("--trials", type=int, default=3)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    b.add_argument("--algorithms", default=",".join(ALGORITHMS))
    b.add_argument("--output", metavar="FILE", help="write CSV here instead of stdout")
    return ap


def _normalise_argv(argv: List[str]) -> List[str]:
    # "--bench ..." is accepted as an alias for the bench subcommand, and a
    # bare expression for decompose
    if argv and argv[0] == "--bench":
        return ["bench"] + argv[1:]
    if argv and argv[0] not in COMMANDS and not argv[0].startswith("-"):
        return ["decompose"] + argv
    if "--bench" in argv:
        rest = [a for a in argv if a != "--bench"]
        return ["bench"] + rest
    return argv


def cmd_decompose(args, out, err) -> int:
    spec = parse_expression(_read_source(args.expression), _field(args.field), args.mode)
    result = decompose(spec, args.parallel, args.group_strategy)
    print(format_expansion(result, args.format), file=out)
    if args.verify:
        ok = check(result, spec)
        print("OK" if ok else "MISMATCH", file=err)
        return EXIT_OK if ok else EXIT_MISMATCH
    return EXIT_OK


def cmd_verify(args, out, err) -> int:
    spec = parse_expression(_read_source(args.expression), _field(args.field), args.mode)
    if args.expansion:
        if args.mode != "pfd":
            raise ParseError("--expansion is only supported with --mode pfd")
        if args.expansion == "-":
            text = sys.stdin.read()
        else:
            with open(args.expansion, encoding="utf-8") as fh:
                text = fh.read()
        result = _load_expansion(text, spec)
    else:
        result = decompose(spec, args.parallel, args.group_strategy)
    ok = check(result, spec)
    print("OK" if ok else "MISMATCH", file=out)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_bench(args, out, err) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    except ValueError:
        raise ParseError(f"bad --sizes {args.sizes!r}") from None
    algorithms = [a.strip() for a in args.algorithms.split(",") if a.strip()]
    for a in algorithms:
        if a not in ALGORITHMS:
            raise ParseError(f"unknown algorithm {a!r}")
    if args.trials < 1 or any(m < 1 for m in sizes):
        raise ParseError("sizes and trials must be positive")
    records = run_bench(sizes, args.trials, args.seed, args.prime, algorithms)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            write_csv(records, fh)
    else:
        write_csv(records, out)
    for alg, s in fit_slopes(records).items():
        print(f"slope {alg} field_muls {s:.3f}", file=err)
    for alg, s in fit_slopes(records, "wall_ns").items():
        print(f"slope {alg} wall_ns {s:.3f}", file=err)
    if "classical" in algorithms and "fast_split" in algorithms:
        M = max(sizes)
        ratio = mean_metric(records, "classical", M) / mean_metric(records, "fast_split", M)
        print(f"wall ratio classical/fast_split at M={M}: {ratio:.1f}", file=err)
    return EXIT_OK


def main(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = _normalise_argv(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler = {"decompose": cmd_decompose, "verify": cmd_verify, "bench": cmd_bench}[args.command]
    try:
        return handler(args, out, err)
    except ParseError as exc:
        print(f"parfrac: parse error: {exc}", file=err)
        return EXIT_USAGE
    except OSError as exc:
        print(f"parfrac: {exc}", file=err)
        return EXIT_USAGE
    except (ParfracError, ValueError, ArithmeticError) as exc:
        print(f"parfrac: error: {exc}", file=err)
        return EXIT_MATH


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
