"""Command-line front end: ``quintic factor`` and ``quintic bench``.

Exit status is 0 on success, 2 for malformed input, 3 when an internal
check fails.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys

from .bench import ENGINES, bench_semiprime, run_engine
from .driver import DEFAULT_FALLBACK_THRESHOLD, Factorization, choose_params, factor
from .stats import RunStats

__all__ = ["main", "RunStats"]

log = logging.getLogger("quintic")

EXIT_OK, EXIT_USAGE, EXIT_INTERNAL = 0, 2, 3


class UsageError(Exception):
    pass


def parse_int(text: str) -> int:
    """Decimal or ``0x``-prefixed hexadecimal integer."""
    t = text.strip().replace("_", "")
    try:
        if t.lower().startswith("0x"):
            return int(t[2:], 16)
        if not t.isdigit():
            raise ValueError
        return int(t, 10)
    except ValueError:
        raise UsageError(f"not an integer: {text!r}") from None


def parse_bits(text: str) -> range:
    lo, sep, hi = text.partition("..")
    if not sep:
        lo = hi = text
    return range(parse_int(lo), parse_int(hi) + 1)


def _verify(result: Factorization, fallback_threshold: int) -> None:
    # Re-multiply, then re-prove every reported prime with a fresh pipeline run.
    if result.product() != result.n:
        raise AssertionError(f"factors of {result.n} multiply to {result.product()}")
    for p, _ in result.factors:
        again = factor(p, fallback_threshold=fallback_threshold)
        if again.factors != ((p, 1),):
            raise AssertionError(f"reported factor {p} is not prime: {again}")


def cmd_factor(args: argparse.Namespace) -> int:
    n = parse_int(args.n)
    if n < 2:
        raise UsageError(f"N must be >= 2, got {n}")
    for name in ("m0", "smooth_bound", "fallback_threshold"):
        value = getattr(args, name)
        if value is not None and value < (1 if name == "m0" else 0):
            raise UsageError(f"--{name.replace('_', '-')} out of range: {value}")
    threshold = DEFAULT_FALLBACK_THRESHOLD if args.fallback_threshold is None else args.fallback_threshold
    if args.threads and args.threads > 1:
        log.info("--threads %d requested; stages run sequentially", args.threads)
    stats = RunStats()
    result = factor(n, stats, m0=args.m0, smooth_bound=args.smooth_bound, fallback_threshold=threshold)
    if args.verify:
        _verify(result, threshold)
    params = choose_params(n, m0=args.m0, smooth_bound=args.smooth_bound)
    if args.json:
        report = {
            "n": str(n),
            "factors": [[str(p), e] for p, e in result.factors],
            "stats": stats.as_dict(),
            "params": params.as_dict(),
        }
        print(json.dumps(report, separators=(",", ":")))
    else:
        print(result)
        if args.stats:
            for key, value in stats.as_dict().items():
                print(f"  {key}: {value}")
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    engines = [e.strip() for e in args.engines.split(",") if e.strip()]
    unknown = [e for e in engines if e not in ENGINES]
    if unknown:
        raise UsageError(f"unknown engine(s): {', '.join(unknown)}; choose from {', '.join(ENGINES)}")
    bits = parse_bits(args.bits)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["bits", "engine", "modmul_count", "wall_time_ms"])
    for b in bits:
        n, p, _ = bench_semiprime(b, args.seed)
        for engine in engines:
            stats = RunStats()
            found = run_engine(engine, n, stats)
            if found != p:
                raise AssertionError(f"{engine} returned {found} for {n}, expected {p}")
            writer.writerow([b, engine, stats.modmul_count, f"{stats.wall_time_ms:.3f}"])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quintic", description="Deterministic integer factorisation.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log diagnostics to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    pf = sub.add_parser("factor", help="factor an integer into primes")
    pf.add_argument("n", help="integer >= 2, decimal or 0x-hex")
    pf.add_argument("--json", action="store_true", help="emit a JSON report")
    pf.add_argument("--stats", action="store_true", help="print operation counts")
    pf.add_argument("--m0", type=int, help="override the window parameter m0")
    pf.add_argument("--smooth-bound", type=int, help="override the sieving prime bound B")
    pf.add_argument(
        "--fallback-threshold",
        type=int,
        help=f"route inputs below this to Pollard-Strassen (default 2**{DEFAULT_FALLBACK_THRESHOLD.bit_length() - 1})",
    )
    pf.add_argument("--verify", action="store_true", help="re-multiply and re-prove every reported prime")
    pf.add_argument("--threads", type=int, default=1, help="parallelism hint (stages currently run sequentially)")
    pf.set_defaults(func=cmd_factor)

    pb = sub.add_parser("bench", help="CSV cost comparison on generated semiprimes")
    pb.add_argument("--bits", required=True, help="bit sizes, e.g. 40..56")
    pb.add_argument("--engines", default=",".join(ENGINES), help="comma list of " + ", ".join(ENGINES))
    pb.add_argument("--seed", type=int, default=0)
    pb.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"quintic: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (AssertionError, ArithmeticError, RuntimeError) as exc:
        print(f"quintic: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ValueError as exc:
        print(f"quintic: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
