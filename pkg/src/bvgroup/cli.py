"""
Command-line interface: ``bvgroup <subcommand> ...``.

Element arguments are generator words (``"f0 B1 a2"``; uppercase means
inverse, empty string is the identity) or ``@path`` for a file in the
three-line element format.

Exit codes: 0 success or equal, 1 different or secrets mismatch, 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import csv
import sys
from collections import Counter

from . import bench
from .aag import KexParams, format_transcript, run_session
from .bvcore import (
    BVElement,
    ElementParseError,
    check_relations,
    equals,
    evaluate_word,
    format_element,
    invert,
    multiply,
    parse_element,
    parse_generator_word,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    pass


def load_element(arg: str) -> BVElement:
    """Generator word, or ``@path`` for an element file."""
    if arg.startswith("@"):
        path = arg[1:]
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"{path}: {exc.strerror}") from None
        try:
            return parse_element(text)
        except ElementParseError as exc:
            raise InputError(f"{path}: {exc}") from None
    try:
        return evaluate_word(parse_generator_word(arg))
    except ElementParseError as exc:
        raise InputError(f"word {arg!r}: {exc}") from None


def _cmd_nf(args) -> int:
    print(format_element(load_element(args.input)))
    return EXIT_OK


def _cmd_mul(args) -> int:
    acc = load_element(args.inputs[0])
    for x in args.inputs[1:]:
        acc = multiply(acc, load_element(x))
    print(format_element(acc))
    return EXIT_OK


def _cmd_inv(args) -> int:
    print(format_element(invert(load_element(args.input))))
    return EXIT_OK


def _cmd_eq(args) -> int:
    same = equals(load_element(args.a), load_element(args.b))
    print("equal" if same else "different")
    return EXIT_OK if same else EXIT_NEGATIVE


def _cmd_relcheck(args) -> int:
    report = check_relations(args.max_index)
    total, passed = Counter(), Counter()
    for inst in report:
        total[inst.family] += 1
        passed[inst.family] += bool(inst.passed)
    for fam in sorted(total):
        print(f"family {fam:2d}: {passed[fam]}/{total[fam]} pass")
    failures = [inst for inst in report if not inst.passed]
    for inst in failures:
        print(inst)
    print(f"total: {len(report) - len(failures)}/{len(report)} pass")
    return EXIT_OK if not failures else EXIT_NEGATIVE


def _cmd_aag(args) -> int:
    params = KexParams(args.alice_set, args.alice_len, args.bob_set, args.bob_len, args.gen_len, args.seed)
    session = run_session(params)
    print(format_transcript(session))
    return EXIT_OK if session.secrets_match else EXIT_NEGATIVE


def _cmd_bench(args) -> int:
    rows = bench.run_benchmark(args.sizes, args.trials, args.mode, args.seed)
    if args.csv:
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["size", "mode", "trials", "median_micros"])
        for r in rows:
            w.writerow([r.size, r.mode, r.trials, f"{r.median_micros:.1f}"])
    else:
        print(f"{'size':>6} {'bits':>10} {'median_us':>12}")
        for r in rows:
            print(f"{r.size:>6} {r.median_bits:>10.0f} {r.median_micros:>12.1f}")
        if len(rows) >= 2:
            print(f"log-log slope vs input bits: {bench.loglog_slope(rows):.3f}")
    return EXIT_OK


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {v}")
    return v


def _non_negative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {v}")
    return v


def _index_at_least_2(text: str) -> int:
    v = int(text)
    if v < 2:
        raise argparse.ArgumentTypeError(f"max index must be at least 2, got {v}")
    return v


def _size_list(text: str) -> list[int]:
    try:
        return [_positive(s) for s in text.replace(",", " ").split()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bvgroup", description="Exact computation in the braided Thompson group BV.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("nf", help="print the normal form of an element")
    s.add_argument("input")
    s.set_defaults(func=_cmd_nf)

    s = sub.add_parser("mul", help="print the product of elements")
    s.add_argument("inputs", nargs="+")
    s.set_defaults(func=_cmd_mul)

    s = sub.add_parser("inv", help="print the inverse of an element")
    s.add_argument("input")
    s.set_defaults(func=_cmd_inv)

    s = sub.add_parser("eq", help="test two elements for equality")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=_cmd_eq)

    s = sub.add_parser("relcheck", help="verify the defining relations")
    s.add_argument("--max-index", type=_index_at_least_2, default=3)
    s.set_defaults(func=_cmd_relcheck)

    s = sub.add_parser("aag", help="run one simulated key exchange")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--alice-set", type=_non_negative, default=4)
    s.add_argument("--alice-len", type=_non_negative, default=6)
    s.add_argument("--bob-set", type=_non_negative, default=4)
    s.add_argument("--bob-len", type=_non_negative, default=6)
    s.add_argument("--gen-len", type=_non_negative, default=8)
    s.set_defaults(func=_cmd_aag)

    s = sub.add_parser("bench", help="time multiplication on random elements")
    s.add_argument("--sizes", type=_size_list, default=[16, 32, 64])
    s.add_argument("--trials", type=_positive, default=5)
    s.add_argument("--mode", choices=("nf", "fast"), default="nf")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--csv", action="store_true", help="CSV output: size,mode,trials,median_micros")
    s.set_defaults(func=_cmd_bench)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        # invalid parameter combinations, e.g. a key over an empty set
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
