"""Command line interface: ``bimehler {hermite,enumerate,verify,decompose,case-series}``.

Exit codes: 0 success, 1 verification failure or disagreement, 2 usage or
malformed input, 3 enumeration limit exceeded, 4 profile invariant violated.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from typing import List, Optional, TextIO

from . import __version__
from .hermite import hermite_pair_poly, hermite_poly
from .mehler import verify
from .profiles import (
    CASE_DESCRIPTIONS,
    CASE_TAGS,
    FULL_LIMIT,
    MARITAL_LIMIT,
    LimitExceededError,
    Profile,
    ProfileError,
    component_weight,
    case_series,
    decompose,
    enumerate_full,
    enumerate_marital,
    profile_weight,
    random_profile,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3
EXIT_INVARIANT = 4


@dataclass
class OutputConfig:
    format: str = "text"
    seed: Optional[int] = None
    limit: Optional[int] = None


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _emit(out: TextIO, config: OutputConfig, payload: dict, text: str) -> None:
    if config.format == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write(text + "\n")


def cmd_hermite(m: int, n: int, config: OutputConfig, out: TextIO = sys.stdout) -> int:
    poly = hermite_poly(m, n)
    _emit(out, config, {"m": m, "n": n, "poly": str(poly)}, str(poly))
    return EXIT_OK


def cmd_enumerate(m: int, n: int, full: bool, config: OutputConfig, out: TextIO = sys.stdout) -> int:
    if full:
        limit = FULL_LIMIT if config.limit is None else config.limit
        enumerated, formula = enumerate_full(m, n, limit), hermite_pair_poly(m, n)
    else:
        limit = MARITAL_LIMIT if config.limit is None else config.limit
        enumerated, formula = enumerate_marital(m, n, limit), hermite_poly(m, n)
    agrees = enumerated == formula
    if agrees:
        text = f"{enumerated}  AGREES with formula"
    else:
        text = f"{enumerated}  DISAGREES with formula\n  enumerated: {enumerated}\n  formula:    {formula}"
    payload = {
        "m": m,
        "n": n,
        "full": full,
        "enumerated": str(enumerated),
        "formula": str(formula),
        "agrees": agrees,
    }
    _emit(out, config, payload, text)
    return EXIT_OK if agrees else EXIT_FAIL


def cmd_verify(max_m: int, max_n: int, config: OutputConfig, out: TextIO = sys.stdout) -> int:
    report = verify(max_m, max_n)
    lines = [report.summary()]
    for mm in report.mismatches:
        lines.append(f"  ({mm.m},{mm.n}) {mm.forms}: {mm.expected}  !=  {mm.actual}")
    _emit(out, config, report.to_dict(), "\n".join(lines))
    return EXIT_OK if report.passed else EXIT_FAIL


def _describe(c) -> str:
    weight = component_weight(c)
    if c.case == "I":
        return f"Case I (man {c.men[0]}), weight {weight}"
    if c.case == "Ia":
        return f"Case Ia (woman {c.women[0]}), weight {weight}"
    men = ", ".join(map(str, c.men))
    women = ", ".join(map(str, c.women))
    return f"Case {c.case}, k={c.k}, weight {weight}  (men {men}; women {women}: {CASE_DESCRIPTIONS[c.case]})"


def cmd_decompose(profile: Profile, config: OutputConfig, out: TextIO = sys.stdout) -> int:
    components = decompose(profile)
    product = profile_weight(Profile(0, 0))
    for c in components:
        product = product * component_weight(c)
    weight = profile_weight(profile)
    consistent = product == weight
    lines = [_describe(c) for c in components]
    lines.append(
        f"product of component weights {product} {'==' if consistent else '!='} profile weight {weight}"
    )
    payload = {
        "profile": profile.to_dict(),
        "components": [c.to_dict() for c in components],
        "product_weight": str(product),
        "profile_weight": str(weight),
        "consistent": consistent,
    }
    _emit(out, config, payload, "\n".join(lines))
    return EXIT_OK if consistent else EXIT_FAIL


def cmd_case_series(tag: str, max_m: int, max_n: int, config: OutputConfig, out: TextIO = sys.stdout) -> int:
    series = case_series(tag, max_m, max_n)
    rows = list(series.nonzero_cells())
    payload = {
        "tag": tag,
        "max_m": max_m,
        "max_n": max_n,
        "coefficients": [{"m": m, "n": n, "poly": str(p)} for m, n, p in rows],
    }
    text = "\n".join(f"({m},{n}): {p}" for m, n, p in rows) or "(no nonzero coefficients)"
    _emit(out, config, payload, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(
        prog="bimehler",
        description="Exact two-sex exponential generating functions and the straight Hermite Mehler identity.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hermite", parents=[common], help="print H_{m,n}(x)")
    p.add_argument("m", type=_nonneg_int)
    p.add_argument("n", type=_nonneg_int)

    p = sub.add_parser("enumerate", parents=[common], help="brute-force a weight enumerator and compare with the formula")
    p.add_argument("m", type=_nonneg_int)
    p.add_argument("n", type=_nonneg_int)
    p.add_argument("--full", action="store_true", help="marriages and affairs (default: marriages only)")
    p.add_argument("--limit", type=_nonneg_int, help="override the enumeration size limit")

    p = sub.add_parser("verify", parents=[common], help="check the three Mehler series agree")
    p.add_argument("--max-m", type=_nonneg_int, required=True)
    p.add_argument("--max-n", type=_nonneg_int, required=True)

    p = sub.add_parser("decompose", parents=[common], help="split a profile into connected components")
    p.add_argument("--file", help="profile JSON file (default: read stdin)")
    p.add_argument("--random", action="store_true", help="decompose a uniformly random profile instead")
    p.add_argument("--seed", type=_nonneg_int, help="RNG seed for --random")
    p.add_argument("--max-m", type=_nonneg_int, help="number of men for --random")
    p.add_argument("--max-n", type=_nonneg_int, help="number of women for --random")

    p = sub.add_parser("case-series", parents=[common], help="list the labelled coefficients of one component series")
    p.add_argument("tag", help=f"one of {', '.join(CASE_TAGS)}")
    p.add_argument("--max-m", type=_nonneg_int, default=6)
    p.add_argument("--max-n", type=_nonneg_int, default=6)

    return parser


def _load_profile(args, parser, stdin: TextIO) -> Profile:
    if args.random:
        if args.seed is None or args.max_m is None or args.max_n is None:
            parser.error("decompose --random needs --seed, --max-m and --max-n")
        return random_profile(args.max_m, args.max_n, random.Random(args.seed))
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            data = json.load(fh)
    else:
        data = json.load(stdin)
    return Profile.from_dict(data)


def main(argv: Optional[List[str]] = None, stdout: TextIO = sys.stdout, stdin: TextIO = sys.stdin) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    config = OutputConfig(
        format=args.format,
        seed=getattr(args, "seed", None),
        limit=getattr(args, "limit", None),
    )
    try:
        if args.command == "hermite":
            return cmd_hermite(args.m, args.n, config, stdout)
        if args.command == "enumerate":
            return cmd_enumerate(args.m, args.n, args.full, config, stdout)
        if args.command == "verify":
            return cmd_verify(args.max_m, args.max_n, config, stdout)
        if args.command == "case-series":
            if args.tag not in CASE_TAGS:
                print(f"bimehler case-series: unknown case {args.tag!r}; expected one of {', '.join(CASE_TAGS)}", file=sys.stderr)
                return EXIT_USAGE
            return cmd_case_series(args.tag, args.max_m, args.max_n, config, stdout)
        if args.command == "decompose":
            try:
                profile = _load_profile(args, parser, stdin)
            except SystemExit as exc:
                return exc.code if isinstance(exc.code, int) else EXIT_USAGE
            except (json.JSONDecodeError, OSError) as exc:
                print(f"bimehler decompose: cannot read profile: {exc}", file=sys.stderr)
                return EXIT_USAGE
            return cmd_decompose(profile, config, stdout)
    except LimitExceededError as exc:
        print(f"bimehler: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except ProfileError as exc:
        print(f"bimehler: invalid profile: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    parser.error(f"unknown command {args.command!r}")
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
