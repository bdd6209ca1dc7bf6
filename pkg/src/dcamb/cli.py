"""dcamb command line: build, verify, compare and export doubled Cambrian frameworks."""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from pathlib import Path

from dcamb.errors import InvariantViolation
from dcamb.export import (
    framework_from_json,
    framework_to_dot,
    framework_to_json,
    framework_to_svg,
    oracle_to_dot,
    oracle_to_json,
)
from dcamb.fan import DEFAULT_SEED, check_fan, check_simplicial
from dcamb.framework import LabeledQuasiGraph, build
from dcamb.oracle import SeedLimitExceeded, compare, exchange_graph
from dcamb.verify import verify_all


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dcamb", description=__doc__)
    parser.add_argument("command", choices=["build", "verify", "compare", "export"])
    parser.add_argument("--n", type=int, help="number of vertices of the oriented cycle (n >= 3)")
    parser.add_argument("--out", type=Path, help="output file (default: stdout)")
    parser.add_argument("--from", dest="source", type=Path, help="read a framework JSON document instead of building")
    parser.add_argument("--format", choices=["dot", "json", "svg"], default="json")
    parser.add_argument("--samples", type=_positive, default=10000, help="sample points for the fan check")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"sampling seed (default {DEFAULT_SEED})")
    parser.add_argument("--oracle", action="store_true", help="export the mutation exchange graph instead")
    return parser


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def _load(args, parser) -> LabeledQuasiGraph:
    if args.source is not None:
        try:
            return framework_from_json(args.source.read_text())
        except (OSError, ValueError, KeyError, TypeError) as exc:
            parser.error(f"cannot read {args.source}: {exc}")
    return build(args.n)


def cmd_build(args) -> int:
    g = build(args.n)
    _emit(framework_to_json(g), args.out)
    sides = Counter(v.side for v in g.vertices.values())
    print(
        f"DCamb_{g.n}: {len(g.vertices)} vertices "
        f"({sides['omega']} Omega-only, {sides['neg']} (-Omega)-only, {sides['glued']} glued), {len(g.edges)} edges",
        file=sys.stderr,
    )
    return 0


def cmd_verify(args, parser) -> int:
    g = _load(args, parser)
    report = verify_all(g) + check_simplicial(g)
    fan = check_fan(g, samples=args.samples, seed=args.seed)
    for line in report.lines() + fan.lines():
        print(line)
    if args.out is not None:
        data = json.loads(report.to_json())
        data["fan"] = {
            "passed": fan.passed,
            "facets_checked": fan.facets_checked,
            "unpaired": fan.unpaired,
            "samples": fan.samples,
            "uncovered": [[str(x) for x in p] for p in fan.uncovered],
            "multiply_covered": [[str(x) for x in p] for p in fan.multiply_covered],
        }
        args.out.write_text(json.dumps(data, indent=2, default=list) + "\n")
    return 0 if report.passed and fan.passed else 1


def cmd_compare(args) -> int:
    g = build(args.n)
    oracle = exchange_graph(args.n)
    result = compare(g, oracle)
    print(result.summary())
    if args.out is not None:
        args.out.write_text(oracle_to_json(oracle))
    return 0 if result.passed else 1


def cmd_export(args, parser) -> int:
    if args.oracle:
        if args.format == "svg":
            parser.error("the exchange graph exports as json or dot only")
        oracle = exchange_graph(args.n)
        _emit(oracle_to_dot(oracle) if args.format == "dot" else oracle_to_json(oracle), args.out)
        return 0
    if args.format == "svg" and args.source is None and args.n != 3:
        parser.error("--format svg is only available for --n 3")
    g = _load(args, parser)
    if args.format == "svg" and g.n != 3:
        parser.error("--format svg is only available for n = 3")
    writer = {"dot": framework_to_dot, "json": framework_to_json, "svg": framework_to_svg}[args.format]
    _emit(writer(g), args.out)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    if args.source is not None and args.command in ("verify", "export") and not args.oracle:
        args.n = args.n or 0
    elif args.n is None:
        parser.error("--n is required")
    if args.source is None and args.n < 3:
        parser.error(f"--n must be at least 3, got {args.n}")
    try:
        if args.command == "build":
            return cmd_build(args)
        if args.command == "verify":
            return cmd_verify(args, parser)
        if args.command == "compare":
            return cmd_compare(args)
        return cmd_export(args, parser)
    except (InvariantViolation, SeedLimitExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
