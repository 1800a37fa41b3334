"""Command-line interface.

Exit codes: 0 success / all checks pass, 1 hard failure or computation
error, 2 usage or instance-file error.  `verify` writes line-delimited
JSON records to stdout (or --out) and a human summary table to stderr.
"""

from __future__ import annotations

import argparse
import sys

from .blockspace import DEFAULT_MAX_SPACE, format_vector, parse_vector
from .checks import (
    REGISTRY,
    hard_failures,
    summarize,
    to_jsonl,
    verify_suite,
)
from .constructions import (
    direct_sum_code,
    extended_code,
    plotkin_code,
    punctured_code,
    tensor_code,
)
from .errors import (
    ConsistencyError,
    FieldMismatch,
    LengthMismatch,
    NotAChain,
    NotLinear,
    OutOfRange,
    ParseError,
    SpaceTooLarge,
    TooFewWords,
    WeightMismatch,
)
from .instances import Instance, dumps_instance, load_instance

_DOMAIN_ERRORS = (
    FieldMismatch,
    LengthMismatch,
    NotAChain,
    NotLinear,
    OutOfRange,
    SpaceTooLarge,
    TooFewWords,
    WeightMismatch,
    ZeroDivisionError,
)


def _parse_max_space(text: str) -> int:
    if "^" in text:
        base, exp = text.split("^", 1)
        return int(base) ** int(exp)
    return int(text)


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="wpbcodes",
        description="Weighted poset block metrics: exact code parameters, "
        "constructions, and the verification suite.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_instance_cmd(name: str, help_text: str):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("instance", help="instance file (JSON)")
        p.add_argument(
            "--max-space",
            type=_parse_max_space,
            default=DEFAULT_MAX_SPACE,
            help="enumeration cap on q^n (accepts forms like 2^24)",
        )
        return p

    p = add_instance_cmd("weight", "weighted poset block weight of a vector")
    p.add_argument("--vector", "-v", required=True, help="comma-separated coordinates")

    p = add_instance_cmd("distance", "distance between two vectors")
    p.add_argument("-u", required=True, help="comma-separated coordinates")
    p.add_argument("-v", required=True, help="comma-separated coordinates")

    add_instance_cmd("mindist", "minimum distance of the code")
    add_instance_cmd("covering-radius", "covering radius (full-space scan)")
    add_instance_cmd("packing-radius", "packing radius (full-space scan)")
    add_instance_cmd("cosets", "coset leader table of a linear code")

    p = add_instance_cmd("ball", "metric ball around a center")
    p.add_argument("--center", required=True, help="comma-separated coordinates")
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--count-only", action="store_true", help="print only the size")

    p = sub.add_parser("construct", help="build a new code from instance files")
    p.add_argument(
        "construction",
        choices=["direct-sum", "plotkin", "extend", "puncture", "tensor"],
    )
    p.add_argument("inputs", nargs="+", help="one or two instance files")
    p.add_argument(
        "--order",
        choices=["disjoint", "linear", "cartesian", "lex"],
        help="poset combinator for two-input constructions",
    )
    p.add_argument("--block", type=int, help="block index for puncture")
    p.add_argument("--out", "-o", help="write the resulting instance here (default stdout)")

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument(
        "--suite",
        action="append",
        default=None,
        help="suite name, tag, or check id; repeatable (default: all)",
    )
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=None, help="units per suite")
    p.add_argument(
        "--q",
        type=int,
        choices=[2, 3, 5, 7],
        default=None,
        help="restrict instance generation to one field size",
    )
    p.add_argument("--max-space", type=_parse_max_space, default=DEFAULT_MAX_SPACE)
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--out", help="write JSONL reports here instead of stdout")
    p.add_argument("--list", action="store_true", help="list suites and exit")
    return ap


def _cmd_instance(args) -> int:
    space, code = load_instance(args.instance).build()
    cap = args.max_space
    if args.command == "weight":
        print(space.wpb_weight(parse_vector(args.vector)))
    elif args.command == "distance":
        print(space.wpb_distance(parse_vector(args.u), parse_vector(args.v)))
    elif args.command == "mindist":
        print(code.min_distance(cap))
    elif args.command == "covering-radius":
        print(code.covering_radius(cap))
    elif args.command == "packing-radius":
        print(code.packing_radius(cap))
    elif args.command == "cosets":
        table = code.coset_table(cap)
        print(f"cosets: {len(table.leaders)}")
        print(f"max leader weight (covering radius): {table.max_weight}")
        hist: dict[int, int] = {}
        for w in table.weights:
            hist[w] = hist.get(w, 0) + 1
        print("weight  cosets")
        for w in sorted(hist):
            print(f"{w:>6}  {hist[w]}")
        if len(table.leaders) <= 64:
            print("leaders:")
            for leader, w in zip(table.leaders, table.weights):
                print(f"  {format_vector(leader)}  (weight {w})")
    elif args.command == "ball":
        center = parse_vector(args.center)
        if args.count_only:
            print(space.ball_size(center, args.radius, cap))
        else:
            for v in space.ball(center, args.radius, cap):
                print(format_vector(v))
    return 0


def _cmd_construct(args) -> int:
    kind = args.construction
    two_input = kind in ("direct-sum", "plotkin", "tensor")
    if two_input and len(args.inputs) != 2:
        print(f"error: {kind} needs two instance files", file=sys.stderr)
        return 2
    if not two_input and len(args.inputs) != 1:
        print(f"error: {kind} needs one instance file", file=sys.stderr)
        return 2

    built = [load_instance(path).build() for path in args.inputs]
    codes = [code for _, code in built]

    if kind in ("direct-sum", "plotkin"):
        order = args.order or "disjoint"
        if order not in ("disjoint", "linear"):
            print(f"error: {kind} takes --order disjoint|linear", file=sys.stderr)
            return 2
        result = (direct_sum_code if kind == "direct-sum" else plotkin_code)(
            codes[0], codes[1], order
        )
    elif kind == "tensor":
        order = args.order or "cartesian"
        if order not in ("cartesian", "lex"):
            print("error: tensor takes --order cartesian|lex", file=sys.stderr)
            return 2
        result = tensor_code(codes[0], codes[1], order)
    elif kind == "extend":
        result = extended_code(codes[0])
    else:  # puncture
        if args.block is None:
            print("error: puncture needs --block", file=sys.stderr)
            return 2
        result = punctured_code(codes[0], args.block)

    text = dumps_instance(Instance.from_parts(result.space, result.code))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args) -> int:
    if args.list:
        for name, suite in REGISTRY.items():
            tags = ",".join(sorted(suite.tags))
            print(f"{name}  (tags: {tags}; {suite.default_trials} units)")
            for check in suite.checks:
                print(f"    {check}")
        return 0
    filters = args.suite if args.suite else ["all"]
    reports = verify_suite(
        filters,
        seed=args.seed,
        trials=args.trials,
        max_space=args.max_space,
        jobs=args.jobs,
        q=args.q,
    )
    text = to_jsonl(reports)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(summarize(reports), file=sys.stderr)
    return 1 if hard_failures(reports) else 0


def main(argv: list[str] | None = None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        if args.command == "construct":
            return _cmd_construct(args)
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_instance(args)
    except (ParseError, ConsistencyError, FileNotFoundError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except _DOMAIN_ERRORS as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except Exception as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
