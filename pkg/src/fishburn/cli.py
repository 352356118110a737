"""Batch command line front end.

Subcommands: enumerate, convert, stats, distribution, verify.  Streams are
JSON lines (one object per line), distribution tables are CSV, everything
else is JSON.  Exit codes: 0 success, 1 verification failure, 2 usage or
validation error.  Output is byte-identical across runs for identical
arguments; nothing is randomized and timing is opt-in.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import jsonio
from .bijections import (
    crossfree_matching_to_table,
    matching_to_matrix,
    matching_to_poset,
    matching_to_table,
    matrix_to_matching_no_neighbor_crossing,
    matrix_to_matching_no_neighbor_nesting,
    permutation_to_table,
    poset_to_table,
    table_to_crossfree_matching,
    table_to_matching,
    table_to_permutation,
    table_to_poset,
    zero_one_matrix_to_matching,
)
from .enumeration import (
    GENERATORS,
    PREDICATES,
    distribution,
    filter_class,
    generate,
)
from .errors import FishburnError
from .statistics import VOCABULARY, stats_for
from .verify import REGISTRY, run_all, run_check

_MATRIX_PREIMAGES = {
    "no_neighbor_nesting": matrix_to_matching_no_neighbor_nesting,
    "no_neighbor_crossing": matrix_to_matching_no_neighbor_crossing,
    "lne0_and_rcr0": zero_one_matrix_to_matching,
}

# generator class (plural) -> statistics class
_STAT_CLASS = {
    "matchings": "matchings",
    "permutations": "permutations",
    "factorial_posets": "factorial_posets",
    "natural_posets": "natural_posets",
    "inversion_tables": "inversion_tables",
}

# singular CLI class -> statistics class
_STAT_CLASS_SINGULAR = {
    "matching": "matchings",
    "permutation": "permutations",
    "poset": "factorial_posets",
    "inversion_table": "inversion_tables",
}

# predicate family -> generator classes it applies to
_PREDICATE_FAMILY = {
    "matchings": {"matchings"},
    "posets": {"factorial_posets", "natural_posets"},
    "inversion_tables": {"inversion_tables"},
    "matrices": {"matrices"},
}


class UsageError(Exception):
    pass


def _die(message: str):
    print(f"error: {message}", file=sys.stderr)
    raise SystemExit(2)


def _filtered_stream(class_name: str, n: int, predicates: list[str]):
    stream = generate(class_name, n)
    for name in predicates:
        if name not in PREDICATES:
            _die(f"unknown predicate {name!r}")
        family = PREDICATES[name][0]
        if class_name not in _PREDICATE_FAMILY[family]:
            _die(f"predicate {name!r} applies to {family}, not {class_name}")
        stream = filter_class(stream, name)
    return stream


def _cmd_enumerate(args) -> int:
    if args.object_class not in GENERATORS:
        _die(f"unknown class {args.object_class!r} "
             f"(choose from {', '.join(sorted(GENERATORS))})")
    if args.n < 0:
        _die("n must be nonnegative")
    stream = _filtered_stream(args.object_class, args.n, args.filter)
    if args.count_only:
        print(sum(1 for _ in stream))
        return 0
    singular = jsonio.SINGULAR[args.object_class]
    for obj in stream:
        print(json.dumps(jsonio.encode(singular, obj)))
    return 0


def _convert_to_table(class_name: str, obj, via: str):
    if class_name == "inversion_table":
        return obj
    if class_name == "permutation":
        return permutation_to_table(obj)
    if class_name == "poset":
        return poset_to_table(obj)
    if class_name == "matching":
        if via == "no_left_crossing":
            return crossfree_matching_to_table(obj)
        return matching_to_table(obj)
    raise UsageError(f"cannot convert from {class_name!r}")


def _convert_from_table(class_name: str, w, via: str):
    if class_name == "inversion_table":
        return w
    if class_name == "permutation":
        return table_to_permutation(w)
    if class_name == "poset":
        return table_to_poset(w)
    if class_name == "matching":
        if via == "no_left_crossing":
            return table_to_crossfree_matching(w)
        return table_to_matching(w)
    raise UsageError(f"cannot convert to {class_name!r}")


def _cmd_convert(args) -> int:
    known = {"matching", "inversion_table", "permutation", "poset", "matrix"}
    if args.src not in known or args.dst not in known:
        _die(f"classes must be among {', '.join(sorted(known))}")
    try:
        data = json.loads(args.object)
    except json.JSONDecodeError as exc:
        _die(f"object is not valid JSON: {exc}")
    try:
        obj = jsonio.decode(args.src, data)
        if args.dst == "matrix":
            if args.src == "matrix":
                result = obj
            elif args.src == "matching":
                result = matching_to_matrix(obj)
            else:
                w = _convert_to_table(args.src, obj, args.via)
                result = matching_to_matrix(_convert_from_table("matching", w, args.via))
        elif args.src == "matrix":
            m = _MATRIX_PREIMAGES[args.preimage](obj)
            if args.dst == "matching":
                result = m
            elif args.dst == "poset":
                result = matching_to_poset(m)
            else:
                result = _convert_from_table(args.dst, matching_to_table(m), args.via)
        else:
            w = _convert_to_table(args.src, obj, args.via)
            result = _convert_from_table(args.dst, w, args.via)
    except UsageError as exc:
        _die(str(exc))
    except FishburnError as exc:
        _die(f"{type(exc).__name__}: {exc}")
    print(json.dumps(jsonio.encode(args.dst, result)))
    return 0


def _cmd_stats(args) -> int:
    if args.object_class not in _STAT_CLASS_SINGULAR:
        _die(f"classes with statistics: {', '.join(sorted(_STAT_CLASS_SINGULAR))}")
    try:
        data = json.loads(args.object)
    except json.JSONDecodeError as exc:
        _die(f"object is not valid JSON: {exc}")
    stat_class = _STAT_CLASS_SINGULAR[args.object_class]
    names = args.stats.split(",") if args.stats else None
    try:
        obj = jsonio.decode(args.object_class, data)
        record = stats_for(stat_class, obj, names)
    except FishburnError as exc:
        _die(f"{type(exc).__name__}: {exc}")
    print(json.dumps(record))
    return 0


def _cmd_distribution(args) -> int:
    if args.object_class not in _STAT_CLASS:
        _die(f"classes with statistics: {', '.join(sorted(_STAT_CLASS))}")
    if args.n < 0:
        _die("n must be nonnegative")
    names = [s for s in args.stats.split(",") if s]
    if not names:
        _die("--stats requires at least one statistic name")
    stat_class = _STAT_CLASS[args.object_class]
    for name in names:
        if name not in VOCABULARY[stat_class]:
            _die(f"{name!r} is not a {stat_class} statistic "
                 f"(available: {', '.join(VOCABULARY[stat_class])})")
    stream = _filtered_stream(args.object_class, args.n, args.filter)
    try:
        table = distribution(stream, stat_class, names)
    except FishburnError as exc:
        _die(f"{type(exc).__name__}: {exc}")
    sys.stdout.write(table.to_csv())
    return 0


def _cmd_verify(args) -> int:
    if args.all and args.checks:
        _die("give check names or --all, not both")
    if not args.all and not args.checks:
        _die("give at least one check name, or --all")
    for name in args.checks:
        if name not in REGISTRY:
            _die(f"unknown check {name!r} (see `fishburn verify --list`)")
    if args.all:
        reports = run_all(args.n_max)
    else:
        reports = [run_check(name, args.n_max) for name in args.checks]
    if args.json:
        for report in reports:
            print(json.dumps(report.to_json(timing=args.timing)))
    else:
        width = max(len(r.check) for r in reports)
        for r in reports:
            line = (f"{r.check:<{width}}  {r.kind:<11}  n<={r.n_max}  "
                    f"{r.verdict.upper():<4}  {r.elapsed * 1000:8.1f} ms")
            if r.detail:
                line += f"  [{r.detail}]"
            print(line)
            if r.witness is not None:
                print(f"{'':<{width}}  witness: {json.dumps(r.witness)}")
        failed = sum(r.verdict == "fail" for r in reports)
        print(f"{len(reports) - failed}/{len(reports)} checks passed")
    return 1 if any(r.verdict == "fail" for r in reports) else 0


def _cmd_verify_list(_args) -> int:
    width = max(len(name) for name in REGISTRY)
    for name, (kind, default_n, _) in REGISTRY.items():
        print(f"{name:<{width}}  {kind:<11}  default n<={default_n}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fishburn",
        description="Matchings, factorial posets, inversion tables, triangular "
                    "matrices: enumeration, bijections, statistics and "
                    "exhaustive verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="stream a class as JSON lines")
    p.add_argument("object_class", metavar="class")
    p.add_argument("n", type=int)
    p.add_argument("--filter", action="append", default=[],
                   metavar="PREDICATE", help="may be repeated")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("convert", help="map one object to another class")
    p.add_argument("src", metavar="from")
    p.add_argument("dst", metavar="to")
    p.add_argument("object", help="JSON encoding of the source object")
    p.add_argument("--via", choices=["no_left_nesting", "no_left_crossing"],
                   default="no_left_nesting",
                   help="which insertion bijection links tables and matchings")
    p.add_argument("--preimage", choices=sorted(_MATRIX_PREIMAGES),
                   default="no_neighbor_nesting",
                   help="which restricted preimage to take from a matrix")
    p.set_defaults(fn=_cmd_convert)

    p = sub.add_parser("stats", help="named statistics of one object")
    p.add_argument("object_class", metavar="class")
    p.add_argument("object", help="JSON encoding of the object")
    p.add_argument("--stats", default=None, metavar="NAMES",
                   help="comma separated; defaults to all")
    p.set_defaults(fn=_cmd_stats)

    p = sub.add_parser("distribution", help="tally statistic tuples over a class")
    p.add_argument("object_class", metavar="class")
    p.add_argument("n", type=int)
    p.add_argument("--stats", required=True, metavar="NAMES", help="comma separated")
    p.add_argument("--filter", action="append", default=[], metavar="PREDICATE")
    p.set_defaults(fn=_cmd_distribution)

    p = sub.add_parser("verify", help="run registered checks")
    p.add_argument("checks", nargs="*", metavar="CHECK")
    p.add_argument("--all", action="store_true", help="run the whole registry")
    p.add_argument("--n-max", type=int, default=None,
                   help="override each check's default size limit")
    p.add_argument("--json", action="store_true", help="one JSON report per line")
    p.add_argument("--timing", action="store_true",
                   help="include elapsed_ms in JSON reports (nondeterministic)")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("checks", help="list registered checks")
    p.set_defaults(fn=_cmd_verify_list)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except FishburnError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
