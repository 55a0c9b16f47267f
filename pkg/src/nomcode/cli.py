"""Command line front end: codecs, enumerations, invariant suites, DOT trees.

Exit codes: 0 success, 1 bad input or usage, 2 failed verification,
3 refused size bound.  Every output is deterministic; there is no
randomness to seed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import avoidance, checks, codec, forest, ndperm, perms, sef

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_VERIFY_FAILED = 2
EXIT_BOUND = 3

# factorial-sized streams and pattern filters stop at 10, Catalan-sized at 14
KIND_BOUNDS = {
    "sef": 10,
    "avoiders": 10,
    "ndsef": 14,
    "ndperm": 14,
    "partitions": 14,
    "axpairs": 14,
    "X": 14,
    "Y": 14,
    "V": 14,
}


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is taken by verification failures
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser() -> _Parser:
    parser = _Parser(prog="nomcode", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    enc = sub.add_parser("encode", help="permutation word to nom code")
    enc.add_argument("perm", help="one-line word, e.g. '2 3 1 5 4' or '23154'")
    enc.add_argument("--show-steps", action="store_true", help="print the sorting trace")
    enc.add_argument("--json", action="store_true")
    enc.set_defaults(func=cmd_encode)

    dec = sub.add_parser("decode", help="nom code to permutation word")
    dec.add_argument("code", help="code word, e.g. '1 1 1 4 4' or '11144'")
    dec.add_argument(
        "--method",
        choices=("transpositions", "insertion", "cycles"),
        default="transpositions",
    )
    dec.add_argument("--as-cycles", action="store_true", help="print cycle notation")
    dec.add_argument("--json", action="store_true")
    dec.set_defaults(func=cmd_decode)

    enu = sub.add_parser("enumerate", help="stream a combinatorial family")
    enu.add_argument("kind", choices=sorted(KIND_BOUNDS))
    enu.add_argument("n", type=int)
    enu.add_argument("--pattern", help="length-3 pattern, avoiders only")
    enu.add_argument("--count", action="store_true", help="print the cardinality only")
    enu.add_argument("--json", action="store_true")
    enu.add_argument("--csv", action="store_true", help="n,pattern,count row (avoiders --count)")
    enu.add_argument("--unsafe-max-n", type=int, metavar="N", help="override the size bound")
    enu.set_defaults(func=cmd_enumerate)

    ver = sub.add_parser("verify", help="run an invariant suite")
    ver.add_argument("suite", choices=sorted(checks.SUITES))
    ver.add_argument("--max-n", type=int, default=6)
    ver.add_argument("--json", action="store_true")
    ver.set_defaults(func=cmd_verify)

    tre = sub.add_parser("tree", help="emit the increasing forest of a permutation")
    tre.add_argument("perm")
    tre.add_argument("--format", choices=("dot",), default="dot")
    tre.set_defaults(func=cmd_tree)

    return parser


def cmd_encode(args) -> int:
    p = perms.parse_perm(args.perm)
    f = codec.encode_nom(p)
    steps = codec.selection_sort_steps(p) if args.show_steps else []
    if args.json:
        payload = {"perm": list(p), "code": list(f)}
        if steps:
            payload["steps"] = [
                {"i": i, "word": list(word), "letter": letter} for i, word, letter in steps
            ]
        print(json.dumps(payload))
        return EXIT_OK
    for i, word, letter in steps:
        print(f"i={i}  word={perms.format_perm(word)}  letter={letter}")
    print(sef.format_sef(f))
    return EXIT_OK


_DECODERS = {
    "transpositions": codec.decode_transpositions,
    "insertion": codec.decode_insertion,
    "cycles": codec.decode_cycle_insertion,
}


def cmd_decode(args) -> int:
    f = sef.parse_sef(args.code)
    p = _DECODERS[args.method](f)
    if args.json:
        payload = {"code": list(f), "perm": list(p)}
        if args.as_cycles:
            payload["cycles"] = [list(c) for c in perms.cycles(p)]
        print(json.dumps(payload))
        return EXIT_OK
    if args.as_cycles:
        print(perms.format_cycles(perms.cycles(p)))
    else:
        print(perms.format_perm(p))
    return EXIT_OK


def _enumerate_lines(kind: str, n: int, pattern, bound: int):
    """(formatter, iterator) pair for one family."""
    if kind == "sef":
        return sef.format_sef, sef.enumerate_sefs(n, max_n=bound)
    if kind == "ndsef":
        return sef.format_sef, sef.enumerate_nondecreasing_sefs(n, max_n=bound)
    if kind == "ndperm":
        return perms.format_perm, ndperm.enumerate_nd_perms(n, max_n=bound)
    if kind == "avoiders":
        return perms.format_perm, avoidance.avoiders(n, pattern, max_n=bound)
    if kind == "partitions":
        return avoidance.format_partition, avoidance.enumerate_partitions(n)
    if kind == "axpairs":
        return ndperm.format_ax_pairs, ndperm.enumerate_ax_pair_sets(n, max_n=bound)
    if kind == "X":
        return sef.format_sef, iter(avoidance.enumerate_X(n, max_n=bound))
    if kind == "Y":
        return sef.format_sef, avoidance.enumerate_Y(n, max_n=bound)
    if kind == "V":
        return sef.format_sef, avoidance.enumerate_V(n, max_n=bound)
    raise ValueError(f"unknown kind {kind!r}")


_JSON_KEYS = {
    "sef": "code", "ndsef": "code", "X": "code", "Y": "code", "V": "code",
    "ndperm": "perm", "avoiders": "perm",
    "partitions": "parts", "axpairs": "pairs",
}


def cmd_enumerate(args) -> int:
    kind, n = args.kind, args.n
    if args.json and args.csv:
        raise ValueError("--json and --csv are mutually exclusive")
    if args.csv and not (kind == "avoiders" and args.count):
        raise ValueError("--csv applies only to `enumerate avoiders --count`")
    pattern = None
    if kind == "avoiders":
        if args.pattern is None:
            raise ValueError("avoiders needs --pattern")
        pattern = perms.parse_perm(args.pattern)
        if len(pattern) != 3:
            raise ValueError(f"pattern must have length 3, got {args.pattern!r}")
    elif args.pattern is not None:
        raise ValueError(f"--pattern does not apply to kind {kind!r}")
    if n < 0:
        raise ValueError("n must be non-negative")
    bound = args.unsafe_max_n if args.unsafe_max_n is not None else KIND_BOUNDS[kind]
    if n > bound:
        print(
            f"refusing n={n} for kind {kind!r}: bound is {bound}"
            " (override with --unsafe-max-n)",
            file=sys.stderr,
        )
        return EXIT_BOUND

    fmt, items = _enumerate_lines(kind, n, pattern, bound)
    if args.count:
        count = sum(1 for _ in items)
        if args.csv:
            print("n,pattern,count")
            print(f"{n},{''.join(map(str, pattern))},{count}")
        elif args.json:
            payload = {"kind": kind, "n": n, "count": count}
            if pattern is not None:
                payload["pattern"] = list(pattern)
            print(json.dumps(payload))
        else:
            print(count)
        return EXIT_OK
    key = _JSON_KEYS[kind]
    for item in items:
        if args.json:
            value = [list(x) for x in item] if kind == "axpairs" else list(item)
            print(json.dumps({key: value}))
        else:
            print(fmt(item))
    return EXIT_OK


def cmd_verify(args) -> int:
    failures = total = 0
    for name, cap, ok in checks.run_suite(args.suite, args.max_n):
        total += 1
        failures += not ok
        if args.json:
            print(json.dumps({"check": name, "max_n": cap, "ok": ok}))
        else:
            print(f"[{'PASS' if ok else 'FAIL'}] {name} (n<={cap})")
    if not args.json:
        print(f"{total - failures}/{total} checks passed")
    return EXIT_VERIFY_FAILED if failures else EXIT_OK


def cmd_tree(args) -> int:
    p = perms.parse_perm(args.perm)
    sys.stdout.write(forest.to_dot(forest.forest_of(p)))
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
