"""Command-line interface: ``chainperm <command> ...``.

Exit codes: 0 on success, 1 when a permutation contains the chain or a
verification finds a mismatch, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .chains import CHAIN_213, CHAIN_231, avoids_chain, parse_chain, render_chain
from .enumeration import enumerate_avoiders, sequence
from .errors import UnsupportedChain
from .perm import format_perm, parse_perm, power
from .structure import gen_chain213, gen_chain231
from .verify import SUITES, run_suite


def _perm_text(p) -> str:
    return format_perm(p, compact=True)


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _positive(text: str) -> int:
    value = _non_negative(text)
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return value


def cmd_count(args) -> int:
    chain = parse_chain(args.chain)
    seq = sequence(chain, args.n, args.n, args.method, args.threads)
    doc = {
        "n": args.n,
        "chain": render_chain(chain),
        "method": args.method,
        "count": str(seq.entries[0][1]),
    }
    print(json.dumps(doc))
    return 0


def cmd_enumerate(args) -> int:
    chain = parse_chain(args.chain)
    if args.method == "brute":
        perms = enumerate_avoiders(args.n, chain)
    elif chain == CHAIN_231:
        perms = gen_chain231(args.n)
    elif chain == CHAIN_213:
        perms = gen_chain213(args.n)
    else:
        raise UnsupportedChain(f"no structural generator for chain {render_chain(chain)}")
    if args.format == "json":
        print(json.dumps([_perm_text(p) for p in perms]))
    else:
        for p in perms:
            print(_perm_text(p))
    return 0


def cmd_check(args) -> int:
    p = parse_perm(args.perm)
    chain = parse_chain(args.chain)
    report = avoids_chain(p, chain)
    print("AVOIDS" if report.verdict else "CONTAINS")
    if args.verbose:
        shown = set()
        for e in report.entries:
            if e.power not in shown:
                shown.add(e.power)
                print(f"level {e.power}: pi^{e.power} = {_perm_text(e.power_perm)}")
            if e.witness is None:
                print(f"  {e.pattern}: avoided")
            else:
                positions = ",".join(map(str, e.witness.positions))
                values = ",".join(map(str, e.witness.values_in(e.power_perm)))
                print(f"  {e.pattern}: contained at positions {positions} (values {values})")
    return 0 if report.verdict else 1


def cmd_power(args) -> int:
    print(_perm_text(power(parse_perm(args.perm), args.k)))
    return 0


def cmd_sequence(args) -> int:
    if args.min_n > args.max_n:
        raise ValueError(f"--min-n {args.min_n} exceeds --max-n {args.max_n}")
    chain = parse_chain(args.chain)
    seq = sequence(chain, args.min_n, args.max_n, args.method)
    if args.format == "bfile":
        for n, count in seq.entries:
            print(f"{n} {count}")
    elif args.format == "csv":
        print("n,count")
        for n, count in seq.entries:
            print(f"{n},{count}")
    else:
        doc = {
            "chain": render_chain(chain),
            "method": args.method,
            "entries": [{"n": n, "count": str(c)} for n, c in seq.entries],
        }
        print(json.dumps(doc))
    return 0


def cmd_verify(args) -> int:
    results = run_suite(args.suite, args.max_n, args.threads)
    for res in results:
        print(f"== {res.name}")
        table = [res.header] + [tuple(map(str, row)) for row in res.rows]
        widths = [max(len(r[i]) for r in table) for i in range(len(res.header))]
        for row in table:
            print("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
        if res.ok:
            print(f"{res.name}: PASS")
        else:
            print(f"{res.name}: FAIL: {res.failure}")
    ok = all(r.ok for r in results)
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chainperm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count avoiders of a chain in S_n")
    p.add_argument("--n", type=_non_negative, required=True)
    p.add_argument("--chain", required=True)
    p.add_argument("--method", choices=("brute", "structural", "closed"), default="brute")
    p.add_argument("--threads", type=_positive, default=1)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list avoiders in lexicographic order")
    p.add_argument("--n", type=_non_negative, required=True)
    p.add_argument("--chain", required=True)
    p.add_argument("--method", choices=("brute", "structural"), default="brute")
    p.add_argument("--format", choices=("lines", "json"), default="lines")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("check", help="test one permutation against a chain")
    p.add_argument("--perm", required=True)
    p.add_argument("--chain", required=True)
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("power", help="print the k-th power of a permutation")
    p.add_argument("--perm", required=True)
    p.add_argument("--k", type=_non_negative, required=True)
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("sequence", help="counts over a range of n")
    p.add_argument("--chain", required=True)
    p.add_argument("--min-n", type=_non_negative, required=True)
    p.add_argument("--max-n", type=_non_negative, required=True)
    p.add_argument("--method", choices=("brute", "structural", "closed"), default="brute")
    p.add_argument("--format", choices=("csv", "json", "bfile"), default="csv")
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("verify", help="cross-check brute force, generators and formulas")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--max-n", type=_non_negative, default=9)
    p.add_argument("--threads", type=_positive, default=1)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"chainperm {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
