"""Command-line driver.

Subcommands cover single invariant evaluations, the per-prime claim
suites, and thin wrappers over the combinatorial and module layers.  All
output is JSON on stdout.  Exit codes: 0 success / all claims pass, 1 a
claim failed or a cap was exceeded, 2 usage error.
"""

import argparse
import json
import sys

from . import engine, homological, meataxe, reports
from .claims import full_ledger
from .modules import specht_module
from .partitions import (char0_dim, format_partition, p_core, parse_partition,
                         partitions_of)
from .tableaux import branching_sections, branching_splits, lr_sections, \
    parse_skew


def _emit(payload):
    print(json.dumps(payload, sort_keys=True))


def _dump_text(path, text):
    if path:
        with open(path, "w") as fh:
            fh.write(text)


def _need(args, *names):
    for name in names:
        if getattr(args, name, None) is None:
            raise UsageError("missing required flag for this subcommand: "
                             + {"prime": "-p/--prime", "lam": "-l/--lambda",
                                "degree": "-r/--degree",
                                "shape": "--shape"}[name])


class UsageError(Exception):
    pass


def cmd_invariants(args):
    _need(args, "prime", "lam")
    lam = parse_partition(args.lam)
    res = engine.evaluate(lam, args.prime, m=args.subgroup,
                          strategy=args.method, cap=args.cap)
    payload = {"p": res.p, "lambda": format_partition(res.lam), "m": res.m,
               "method": res.method, "citation": res.citation}
    if res.exact:
        payload["value"] = res.value
    else:
        payload["interval"] = list(res.value)
    _emit(payload)
    _dump_text(args.dump, json.dumps(payload, sort_keys=True) + "\n")
    return 0


def cmd_verify_paper(args):
    _need(args, "prime")
    if args.prime not in (2, 3, 5):
        raise UsageError("verify-paper covers -p 2, 3 and 5")
    ledger = full_ledger(args.prime, seed=args.seed)
    results = reports.run_suite(ledger, jobs=args.jobs)
    summary = reports.emit_jsonl(results, sys.stdout,
                                 suite="verify-paper-p%d" % args.prime)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            reports.emit_csv(results, fh)
    if args.dump:
        with open(args.dump, "w") as fh:
            reports.emit_jsonl(results, fh,
                               suite="verify-paper-p%d" % args.prime)
    return 0 if summary["all_pass"] else 1


def cmd_dim(args):
    _need(args, "lam")
    lam = parse_partition(args.lam)
    payload = {"lambda": format_partition(lam), "dim": char0_dim(lam)}
    _emit(payload)
    _dump_text(args.dump, json.dumps(payload, sort_keys=True) + "\n")
    return 0


def cmd_core(args):
    _need(args, "prime", "lam")
    lam = parse_partition(args.lam)
    payload = {"lambda": format_partition(lam), "p": args.prime,
               "core": format_partition(p_core(lam, args.prime))}
    _emit(payload)
    _dump_text(args.dump, json.dumps(payload, sort_keys=True) + "\n")
    return 0


def cmd_blocks(args):
    _need(args, "prime", "degree")
    groups = {}
    for lam in partitions_of(args.degree):
        groups.setdefault(format_partition(p_core(lam, args.prime)),
                          []).append(format_partition(lam))
    payload = {"degree": args.degree, "p": args.prime,
               "blocks": [{"core": core, "partitions": members}
                          for core, members in sorted(groups.items())]}
    _emit(payload)
    _dump_text(args.dump, json.dumps(payload, sort_keys=True) + "\n")
    return 0


def cmd_lr(args):
    _need(args, "shape")
    shape = parse_skew(args.shape)
    payload = {"shape": args.shape,
               "sections": [{"label": format_partition(nu), "mult": mult}
                            for nu, mult in lr_sections(shape)]}
    _emit(payload)
    _dump_text(args.dump, json.dumps(payload, sort_keys=True) + "\n")
    return 0


def cmd_branch(args):
    _need(args, "lam")
    lam = parse_partition(args.lam)
    payload = {"lambda": format_partition(lam),
               "sections": [format_partition(s)
                            for s in branching_sections(lam)]}
    if args.prime is not None:
        payload["p"] = args.prime
        payload["splits"] = branching_splits(lam, args.prime)
    _emit(payload)
    _dump_text(args.dump, json.dumps(payload, sort_keys=True) + "\n")
    return 0


def cmd_chop(args):
    _need(args, "prime", "lam")
    lam = parse_partition(args.lam)
    result = meataxe.chop(specht_module(lam, args.prime), seed=args.seed)
    text = result.to_json()
    print(text)
    _dump_text(args.dump, text + "\n")
    return 0


def cmd_h1(args):
    _need(args, "prime", "lam")
    lam = parse_partition(args.lam)
    value = homological.h1_dimension(specht_module(lam, args.prime))
    payload = {"lambda": format_partition(lam), "p": args.prime, "h1": value}
    _emit(payload)
    _dump_text(args.dump, json.dumps(payload, sort_keys=True) + "\n")
    return 0


_COMMANDS = {
    "invariants": cmd_invariants,
    "verify-paper": cmd_verify_paper,
    "dim": cmd_dim,
    "core": cmd_core,
    "blocks": cmd_blocks,
    "lr": cmd_lr,
    "branch": cmd_branch,
    "chop": cmd_chop,
    "h1": cmd_h1,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="spechtinv",
        description="Specht-module invariants over GF(p): evaluate "
                    "dimensions, run the claim suites, inspect shapes.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("-p", "--prime", type=int)
        sp.add_argument("-l", "--lambda", dest="lam",
                        help="partition, e.g. 4,4,4 or 4^3")
        sp.add_argument("-m", "--subgroup", type=int,
                        help="invariants under the first-m-letters subgroup "
                             "(default: the prime)")
        sp.add_argument("-r", "--degree", type=int,
                        help="degree r for the blocks listing")
        sp.add_argument("--shape",
                        help="skew shape outer/inner, e.g. 5,5,1/4,1")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--cap", type=int, default=engine.BRUTE_CAP,
                        help="largest module dimension brute force accepts")
        sp.add_argument("--jobs", type=int, default=1)
        sp.add_argument("--csv", help="also write reports as CSV to a file")
        sp.add_argument("--dump", help="also write the JSON output to a file")
        sp.add_argument("--method", default="auto",
                        choices=["auto", "closed_formula", "branching",
                                 "brute_force"])
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except engine.CapExceeded as exc:
        print("error: %s (raise --cap to allow larger modules)" % exc,
              file=sys.stderr)
        return 1
    except UsageError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return 2
    except ValueError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
