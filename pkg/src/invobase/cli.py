"""Command-line driver: parse or generate a system, complete it, report.

Exit codes: 0 success, 2 parse error, 3 degree bound exceeded,
4 verification mismatch.
"""

import argparse
import sys
import time

from .buchberger import buchberger_reduced_gb
from .cones import BoundExceeded
from .engine import CRITERIA, CompletionStats, EngineConfig, involutive_basis_v1, involutive_basis_v2
from .hilbert import HilbertInput, hf_eval, hp_eval
from .ordering import Order
from .polynomial import poly_str
from .problems import ParseError, gen_benchmark, parse_system


def _parse_criteria(text):
    if text == "none":
        return frozenset()
    try:
        picks = {int(x) for x in text.split(",") if x}
    except ValueError:
        raise argparse.ArgumentTypeError("bad criteria list %r" % text)
    if not picks or picks - {1, 2, 3, 4}:
        raise argparse.ArgumentTypeError("criteria must be within 1..4 or 'none'")
    return frozenset("C%d" % i for i in sorted(picks))


def _parse_bench(text):
    try:
        name, k = text.split(":")
        return name, int(k)
    except ValueError:
        raise argparse.ArgumentTypeError("expected NAME:K, e.g. cyclic:4")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="invobase",
        description="Minimal involutive bases and reduced Groebner bases over Q.",
    )
    ap.add_argument("input", nargs="?", help="problem file (see README for the format)")
    ap.add_argument("--bench", type=_parse_bench, metavar="NAME:K",
                    help="generate a benchmark system (cyclic or katsura) instead of reading a file")
    ap.add_argument("--order", choices=("lex", "deglex", "degrevlex"),
                    help="monomial order (default: file header or degrevlex)")
    ap.add_argument("--division", choices=("janet", "pommaret", "lexinduced"),
                    help="involutive division (default: file header or janet)")
    ap.add_argument("--criteria", type=_parse_criteria, default=frozenset(CRITERIA),
                    metavar="{none|1|1,2|1,2,3|1,2,3,4}", help="enabled criteria subset")
    ap.add_argument("--algorithm", choices=("v1", "v2"), default="v2")
    ap.add_argument("--partial-head", action="store_true",
                    help="head-reduce only the minimal-degree part of the queue")
    ap.add_argument("--degree-bound", type=int, default=0, metavar="N",
                    help="abort when a prolongation exceeds degree N (0 = unlimited)")
    ap.add_argument("--workers", type=int, default=1, metavar="N",
                    help="worker lanes for the head-reduction phase")
    ap.add_argument("--output", choices=("involutive", "groebner", "both"), default="both")
    ap.add_argument("--hilbert", type=int, metavar="S",
                    help="print the Hilbert function/polynomial table for s = 0..S")
    ap.add_argument("--stats", action="store_true", help="print completion statistics")
    ap.add_argument("--verify", action="store_true",
                    help="cross-check the reduced Groebner basis against the Buchberger oracle")
    ap.add_argument("--csv", metavar="PATH", help="also write a phase,counter,value report")
    return ap


def _load(args):
    if args.bench and args.input:
        raise SystemExit("give either an input file or --bench, not both")
    if args.bench:
        order_name = args.order or "degrevlex"
        polys, names = gen_benchmark(args.bench[0], args.bench[1], Order(order_name))
        division = args.division or "janet"
        return polys, names, order_name, division
    if not args.input:
        raise SystemExit("no input: give a problem file or --bench NAME:K")
    with open(args.input) as fh:
        text = fh.read()
    polys, names, defaults = parse_system(text)
    order_name = args.order or defaults["order"]
    division = args.division or defaults["division"]
    if args.order and args.order != defaults["order"]:
        order = Order(order_name)
        polys = [p for p in polys]
        # re-sort the parsed polynomials under the requested order
        from .polynomial import make_poly

        polys = [make_poly(p.terms, order) for p in polys]
    return polys, names, order_name, division


def _print_basis(label, basis, names):
    print("%s (%d):" % (label, len(basis)))
    for p in basis:
        print("  %s" % poly_str(p, names))


def run(args):
    t0 = time.perf_counter()
    polys, names, order_name, division = _load(args)
    order = Order(order_name)
    t_parse = time.perf_counter() - t0

    cfg = EngineConfig(
        order=order,
        division=division,
        criteria=args.criteria,
        partial_head_reduction=args.partial_head,
        degree_bound=args.degree_bound,
        workers=args.workers,
        output=args.output,
    )
    t0 = time.perf_counter()
    if args.algorithm == "v1":
        basis = involutive_basis_v1(
            polys, order, division, degree_bound=args.degree_bound
        )
        groebner = None
        stats = CompletionStats()
    else:
        result = involutive_basis_v2(polys, cfg)
        basis = result["basis"]
        groebner = result["groebner"]
        stats = result["stats"]
    t_engine = time.perf_counter() - t0

    rows = [("config", "order", order_name), ("config", "division", division),
            ("config", "algorithm", args.algorithm), ("config", "workers", args.workers)]

    if args.output in ("groebner", "both") and groebner is None:
        from .buchberger import autoreduce

        groebner = autoreduce(basis, order)
    if args.output in ("involutive", "both"):
        _print_basis("involutive basis", basis, names)
        rows.append(("output", "involutive_size", len(basis)))
    if args.output in ("groebner", "both"):
        _print_basis("groebner basis", groebner, names)
        rows.append(("output", "groebner_size", len(groebner)))

    t0 = time.perf_counter()
    code = 0
    if args.verify:
        oracle = buchberger_reduced_gb(polys, order)
        mine = groebner if groebner is not None else ()
        if tuple(mine) == tuple(oracle):
            print("verify: ok (%d elements)" % len(oracle))
        else:
            print("verify: MISMATCH (engine %d elements, oracle %d elements)"
                  % (len(mine), len(oracle)))
            code = 4
    t_verify = time.perf_counter() - t0

    if args.hilbert is not None:
        hin = HilbertInput.from_basis([p.lm for p in basis], division)
        print("hilbert table:")
        print("  %6s %12s %12s" % ("s", "HF", "HP"))
        for s in range(args.hilbert + 1):
            hf, hp = hf_eval(hin, s), hp_eval(hin, s)
            print("  %6d %12d %12d" % (s, hf, hp))
            rows.append(("hilbert", "s=%d" % s, "%d,%d" % (hf, hp)))

    if args.stats:
        print("stats:")
        for key, value in stats.counters():
            print("  %-32s %s" % (key, value))
    for key, value in stats.counters():
        rows.append(("engine", key, value))

    rows.append(("timing", "parse_s", "%.6f" % t_parse))
    rows.append(("timing", "engine_s", "%.6f" % t_engine))
    rows.append(("timing", "verify_s", "%.6f" % t_verify))
    print("timing: parse %.3fs engine %.3fs verify %.3fs"
          % (t_parse, t_engine, t_verify), file=sys.stderr)

    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write("phase,counter,value\n")
            for phase, counter, value in rows:
                fh.write("%s,%s,%s\n" % (phase, counter, value))
    return code


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return 2
    except BoundExceeded as exc:
        print("bound exceeded: %s" % exc, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
