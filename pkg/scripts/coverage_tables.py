"""Spectrum coverage per order and algorithm, in the layout of the coverage tables.

    python3 scripts/coverage_tables.py --orders 5-9 --algorithms a1,a2
    python3 scripts/coverage_tables.py --orders 5-8 --algorithms a3,a4 --out-dir runs/self

A1/A3 use --runs random constructions; A2/A4 run one targeted search per
feasible r with the default budgets unless overridden.
"""

import argparse
import logging

from rortho.spectrum import feasible_set
from rortho.sweep import ALGORITHM_MODE, compress_ranges, sweep


def parse_orders(text):
    lo, _, hi = text.partition("-")
    return range(int(lo), int(hi or lo) + 1)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--orders", default="5-8")
    ap.add_argument("--algorithms", default="a1,a2")
    ap.add_argument("--runs", type=int, default=10**4, help="A1/A3 constructions per order")
    ap.add_argument("--restarts", type=int, default=None, help="A2/A4 restarts per target")
    ap.add_argument("--max-iters", type=int, default=None)
    ap.add_argument("--acceptance", default=None)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out-dir", default=None)
    ap.add_argument("-v", "--verbose", action="store_true")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")

    extra = {}
    if args.max_iters:
        extra["max_switch_iters"] = args.max_iters
    if args.acceptance:
        extra["acceptance"] = args.acceptance
    for n in parse_orders(args.orders):
        for alg in args.algorithms.split(","):
            mode = ALGORITHM_MODE[alg]
            if mode == "pair" and n < 2:
                continue
            if alg in ("a1", "a3"):
                rep = sweep(n, alg, budget=args.runs, seed=args.seed, out_dir=args.out_dir)
            else:
                out = None if args.out_dir is None else f"{args.out_dir}/n{n}"
                rep = sweep(n, alg, budget=args.restarts, seed=args.seed, out_dir=out, jobs=args.jobs, **extra)
            feas = feasible_set(n, mode)
            got = rep.achieved()
            print(f"n={n} {alg}: {compress_ranges(got)} | {len(got)}/{len(feas)} feasible "
                  f"({rep.coverage(feas):.1%}) in {rep.elapsed:.1f}s", flush=True)


if __name__ == "__main__":
    main()
