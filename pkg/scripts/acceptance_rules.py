"""Compare switch acceptance rules on targeted coverage.

    python3 scripts/acceptance_rules.py --order 7 --algorithm a2

The literal rule keeps only strict improvements; it stalls on plateaus near
the extremes of the spectrum.  Sideways moves and Metropolis moves are the
alternatives exposed by SearchConfig.
"""

import argparse

from rortho.spectrum import feasible_set
from rortho.sweep import ALGORITHM_MODE, compress_ranges, sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--order", type=int, default=7)
    ap.add_argument("--algorithm", default="a2", choices=["a2", "a4"])
    ap.add_argument("--rules", default="strict,sideways,metropolis")
    ap.add_argument("--temperature", type=float, default=0.6)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    feas = feasible_set(args.order, ALGORITHM_MODE[args.algorithm])
    for rule in args.rules.split(","):
        rep = sweep(args.order, args.algorithm, seed=args.seed, acceptance=rule, temperature=args.temperature)
        missed = sorted(set(feas) - set(rep.achieved()))
        print(f"{rule:>10}: coverage {rep.coverage(feas):.1%} missed={compress_ranges(missed)} "
              f"time={rep.elapsed:.1f}s", flush=True)


if __name__ == "__main__":
    main()
