"""Mean orthogonality of random squares for a range of orders, both modes.

    python3 scripts/estimate_table.py --orders 5-20 --samples 2000

Prints one estimate line per (n, mode) next to the reported reference mean.
"""

import argparse
import time

import numpy as np

from rortho.randgen import REPORTED_PAIR_MEAN, REPORTED_SELF_MEAN, estimate_expected


def parse_orders(text):
    lo, _, hi = text.partition("-")
    return range(int(lo), int(hi or lo) + 1)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--orders", default="5-20")
    ap.add_argument("--samples", type=int, default=2000)
    ap.add_argument("--modes", default="pair,self")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    for n in parse_orders(args.orders):
        for mode in args.modes.split(","):
            if mode == "pair" and n < 2:
                continue
            t0 = time.perf_counter()
            est = estimate_expected(n, args.samples, mode, rng)
            ref = (REPORTED_PAIR_MEAN if mode == "pair" else REPORTED_SELF_MEAN).get(n)
            ref_text = f"{ref:.2f}" if ref is not None else "-"
            print(f"{est.line()} ratio={est.ratio:.4f} reported={ref_text} "
                  f"({time.perf_counter() - t0:.1f}s)", flush=True)


if __name__ == "__main__":
    main()
