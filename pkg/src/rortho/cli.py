"""Command-line front end.

    rortho generate -n 7 --mode pair --seed 1
    rortho target -n 7 -r 42 --mode pair -o pair42.txt
    rortho sweep -n 7 --algorithm a2 --out-dir runs/n7
    rortho estimate -n 10 --mode pair --samples 10000
    rortho verify pair42.txt

Artifacts go to stdout or files; progress and the effective seed go to stderr.
Exit codes: 0 success, 1 exhausted search or failed verification, 2 usage
error or infeasible target.
"""

from __future__ import annotations

import argparse
import logging
import secrets
import sys

import numpy as np

from .construct import SearchConfig, algorithm_a1, algorithm_a2, algorithm_a3, algorithm_a4
from .errors import InfeasibleTarget, LatinError, VerificationFailed
from .randgen import estimate_expected
from .sweep import certificate_text, compress_ranges, sweep, verify_certificate
from .textio import write_text_atomic

DEFAULT_ALGORITHM = {"pair": "a1", "self": "a3"}
TARGET_ALGORITHM = {"pair": "a2", "self": "a4"}


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rortho", description="r-orthogonal and r-self-orthogonal Latin squares")
    p.add_argument("-v", "--verbose", action="store_true", help="progress messages on stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, algorithms):
        sp.add_argument("-n", "--order", type=_positive, required=True)
        sp.add_argument("--mode", choices=["pair", "self"], default=None)
        sp.add_argument("--algorithm", choices=algorithms, default=None)
        sp.add_argument("--seed", type=_nonnegative, default=None, help="default: fresh entropy")

    def search(sp):
        sp.add_argument("--max-iters", type=_positive, default=SearchConfig.max_switch_iters)
        sp.add_argument("--max-restarts", type=_positive, default=SearchConfig.max_restarts)
        sp.add_argument("--acceptance", choices=["strict", "sideways", "metropolis"],
                        default=SearchConfig.acceptance)
        sp.add_argument("--temperature", type=float, default=SearchConfig.temperature)
        sp.add_argument("--objective", choices=["auto", "maximize", "minimize"], default="auto")

    g = sub.add_parser("generate", help="one random construction (A1 or A3)")
    common(g, ["a1", "a3"])
    g.add_argument("-o", "--out", default=None)

    t = sub.add_parser("target", help="search for a given r (A2 or A4)")
    common(t, ["a2", "a4"])
    t.add_argument("-r", "--target", type=int, required=True)
    search(t)
    t.add_argument("-o", "--out", default=None)

    s = sub.add_parser("sweep", help="cover the spectrum of one order")
    common(s, ["a1", "a2", "a3", "a4"])
    s.add_argument("--budget", type=_positive, default=None,
                   help="A1/A3: number of runs; A2/A4: restarts per target")
    search(s)
    s.add_argument("-o", "--out", "--out-dir", dest="out_dir", default=None)
    s.add_argument("--jobs", type=_positive, default=1)

    e = sub.add_parser("estimate", help="mean orthogonality of random squares")
    e.add_argument("-n", "--order", type=_positive, required=True)
    e.add_argument("--mode", choices=["pair", "self"], default="pair")
    e.add_argument("--samples", type=int, default=10**4)
    e.add_argument("--mixing", type=_positive, default=None, help="chain moves per checkpoint (default n^3)")
    e.add_argument("--seed", type=_nonnegative, default=None)

    v = sub.add_parser("verify", help="check a certificate file")
    v.add_argument("path")
    v.add_argument("--missing", action="store_true", help="list pairs absent from the superposition")
    return p


def _resolve(args, targeted: bool = False) -> tuple[str, str]:
    mode, alg = args.mode, args.algorithm
    if alg is not None:
        implied = "pair" if alg in ("a1", "a2") else "self"
        if mode is not None and mode != implied:
            raise UsageError(f"--algorithm {alg} works in {implied} mode, not {mode}")
        mode = implied
    mode = mode or "pair"
    if alg is None:
        alg = (TARGET_ALGORITHM if targeted else DEFAULT_ALGORITHM)[mode]
    return mode, alg


def _emit(text: str, out) -> None:
    if out:
        write_text_atomic(out, text)
    else:
        sys.stdout.write(text)


def _search_kwargs(args) -> dict:
    return dict(max_switch_iters=args.max_iters, acceptance=args.acceptance,
                temperature=args.temperature, objective=args.objective)


def cmd_generate(args) -> int:
    mode, alg = _resolve(args)
    n = args.order
    if mode == "pair":
        if n < 2:
            raise UsageError("pair mode needs n >= 2")
        A, B, r = algorithm_a1(n, args.seed)
        squares = (A, B)
    else:
        A, r = algorithm_a3(n, args.seed)
        squares = (A,)
    print(f"{alg}: n={n} r={r}", file=sys.stderr)
    _emit(certificate_text(squares, mode, r, args.seed), args.out)
    return 0


def cmd_target(args) -> int:
    mode, alg = _resolve(args, targeted=True)
    n = args.order
    if mode == "pair" and n < 2:
        raise UsageError("pair mode needs n >= 2")
    config = SearchConfig(target=args.target, max_restarts=args.max_restarts, seed=args.seed,
                          **_search_kwargs(args))
    fn = algorithm_a2 if alg == "a2" else algorithm_a4
    try:
        res = fn(n, config)
    except InfeasibleTarget as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"{alg}: n={n} target={args.target} {res.outcome} r={res.r} "
          f"restarts={res.attempts} iterations={res.iterations}", file=sys.stderr)
    if not res.found:
        return 1
    _emit(certificate_text(res.squares, mode, res.r, args.seed), args.out)
    return 0


def cmd_sweep(args) -> int:
    _, alg = _resolve(args, targeted=True)
    n = args.order
    if alg in ("a1", "a2") and n < 2:
        raise UsageError("pair mode needs n >= 2")
    kwargs = _search_kwargs(args) if alg in ("a2", "a4") else {}
    rep = sweep(n, alg, budget=args.budget, seed=args.seed, out_dir=args.out_dir, jobs=args.jobs, **kwargs)
    print(f"{alg}: n={n} achieved {len(rep.achieved())} values: {compress_ranges(rep.achieved())} "
          f"({rep.elapsed:.1f}s)", file=sys.stderr)
    sys.stdout.write(rep.to_text())
    return 0


def cmd_estimate(args) -> int:
    if args.samples < 2:
        raise UsageError("--samples must be at least 2")
    if args.mode == "pair" and args.order < 2:
        raise UsageError("pair mode needs n >= 2")
    est = estimate_expected(args.order, args.samples, args.mode, np.random.default_rng(args.seed), args.mixing)
    print(est.line())
    return 0


def cmd_verify(args) -> int:
    try:
        rep = verify_certificate(args.path)
    except VerificationFailed as exc:
        print(f"FAIL claimed r={exc.claimed} actual r={exc.actual}")
        return 1
    except (LatinError, OSError) as exc:
        print(f"FAIL {exc}")
        return 1
    print(rep.line())
    if args.missing:
        print("missing " + " ".join(f"({a},{b})" for a, b in rep.missing))
    return 0


COMMANDS = {
    "generate": cmd_generate,
    "target": cmd_target,
    "sweep": cmd_sweep,
    "estimate": cmd_estimate,
    "verify": cmd_verify,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(message)s", stream=sys.stderr)
    if getattr(args, "seed", "absent") is None:
        args.seed = secrets.randbits(32)
    if hasattr(args, "seed"):
        print(f"seed={args.seed}", file=sys.stderr)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
