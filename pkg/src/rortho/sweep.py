"""Spectrum sweeps over r for a fixed order, plus certificate files.

A certificate is a grid file (one square for self mode, two for pair mode)
preceded by ``# n=<n> mode=<mode> r=<r> seed=<s>``.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .construct import SearchConfig, algorithm_a1, algorithm_a2, algorithm_a3, algorithm_a4
from .core import LatinGrid, missing_pairs, orthogonality, transpose
from .errors import NotSquare, ParseError, VerificationFailed
from .spectrum import Feasibility, feasible, feasible_set
from .textio import format_grids, read_grids, write_text_atomic

log = logging.getLogger(__name__)

ALGORITHM_MODE = {"a1": "pair", "a2": "pair", "a3": "self", "a4": "self"}


@dataclass
class SweepEntry:
    r: int
    found: bool
    seed: int | None
    attempts: int
    file: str | None = None
    squares: tuple[LatinGrid, ...] = field(default=(), repr=False)

    def line(self) -> str:
        status = "found" if self.found else "exhausted"
        return (f"r={self.r} status={status} seed={self.seed if self.seed is not None else '-'} "
                f"attempts={self.attempts} file={self.file or '-'}")


@dataclass
class SweepReport:
    n: int
    mode: str
    algorithm: str
    budget: int
    seed: int
    entries: dict[int, SweepEntry] = field(default_factory=dict)
    elapsed: float = 0.0

    def achieved(self) -> list[int]:
        return sorted(r for r, e in self.entries.items() if e.found)

    def coverage(self, wanted) -> float:
        wanted = set(wanted)
        return len(wanted & set(self.achieved())) / len(wanted) if wanted else 1.0

    def to_text(self) -> str:
        achieved = self.achieved()
        head = [
            f"n={self.n}",
            f"mode={self.mode}",
            f"algorithm={self.algorithm}",
            f"budget={self.budget}",
            f"seed={self.seed}",
            f"elapsed={self.elapsed:.2f}",
            f"achieved={len(achieved)}",
            f"spectrum={compress_ranges(achieved)}",
        ]
        body = [self.entries[r].line() for r in sorted(self.entries)]
        return "\n".join(head + [""] + body) + "\n"


def compress_ranges(values) -> str:
    """[5, 7, 10, 11, 12] -> '5,7,10-12'."""
    values = sorted(values)
    parts = []
    i = 0
    while i < len(values):
        j = i
        while j + 1 < len(values) and values[j + 1] == values[j] + 1:
            j += 1
        parts.append(str(values[i]) if i == j else f"{values[i]}-{values[j]}")
        i = j + 1
    return ",".join(parts) if parts else "-"


def parse_report(text: str) -> SweepReport:
    head, _, body = text.partition("\n\n")
    meta = dict(line.split("=", 1) for line in head.splitlines() if "=" in line)
    rep = SweepReport(int(meta["n"]), meta["mode"], meta["algorithm"], int(meta["budget"]),
                      int(meta["seed"]), elapsed=float(meta["elapsed"]))
    for line in body.splitlines():
        f = dict(tok.split("=", 1) for tok in line.split())
        seed = None if f["seed"] == "-" else int(f["seed"])
        rep.entries[int(f["r"])] = SweepEntry(int(f["r"]), f["status"] == "found", seed,
                                              int(f["attempts"]), None if f["file"] == "-" else f["file"])
    return rep


def derive_seed(*parts: int) -> int:
    return int(np.random.SeedSequence([int(p) for p in parts]).generate_state(1)[0])


def certificate_text(squares, mode: str, r: int, seed) -> str:
    n = squares[0].order
    return format_grids(list(squares), {"n": n, "mode": mode, "r": r, "seed": seed if seed is not None else "-"})


def write_certificate(path, squares, mode: str, r: int, seed) -> None:
    write_text_atomic(path, certificate_text(squares, mode, r, seed))


@dataclass(frozen=True)
class VerificationReport:
    n: int
    mode: str
    r: int
    claimed: int | None
    missing: list[tuple[int, int]]

    def line(self) -> str:
        return f"OK r={self.r}"


def verify_certificate(path) -> VerificationReport:
    """Re-validate the grid(s) in ``path`` and compare r to the claimed value."""
    meta, grids = read_grids(path)
    if len(grids) == 1:
        mode = "self"
        A, B = grids[0], transpose(grids[0])
    elif len(grids) == 2:
        mode = "pair"
        A, B = grids
    else:
        raise ParseError(f"expected 1 or 2 grids, found {len(grids)}")
    if "mode" in meta and meta["mode"] != mode:
        raise ParseError(f"header says mode={meta['mode']} but file holds {len(grids)} grid(s)")
    for g in grids:
        if not g.is_square:
            raise NotSquare(f"{g.n_rows}x{g.n_cols} grid is not a complete square")
    r = orthogonality(A, B)
    claimed = None
    if meta.get("r", "-") != "-":
        try:
            claimed = int(meta["r"])
        except ValueError:
            raise ParseError(f"bad claimed r {meta['r']!r}") from None
        if claimed != r:
            raise VerificationFailed(claimed, r)
    return VerificationReport(A.order, mode, r, claimed, missing_pairs(A, B))


# ---------------------------------------------------------------------------
# sweeps
# ---------------------------------------------------------------------------


def _targeted(args):
    n, algorithm, r, cfg_kwargs = args
    cfg = SearchConfig(target=r, **cfg_kwargs)
    fn = algorithm_a2 if algorithm == "a2" else algorithm_a4
    return fn(n, cfg)


def sweep(
    n: int,
    algorithm: str,
    budget: int | None = None,
    seed: int = 0,
    out_dir=None,
    jobs: int = 1,
    **search_kwargs,
) -> SweepReport:
    """Run one algorithm across the spectrum of order n.

    A1/A3: ``budget`` random constructions (default 10^4); every r observed is
    recorded with the per-run seed that produced it.  A2/A4: one targeted
    search per feasible r (and per open case), ``budget`` restarts each
    (default 100).  Extra keyword arguments go to :class:`SearchConfig`.
    """
    algorithm = algorithm.lower()
    if algorithm not in ALGORITHM_MODE:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    mode = ALGORITHM_MODE[algorithm]
    out = Path(out_dir) if out_dir is not None else None
    t0 = time.perf_counter()

    if algorithm in ("a1", "a3"):
        runs = 10**4 if budget is None else budget
        if runs < 1:
            raise ValueError("budget must be positive")
        report = SweepReport(n, mode, algorithm, runs, seed)
        for i in range(runs):
            run_seed = derive_seed(seed, i)
            if algorithm == "a1":
                A, B, r = algorithm_a1(n, run_seed)
                squares = (A, B)
            else:
                A, r = algorithm_a3(n, run_seed)
                squares = (A,)
            if r not in report.entries:
                report.entries[r] = SweepEntry(r, True, run_seed, i + 1, squares=squares)
        for r in feasible_set(n, mode):
            report.entries.setdefault(r, SweepEntry(r, False, None, runs))
    else:
        restarts = 100 if budget is None else budget
        report = SweepReport(n, mode, algorithm, restarts, seed)
        targets = [r for r in range(n, n * n + 1) if feasible(n, r, mode) is not Feasibility.INFEASIBLE]
        tasks = [(n, algorithm, r, dict(search_kwargs, max_restarts=restarts, seed=derive_seed(seed, r)))
                 for r in targets]
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_targeted, tasks))
        else:
            results = []
            for task in tasks:
                results.append(_targeted(task))
                log.info("n=%d r=%d %s after %d restart(s)", n, task[2], results[-1].outcome,
                         results[-1].attempts)
        for task, res in zip(tasks, results):
            r = task[2]
            report.entries[r] = SweepEntry(r, res.found, res.seed, res.attempts,
                                           squares=res.squares if res.found else ())

    if out is not None:
        for e in report.entries.values():
            if e.found:
                path = out / f"{mode}_n{n}_r{e.r}.txt"
                write_certificate(path, e.squares, mode, e.r, e.seed)
                e.file = str(path)
    report.elapsed = time.perf_counter() - t0
    if out is not None:
        write_text_atomic(out / f"sweep_{algorithm}_n{n}.txt", report.to_text())
    return report
