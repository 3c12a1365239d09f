"""Randomized construction of r-orthogonal pairs and r-self-orthogonal squares.

* ``algorithm_a1`` / ``algorithm_a3``: complete random first rows row by row
  with randomized SDR matchings and report the orthogonality that results.
* ``algorithm_a2`` / ``algorithm_a4``: build greedily with optimal one-row
  extensions (assignment problem), then run switching local search toward a
  target r, restarting from scratch when the iteration budget runs out.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from . import _kernels as K
from .core import LatinGrid, PairSet, orthogonality, self_orthogonality
from .errors import InfeasibleTarget, NoPerfectMatching, ShapeMismatch
from .matching import BipartiteGraph, Objective, WeightedBipartiteGraph, assignment, max_matching
from .randgen import expected_orthogonality
from .spectrum import Feasibility, feasible

log = logging.getLogger(__name__)

Direction = Literal["auto", "maximize", "minimize"]
Acceptance = Literal["strict", "sideways", "metropolis"]

_RULES = {"strict": K.STRICT, "sideways": K.SIDEWAYS, "metropolis": K.METROPOLIS}


@dataclass(frozen=True)
class SearchConfig:
    """Budgets and knobs of the targeted searches.

    ``objective`` steers the greedy phase: ``auto`` maximizes new pairs when
    the target lies above the expected orthogonality of random squares and
    minimizes otherwise.

    ``acceptance`` decides which switches survive: ``strict`` keeps only
    those that bring r closer to the target, ``sideways`` also keeps ties,
    ``metropolis`` additionally keeps a switch that moves r away by d with
    probability exp(-d / temperature).
    """

    target: int
    max_switch_iters: int = 10**6
    max_restarts: int = 100
    objective: Direction = "auto"
    seed: int | None = None
    acceptance: Acceptance = "metropolis"
    temperature: float = 0.6

    def __post_init__(self):
        if self.max_switch_iters < 1 or self.max_restarts < 1:
            raise ValueError("budgets must be positive")
        if self.objective not in ("auto", "maximize", "minimize"):
            raise ValueError(f"unknown objective {self.objective!r}")
        if self.acceptance not in _RULES:
            raise ValueError(f"unknown acceptance rule {self.acceptance!r}")
        if self.acceptance == "metropolis" and not self.temperature > 0:
            raise ValueError("metropolis acceptance needs a positive temperature")


@dataclass(frozen=True)
class ConstructionResult:
    found: bool
    squares: tuple[LatinGrid, ...]
    target: int
    r: int
    attempts: int
    iterations: int
    seed: int | None
    mode: str = "pair"
    history: tuple[int, ...] = field(default=(), repr=False)

    @property
    def outcome(self) -> str:
        return "found" if self.found else "exhausted"


def _rng(seed) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


# ---------------------------------------------------------------------------
# row extension
# ---------------------------------------------------------------------------


def _missing(X: np.ndarray, k: int, n: int) -> list[list[int]]:
    """0-based candidate symbols per column of the first k rows of X."""
    out = []
    for j in range(n):
        used = set(X[:k, j].tolist())
        out.append([x for x in range(n) if x not in used])
    return out


def _random_row(missing: list[list[int]], n: int, rng: np.random.Generator) -> list[int]:
    g = BipartiteGraph(n, n, tuple(tuple(m) for m in missing))
    m = max_matching(g, rng)
    if not m.is_perfect:
        raise NoPerfectMatching("candidate sets of a Latin rectangle must admit an SDR")
    return list(m.mate)


def _extend_pair_row(X, Y, k, n, objective: Objective, rng) -> list[int]:
    """Row k of X maximizing/minimizing new pairs against row k of Y.

    Column i may take symbol x when x is missing from column i; the edge is
    worth 1 when (x, Y[k, i]) is not yet among the pairs of rows 0..k-1.
    """
    seen = np.zeros(n * n, dtype=bool)
    if k:
        seen[(X[:k] * n + Y[:k]).ravel()] = True
    missing = _missing(X, k, n)
    w = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        y = Y[k, i]
        for x in missing[i]:
            w[i, x] = 0 if seen[x * n + y] else 1
    g = BipartiteGraph(n, n, tuple(tuple(m) for m in missing))
    return list(assignment(WeightedBipartiteGraph(g, w), objective, rng).mate)


def _self_weights(X: np.ndarray, k: int, n: int, missing: list[list[int]]) -> np.ndarray:
    """Gain of placing x at (k, j), scored on the overlap of X with its transpose.

    Rows 0..k-1 and columns 0..k-1 form the current overlap.  The new row
    adds cell (k, j) and its mirror (j, k) for j < k, i.e. pairs (x, y) and
    (y, x) with y = X[j, k]; the diagonal cell adds (x, x).  Cells with j > k
    have no mirror yet and score 0.
    """
    seen = np.zeros(n * n, dtype=bool)
    if k:
        B = X[:k, :k]
        seen[(B * n + B.T).ravel()] = True
    w = np.zeros((n, n), dtype=np.int64)
    for j in range(min(k, n)):
        y = X[j, k]
        for x in missing[j]:
            if x == y:
                w[j, x] = int(not seen[x * n + x])
            else:
                w[j, x] = int(not seen[x * n + y]) + int(not seen[y * n + x])
    if k < n:
        for x in missing[k]:
            w[k, x] = int(not seen[x * n + x])
    return w


def _extend_self_row(X, k, n, objective: Objective, rng) -> list[int]:
    missing = _missing(X, k, n)
    w = _self_weights(X, k, n, missing)
    g = BipartiteGraph(n, n, tuple(tuple(m) for m in missing))
    return list(assignment(WeightedBipartiteGraph(g, w), objective, rng).mate)


def overlap_pairs(A: LatinGrid) -> PairSet:
    """Pairs (A[i,j], A[j,i]) on the top-left k x k block of a k x n rectangle."""
    k = min(A.n_rows, A.n_cols)
    ps = PairSet(A.order)
    for i in range(k):
        for j in range(k):
            ps.add(int(A.cells[i, j]), int(A.cells[j, i]))
    return ps


def complete_rectangle(A: LatinGrid, rng=None) -> LatinGrid:
    """Add rows, each a randomized SDR of the columns' missing symbols."""
    rng = _rng(rng)
    n = A.order
    if A.n_cols != n:
        raise ShapeMismatch(f"expected {n} columns, got {A.n_cols}")
    X = np.zeros((n, n), dtype=np.int64)
    k = A.n_rows
    X[:k] = A.cells - 1
    missing = _missing(X, k, n)
    for row in range(k, n):
        X[row] = _random_row(missing, n, rng)
        for j in range(n):
            missing[j].remove(X[row, j])
    return LatinGrid.from_zero_based(X, n)


def extend_optimal(A: LatinGrid, B: LatinGrid, objective: Objective = "maximize", rng=None) -> LatinGrid:
    """Extend the k x n rectangle A by one row, optimizing r against the
    (k+1) x n rectangle B over the first k+1 rows."""
    n = A.order
    k = A.n_rows
    if B.order != n or A.n_cols != n or B.n_cols != n or B.n_rows != k + 1 or k >= n:
        raise ShapeMismatch(f"need A k x {n} and B (k+1) x {n} with k < {n}; got "
                            f"{A.n_rows}x{A.n_cols} and {B.n_rows}x{B.n_cols}")
    X = np.zeros((k + 1, n), dtype=np.int64)
    X[:k] = A.cells - 1
    X[k] = _extend_pair_row(X, B.cells - 1, k, n, objective, _rng(rng) if rng is not None else None)
    return LatinGrid.from_zero_based(X, n)


# ---------------------------------------------------------------------------
# A1 / A3: plain randomized completion
# ---------------------------------------------------------------------------


def _random_square_rows(n: int, rng: np.random.Generator) -> np.ndarray:
    X = np.zeros((n, n), dtype=np.int64)
    X[0] = rng.permutation(n)
    missing = [[x for x in range(n) if x != X[0, j]] for j in range(n)]
    for k in range(1, n):
        X[k] = _random_row(missing, n, rng)
        for j in range(n):
            missing[j].remove(X[k, j])
    return X


def algorithm_a1(n: int, rng=None) -> tuple[LatinGrid, LatinGrid, int]:
    """Two independently completed random squares and their orthogonality."""
    if n < 2:
        raise ValueError("pairs need n >= 2")
    rng = _rng(rng)
    X = _random_square_rows(n, rng)
    Y = _random_square_rows(n, rng)
    r = K.pair_count(X, Y, np.zeros(n * n, dtype=np.bool_))
    return LatinGrid.from_zero_based(X, n), LatinGrid.from_zero_based(Y, n), int(r)


def algorithm_a3(n: int, rng=None) -> tuple[LatinGrid, int]:
    """A randomly completed square and r(A, A^T)."""
    if n < 1:
        raise ValueError("order must be positive")
    rng = _rng(rng)
    X = _random_square_rows(n, rng)
    r = K.self_pair_count(X, np.zeros(n * n, dtype=np.bool_))
    return LatinGrid.from_zero_based(X, n), int(r)


# ---------------------------------------------------------------------------
# A2 / A4: greedy build + switching search
# ---------------------------------------------------------------------------


def greedy_pair(n: int, objective: Objective, rng) -> tuple[np.ndarray, np.ndarray]:
    """Row k of B by a random SDR, then row k of A by the optimal extension."""
    rng = _rng(rng)
    X = np.zeros((n, n), dtype=np.int64)
    Y = np.zeros((n, n), dtype=np.int64)
    X[0] = rng.permutation(n)
    Y[0] = rng.permutation(n)
    for k in range(1, n):
        Y[k] = _random_row(_missing(Y, k, n), n, rng)
        X[k] = _extend_pair_row(X, Y, k, n, objective, rng)
    return X, Y


def greedy_self(n: int, objective: Objective, rng) -> np.ndarray:
    rng = _rng(rng)
    X = np.zeros((n, n), dtype=np.int64)
    X[0] = rng.permutation(n)
    for k in range(1, n):
        X[k] = _extend_self_row(X, k, n, objective, rng)
    return X


def _direction(config: SearchConfig, n: int, mode: str) -> Objective:
    if config.objective != "auto":
        return config.objective
    return "maximize" if config.target > expected_orthogonality(n, mode) else "minimize"


def _check_target(n: int, config: SearchConfig, mode: str) -> None:
    state = feasible(n, config.target, mode)
    if state is Feasibility.INFEASIBLE:
        why = ""
        r = config.target
        if not n <= r <= n * n:
            why = f"r must lie in [{n}, {n * n}]"
        elif r == n + 1:
            why = "r = n+1 is never attainable"
        elif r == n * n - 1:
            why = "r = n^2-1 is never attainable"
        else:
            why = "genuine exception"
        raise InfeasibleTarget(f"no {mode} of order {n} with r={r}: {why}")


def _search(n: int, config: SearchConfig, mode: str, build, verify) -> ConstructionResult:
    rng = np.random.default_rng(config.seed)
    objective = _direction(config, n, mode)
    total = 0
    best = None
    history = []
    for attempt in range(1, config.max_restarts + 1):
        squares = build(n, objective, rng)
        A = squares[0]
        B = squares[1] if len(squares) > 1 else squares[0]
        iters, r = K.local_search(A, B, len(squares) == 1, config.target, config.max_switch_iters,
                                  int(rng.integers(2**31)), _RULES[config.acceptance],
                                  float(config.temperature))
        total += iters
        history.append(int(r))
        grids = tuple(LatinGrid.from_zero_based(X, n) for X in squares)
        if best is None or abs(r - config.target) < abs(best[1] - config.target):
            best = (grids, int(r))
        if r == config.target:
            actual = verify(grids)
            assert actual == config.target, f"kernel reported {r}, recount gives {actual}"
            return ConstructionResult(True, grids, config.target, actual, attempt, total,
                                      config.seed, mode, tuple(history))
        log.debug("restart %d: stuck at r=%d (target %d)", attempt, r, config.target)
    grids, r = best
    return ConstructionResult(False, grids, config.target, r, config.max_restarts, total,
                              config.seed, mode, tuple(history))


def algorithm_a2(n: int, config: SearchConfig) -> ConstructionResult:
    """Targeted search for an r-orthogonal pair of order n."""
    _check_target(n, config, "pair")
    return _search(
        n, config, "pair",
        build=lambda n, obj, rng: greedy_pair(n, obj, rng),
        verify=lambda g: orthogonality(g[0], g[1]),
    )


def algorithm_a4(n: int, config: SearchConfig) -> ConstructionResult:
    """Targeted search for an r-self-orthogonal square of order n."""
    _check_target(n, config, "self")
    return _search(
        n, config, "self",
        build=lambda n, obj, rng: (greedy_self(n, obj, rng),),
        verify=lambda g: self_orthogonality(g[0]),
    )
