"""Bipartite matching: systems of distinct representatives and assignment.

Left vertices are columns of a Latin rectangle, right vertices are symbols;
both are indexed from 0 here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from .errors import NoPerfectMatching

Objective = Literal["maximize", "minimize"]


@dataclass(frozen=True)
class BipartiteGraph:
    n_left: int
    n_right: int
    adj: tuple[tuple[int, ...], ...]

    @classmethod
    def from_sets(cls, sets: Sequence[Sequence[int]], n_right: int | None = None) -> BipartiteGraph:
        adj = tuple(tuple(sorted(set(s))) for s in sets)
        if n_right is None:
            n_right = max((max(a) for a in adj if a), default=-1) + 1
        for a in adj:
            if a and not (0 <= a[0] and a[-1] < n_right):
                raise ValueError("edge endpoint out of range")
        return cls(len(adj), n_right, adj)


@dataclass(frozen=True)
class WeightedBipartiteGraph:
    """Bipartite graph with a small non-negative integer weight on every edge.

    ``weights`` is an n_left x n_right integer matrix; entries off the edge set
    are ignored.
    """

    graph: BipartiteGraph
    weights: np.ndarray

    def weight(self, i: int, j: int) -> int:
        return int(self.weights[i, j])


@dataclass(frozen=True)
class Matching:
    """``mate[i]`` is the right vertex matched to left vertex i, or -1."""

    mate: tuple[int, ...]
    n_right: int

    @property
    def size(self) -> int:
        return sum(1 for m in self.mate if m >= 0)

    @property
    def is_perfect(self) -> bool:
        return len(self.mate) == self.n_right and self.size == self.n_right

    def edges(self) -> list[tuple[int, int]]:
        return [(i, m) for i, m in enumerate(self.mate) if m >= 0]

    def weight(self, wg: WeightedBipartiteGraph) -> int:
        return sum(wg.weight(i, m) for i, m in self.edges())


def max_matching(g: BipartiteGraph, rng: np.random.Generator | None = None) -> Matching:
    """Maximum-cardinality matching by augmenting paths (Kuhn).

    With ``rng`` the left vertices and each adjacency list are scanned in a
    shuffled order, so different seeds reach different maximum matchings.
    """
    order = list(range(g.n_left))
    adj = [list(a) for a in g.adj]
    if rng is not None:
        rng.shuffle(order)
        for a in adj:
            rng.shuffle(a)

    mate_left = [-1] * g.n_left
    mate_right = [-1] * g.n_right

    def augment(u: int, visited: list[bool]) -> bool:
        for v in adj[u]:
            if visited[v]:
                continue
            visited[v] = True
            if mate_right[v] < 0 or augment(mate_right[v], visited):
                mate_left[u] = v
                mate_right[v] = u
                return True
        return False

    # cheap greedy pass, then augment what is left
    for u in order:
        for v in adj[u]:
            if mate_right[v] < 0:
                mate_left[u] = v
                mate_right[v] = u
                break
    for u in order:
        if mate_left[u] < 0:
            augment(u, [False] * g.n_right)
    return Matching(tuple(mate_left), g.n_right)


def hungarian(cost: np.ndarray) -> list[int]:
    """Minimum-cost perfect assignment of a square cost matrix, O(n^3).

    Shortest augmenting paths with row/column potentials.  Returns ``col``
    with ``col[i]`` the column assigned to row i.
    """
    n = cost.shape[0]
    c = cost.tolist()
    inf = float("inf")
    u = [0.0] * (n + 1)
    v = [0.0] * (n + 1)
    p = [0] * (n + 1)  # p[j]: row (1-based) matched to column j; column 0 is a sentinel
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv = [inf] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = p[j0]
            ci = c[i0 - 1]
            ui = u[i0]
            delta = inf
            j1 = 0
            for j in range(1, n + 1):
                if not used[j]:
                    cur = ci[j - 1] - ui - v[j]
                    if cur < minv[j]:
                        minv[j] = cur
                        way[j] = j0
                    if minv[j] < delta:
                        delta = minv[j]
                        j1 = j
            for j in range(n + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
    col = [0] * n
    for j in range(1, n + 1):
        col[p[j] - 1] = j - 1
    return col


def assignment(
    wg: WeightedBipartiteGraph,
    objective: Objective = "maximize",
    rng: np.random.Generator | None = None,
) -> Matching:
    """Perfect matching of maximum (or minimum) total weight.

    Weights are small non-negative integers (0/1 for row extension of pairs).
    Minimization is maximization of the complemented weights ``top - w``.
    Non-edges get a cost larger than any perfect matching on edges can reach,
    so they are only used when no perfect matching exists, which is reported.
    With ``rng`` rows and columns are permuted first, so ties between optima
    are broken at random.
    """
    g = wg.graph
    n = g.n_left
    if n != g.n_right:
        raise NoPerfectMatching(f"{g.n_left} left vs {g.n_right} right vertices")
    if objective not in ("maximize", "minimize"):
        raise ValueError(f"unknown objective {objective!r}")
    w = np.asarray(wg.weights, dtype=np.int64)
    if w.size and w.min() < 0:
        raise ValueError("weights must be non-negative")
    top = max(int(w.max()) if w.size else 0, 1)
    gain = w if objective == "maximize" else top - w

    big = n * top + 1
    cost = np.full((n, n), big, dtype=np.int64)
    for i, nbrs in enumerate(g.adj):
        for j in nbrs:
            cost[i, j] = top - gain[i, j]

    rows = np.arange(n)
    cols = np.arange(n)
    if rng is not None:
        rows = rng.permutation(n)
        cols = rng.permutation(n)
    sol = hungarian(cost[np.ix_(rows, cols)])
    mate = [-1] * n
    for i, j in enumerate(sol):
        mate[rows[i]] = int(cols[j])
    if any(cost[i, mate[i]] >= big for i in range(n)):
        raise NoPerfectMatching("graph has no perfect matching")
    return Matching(tuple(mate), n)
