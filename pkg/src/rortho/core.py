"""Latin grids, validation and orthogonality counting.

Symbols are the integers ``1..n``.  Positions in errors and in the public
helpers are 1-based; the stored array uses numpy's 0-based indexing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import NotLatin, NotSquare, OrderMismatch


@dataclass(frozen=True, eq=False)
class LatinGrid:
    """A validated k x m array over symbols 1..order (a rectangle or a square).

    ``order`` is the symbol range.  For an ordinary Latin rectangle it equals
    the number of columns; the transpose of a k x n rectangle is an n x k grid
    that keeps order n.
    """

    cells: np.ndarray
    order: int

    @property
    def n(self) -> int:
        return self.order

    @property
    def n_rows(self) -> int:
        return self.cells.shape[0]

    @property
    def n_cols(self) -> int:
        return self.cells.shape[1]

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols == self.order

    def cell(self, i: int, j: int) -> int:
        """Symbol at 1-based position (i, j)."""
        return int(self.cells[i - 1, j - 1])

    def rows(self) -> list[list[int]]:
        return self.cells.tolist()

    def zero_based(self) -> np.ndarray:
        """Writable int64 copy with symbols shifted to 0..order-1."""
        return self.cells.astype(np.int64) - 1

    @classmethod
    def from_zero_based(cls, arr: np.ndarray, order: int | None = None) -> LatinGrid:
        """Wrap a trusted 0-based array without re-validating it."""
        cells = np.array(arr, dtype=np.int64) + 1
        cells.setflags(write=False)
        return cls(cells, order if order is not None else max(cells.shape))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LatinGrid):
            return NotImplemented
        return self.order == other.order and np.array_equal(self.cells, other.cells)

    def __hash__(self) -> int:
        return hash((self.order, self.cells.shape, self.cells.tobytes()))

    def __repr__(self) -> str:
        return f"LatinGrid(order={self.order}, rows={self.rows()})"


def validate(grid: Sequence[Sequence[int]] | np.ndarray, order: int | None = None) -> LatinGrid:
    """Check the Latin property and return a :class:`LatinGrid`.

    Cells are scanned in row-major order; the first cell that is out of
    range, repeats a symbol of its row, or repeats a symbol of its column
    is reported.  ``order`` defaults to the longer side of the grid.
    """
    if isinstance(grid, LatinGrid):
        order = grid.order if order is None else order
        grid = grid.cells
    rows = [list(r) for r in grid]
    if rows:
        width = len(rows[0])
        for i, row in enumerate(rows, 1):
            if len(row) != width:
                raise NotLatin("shape", (i, len(row)), f"expected {width} entries")
    else:
        width = np.shape(grid)[1] if np.ndim(grid) == 2 else 0
    k = len(rows)
    n = max(k, width) if order is None else order
    if n < 1:
        raise NotLatin("shape", (0, 0), "empty grid needs an explicit order")
    if k > n or width > n:
        raise NotLatin("shape", (k, width), f"larger than order {n}")

    col_seen = [set() for _ in range(width)]
    for i, row in enumerate(rows, 1):
        row_seen = set()
        for j, x in enumerate(row, 1):
            if isinstance(x, bool) or int(x) != x or not 1 <= x <= n:
                raise NotLatin("range", (i, j), f"symbol {x!r} not in 1..{n}")
            x = int(x)
            if x in row_seen:
                raise NotLatin("row", (i, j), f"symbol {x} repeated")
            if x in col_seen[j - 1]:
                raise NotLatin("col", (i, j), f"symbol {x} repeated")
            row_seen.add(x)
            col_seen[j - 1].add(x)

    cells = np.array(rows, dtype=np.int64).reshape(k, width)
    cells.setflags(write=False)
    return LatinGrid(cells, n)


class PairSet:
    """Membership set of ordered symbol pairs (a, b) in [n] x [n].

    Backed by an n*n boolean array indexed by (a-1)*n + (b-1).
    """

    def __init__(self, n: int):
        self.n = n
        self._bits = np.zeros(n * n, dtype=bool)

    @classmethod
    def superposition(cls, A: LatinGrid, B: LatinGrid) -> PairSet:
        """Pairs (A[i,j], B[i,j]) over the cells the two grids share."""
        if A.order != B.order:
            raise OrderMismatch(f"orders {A.order} and {B.order} differ")
        k = min(A.n_rows, B.n_rows)
        m = min(A.n_cols, B.n_cols)
        ps = cls(A.order)
        keys = (A.cells[:k, :m] - 1) * A.order + (B.cells[:k, :m] - 1)
        ps._bits[keys.ravel()] = True
        return ps

    def add(self, a: int, b: int) -> None:
        self._bits[(a - 1) * self.n + (b - 1)] = True

    def __contains__(self, pair: tuple[int, int]) -> bool:
        a, b = pair
        return bool(self._bits[(a - 1) * self.n + (b - 1)])

    def __len__(self) -> int:
        return int(self._bits.sum())

    def __iter__(self) -> Iterator[tuple[int, int]]:
        for key in np.flatnonzero(self._bits):
            a, b = divmod(int(key), self.n)
            yield a + 1, b + 1

    def missing(self) -> list[tuple[int, int]]:
        return [(int(k) // self.n + 1, int(k) % self.n + 1) for k in np.flatnonzero(~self._bits)]


def _check_pair(A: LatinGrid, B: LatinGrid) -> None:
    if A.order != B.order:
        raise OrderMismatch(f"orders {A.order} and {B.order} differ")
    if not (A.is_square and B.is_square):
        raise NotSquare("orthogonality is defined for complete squares")


def orthogonality(A: LatinGrid, B: LatinGrid) -> int:
    """Number of distinct ordered pairs when A and B are superimposed."""
    _check_pair(A, B)
    return len(PairSet.superposition(A, B))


def missing_pairs(A: LatinGrid, B: LatinGrid) -> list[tuple[int, int]]:
    _check_pair(A, B)
    return PairSet.superposition(A, B).missing()


def transpose(A: LatinGrid) -> LatinGrid:
    cells = np.ascontiguousarray(A.cells.T)
    cells.setflags(write=False)
    return LatinGrid(cells, A.order)


def self_orthogonality(A: LatinGrid) -> int:
    if not A.is_square:
        raise NotSquare(f"{A.n_rows}x{A.n_cols} grid is not a square")
    return orthogonality(A, transpose(A))


def candidate_sets(A: LatinGrid) -> list[frozenset[int]]:
    """For each column, the symbols not yet used in it."""
    full = set(range(1, A.order + 1))
    return [frozenset(full.difference(A.cells[:, j].tolist())) for j in range(A.n_cols)]


def empty_rectangle(n: int) -> LatinGrid:
    cells = np.zeros((0, n), dtype=np.int64)
    cells.setflags(write=False)
    return LatinGrid(cells, n)
