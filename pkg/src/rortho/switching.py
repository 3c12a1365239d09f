"""Cycle and path switches on Latin squares and rectangles.

All rows, columns, symbols and cells are 1-based.  Every function returns a
new grid; the input is never modified.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import _kernels as K
from .core import LatinGrid
from .errors import BadStart, NotSquare, SameColumn, SameRow, SameSymbol

PATH_ATTEMPTS = 50


class MoveKind(str, Enum):
    ROW_CYCLE = "RowCycle"
    COLUMN_CYCLE = "ColumnCycle"
    SYMBOL_CYCLE = "SymbolCycle"
    COLUMN_PATH = "ColumnPath"
    SYMBOL_PATH = "SymbolPath"


CYCLE_KINDS = (MoveKind.ROW_CYCLE, MoveKind.COLUMN_CYCLE, MoveKind.SYMBOL_CYCLE)


@dataclass(frozen=True)
class SwitchMove:
    """One resolved switch.

    ``first``/``second`` are the two rows, columns or symbols; ``start`` is
    the start column (row cycle), start row (column cycle, column path) or
    start cell (symbol moves).  ``cells`` lists the 1-based cells that change.
    """

    kind: MoveKind
    first: int
    second: int
    start: int | tuple[int, int]
    cells: tuple[tuple[int, int], ...]


def _buf(A: LatinGrid) -> np.ndarray:
    return np.empty((2 * A.n_rows * A.n_cols + 2, 2), dtype=np.int64)


def _cells(buf: np.ndarray, m: int) -> tuple[tuple[int, int], ...]:
    seen = dict.fromkeys((int(i) + 1, int(j) + 1) for i, j in buf[:m])
    return tuple(seen)


def _check_index(value: int, limit: int, what: str) -> None:
    if not 1 <= value <= limit:
        raise ValueError(f"{what} {value} outside 1..{limit}")


def _row_cycle(A: LatinGrid, r: int, s: int, start_col: int) -> tuple[SwitchMove, LatinGrid]:
    if r == s:
        raise SameRow(f"rows must differ, got {r} twice")
    _check_index(r, A.n_rows, "row")
    _check_index(s, A.n_rows, "row")
    _check_index(start_col, A.n_cols, "column")
    # pi_{r,s} maps A[r,j] -> A[s,j]; column Latinness makes it a derangement
    assert np.all(A.cells[r - 1] != A.cells[s - 1])
    X = A.zero_based()
    buf = _buf(A)
    m = K.row_cycle_cells(X, r - 1, s - 1, start_col - 1, buf)
    K.swap_pairwise(X, buf, m)
    move = SwitchMove(MoveKind.ROW_CYCLE, r, s, start_col, _cells(buf, m))
    return move, LatinGrid.from_zero_based(X, A.order)


def row_cycle(A: LatinGrid, r: int, s: int, start_col: int) -> LatinGrid:
    """Exchange rows r and s on the cycle of pi_{r,s} through ``start_col``."""
    return _row_cycle(A, r, s, start_col)[1]


def _column_cycle(A: LatinGrid, c: int, d: int, start_row: int) -> tuple[SwitchMove, LatinGrid]:
    if not A.is_square:
        raise NotSquare("column cycles need a complete square")
    if c == d:
        raise SameColumn(f"columns must differ, got {c} twice")
    _check_index(c, A.n_cols, "column")
    _check_index(d, A.n_cols, "column")
    _check_index(start_row, A.n_rows, "row")
    X = A.zero_based()
    buf = _buf(A)
    m = K.row_cycle_cells(X.T, c - 1, d - 1, start_row - 1, buf)
    buf[:m] = buf[:m, ::-1].copy()
    K.swap_pairwise(X, buf, m)
    move = SwitchMove(MoveKind.COLUMN_CYCLE, c, d, start_row, _cells(buf, m))
    return move, LatinGrid.from_zero_based(X, A.order)


def column_cycle(A: LatinGrid, c: int, d: int, start_row: int) -> LatinGrid:
    """Row cycle of the transpose, transposed back."""
    return _column_cycle(A, c, d, start_row)[1]


def _symbol_cycle(A: LatinGrid, a: int, b: int, start_cell: tuple[int, int]) -> tuple[SwitchMove, LatinGrid]:
    if not A.is_square:
        raise NotSquare("symbol cycles need a complete square")
    if a == b:
        raise SameSymbol(f"symbols must differ, got {a} twice")
    _check_index(a, A.order, "symbol")
    _check_index(b, A.order, "symbol")
    i, j = start_cell
    _check_index(i, A.n_rows, "row")
    _check_index(j, A.n_cols, "column")
    if A.cell(i, j) not in (a, b):
        raise BadStart(f"cell {start_cell} holds {A.cell(i, j)}, not {a} or {b}")
    X = A.zero_based()
    buf = _buf(A)
    m = K.symbol_cycle_cells(X, a - 1, b - 1, i - 1, j - 1, buf)
    K.swap_symbols(X, buf, m, a - 1, b - 1)
    move = SwitchMove(MoveKind.SYMBOL_CYCLE, a, b, (i, j), _cells(buf, m))
    return move, LatinGrid.from_zero_based(X, A.order)


def symbol_cycle(A: LatinGrid, a: int, b: int, start_cell: tuple[int, int]) -> LatinGrid:
    """Swap symbols a and b on the a/b cycle through ``start_cell``."""
    return _symbol_cycle(A, a, b, start_cell)[1]


def _column_path(A: LatinGrid, c: int, d: int, start_row: int) -> tuple[SwitchMove, LatinGrid]:
    if c == d:
        raise SameColumn(f"columns must differ, got {c} twice")
    _check_index(c, A.n_cols, "column")
    _check_index(d, A.n_cols, "column")
    _check_index(start_row, A.n_rows, "row")
    x = A.cell(start_row, c)
    if x in A.cells[:, d - 1]:
        raise BadStart(f"symbol {x} at ({start_row}, {c}) already occurs in column {d}")
    X = A.zero_based()
    buf = _buf(A)
    m = K.column_path_cells(X, c - 1, d - 1, start_row - 1, buf)
    K.swap_pairwise(X, buf, m)
    move = SwitchMove(MoveKind.COLUMN_PATH, c, d, start_row, _cells(buf, m))
    return move, LatinGrid.from_zero_based(X, A.order)


def column_path(A: LatinGrid, c: int, d: int, start_row: int) -> LatinGrid:
    """Follow f_{c,d} from ``start_row``, swapping the c and d entries of each row.

    From row i, the row j whose column-c entry equals A[i, d] is next; the
    walk stops when no such row exists.
    """
    return _column_path(A, c, d, start_row)[1]


def _symbol_path(A: LatinGrid, a: int, b: int, start_cell: tuple[int, int]) -> tuple[SwitchMove, LatinGrid]:
    if a == b:
        raise SameSymbol(f"symbols must differ, got {a} twice")
    _check_index(a, A.order, "symbol")
    _check_index(b, A.order, "symbol")
    i, j = start_cell
    _check_index(i, A.n_rows, "row")
    _check_index(j, A.n_cols, "column")
    x = A.cell(i, j)
    if x not in (a, b):
        raise BadStart(f"cell {start_cell} holds {x}, not {a} or {b}")
    other = b if x == a else a
    if other in A.cells[:, j - 1]:
        raise BadStart(f"symbol {other} already occurs in column {j}")
    X = A.zero_based()
    buf = _buf(A)
    m = K.symbol_path_cells(X, a - 1, b - 1, i - 1, j - 1, buf)
    K.swap_symbols(X, buf, m, a - 1, b - 1)
    move = SwitchMove(MoveKind.SYMBOL_PATH, a, b, (i, j), _cells(buf, m))
    return move, LatinGrid.from_zero_based(X, A.order)


def symbol_path(A: LatinGrid, a: int, b: int, start_cell: tuple[int, int]) -> LatinGrid:
    """Swap a and b along the alternating row/column path from ``start_cell``."""
    return _symbol_path(A, a, b, start_cell)[1]


def _two_distinct(rng: np.random.Generator, n: int) -> tuple[int, int]:
    p, q = rng.choice(n, size=2, replace=False)
    return int(p) + 1, int(q) + 1


def _random_column_path(A: LatinGrid, rng: np.random.Generator):
    for _ in range(PATH_ATTEMPTS):
        c, d = _two_distinct(rng, A.n_cols)
        i = int(rng.integers(A.n_rows)) + 1
        if A.cell(i, c) not in A.cells[:, d - 1]:
            return _column_path(A, c, d, i)
    return None


def _random_symbol_path(A: LatinGrid, rng: np.random.Generator):
    for _ in range(PATH_ATTEMPTS):
        a, b = _two_distinct(rng, A.order)
        i = int(rng.integers(A.n_rows)) + 1
        x = a if rng.integers(2) == 0 else b
        j = int(np.flatnonzero(A.cells[i - 1] == x)[0]) + 1
        other = b if x == a else a
        if other not in A.cells[:, j - 1]:
            return _symbol_path(A, a, b, (i, j))
    return None


def _random_cycle(A: LatinGrid, kind: MoveKind, rng: np.random.Generator):
    if kind is MoveKind.ROW_CYCLE:
        r, s = _two_distinct(rng, A.n_rows)
        return _row_cycle(A, r, s, int(rng.integers(A.n_cols)) + 1)
    if kind is MoveKind.COLUMN_CYCLE:
        c, d = _two_distinct(rng, A.n_cols)
        return _column_cycle(A, c, d, int(rng.integers(A.n_rows)) + 1)
    a, b = _two_distinct(rng, A.order)
    i = int(rng.integers(A.n_rows)) + 1
    j = int(np.flatnonzero(A.cells[i - 1] == a)[0]) + 1
    return _symbol_cycle(A, a, b, (i, j))


def random_move(A: LatinGrid, rng: np.random.Generator) -> tuple[SwitchMove, LatinGrid]:
    """Draw an applicable move kind uniformly, then uniform parameters for it.

    Path starts are rejection-sampled; after ``PATH_ATTEMPTS`` misses the
    draw falls back to a cycle kind.
    """
    k, n = A.n_rows, A.n_cols
    cycles = []
    if k >= 2:
        cycles.append(MoveKind.ROW_CYCLE)
    if A.is_square:
        cycles += [MoveKind.COLUMN_CYCLE, MoveKind.SYMBOL_CYCLE]
    paths = [MoveKind.COLUMN_PATH, MoveKind.SYMBOL_PATH] if 1 <= k < A.order and n >= 2 else []
    kinds = cycles + paths
    if not kinds or A.order < 2:
        raise ValueError(f"no switch applies to a {k}x{n} grid of order {A.order}")

    kind = kinds[int(rng.integers(len(kinds)))]
    if kind is MoveKind.COLUMN_PATH:
        res = _random_column_path(A, rng)
    elif kind is MoveKind.SYMBOL_PATH:
        res = _random_symbol_path(A, rng)
    else:
        return _random_cycle(A, kind, rng)
    if res is not None:
        return res
    if not cycles:
        # a 1-row rectangle always admits a column path; keep drawing
        return random_move(A, rng)
    return _random_cycle(A, cycles[int(rng.integers(len(cycles)))], rng)
