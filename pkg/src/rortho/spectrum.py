"""Which (n, r) admit r-orthogonal pairs or r-self-orthogonal squares."""

from __future__ import annotations

from enum import Enum
from typing import Literal

Mode = Literal["pair", "self"]


class Feasibility(str, Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    UNKNOWN = "unknown"


def _table(rows: dict[int, tuple[int, ...]]) -> frozenset[tuple[int, int]]:
    return frozenset((n, r) for n, rs in rows.items() for r in rs)


# genuine exceptions inside n <= r <= n^2, r not in {n+1, n^2-1}
PAIR_EXCEPTIONS = _table({
    2: (4,),
    3: (5, 6, 7),
    4: (7, 10, 11, 13, 14),
    5: (8, 9, 20, 22, 23),
    6: (33, 36),
})
SELF_EXCEPTIONS = _table({
    2: (4,),
    3: (5, 6, 7, 9),
    4: (6, 7, 8, 10, 11, 12, 13, 14),
    5: (8, 9, 12, 16, 18, 20, 22, 23),
    6: (32, 33, 34, 36),
    7: (46,),
})
# existence of a 193-self-orthogonal square of order 14 is open
SELF_OPEN = frozenset({(14, 193)})


def feasible(n: int, r: int, mode: Mode) -> Feasibility:
    if mode == "pair":
        if n < 2:
            raise ValueError("pair mode is defined for n >= 2")
        exceptions = PAIR_EXCEPTIONS
    elif mode == "self":
        if n < 1:
            raise ValueError("order must be positive")
        exceptions = SELF_EXCEPTIONS
    else:
        raise ValueError(f"unknown mode {mode!r}")

    if not n <= r <= n * n or r in (n + 1, n * n - 1) or (n, r) in exceptions:
        return Feasibility.INFEASIBLE
    if mode == "self" and (n, r) in SELF_OPEN:
        return Feasibility.UNKNOWN
    return Feasibility.FEASIBLE


def feasible_set(n: int, mode: Mode) -> list[int]:
    return [r for r in range(n, n * n + 1) if feasible(n, r, mode) is Feasibility.FEASIBLE]
