"""Randomized invariants, at least 1000 cases each over orders 2..12."""

import tempfile
from pathlib import Path

import numpy as np
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from conftest import latin_rectangles, latin_squares
from oracles import is_latin
from rortho import (
    complete_rectangle,
    orthogonality,
    self_orthogonality,
    validate,
    verify_certificate,
)
from rortho.cli import run
from rortho.switching import (
    MoveKind,
    _column_path,
    _symbol_path,
    column_cycle,
    random_move,
    row_cycle,
    symbol_cycle,
)

MANY = settings(max_examples=1000, deadline=None, suppress_health_check=[HealthCheck.too_slow])
seeds = st.integers(0, 2**32 - 1)


@MANY
@given(latin_squares(), seeds)
def test_switches_keep_squares_latin(A, seed):
    rng = np.random.default_rng(seed)
    for _ in range(5):
        _, A = random_move(A, rng)
        assert is_latin(A.rows(), A.order)


@MANY
@given(latin_rectangles(), seeds)
def test_switches_keep_rectangles_latin(R, seed):
    rng = np.random.default_rng(seed)
    for _ in range(5):
        _, R = random_move(R, rng)
        assert is_latin(R.rows(), R.order)
        assert R.n_rows < R.order


@MANY
@given(latin_squares(), st.data())
def test_cycles_are_involutions(A, data):
    n = A.order
    pick = st.integers(1, n)
    r, s = data.draw(st.lists(pick, min_size=2, max_size=2, unique=True))
    col = data.draw(pick)
    assert row_cycle(row_cycle(A, r, s, col), r, s, col) == A
    assert column_cycle(column_cycle(A, r, s, col), r, s, col) == A
    i = data.draw(pick)
    j = int(np.flatnonzero(A.cells[i - 1] == r)[0]) + 1
    assert symbol_cycle(symbol_cycle(A, r, s, (i, j)), r, s, (i, j)) == A


@MANY
@given(latin_rectangles(), seeds)
def test_paths_reverse_from_far_end(R, seed):
    move, S = random_move(R, np.random.default_rng(seed))
    if move.kind is MoveKind.COLUMN_PATH:
        assert _column_path(S, move.first, move.second, move.cells[-1][0])[1] == R
    elif move.kind is MoveKind.SYMBOL_PATH:
        assert _symbol_path(S, move.first, move.second, move.cells[-1])[1] == R


@MANY
@given(latin_squares(), seeds)
def test_orthogonality_symmetric_and_bounded(A, seed):
    n = A.order
    B = complete_rectangle(validate(A.cells[:0], order=n), seed)
    r = orthogonality(A, B)
    assert r == orthogonality(B, A)
    assert n <= r <= n * n
    assert n <= self_orthogonality(A) <= n * n


@MANY
@given(latin_rectangles(proper=False), seeds)
def test_completion_always_succeeds(R, seed):
    S = complete_rectangle(R, seed)
    assert S.is_square
    assert S.rows()[: R.n_rows] == R.rows()
    assert is_latin(S.rows(), S.order)


@MANY
@given(st.integers(2, 12), st.sampled_from(["pair", "self"]), st.integers(0, 2**31))
def test_generate_verify_round_trip(n, mode, seed):
    with tempfile.TemporaryDirectory() as d:
        path = Path(d) / "cert.txt"
        assert run(["generate", "-n", str(n), "--mode", mode, "--seed", str(seed), "-o", str(path)]) == 0
        rep = verify_certificate(path)
        assert rep.mode == mode and rep.n == n
        assert rep.r == rep.claimed
