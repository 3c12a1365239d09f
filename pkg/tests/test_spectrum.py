import pytest

from oracles import transcribed_feasibility
from rortho.spectrum import PAIR_EXCEPTIONS, SELF_EXCEPTIONS, Feasibility, feasible, feasible_set


def test_exception_counts():
    assert len(PAIR_EXCEPTIONS) == 16
    assert len(SELF_EXCEPTIONS) == 26


@pytest.mark.parametrize(
    "n, r, mode, want",
    [
        (5, 8, "pair", Feasibility.INFEASIBLE),
        (7, 48, "pair", Feasibility.INFEASIBLE),
        (14, 193, "self", Feasibility.UNKNOWN),
        (14, 193, "pair", Feasibility.FEASIBLE),
        (7, 49, "pair", Feasibility.FEASIBLE),
        (1, 1, "self", Feasibility.FEASIBLE),
        (7, 46, "self", Feasibility.INFEASIBLE),
        (7, 46, "pair", Feasibility.FEASIBLE),
    ],
)
def test_feasible_examples(n, r, mode, want):
    assert feasible(n, r, mode) is want


def test_feasible_sets():
    assert feasible_set(5, "pair") == [5, 7] + list(range(10, 20)) + [21, 25]
    assert feasible_set(2, "pair") == [2]
    assert feasible_set(3, "self") == [3]
    assert feasible_set(1, "self") == [1]
    assert 193 not in feasible_set(14, "self")


def test_pair_mode_needs_order_two():
    with pytest.raises(ValueError):
        feasible(1, 1, "pair")
    with pytest.raises(ValueError):
        feasible(4, 4, "triple")


@pytest.mark.parametrize("mode", ["pair", "self"])
def test_counts_follow_set_algebra(mode):
    table = PAIR_EXCEPTIONS if mode == "pair" else SELF_EXCEPTIONS
    for n in range(2, 21):
        gaps = len({n + 1, n * n - 1})
        expected = (n * n - n + 1) - gaps - sum(1 for m, _ in table if m == n)
        if mode == "self" and n == 14:
            expected -= 1
        assert len(feasible_set(n, mode)) == expected


@pytest.mark.parametrize("mode", ["pair", "self"])
def test_matches_transcription(mode):
    for n in range(1 if mode == "self" else 2, 21):
        for r in range(0, n * n + 2):
            assert feasible(n, r, mode).value == transcribed_feasibility(n, r, mode)
