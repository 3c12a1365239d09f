import numpy as np
import pytest
from hypothesis import given, settings

from conftest import latin_squares
from oracles import is_latin, pairs, transposed
from rortho import (
    LatinGrid,
    PairSet,
    candidate_sets,
    empty_rectangle,
    missing_pairs,
    orthogonality,
    self_orthogonality,
    transpose,
    validate,
)
from rortho.errors import NotLatin, NotSquare, OrderMismatch


def test_validate_accepts_square_and_rectangle():
    A = validate([[1, 2, 3], [2, 3, 1], [3, 1, 2]])
    assert A.order == 3 and A.is_square
    R = validate([[1, 2, 3], [3, 1, 2]])
    assert (R.n_rows, R.n_cols, R.order) == (2, 3, 3)
    assert not R.is_square


@pytest.mark.parametrize(
    "rows, kind, pos",
    [
        ([[1, 2], [2, 3]], "range", (2, 2)),
        ([[1, 1], [2, 1]], "row", (1, 2)),
        ([[1, 2], [1, 2]], "col", (2, 1)),
        ([[1, 2], [2]], "shape", (2, 1)),
        ([[0, 1], [1, 0]], "range", (1, 1)),
    ],
)
def test_validate_reports_first_violation(rows, kind, pos):
    with pytest.raises(NotLatin) as exc:
        validate(rows)
    assert exc.value.kind == kind
    assert exc.value.position == pos


def test_validate_rejects_non_integers():
    with pytest.raises(NotLatin):
        validate([[1.5, 2], [2, 1]])


def test_grid_is_immutable():
    A = validate([[1, 2], [2, 1]])
    with pytest.raises(ValueError):
        A.cells[0, 0] = 2


def test_cell_is_one_based():
    A = validate([[1, 2, 3], [2, 3, 1], [3, 1, 2]])
    assert A.cell(1, 3) == 3
    assert A.cell(3, 1) == 3


def test_zero_based_round_trip():
    A = validate([[2, 1, 3], [3, 2, 1], [1, 3, 2]])
    assert LatinGrid.from_zero_based(A.zero_based(), 3) == A


def test_orthogonality_of_classic_mols():
    A = validate([[1, 2, 3], [2, 3, 1], [3, 1, 2]])
    B = validate([[1, 2, 3], [3, 1, 2], [2, 3, 1]])
    assert orthogonality(A, B) == 9
    assert missing_pairs(A, B) == []
    assert orthogonality(A, A) == 3


def test_orthogonality_needs_matching_squares():
    A = validate([[1, 2], [2, 1]])
    with pytest.raises(OrderMismatch):
        orthogonality(A, validate([[1, 2, 3], [2, 3, 1], [3, 1, 2]]))
    with pytest.raises(NotSquare):
        orthogonality(validate([[1, 2, 3]]), validate([[2, 3, 1]]))


def test_r42_pair_missing_pairs(pair_r42):
    A, B = pair_r42
    assert orthogonality(A, B) == 42
    assert missing_pairs(A, B) == [(2, 7), (3, 2), (3, 4), (4, 5), (4, 7), (6, 1), (7, 3)]


def test_pairset_roundtrip():
    ps = PairSet(4)
    ps.add(1, 4)
    ps.add(3, 2)
    assert (1, 4) in ps and (4, 1) not in ps
    assert sorted(ps) == [(1, 4), (3, 2)]
    assert len(ps) == 2
    assert len(ps.missing()) == 14


def test_superposition_on_rectangles_uses_overlap():
    A = validate([[1, 2, 3], [2, 3, 1]], order=3)
    B = validate([[3, 1, 2]], order=3)
    assert sorted(PairSet.superposition(A, B)) == [(1, 3), (2, 1), (3, 2)]


def test_transpose_and_self_orthogonality():
    A = validate([[1, 2, 3], [3, 1, 2], [2, 3, 1]])
    assert transpose(transpose(A)) == A
    sym = validate([[1, 2, 3], [2, 3, 1], [3, 1, 2]])
    assert self_orthogonality(sym) == 3
    with pytest.raises(NotSquare):
        self_orthogonality(validate([[1, 2, 3]]))


def test_candidate_sets_and_empty_rectangle():
    R = validate([[1, 2, 3], [2, 3, 1]], order=3)
    assert candidate_sets(R) == [frozenset({3}), frozenset({1}), frozenset({2})]
    E = empty_rectangle(4)
    assert (E.n_rows, E.n_cols, E.order) == (0, 4, 4)
    assert candidate_sets(E) == [frozenset({1, 2, 3, 4})] * 4


@settings(max_examples=300, deadline=None)
@given(latin_squares(), latin_squares())
def test_orthogonality_matches_set_oracle(A, B):
    if A.order != B.order:
        B = validate(np.roll(A.cells, 1, axis=0))
    a, b = A.rows(), B.rows()
    assert is_latin(a, A.order) and is_latin(b, A.order)
    assert orthogonality(A, B) == len(pairs(a, b))
    assert self_orthogonality(A) == len(pairs(a, transposed(a)))


def test_euler_graeco_latin_square():
    latin = validate([[1, 2, 3, 4], [2, 1, 4, 3], [3, 4, 1, 2], [4, 3, 2, 1]])
    greek = validate([[1, 4, 2, 3], [3, 2, 4, 1], [4, 1, 3, 2], [2, 3, 1, 4]])
    assert orthogonality(latin, greek) == 16
    assert orthogonality(latin, latin) == 4


def test_order_one():
    A = validate([[1]])
    assert orthogonality(A, A) == 1 == self_orthogonality(A)
