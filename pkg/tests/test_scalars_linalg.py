from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nilforms import InvalidParameter, as_scalar, format_scalar, parse_scalar
from nilforms.linalg import (
    det,
    in_row_space,
    invert,
    mat_vec,
    nullspace,
    rank,
    rref,
    solve,
)
from nilforms.scalars import height, rational_sqrt

from oracles import sympy_matrix


def test_as_scalar_accepts_exact_types():
    assert as_scalar(3) == Fraction(3)
    assert as_scalar(Fraction(2, 7)) == Fraction(2, 7)
    assert as_scalar("5/9") == Fraction(5, 9)


def test_as_scalar_rejects_float():
    with pytest.raises(InvalidParameter):
        as_scalar(0.5)


@pytest.mark.parametrize("value,text", [
    (Fraction(3), "3"),
    (Fraction(-1, 2), "-1/2"),
    (Fraction(0), "0"),
])
def test_format_scalar(value, text):
    assert format_scalar(value) == text
    assert parse_scalar(text) == value


def test_height():
    assert height(Fraction(0)) == 0
    assert height(Fraction(-3)) == 3
    assert height(Fraction(2, 5)) == 5


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(Fraction(2)) is None
    assert rational_sqrt(Fraction(0)) == 0


MAT = [[Fraction(v) for v in row] for row in [[2, 1, 1], [1, 3, 2], [1, 0, 0]]]


def test_det_matches_sympy():
    assert det([row[:] for row in MAT]) == sympy_matrix(MAT).det()


def test_invert_round_trip():
    inv = invert([row[:] for row in MAT])
    for i in range(3):
        col = mat_vec(inv, [row[i] for row in MAT])
        assert col == [Fraction(1) if j == i else Fraction(0) for j in range(3)]


@given(st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4),
                min_size=2, max_size=5))
def test_rank_and_nullspace_against_sympy(entries):
    rows = [[Fraction(v) for v in row] for row in entries]
    mat = sympy_matrix(rows)
    assert rank([r[:] for r in rows]) == mat.rank()
    kernel = nullspace([r[:] for r in rows], 4)
    assert len(kernel) == 4 - mat.rank()
    for vec in kernel:
        assert all(sum(row[j] * vec[j] for j in range(4)) == 0 for row in rows)


def test_rref_is_idempotent():
    reduced, pivots = rref([row[:] for row in MAT])
    again, pivots2 = rref([row[:] for row in reduced])
    assert reduced == again
    assert pivots == pivots2


def test_solve_finds_a_preimage():
    rows = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
    sol = solve([r[:] for r in rows], [Fraction(3), Fraction(6)])
    assert sol is not None
    assert [sum(row[j] * sol[j] for j in range(2)) for row in rows] \
        == [Fraction(3), Fraction(6)]
    assert solve([r[:] for r in rows], [Fraction(3), Fraction(7)]) is None


def test_in_row_space():
    basis, pivots = rref([[Fraction(1), Fraction(0), Fraction(1)],
                          [Fraction(0), Fraction(1), Fraction(1)]])
    assert in_row_space(basis, pivots, [Fraction(2), Fraction(3), Fraction(5)])
    assert not in_row_space(basis, pivots, [Fraction(0), Fraction(0), Fraction(1)])
