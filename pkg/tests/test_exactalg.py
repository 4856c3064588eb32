from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symcontain.exactalg import (Echelon, ExactMatrix, as_rational, format_rational,
                                 intersect_rows, nullspace, nullspace_rows, rank,
                                 row_space_contains)


@pytest.mark.parametrize("value,expected", [
    (3, Fraction(3)), ("5/7", Fraction(5, 7)), ("-2/4", Fraction(-1, 2)), (Fraction(1, 3), Fraction(1, 3)),
])
def test_as_rational(value, expected):
    assert as_rational(value) == expected


@pytest.mark.parametrize("bad", [True, 1.5, "x", None])
def test_as_rational_rejects(bad):
    with pytest.raises((TypeError, ValueError)):
        as_rational(bad)


def test_format_rational():
    assert format_rational(Fraction(9, 7)) == "9/7"
    assert format_rational(Fraction(4, 2)) == "2"
    assert as_rational(format_rational(Fraction(-16, 13))) == Fraction(-16, 13)


def test_rank_small():
    M = ExactMatrix([[1, 2, 3], [2, 4, 6], [0, 1, Fraction(1, 2)]])
    assert rank(M) == 2
    assert rank(ExactMatrix.identity(4)) == 4
    assert rank(ExactMatrix.zeros(3, 5)) == 0


def test_row_space_contains():
    A = ExactMatrix([[1, 0, 0], [0, 1, 0]])
    assert row_space_contains(A, ExactMatrix([[3, -2, 0]]))
    assert not row_space_contains(A, ExactMatrix([[0, 0, 1]]))
    with pytest.raises(ValueError):
        row_space_contains(A, ExactMatrix([[1, 0]]))


def test_echelon_add_reports_new_rows():
    E = Echelon(3)
    assert E.add([1, 1, 0])
    assert not E.add([2, 2, 0])
    assert E.add([0, 1, 1])
    assert E.rank == 2
    assert E.contains([1, 2, 1])
    assert not E.contains([0, 0, 1])


def test_nullspace_is_orthogonal():
    rows = [[1, 2, 3, 4], [0, 1, 1, 1]]
    N = nullspace_rows(rows, 4)
    assert len(N) == 2
    for v in N:
        for r in rows:
            assert sum(a * b for a, b in zip(v, r)) == 0
    assert nullspace(ExactMatrix(rows)).nrows == 2


def test_intersect_rows():
    A = [[1, 0, 0], [0, 1, 0]]
    B = [[0, 1, 0], [0, 0, 1]]
    I = intersect_rows(A, B, 3)
    assert rank(ExactMatrix(I, 3)) == 1
    assert row_space_contains(ExactMatrix(I, 3), ExactMatrix([[0, 1, 0]]))


small = st.integers(min_value=-6, max_value=6)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(1, 5), st.data())
def test_rank_nullity(nr, nc, data):
    rows = [[data.draw(small) for _ in range(nc)] for _ in range(nr)]
    r = rank(ExactMatrix(rows, nc))
    assert r + len(nullspace_rows(rows, nc)) == nc
    assert r <= min(nr, nc)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(1, 5), st.data())
def test_combinations_stay_in_row_space(nr, nc, data):
    rows = [[data.draw(small) for _ in range(nc)] for _ in range(nr)]
    coeffs = [data.draw(small) for _ in range(nr)]
    combo = [sum(c * row[k] for c, row in zip(coeffs, rows)) for k in range(nc)]
    assert row_space_contains(ExactMatrix(rows, nc), ExactMatrix([combo], nc))
