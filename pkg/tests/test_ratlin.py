from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from polydiam.ratlin import (
    QMatrix,
    dot,
    format_rational,
    matrix_rank,
    nullspace,
    parse_rational,
    primitive,
    rank,
    solve_affine,
)
from polydiam.constructions import KLEE_WALKUP_POINTS

from oracles import echelon_rank

small_ints = st.integers(min_value=-6, max_value=6)


@pytest.mark.parametrize(
    "text,value",
    [("-3", Fraction(-3)), ("1/2", Fraction(1, 2)), ("+7/14", Fraction(1, 2)),
     ("0", Fraction(0)), ("-10/4", Fraction(-5, 2))],
)
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", ["1.5", "1/-2", "", "a", "1/0", "1 / 2", "0x3"])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_format_round_trip():
    for q in (Fraction(0), Fraction(-3), Fraction(22, 7), Fraction(-5, 9)):
        assert parse_rational(format_rational(q)) == q


def test_rank_identity():
    m = QMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert rank(m) == 3


def test_rank_proportional_rows():
    assert rank(QMatrix.from_rows([[1, 2], [2, 4]])) == 1


def test_rank_homogenized_klee_walkup_points():
    # 9 x 5: each point extended with a leading 1; full-dimensionality of the
    # hull means full column rank.  Expected value computed with the
    # independent elimination oracle.
    rows = [[1, *p] for p in KLEE_WALKUP_POINTS.values()]
    assert echelon_rank(rows) == 5
    assert rank(QMatrix.from_rows(rows)) == 5


def test_solve_affine_identity():
    a = QMatrix.from_rows([[1, 0], [0, 1]])
    assert solve_affine(a, [Fraction(1, 2), Fraction(-3)]) == (
        Fraction(1, 2),
        Fraction(-3),
    )


def test_solve_affine_inconsistent():
    a = QMatrix.from_rows([[1, 1], [1, 1]])
    assert solve_affine(a, [0, 1]) is None


def test_solve_affine_unique():
    a = QMatrix.from_rows([[1, 1], [1, -1]])
    assert solve_affine(a, [2, 0]) == (Fraction(1), Fraction(1))


@given(st.lists(st.lists(small_ints, min_size=3, max_size=3), min_size=1, max_size=5))
def test_rank_matches_oracle(rows):
    assert matrix_rank(rows) == echelon_rank(rows)


@given(
    st.lists(st.lists(small_ints, min_size=3, max_size=3), min_size=1, max_size=4),
    st.lists(small_ints, min_size=3, max_size=3),
)
def test_solve_resubstitution(rows, x):
    # build a consistent instance by construction, then check a.x == b exactly
    a = QMatrix.from_rows(rows)
    b = [dot(row, x) for row in rows]
    sol = solve_affine(a, b)
    assert sol is not None
    assert [dot(row, sol) for row in rows] == b


@given(small_ints, st.integers(min_value=1, max_value=6),
       small_ints, st.integers(min_value=1, max_value=6))
def test_fraction_arithmetic_exact(p, q, r, s):
    x, y = Fraction(p, q), Fraction(r, s)
    assert (x + y) - y == x


def test_nullspace_orthogonal():
    rows = [[1, 2, 3], [0, 1, 1]]
    for v in nullspace(rows):
        assert all(dot(r, v) == 0 for r in rows)


def test_primitive():
    assert primitive([Fraction(1, 2), Fraction(-3, 4)]) == (2, -3)
    assert primitive([0, 0]) == (0, 0)
    assert primitive([Fraction(-2), Fraction(4)]) == (-1, 2)
