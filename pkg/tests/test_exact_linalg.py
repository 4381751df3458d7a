from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from asorbits.exact_linalg import (
    ASMatrix, DimensionError, Matrix, NotAntiSymmetricError, ParseError, det,
    format_matrix, format_rational, parse_matrix, parse_rational, pfaffian, rank,
    upper_left_submatrix,
)
from oracles import expansion_pfaffian, leibniz_det, minor_rank

EXAMPLE_6 = Matrix.from_rows([
    [0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0],
    [-1, 0, 0, 0, 0, 0],
    [0, -1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0],
])

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=7)


@st.composite
def matrices(draw, max_n=4):
    r = draw(st.integers(1, max_n))
    c = draw(st.integers(1, max_n))
    # many zeros so low ranks actually show up
    entry = st.one_of(st.just(Fraction(0)), rationals)
    return Matrix.from_rows([[draw(entry) for _ in range(c)] for _ in range(r)])


@st.composite
def antisymmetric(draw, max_n=6, even=False):
    n = draw(st.integers(1, max_n))
    if even:
        n += n % 2
    entry = st.one_of(st.just(Fraction(0)), rationals)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = draw(entry)
            rows[i][j], rows[j][i] = v, -v
    return ASMatrix.from_rows(rows)


def test_rational_parsing():
    assert parse_rational("4/6") == Fraction(2, 3)
    assert parse_rational("-5") == -5
    assert parse_rational("−1/3") == Fraction(-1, 3)
    for bad in ("", "1.5", "1/0", "a", "1//2"):
        with pytest.raises(ParseError):
            parse_rational(bad)


@given(rationals)
def test_rational_round_trip(q):
    assert parse_rational(format_rational(q)) == q


def test_rank_examples():
    assert rank(Matrix.zeros(3)) == 0
    assert rank(Matrix.identity(4)) == 4
    assert rank(EXAMPLE_6) == 4
    assert minor_rank(EXAMPLE_6.to_lists()) == 4


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_matches_minor_oracle(m):
    assert rank(m) == minor_rank(m.to_lists())


def test_upper_left_submatrix():
    m = Matrix.from_rows([[i + j for j in range(1, 4)] for i in range(1, 4)])
    assert upper_left_submatrix(m, 2, 2) == Matrix.from_rows([[2, 3], [3, 4]])
    assert upper_left_submatrix(m, 3, 3) == m
    assert upper_left_submatrix(EXAMPLE_6, 1, 4) == Matrix.from_rows([[0, 0, 0, 1]])
    with pytest.raises(DimensionError):
        upper_left_submatrix(m, 4, 1)
    with pytest.raises(DimensionError):
        upper_left_submatrix(m, 1, 0)


@settings(max_examples=40, deadline=None)
@given(matrices())
def test_submatrix_ranks_monotone_unit_steps(m):
    r = {(k, l): rank(upper_left_submatrix(m, k, l))
         for k in range(1, m.n_rows + 1) for l in range(1, m.n_cols + 1)}
    for (k, l), v in r.items():
        assert v <= min(k, l)
        if (k + 1, l) in r:
            assert r[k + 1, l] - v in (0, 1)
        if (k, l + 1) in r:
            assert r[k, l + 1] - v in (0, 1)


def test_det_examples():
    assert det(Matrix.identity(5)) == 1
    assert det(Matrix.from_rows([[1, 2], [3, 4]])) == -2
    assert det(ASMatrix.from_rows([[0, 1, 2], [-1, 0, 3], [-2, -3, 0]])) == 0
    with pytest.raises(DimensionError):
        det(Matrix.zeros(2, 3))


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_det_matches_leibniz(m):
    if m.is_square:
        assert det(m) == leibniz_det(m.to_lists())


def test_pfaffian_examples():
    c = Fraction(7, 3)
    assert pfaffian(ASMatrix.from_rows([[0, c], [-c, 0]])) == c
    assert pfaffian(Matrix.zeros(4)) == 0
    mono = ASMatrix.from_rows([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
    assert abs(pfaffian(mono)) == 1
    assert pfaffian(ASMatrix.from_rows([[0, 1, 2], [-1, 0, 3], [-2, -3, 0]])) == 0
    with pytest.raises(NotAntiSymmetricError):
        pfaffian(Matrix.identity(2))


@settings(max_examples=80, deadline=None)
@given(antisymmetric(even=True))
def test_pfaffian_squared_is_det(a):
    pf = pfaffian(a)
    assert pf * pf == det(a)
    assert pf == expansion_pfaffian(a.to_lists())


@given(antisymmetric())
def test_odd_antisymmetric_det_zero(a):
    if a.n % 2:
        assert det(a) == 0
        assert pfaffian(a) == 0


def test_as_matrix_validates():
    with pytest.raises(NotAntiSymmetricError):
        ASMatrix.from_rows([[0, 1], [1, 0]])
    with pytest.raises(NotAntiSymmetricError):
        ASMatrix.from_rows([[1]])


def test_matrix_text_round_trip():
    m = Matrix.from_rows([[0, Fraction(1, 2)], [Fraction(-1, 2), 0]])
    text = f"2\n{format_matrix(m)}\n"
    assert parse_matrix(text) == m


@pytest.mark.parametrize("text, line, column", [
    ("x\n0\n", 1, 1),
    ("2\n0 1\n", 3, 1),
    ("2\n0 1\n-1 q\n", 3, 4),
    ("2\n0 1 2\n-1 0\n", 2, 1),
])
def test_matrix_parse_errors_locate(text, line, column):
    with pytest.raises(ParseError) as exc:
        parse_matrix(text)
    assert (exc.value.line, exc.value.column) == (line, column)
