"""
Exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`; matrices are immutable row-major
tuples of them.  Everything here is exact, so ranks, determinants and
Pfaffians can be compared with ``==``.

>>> m = Matrix.from_rows([[1, 2], [3, 4]])
>>> det(m)
Fraction(-2, 1)
>>> rank(m)
2
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "Rational", "DimensionError", "ParseError", "NotAntiSymmetricError",
    "parse_rational", "format_rational",
    "Matrix", "ASMatrix",
    "rank", "pivot_columns", "upper_left_submatrix", "det", "pfaffian",
    "parse_matrix", "format_matrix",
]

Rational = Fraction

_RATIONAL_RE = re.compile(r"[-+]?\d+(/\d+)?")


class DimensionError(ValueError):
    pass


class NotAntiSymmetricError(ValueError):
    pass


class ParseError(ValueError):
    """Malformed text input; carries a 1-based line and column."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(where + message)


def parse_rational(text: str) -> Fraction:
    """
    Parse ``"p/q"`` or ``"p"``; both ASCII and unicode minus are accepted.

    >>> parse_rational("-3/6")
    Fraction(-1, 2)
    >>> parse_rational("−7")
    Fraction(-7, 1)
    """
    s = text.strip().replace("−", "-")
    if not _RATIONAL_RE.fullmatch(s):
        raise ParseError(f"not a rational number: {text!r}")
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator: {text!r}") from None


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Matrix:
    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if not self.rows or not self.rows[0]:
            raise DimensionError("matrix must have at least one row and column")
        width = len(self.rows[0])
        if any(len(r) != width for r in self.rows):
            raise DimensionError("ragged rows")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "Matrix":
        return cls(tuple(tuple(Fraction(x) for x in r) for r in rows))

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int | None = None) -> "Matrix":
        n_cols = n_rows if n_cols is None else n_cols
        return cls.from_rows([[0] * n_cols for _ in range(n_rows)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0])

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def to_lists(self) -> list[list[Fraction]]:
        return [list(r) for r in self.rows]

    def transpose(self) -> "Matrix":
        return Matrix(tuple(zip(*self.rows)))

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.n_cols != other.n_rows:
            raise DimensionError(
                f"cannot multiply {self.n_rows}x{self.n_cols} "
                f"by {other.n_rows}x{other.n_cols}")
        cols = other.transpose().rows
        return Matrix(tuple(
            tuple(sum((a * b for a, b in zip(r, c) if a and b), Fraction(0))
                  for c in cols)
            for r in self.rows))

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.n_rows, self.n_cols) != (other.n_rows, other.n_cols):
            raise DimensionError("cannot add matrices of different shapes")
        return Matrix(tuple(tuple(a + b for a, b in zip(r, s))
                            for r, s in zip(self.rows, other.rows)))

    def __neg__(self) -> "Matrix":
        return Matrix(tuple(tuple(-x for x in r) for r in self.rows))

    def is_antisymmetric(self) -> bool:
        return self.is_square and all(
            self.rows[i][j] == -self.rows[j][i]
            for i in range(self.n_rows) for j in range(i, self.n_cols))

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def __str__(self) -> str:
        return format_matrix(self)


class ASMatrix(Matrix):
    """Anti-symmetric square matrix; construction fails otherwise."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_antisymmetric():
            raise NotAntiSymmetricError("matrix is not anti-symmetric")

    @classmethod
    def from_matrix(cls, m: Matrix) -> "ASMatrix":
        return cls(m.rows)

    @property
    def n(self) -> int:
        return self.n_rows

    @property
    def underlying(self) -> Matrix:
        return Matrix(self.rows)


def upper_left_submatrix(m: Matrix, k: int, l: int) -> Matrix:
    if not (1 <= k <= m.n_rows and 1 <= l <= m.n_cols):
        raise DimensionError(
            f"block {k}x{l} out of range for {m.n_rows}x{m.n_cols} matrix")
    return Matrix(tuple(r[:l] for r in m.rows[:k]))


def pivot_columns(rows: Sequence[Sequence[Fraction]]) -> list[int]:
    """
    Pivot columns of the row echelon form, scanning columns left to right.

    The number of pivots below column ``l`` equals the rank of the first
    ``l`` columns, which is what makes one elimination per row count enough
    for a whole row of rank-control entries.
    """
    work = [list(r) for r in rows]
    n_rows = len(work)
    n_cols = len(work[0]) if work else 0
    pivots = []
    top = 0
    for c in range(n_cols):
        if top == n_rows:
            break
        for p in range(top, n_rows):
            if work[p][c]:
                break
        else:
            continue
        work[top], work[p] = work[p], work[top]
        prow = work[top]
        inv = 1 / Fraction(prow[c])
        for r in range(top + 1, n_rows):
            f = work[r][c]
            if not f:
                continue
            f = f * inv
            row = work[r]
            for cc in range(c, n_cols):
                if prow[cc]:
                    row[cc] -= f * prow[cc]
        pivots.append(c)
        top += 1
    return pivots


def rank(m: Matrix) -> int:
    return len(pivot_columns(m.rows))


def det(m: Matrix) -> Fraction:
    if not m.is_square:
        raise DimensionError("determinant of a non-square matrix")
    work = m.to_lists()
    n = len(work)
    result = Fraction(1)
    for c in range(n):
        for p in range(c, n):
            if work[p][c]:
                break
        else:
            return Fraction(0)
        if p != c:
            work[c], work[p] = work[p], work[c]
            result = -result
        pivot = work[c][c]
        result *= pivot
        for r in range(c + 1, n):
            f = work[r][c]
            if f:
                f = f / pivot
                for cc in range(c, n):
                    work[r][cc] -= f * work[c][cc]
    return result


def pfaffian(a: Matrix) -> Fraction:
    """
    Exact Pfaffian by skew-symmetric elimination.

    Odd dimension gives 0.  Each step clears row ``k`` beyond ``k+1`` with a
    unimodular congruence, after which the Pfaffian factors as
    ``a[k][k+1] * Pf(trailing block)``.

    >>> pfaffian(Matrix.from_rows([[0, 3], [-3, 0]]))
    Fraction(3, 1)
    """
    if not a.is_square:
        raise DimensionError("Pfaffian of a non-square matrix")
    if not a.is_antisymmetric():
        raise NotAntiSymmetricError("Pfaffian needs an anti-symmetric matrix")
    n = a.n_rows
    if n % 2:
        return Fraction(0)
    w = a.to_lists()
    result = Fraction(1)
    for k in range(0, n, 2):
        for j in range(k + 1, n):
            if w[k][j]:
                break
        else:
            return Fraction(0)
        if j != k + 1:
            # simultaneous row/column swap flips the sign
            w[k + 1], w[j] = w[j], w[k + 1]
            for row in w:
                row[k + 1], row[j] = row[j], row[k + 1]
            result = -result
        piv = w[k][k + 1]
        result *= piv
        for i in range(k + 2, n):
            c = w[k][i]
            if not c:
                continue
            c = c / piv
            # col_i -= c * col_{k+1}; row_i -= c * row_{k+1}
            for row in w:
                row[i] -= c * row[k + 1]
            ri, rk1 = w[i], w[k + 1]
            for t in range(n):
                ri[t] -= c * rk1[t]
    return result


def parse_matrix(text: str) -> Matrix:
    """
    Read the CLI matrix format: a line holding ``n``, then ``n`` rows of
    ``n`` whitespace-separated rationals.  Blank lines and ``#`` comments
    are ignored.
    """
    lines = [(no, ln) for no, ln in enumerate(text.splitlines(), 1)
             if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ParseError("empty input", 1, 1)
    no, head = lines[0]
    try:
        n = int(head.strip())
    except ValueError:
        raise ParseError(f"expected dimension, got {head.strip()!r}",
                         no, _first_col(head)) from None
    if n < 1:
        raise ParseError("dimension must be positive", no, _first_col(head))
    body = lines[1:]
    if len(body) != n:
        at = body[-1][0] + 1 if body else no + 1
        raise ParseError(f"expected {n} rows, found {len(body)}", at, 1)
    rows = []
    for no, ln in body:
        row = []
        for m in re.finditer(r"\S+", ln):
            try:
                row.append(parse_rational(m.group()))
            except ParseError as e:
                raise ParseError(str(e), no, m.start() + 1) from None
        if len(row) != n:
            raise ParseError(f"expected {n} entries, found {len(row)}", no, 1)
        rows.append(row)
    return Matrix.from_rows(rows)


def _first_col(line: str) -> int:
    return len(line) - len(line.lstrip()) + 1


def format_matrix(m: Matrix) -> str:
    cells = [[format_rational(x) for x in r] for r in m.rows]
    width = max(len(c) for r in cells for c in r)
    return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)
