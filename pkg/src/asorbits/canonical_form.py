"""
Canonical forms of anti-symmetric matrices under Borel congruence.

An anti-symmetric ``A`` is reduced by congruences ``A -> E^t A E`` with
upper-triangular ``E`` to a signed monomial matrix carrying ``+1`` above and
``-1`` below the diagonal.  The positions of the ``+1`` entries are the
2-cycles of an involution, which labels the orbit.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .exact_linalg import ASMatrix, Matrix, NotAntiSymmetricError, ParseError

__all__ = [
    "Involution", "MonomialASMatrix", "BorelMatrix",
    "canonicalize", "involution_to_monomial", "monomial_to_involution",
    "random_borel", "congruence", "random_orbit_element",
]


@dataclass(frozen=True, order=True)
class Involution:
    """
    Self-inverse permutation of ``{1..n}`` in one-line notation.

    ``images[i - 1]`` is the image of ``i``.  Ordering compares one-line
    notation lexicographically.

    >>> p = Involution.parse("(1,4)(2,5)", 6)
    >>> p.images
    (4, 5, 3, 1, 2, 6)
    >>> str(p), p.fixed_points()
    ('(1,4)(2,5)', [3, 6])
    """
    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if n < 1:
            raise ValueError("involution needs n >= 1")
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")
        if any(self.images[self.images[i] - 1] != i + 1 for i in range(n)):
            raise ValueError(f"not an involution: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    @classmethod
    def identity(cls, n: int) -> "Involution":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Involution":
        images = list(range(1, n + 1))
        seen = set()
        for i, j in pairs:
            for x in (i, j):
                if not 1 <= x <= n:
                    raise ValueError(f"index {x} out of range 1..{n}")
                if x in seen:
                    raise ValueError(f"index {x} repeated")
                seen.add(x)
            if i == j:
                raise ValueError(f"degenerate transposition ({i},{j})")
            images[i - 1], images[j - 1] = j, i
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str, n: int) -> "Involution":
        """Read ``"e"`` or ``"(i,j)(k,l)..."``; whitespace is ignored."""
        s = re.sub(r"\s+", "", text)
        if s == "e":
            return cls.identity(n)
        if not s or not re.fullmatch(r"(\(\d+,\d+\))+", s):
            raise ParseError(f"malformed involution {text!r}")
        pairs = [(int(a), int(b)) for a, b in re.findall(r"\((\d+),(\d+)\)", s)]
        try:
            return cls.from_cycles(n, pairs)
        except ValueError as e:
            raise ParseError(f"invalid involution {text!r}: {e}") from None

    def cycles(self) -> list[tuple[int, int]]:
        """2-cycles ``(i, j)`` with ``i < j``, sorted by ``i``."""
        return [(i, j) for i, j in enumerate(self.images, 1) if i < j]

    def fixed_points(self) -> list[int]:
        return [i for i, j in enumerate(self.images, 1) if i == j]

    def is_fixed_point_free(self) -> bool:
        return not self.fixed_points()

    def __str__(self) -> str:
        cyc = self.cycles()
        return "".join(f"({i},{j})" for i, j in cyc) if cyc else "e"


@dataclass(frozen=True)
class MonomialASMatrix:
    """Signed monomial anti-symmetric matrix, stored as its ``+1`` positions."""
    n: int
    pairs: frozenset[tuple[int, int]]

    def __post_init__(self):
        used = [x for p in self.pairs for x in p]
        if len(used) != len(set(used)):
            raise ValueError("pairs must have disjoint supports")
        for i, j in self.pairs:
            if not 1 <= i < j <= self.n:
                raise ValueError(f"bad pair ({i},{j}) for n={self.n}")

    def to_matrix(self) -> ASMatrix:
        rows = [[0] * self.n for _ in range(self.n)]
        for i, j in self.pairs:
            rows[i - 1][j - 1] = 1
            rows[j - 1][i - 1] = -1
        return ASMatrix.from_rows(rows)


class BorelMatrix(Matrix):
    """Invertible upper-triangular matrix."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_square:
            raise ValueError("Borel matrix must be square")
        for i, row in enumerate(self.rows):
            if not row[i]:
                raise ValueError(f"zero diagonal entry at {i + 1}")
            if any(row[:i]):
                raise ValueError(f"nonzero entry below the diagonal in row {i + 1}")

    @property
    def n(self) -> int:
        return self.n_rows

    def diagonal(self) -> list[Fraction]:
        return [self.rows[i][i] for i in range(self.n)]


def involution_to_monomial(p: Involution) -> MonomialASMatrix:
    return MonomialASMatrix(p.n, frozenset(p.cycles()))


def monomial_to_involution(m: MonomialASMatrix) -> Involution:
    return Involution.from_cycles(m.n, m.pairs)


def canonicalize(a: Matrix) -> tuple[MonomialASMatrix, BorelMatrix]:
    """
    Reduce ``a`` to its signed monomial form.

    Returns ``(m, b)`` with ``b.T @ m.to_matrix() @ b == a``.  Rows are
    scanned top to bottom; the pivot of a row is its leftmost nonzero entry
    right of the diagonal, and rows with nothing there are skipped.
    """
    if not a.is_antisymmetric():
        raise NotAntiSymmetricError("canonicalize needs an anti-symmetric matrix")
    n = a.n_rows
    w = a.to_lists()
    # inverse of the accumulated transform; starts as the identity
    b = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    pairs = []

    def add_multiple(src: int, dst: int, c: Fraction) -> None:
        # congruence by E = I + c e_src e_dst^t  (src < dst)
        for row in w:
            if row[src]:
                row[dst] += c * row[src]
        rs, rd = w[src], w[dst]
        for t in range(n):
            if rs[t]:
                rd[t] += c * rs[t]
        # b <- E^{-1} b : row_src -= c * row_dst
        bs, bd = b[src], b[dst]
        for t in range(n):
            if bd[t]:
                bs[t] -= c * bd[t]

    for i in range(n):
        row = w[i]
        j = next((c for c in range(i + 1, n) if row[c]), None)
        if j is None:
            continue
        v = w[i][j]
        for k in range(j + 1, n):
            if w[i][k]:
                add_multiple(j, k, -w[i][k] / v)
        for k in range(i + 1, n):
            if k != j and w[k][j]:
                add_multiple(i, k, -w[k][j] / v)
        pairs.append((i + 1, j + 1))

    for i, j in pairs:
        v = w[i - 1][j - 1]
        # scale index j by 1/v; b's row j scales by v
        w[i - 1][j - 1] = Fraction(1)
        w[j - 1][i - 1] = Fraction(-1)
        b[j - 1] = [x * v for x in b[j - 1]]

    m = MonomialASMatrix(n, frozenset(pairs))
    assert Matrix.from_rows(w) == m.to_matrix().underlying, "elimination left residue"
    return m, BorelMatrix.from_rows(b)


def random_borel(n: int, rng: random.Random, entry_bound: int) -> BorelMatrix:
    """Integer Borel matrix: off-diagonal in ``[-bound, bound]``, diagonal in ``[1, bound]``."""
    if entry_bound < 1:
        raise ValueError("entry_bound must be positive")
    return BorelMatrix.from_rows(
        [[rng.randint(1, entry_bound) if i == j
          else rng.randint(-entry_bound, entry_bound) if i < j else 0
          for j in range(n)] for i in range(n)])


def congruence(b: Matrix, a: Matrix) -> Matrix:
    """``b^t a b``."""
    return b.T @ a @ b


def random_orbit_element(p: Involution, seed: int, entry_bound: int = 5) -> ASMatrix:
    b = random_borel(p.n, random.Random(seed), entry_bound)
    return ASMatrix.from_matrix(congruence(b, involution_to_monomial(p).to_matrix()))
