"""Rank-control matrices, their entrywise order, and the diagonal-equality count."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .exact_linalg import DimensionError, Matrix, ParseError, pivot_columns, rank, upper_left_submatrix

__all__ = [
    "RankControlMatrix", "rank_control", "rank_control_naive", "leq_R", "count_A",
]


@dataclass(frozen=True)
class RankControlMatrix:
    """``r[k-1][l-1]`` is the rank of the upper-left ``k x l`` block."""
    r: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.r)

    def __getitem__(self, kl: tuple[int, int]) -> int:
        """1-based access; index 0 on either axis reads as 0."""
        k, l = kl
        if k == 0 or l == 0:
            return 0
        return self.r[k - 1][l - 1]

    def check(self) -> None:
        """Raise ``ValueError`` unless bounded by min(k, l) with unit steps."""
        n = self.n
        for k in range(1, n + 1):
            for l in range(1, n + 1):
                v = self[k, l]
                if not 0 <= v <= min(k, l):
                    raise ValueError(f"r[{k}][{l}] = {v} out of range")
                if self[k - 1, l] not in (v, v - 1) or self[k, l - 1] not in (v, v - 1):
                    raise ValueError(f"non-unit step at ({k},{l})")

    def to_text(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.r)

    @classmethod
    def from_text(cls, text: str) -> "RankControlMatrix":
        rows = [ln.split() for ln in text.splitlines() if ln.strip()]
        try:
            r = tuple(tuple(int(x) for x in row) for row in rows)
        except ValueError as e:
            raise ParseError(str(e)) from None
        if not r or any(len(row) != len(r) for row in r):
            raise ParseError("rank-control text must be a square block of integers")
        return cls(r)

    def to_json(self) -> dict:
        return {"n": self.n, "r": [list(row) for row in self.r]}

    @classmethod
    def from_json(cls, data: dict | str) -> "RankControlMatrix":
        if isinstance(data, str):
            data = json.loads(data)
        rc = cls(tuple(tuple(row) for row in data["r"]))
        if rc.n != data["n"] or any(len(row) != rc.n for row in rc.r):
            raise ParseError("rank-control JSON has inconsistent size")
        return rc


def rank_control(m: Matrix) -> RankControlMatrix:
    """One elimination per row prefix: the pivot columns of the first ``k``
    rows give every ``r[k][l]`` at once."""
    if not m.is_square:
        raise DimensionError("rank-control matrix of a non-square matrix")
    n = m.n_rows
    out = []
    for k in range(1, n + 1):
        pivots = pivot_columns(m.rows[:k])
        row, count, it = [], 0, iter(pivots)
        nxt = next(it, None)
        for l in range(n):
            if nxt == l:
                count += 1
                nxt = next(it, None)
            row.append(count)
        out.append(tuple(row))
    return RankControlMatrix(tuple(out))


def rank_control_naive(m: Matrix) -> RankControlMatrix:
    """``n^2`` independent rank computations; reference for :func:`rank_control`."""
    if not m.is_square:
        raise DimensionError("rank-control matrix of a non-square matrix")
    n = m.n_rows
    return RankControlMatrix(tuple(
        tuple(rank(upper_left_submatrix(m, k, l)) for l in range(1, n + 1))
        for k in range(1, n + 1)))


def leq_R(p: RankControlMatrix, q: RankControlMatrix) -> bool:
    if p.n != q.n:
        raise DimensionError(f"cannot compare sizes {p.n} and {q.n}")
    return all(a <= b for rp, rq in zip(p.r, q.r) for a, b in zip(rp, rq))


def count_A(rc: RankControlMatrix) -> int:
    """
    Number of strictly-upper positions ``i < j`` with ``r[i][j] == r[i-1][j-1]``,
    reading a phantom zero row above the matrix.

    >>> count_A(RankControlMatrix(((0, 1, 1, 1), (1, 2, 2, 2), (1, 2, 2, 2), (1, 2, 2, 2))))
    1
    """
    n = rc.n
    return sum(1 for i in range(1, n + 1) for j in range(i + 1, n + 1)
               if rc[i, j] == rc[i - 1, j - 1])
