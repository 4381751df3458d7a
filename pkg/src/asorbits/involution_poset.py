"""
The poset of congruence orbits, indexed by involutions.

Orbits are compared by their rank-control matrices: ``x <= y`` iff
``R(x) <= R(y)`` entrywise, i.e. the orbit of ``x`` lies in the closure of
the orbit of ``y``.  The rank of a node is the dimension of its orbit, given
here by two closed formulas and checked against a tangent-space computation.
"""

from __future__ import annotations

import json
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Sequence, TypeVar

from .canonical_form import Involution, involution_to_monomial
from .exact_linalg import Matrix, ParseError, rank
from .rank_control import RankControlMatrix, count_A, leq_R, rank_control

__all__ = [
    "Node", "OrbitPoset", "enumerate_involutions", "involution_rank_control",
    "build_poset", "transitive_reduction", "dim_by_A", "canonic_word",
    "inversions", "fixed_point_sum", "dim_by_secfm", "orbit_dimension_oracle",
    "check_graded", "is_interval", "prescribed_support_classes",
    "interval_violations",
]

T = TypeVar("T")


def enumerate_involutions(n: int) -> list[Involution]:
    """
    All involutions of ``S_n`` in lexicographic one-line order.

    >>> [str(p) for p in enumerate_involutions(3)]
    ['e', '(2,3)', '(1,2)', '(1,3)']
    """
    if n < 1:
        raise ValueError("n must be positive")

    def rec(free: list[int]) -> Iterable[list[tuple[int, int]]]:
        if not free:
            yield []
            return
        a, rest = free[0], free[1:]
        for tail in rec(rest):
            yield tail
        for idx, b in enumerate(rest):
            for tail in rec(rest[:idx] + rest[idx + 1:]):
                yield [(a, b)] + tail

    return sorted(Involution.from_cycles(n, pairs)
                  for pairs in rec(list(range(1, n + 1))))


def involution_rank_control(p: Involution) -> RankControlMatrix:
    return rank_control(involution_to_monomial(p).to_matrix())


def dim_by_A(p: Involution) -> int:
    n = p.n
    return (n * n - n) // 2 - count_A(involution_rank_control(p))


def canonic_word(p: Involution) -> tuple[int, ...]:
    """``i1 j1 i2 j2 ...`` with ``i_t < j_t`` and increasing ``i_t``."""
    return tuple(x for pair in p.cycles() for x in pair)


def inversions(word: Sequence[int]) -> int:
    return sum(1 for s, t in combinations(range(len(word)), 2) if word[s] > word[t])


def fixed_point_sum(p: Involution) -> int:
    return sum(p.n - a for a in p.fixed_points())


def dim_by_secfm(p: Involution) -> int:
    n = p.n
    return (n * n - n) // 2 - (inversions(canonic_word(p)) + fixed_point_sum(p))


def orbit_dimension_oracle(p: Involution) -> int:
    """
    Rank of ``u -> u^t M + M u`` over upper-triangular ``u``, with ``M`` the
    monomial representative; this is the dimension of the orbit through ``M``.
    """
    n = p.n
    if n == 1:
        return 0
    m = involution_to_monomial(p).to_matrix().underlying
    coeffs = []
    for a in range(n):
        for b in range(a, n):
            u = Matrix.from_rows([[int((i, j) == (a, b)) for j in range(n)] for i in range(n)])
            image = u.T @ m + m @ u
            coeffs.append([image[i, j] for i in range(n) for j in range(i + 1, n)])
    return rank(Matrix.from_rows(coeffs))


@dataclass(frozen=True)
class Node:
    involution: Involution
    rank_control: RankControlMatrix
    rank: int


@dataclass
class OrbitPoset:
    n: int
    nodes: list[Node]
    covers: list[tuple[int, int]]
    order: list[list[bool]] = field(repr=False)

    def index(self, p: Involution | str) -> int:
        if isinstance(p, str):
            p = Involution.parse(p, self.n)
        for i, node in enumerate(self.nodes):
            if node.involution == p:
                return i
        raise KeyError(p)

    def leq(self, a: int, b: int) -> bool:
        return self.order[a][b]

    def minimal(self) -> list[int]:
        return [i for i in range(len(self.nodes))
                if not any(self.order[j][i] for j in range(len(self.nodes)) if j != i)]

    def maximal(self) -> list[int]:
        return [i for i in range(len(self.nodes))
                if not any(self.order[i][j] for j in range(len(self.nodes)) if j != i)]

    def levels(self) -> dict[int, list[int]]:
        out = defaultdict(list)
        for i, node in enumerate(self.nodes):
            out[node.rank].append(i)
        return dict(out)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "nodes": [{"id": i, "cycles": str(node.involution), "rank": node.rank,
                       "rank_control": [list(r) for r in node.rank_control.r]}
                      for i, node in enumerate(self.nodes)],
            "covers": [[lo, hi] for lo, hi in self.covers],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "OrbitPoset":
        """Rebuild from :meth:`to_json` output; the order is the reflexive-
        transitive closure of the covers."""
        if isinstance(data, str):
            data = json.loads(data)
        n = data["n"]
        nodes = []
        for i, d in enumerate(data["nodes"]):
            if d["id"] != i:
                raise ParseError(f"node ids must be 0..N-1 in order, got {d['id']} at {i}")
            nodes.append(Node(Involution.parse(d["cycles"], n),
                              RankControlMatrix(tuple(tuple(r) for r in d["rank_control"])),
                              d["rank"]))
        covers = [(lo, hi) for lo, hi in data["covers"]]
        size = len(nodes)
        up = [{i} for i in range(size)]
        for i in sorted(range(size), key=lambda k: -nodes[k].rank):
            for lo, hi in covers:
                if lo == i:
                    up[i] |= up[hi]
        order = [[j in up[i] for j in range(size)] for i in range(size)]
        return cls(n, nodes, covers, order)

    def to_text(self) -> str:
        lv = self.levels()
        lines = [f"# orbit poset n={self.n}: {len(self.nodes)} nodes, {len(self.covers)} covers"]
        for r in sorted(lv, reverse=True):
            lines.append(f"rank {r}: " + "  ".join(str(self.nodes[i].involution) for i in lv[r]))
        lines.append("covers:")
        for lo, hi in self.covers:
            lines.append(f"  {self.nodes[lo].involution} < {self.nodes[hi].involution}")
        return "\n".join(lines) + "\n"

    def to_dot(self) -> str:
        lines = ["digraph orbit_poset {", "  rankdir=BT;", "  node [shape=box];"]
        lv = self.levels()
        for r in sorted(lv):
            members = " ".join(
                f'n{i} [label="{self.nodes[i].involution}\\nrank {r}"];' for i in lv[r])
            lines.append(f"  {{ rank=same; {members} }}")
        for lo, hi in self.covers:
            lines.append(f"  n{lo} -> n{hi};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def transitive_reduction(order: list[list[bool]]) -> list[tuple[int, int]]:
    """Cover pairs of a partial order given as a reflexive boolean matrix."""
    size = len(order)
    # strict up-sets as bitmasks; y covers x iff y is above x but above
    # no other element strictly above x
    up = [sum(1 << y for y in range(size) if y != x and order[x][y])
          for x in range(size)]
    covers = []
    for x in range(size):
        shadow = 0
        rest = up[x]
        while rest:
            low = rest & -rest
            shadow |= up[low.bit_length() - 1]
            rest ^= low
        direct = up[x] & ~shadow
        covers.extend((x, y) for y in range(size) if direct >> y & 1)
    return covers


def build_poset(n: int, jobs: int = 1) -> OrbitPoset:
    invs = enumerate_involutions(n)
    if jobs > 1 and len(invs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            rcs = list(ex.map(involution_rank_control, invs, chunksize=16))
    else:
        rcs = [involution_rank_control(p) for p in invs]
    top = (n * n - n) // 2
    nodes = [Node(p, rc, top - count_A(rc)) for p, rc in zip(invs, rcs)]
    order = [[leq_R(a, b) for b in rcs] for a in rcs]
    return OrbitPoset(n, nodes, transitive_reduction(order), order)


def check_graded(poset: OrbitPoset) -> bool:
    return all(poset.nodes[hi].rank == poset.nodes[lo].rank + 1
               for lo, hi in poset.covers)


def is_interval(universe: Sequence[T], subset: Iterable[T],
                leq: Callable[[T, T], bool]) -> bool:
    """True iff ``subset`` has a least and a greatest element and equals the
    closed interval between them inside ``universe``."""
    sub = list(subset)
    if not sub:
        return False
    lows = [m for m in sub if all(leq(m, x) for x in sub)]
    highs = [m for m in sub if all(leq(x, m) for x in sub)]
    if not lows or not highs:
        return False
    lo, hi = lows[0], highs[0]
    between = [x for x in universe if leq(lo, x) and leq(x, hi)]
    return len(between) == len(sub) and all(x in sub for x in between)


def prescribed_support_classes(invs: Iterable[Involution]) -> dict[tuple[int, ...], list[Involution]]:
    """Group involutions by their exact set of fixed points."""
    out = defaultdict(list)
    for p in invs:
        out[tuple(p.fixed_points())].append(p)
    return dict(sorted(out.items(), key=lambda kv: (len(kv[0]), kv[0])))


def interval_violations(poset: OrbitPoset) -> list[tuple[int, ...]]:
    """Fixed-point sets whose involutions do not form an interval of ``poset``."""
    universe = list(range(len(poset.nodes)))
    idx = {node.involution: i for i, node in enumerate(poset.nodes)}
    bad = []
    for fixed, members in prescribed_support_classes(n.involution for n in poset.nodes).items():
        if not is_interval(universe, [idx[p] for p in members], poset.leq):
            bad.append(fixed)
    return bad
