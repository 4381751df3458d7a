"""
Bruhat order on permutations, and how the orbit poset sits against it.

Two routes to the Bruhat order are kept apart on purpose: an entrywise
comparison of rank-control matrices, and an oracle that closes the covering
relation (multiply by a transposition, length goes up by exactly one).
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from itertools import combinations, permutations

from .canonical_form import Involution
from .exact_linalg import DimensionError, Matrix
from .involution_poset import (
    OrbitPoset, build_poset, enumerate_involutions, is_interval,
    prescribed_support_classes,
)
from .rank_control import RankControlMatrix, leq_R, rank_control

__all__ = [
    "Permutation", "permutation_matrix", "length", "bruhat_leq_rc",
    "bruhat_leq_oracle", "ComparisonReport", "compare_fpf_with_bruhat",
    "full_poset_not_bruhat_witness", "bruhat_interval_witnesses", "random_pairs",
]


@dataclass(frozen=True, order=True)
class Permutation:
    """Bijection of ``{1..n}``; ``images[i - 1]`` is the image of ``i``."""
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def of(cls, p: Involution) -> "Permutation":
        return cls(p.images)


def permutation_matrix(p: Permutation) -> Matrix:
    """1 at ``(i, p(i))``."""
    return Matrix.from_rows([[int(p.images[i] == j + 1) for j in range(p.n)]
                             for i in range(p.n)])


def length(p: Permutation) -> int:
    return sum(1 for a, b in combinations(p.images, 2) if a > b)


@lru_cache(maxsize=None)
def _perm_rc(p: Permutation) -> RankControlMatrix:
    return rank_control(permutation_matrix(p))


def _same_size(p: Permutation, q: Permutation) -> None:
    if p.n != q.n:
        raise DimensionError(f"permutations of different sizes {p.n} and {q.n}")


def bruhat_leq_rc(p: Permutation, q: Permutation) -> bool:
    _same_size(p, q)
    return leq_R(_perm_rc(q), _perm_rc(p))


@lru_cache(maxsize=None)
def _up_sets(n: int) -> dict[tuple[int, ...], int]:
    """Upward closure of every permutation as a bitmask over ``_index(n)``."""
    perms = sorted(permutations(range(1, n + 1)))
    index = {p: k for k, p in enumerate(perms)}
    lengths = {p: length(Permutation(p)) for p in perms}
    up: dict[tuple[int, ...], int] = {}
    for p in sorted(perms, key=lambda x: -lengths[x]):
        mask = 1 << index[p]
        for a, b in combinations(range(n), 2):
            q = list(p)
            q[a], q[b] = q[b], q[a]
            q = tuple(q)
            if lengths[q] == lengths[p] + 1:
                mask |= up[q]
        up[p] = mask
    return up


@lru_cache(maxsize=None)
def _index(n: int) -> dict[tuple[int, ...], int]:
    return {p: k for k, p in enumerate(sorted(permutations(range(1, n + 1))))}


def bruhat_leq_oracle(p: Permutation, q: Permutation) -> bool:
    _same_size(p, q)
    return bool(_up_sets(p.n)[p.images] >> _index(p.n)[q.images] & 1)


@dataclass
class ComparisonReport:
    n: int
    checked_pairs: int
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return asdict(self)


def compare_fpf_with_bruhat(n: int, poset: OrbitPoset | None = None) -> ComparisonReport:
    """Orbit order on fixed-point-free involutions against reversed Bruhat order."""
    if n < 2 or n % 2:
        raise ValueError("fixed-point-free involutions need even n >= 2")
    poset = poset or build_poset(n)
    fpf = [i for i, node in enumerate(poset.nodes) if node.involution.is_fixed_point_free()]
    report = ComparisonReport(n, 0)
    for a in fpf:
        for b in fpf:
            pa = Permutation.of(poset.nodes[a].involution)
            pb = Permutation.of(poset.nodes[b].involution)
            orbit_leq = poset.leq(a, b)
            bruhat_geq = bruhat_leq_oracle(pb, pa)
            report.checked_pairs += 1
            if orbit_leq != bruhat_geq:
                report.violations.append({
                    "a": str(poset.nodes[a].involution), "b": str(poset.nodes[b].involution),
                    "orbit_leq": orbit_leq, "bruhat_geq": bruhat_geq})
    return report


def full_poset_not_bruhat_witness(n: int, poset: OrbitPoset | None = None
                                  ) -> tuple[Involution, Involution] | None:
    """
    A pair ``(a, b)`` with ``a <= b`` in exactly one of the orbit order and
    the reversed Bruhat order, returned only when the orbit order also fails
    to match the plain Bruhat order.  ``None`` when either orientation
    matches, so small ``n`` where the two chains coincide gives ``None``.
    """
    poset = poset or build_poset(n)
    size = len(poset.nodes)
    perms = [Permutation.of(node.involution) for node in poset.nodes]
    plain_matches = all(poset.leq(a, b) == bruhat_leq_oracle(perms[a], perms[b])
                        for a in range(size) for b in range(size))
    if plain_matches:
        return None
    for a in range(size):
        for b in range(size):
            if poset.leq(a, b) != bruhat_leq_oracle(perms[b], perms[a]):
                return poset.nodes[a].involution, poset.nodes[b].involution
    return None


def bruhat_interval_witnesses(n: int) -> list[tuple[int, ...]]:
    """Fixed-point sets whose involutions are not an interval of the Bruhat
    poset of involutions of ``S_n``."""
    invs = enumerate_involutions(n)

    def leq(a: Involution, b: Involution) -> bool:
        return bruhat_leq_oracle(Permutation.of(a), Permutation.of(b))

    return [fixed for fixed, members in prescribed_support_classes(invs).items()
            if not is_interval(invs, members, leq)]


def random_pairs(n: int, count: int, seed: int) -> list[tuple[Permutation, Permutation]]:
    rng = random.Random(seed)
    base = list(range(1, n + 1))
    out = []
    for _ in range(count):
        out.append(tuple(Permutation(tuple(rng.sample(base, n))) for _ in range(2)))
    return out
