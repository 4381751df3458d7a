import json
from itertools import permutations

import pytest

from asorbits.bruhat import (
    Permutation, bruhat_interval_witnesses, bruhat_leq_oracle, bruhat_leq_rc,
    compare_fpf_with_bruhat, full_poset_not_bruhat_witness, length, random_pairs,
)
from asorbits.canonical_form import Involution
from asorbits.exact_linalg import DimensionError
from asorbits.involution_poset import build_poset

# Bruhat order of S_3 read off its Hasse diagram: e < 213, 132 < 231, 312 < 321
S3_UP = {
    "123": {"123", "213", "132", "231", "312", "321"},
    "213": {"213", "231", "312", "321"},
    "132": {"132", "231", "312", "321"},
    "231": {"231", "321"},
    "312": {"312", "321"},
    "321": {"321"},
}


def perm(word):
    return Permutation(tuple(int(c) for c in word))


def all_perms(n):
    return [Permutation(p) for p in permutations(range(1, n + 1))]


def test_s3_against_hasse_diagram():
    for a, ups in S3_UP.items():
        for b in S3_UP:
            assert bruhat_leq_rc(perm(a), perm(b)) == (b in ups)
            assert bruhat_leq_oracle(perm(a), perm(b)) == (b in ups)


def test_examples():
    p = perm("2143")
    assert bruhat_leq_rc(p, p) and bruhat_leq_oracle(p, p)
    for q in all_perms(3):
        assert bruhat_leq_rc(perm("123"), q)
    assert bruhat_leq_rc(perm("213"), perm("321"))
    assert bruhat_leq_oracle(perm("1234"), perm("4321"))
    assert length(perm("4321")) == 6
    with pytest.raises(DimensionError):
        bruhat_leq_rc(perm("12"), perm("123"))
    with pytest.raises(DimensionError):
        bruhat_leq_oracle(perm("12"), perm("123"))


@pytest.mark.parametrize("n", range(1, 5))
def test_rc_matches_oracle_exhaustive(n):
    ps = all_perms(n)
    for a in ps:
        for b in ps:
            assert bruhat_leq_rc(a, b) == bruhat_leq_oracle(a, b)


@pytest.mark.parametrize("n", [5, 6])
def test_rc_matches_oracle_random(n):
    pairs = random_pairs(n, 500, seed=n)
    assert all(bruhat_leq_rc(a, b) == bruhat_leq_oracle(a, b) for a, b in pairs)
    # the sample must exercise both outcomes
    assert 0 < sum(bruhat_leq_oracle(a, b) for a, b in pairs) < 500


def test_fpf_n4_chain():
    poset = build_poset(4)
    idx = {str(n.involution): i for i, n in enumerate(poset.nodes)}
    assert poset.leq(idx["(1,4)(2,3)"], idx["(1,3)(2,4)"])
    assert poset.leq(idx["(1,3)(2,4)"], idx["(1,2)(3,4)"])
    report = compare_fpf_with_bruhat(4, poset)
    assert report.checked_pairs == 9 and report.ok


@pytest.mark.parametrize("n, elements", [(2, 1), (4, 3), (6, 15)])
def test_fpf_reversed_bruhat(n, elements):
    report = compare_fpf_with_bruhat(n)
    assert report.checked_pairs == elements ** 2
    assert report.violations == []
    assert json.loads(json.dumps(report.to_json())) == {
        "n": n, "checked_pairs": elements ** 2, "violations": []}


def test_fpf_needs_even_n():
    with pytest.raises(ValueError):
        compare_fpf_with_bruhat(3)


def test_not_bruhat_witness():
    assert full_poset_not_bruhat_witness(1) is None
    assert full_poset_not_bruhat_witness(2) is None
    for n in (4, 5):
        a, b = full_poset_not_bruhat_witness(n)
        poset = build_poset(n)
        ia, ib = poset.index(a), poset.index(b)
        assert poset.leq(ia, ib) != bruhat_leq_oracle(Permutation.of(b), Permutation.of(a))


def test_bruhat_interval_witnesses_exist():
    found = {n: bruhat_interval_witnesses(n) for n in range(1, 6)}
    assert any(found.values())
    # n = 4: the fixed-point-free involutions are not a Bruhat interval
    assert () in found[4]
    print("Bruhat non-interval fixed-point sets:", found)


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))
    assert Permutation.of(Involution.parse("(1,3)", 3)).images == (3, 2, 1)
