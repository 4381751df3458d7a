"""Borel congruence orbits of anti-symmetric matrices and the poset of involutions."""

from .bruhat import (
    Permutation, bruhat_leq_oracle, bruhat_leq_rc, compare_fpf_with_bruhat,
    full_poset_not_bruhat_witness,
)
from .canonical_form import (
    BorelMatrix, Involution, MonomialASMatrix, canonicalize, involution_to_monomial,
    monomial_to_involution, random_orbit_element,
)
from .exact_linalg import ASMatrix, Matrix, Rational, det, pfaffian, rank, upper_left_submatrix
from .involution_poset import (
    OrbitPoset, build_poset, canonic_word, check_graded, dim_by_A, dim_by_secfm,
    enumerate_involutions, inversions, orbit_dimension_oracle,
)
from .rank_control import RankControlMatrix, count_A, leq_R, rank_control

__version__ = "0.1.0"
