import pytest
from hypothesis import given, strategies as st

import oracle as O
from helpers import random_deformation
from nambu_poisson.deformations import (
    EquivalenceWitness, LinearDeformation12, check_deformation_direct, check_deformation_theorem, check_equivalence,
    check_equivalence_tpoly, extract_trivial_witness_data,
)
from nambu_poisson.errors import DimensionMismatch, SymmetryViolation
from nambu_poisson.field import GF, QQ
from nambu_poisson.fixtures import all_fixtures, b4, trunc3, zero_algebra
from nambu_poisson.operators import check_nijenhuis
from nambu_poisson.tensors import BilinearMap, LinearMap, Symmetry, random_map


def oracle_verdict(d):
    # deformed axioms are polynomial in t of degree <= 4; five sample points decide them
    r = O.ring_of(d.field)
    for t in range(5):
        A = d.at(t)
        if O.np_failure(O.plain(A.P, r), O.plain(A.B, r), r, A.dim) is not None:
            return False
    return True


@pytest.mark.parametrize("name", ["zero3", "trunc3", "b4"])
@given(seed=st.integers(0, 10**6))
def test_direct_theorem_and_oracle_agree(name, seed):
    d = random_deformation(all_fixtures()[name], seed)
    direct, thm = check_deformation_direct(d), check_deformation_theorem(d)
    assert (direct is None) == (thm is None) == oracle_verdict(d)


def test_undeformed_passes(fixture_algebra):
    _, A = fixture_algebra
    d = LinearDeformation12.undeformed(A)
    assert check_deformation_direct(d) is None and check_deformation_theorem(d) is None


def test_theorem_reports_clause():
    A = b4()
    d = LinearDeformation12(A, random_map(QQ, 4, Symmetry.SYMMETRIC, seed=2), A.bracket, A.bracket)
    rep = check_deformation_theorem(d)
    assert rep is not None and rep.axiom.startswith("clause")
    assert "coefficient of t^" in check_deformation_direct(d).axiom


def test_at_evaluates_polynomial():
    A = b4()
    d = LinearDeformation12(A, random_map(QQ, 4, Symmetry.SYMMETRIC, seed=1), A.bracket, A.bracket)
    At = d.at(2)
    # bracket = B + 2B + 4B
    assert At.B[0, 1, 2, 3] == 7
    assert d.at(0) == A


@pytest.mark.parametrize("name", ["trunc3", "b4"])
@given(seed=st.integers(0, 10**6))
def test_trivial_deformation_equivalence_iff_constraints(name, seed):
    A = all_fixtures()[name]
    N = random_map(QQ, A.dim, seed=seed, arity_=1, bound=1)
    data = extract_trivial_witness_data(N, A)
    rep = check_equivalence(N, data.deformation, LinearDeformation12.undeformed(A))
    assert (rep is None) == data.constraints_hold
    assert data.constraints_hold == (check_nijenhuis(A, N) is None)


def test_equivalence_accepts_witness_wrapper():
    A = trunc3()
    N = LinearMap.identity(QQ, 3).scaled(2)
    d = extract_trivial_witness_data(N, A).deformation
    assert check_equivalence(EquivalenceWitness(N), d, LinearDeformation12.undeformed(A)) is None
    assert check_equivalence_tpoly(N, d, LinearDeformation12.undeformed(A)) is None


def test_equivalence_requires_same_base():
    d1 = LinearDeformation12.undeformed(zero_algebra(4))
    d2 = LinearDeformation12.undeformed(b4())
    with pytest.raises(DimensionMismatch):
        check_equivalence(LinearMap.zero(QQ, 4), d1, d2)


def test_wrong_symmetry_rejected():
    A = b4()
    with pytest.raises((DimensionMismatch, SymmetryViolation)):
        LinearDeformation12(A, BilinearMap(QQ, QQ.zeros((4, 4, 4)), Symmetry.NONE), A.bracket, A.bracket)


def test_gf3_deformation():
    A = b4(GF(3))
    for seed in range(8):
        d = random_deformation(A, seed)
        assert (check_deformation_direct(d) is None) == (check_deformation_theorem(d) is None)
