
import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracle as O
from nambu_poisson.algebra import (
    NambuPoissonAlgebra, check_comm_assoc, check_fundamental_identity, check_leibniz, check_nambu_poisson,
    check_poisson, fix_coordinate,
)
from nambu_poisson.errors import AxiomViolation
from nambu_poisson.field import GF, QQ
from nambu_poisson.fixtures import all_fixtures, b4, trunc3, zero_algebra
from nambu_poisson.tensors import Symmetry, random_map


def _oracle_np(A):
    R = O.ring_of(A.field)
    return O.np_failure(O.plain(A.P, R), O.plain(A.B, R), R, A.dim)


def test_fixtures_pass(fixture_algebra):
    name, A = fixture_algebra
    assert check_nambu_poisson(A) is None
    assert _oracle_np(A) is None


@pytest.mark.parametrize("n", [2, 3])
@given(seed=st.integers(0, 10**6), bound=st.integers(1, 2))
def test_random_structures_agree_with_oracle(n, seed, bound):
    rng = np.random.default_rng(seed)
    P = random_map(QQ, n, Symmetry.SYMMETRIC, seed=rng, bound=bound)
    B = random_map(QQ, n, Symmetry.FULLY_SKEW, seed=rng, bound=bound)
    A = NambuPoissonAlgebra(P, B)
    rep = check_nambu_poisson(A)
    ref = _oracle_np(A)
    assert (rep is None) == (ref is None)
    if rep is not None:
        assert rep.witness == ref[1]
        assert rep.left != rep.right


@given(seed=st.integers(0, 10**6))
def test_random_gf2_structures_agree(seed):
    F = GF(2)
    rng = np.random.default_rng(seed)
    A = NambuPoissonAlgebra(random_map(F, 3, Symmetry.SYMMETRIC, seed=rng, bound=1),
                            random_map(F, 3, Symmetry.FULLY_SKEW, seed=rng, bound=1))
    rep, ref = check_nambu_poisson(A), _oracle_np(A)
    assert (rep is None) == (ref is None)


def test_corrupted_trunc3_reports_associativity():
    A = trunc3()
    P = A.P.copy()
    P[0, 0, 1] = QQ.convert(1)  # 1*1 = 1 + x
    bad = NambuPoissonAlgebra.from_arrays(QQ, P, A.B)
    rep = check_comm_assoc(bad)
    assert rep is not None and rep.witness == _oracle_np(bad)[1]
    assert check_nambu_poisson(bad) == rep


def test_fundamental_identity_failure():
    B = random_map(QQ, 4, Symmetry.FULLY_SKEW, seed=7)
    A = NambuPoissonAlgebra(zero_algebra(4).product, B)
    rep = check_fundamental_identity(A.three_lie())
    ref = _oracle_np(A)
    assert (rep is None) == (ref is None)


def test_leibniz_failure_on_mixed_structure():
    A = NambuPoissonAlgebra(trunc3().product, random_map(QQ, 3, Symmetry.FULLY_SKEW, seed=3))
    assert check_leibniz(A) is not None
    assert _oracle_np(A)[0] == "Leibniz rule"


@pytest.mark.parametrize("name", ["zero3", "trunc3", "b4"])
def test_fix_coordinate_gives_poisson(name):
    A = all_fixtures()[name]
    R = O.ring_of(A.field)
    for i in range(A.dim):
        x0 = QQ.zeros(A.dim)
        x0[i] = QQ.convert(1)
        Pa = fix_coordinate(A, x0)
        assert check_poisson(Pa) is None
        assert O.poisson_failure(O.plain(Pa.product.constants, R), O.plain(Pa.bracket.constants, R), R,
                                 A.dim) is None


def test_fix_coordinate_bracket_values():
    Pa = fix_coordinate(b4(), [1, 0, 0, 0])
    # {x0, e2, e3} = e4
    assert Pa.bracket.constants[1, 2, 3] == 1 and Pa.bracket.constants[2, 1, 3] == -1


def test_fix_coordinate_strict_rejects_bad_algebra():
    A = NambuPoissonAlgebra(trunc3().product, random_map(QQ, 3, Symmetry.FULLY_SKEW, seed=3))
    with pytest.raises(AxiomViolation):
        fix_coordinate(A, [1, 0, 0], strict=True)


def test_report_text_uses_one_based_indices():
    P = trunc3().P.copy()
    P[0, 0, 1] = QQ.convert(1)
    rep = check_comm_assoc(NambuPoissonAlgebra.from_arrays(QQ, P, trunc3().B))
    d = rep.as_dict(QQ)
    assert d["witness"] == [i + 1 for i in rep.witness]
    assert "fails at basis tuple" in str(rep)
