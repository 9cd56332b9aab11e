import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracle as O
from nambu_poisson.algebra import check_nambu_poisson, fix_coordinate
from nambu_poisson.errors import DimensionMismatch, FieldMismatch
from nambu_poisson.field import GF, QQ
from nambu_poisson.fixtures import all_fixtures, b4
from nambu_poisson.representations import (
    NPRepresentation, adjoint_rep, check_3lie_rep, check_np_rep, check_poisson_rep, restrict_rep_x0, semidirect_np,
)


def _oracle(A, R):
    r = O.ring_of(A.field)
    return O.rep_failure(O.plain(A.P, r), O.plain(A.B, r), O.plain(R.mu, r), O.plain(R.rho, r), r, A.dim, R.m)


def test_adjoint_is_rep(fixture_algebra):
    _, A = fixture_algebra
    R = adjoint_rep(A)
    assert check_np_rep(A, R) is None
    assert _oracle(A, R) is None
    assert check_nambu_poisson(semidirect_np(A, R)) is None


def test_zero_rep_on_any_fixture(fixture_algebra):
    _, A = fixture_algebra
    R = NPRepresentation.zero(QQ, A.dim, 2)
    assert check_np_rep(A, R) is None
    assert check_nambu_poisson(semidirect_np(A, R)) is None


@pytest.mark.parametrize("name", ["trunc3", "b4"])
@given(seed=st.integers(0, 10**6))
def test_random_rep_agrees_with_oracle(name, seed):
    A = all_fixtures()[name]
    n, m = A.dim, 2
    rng = np.random.default_rng(seed)
    mu = np.array(rng.integers(-1, 2, size=(n, m, m)).tolist(), dtype=object)
    rho = np.zeros((n, n, m, m), dtype=object)
    for a in range(n):
        for b in range(a + 1, n):
            blk = rng.integers(-1, 2, size=(m, m))
            rho[a, b] = blk
            rho[b, a] = -blk
    R = NPRepresentation(QQ, QQ.array(mu.tolist()), QQ.array(rho.tolist()))
    rep, ref = check_np_rep(A, R), _oracle(A, R)
    assert (rep is None) == (ref is None)
    # semidirect product is NP exactly when R is a representation
    assert (check_nambu_poisson(semidirect_np(A, R)) is None) == (rep is None)


def test_3lie_rep_adjoint_b4():
    A = b4()
    assert check_3lie_rep(A.three_lie(), adjoint_rep(A).three_lie()) is None


def test_restricted_rep_is_poisson_rep(fixture_algebra):
    _, A = fixture_algebra
    R = adjoint_rep(A)
    for i in range(A.dim):
        x0 = QQ.zeros(A.dim)
        x0[i] = QQ.convert(1)
        assert check_poisson_rep(fix_coordinate(A, x0), restrict_rep_x0(A, R, x0)) is None


def test_rho_must_be_skew():
    rho = QQ.zeros((2, 2, 1, 1))
    rho[0, 1, 0, 0] = QQ.convert(1)
    with pytest.raises(Exception):
        NPRepresentation(QQ, QQ.zeros((2, 1, 1)), rho)


def test_dimension_and_field_mismatch():
    with pytest.raises(DimensionMismatch):
        check_np_rep(b4(), NPRepresentation.zero(QQ, 3, 1))
    with pytest.raises(FieldMismatch):
        check_np_rep(b4(), NPRepresentation.zero(GF(3), 4, 1))
