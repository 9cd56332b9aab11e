import itertools

import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st

from nambu_poisson import linalg
from nambu_poisson.errors import NotInvertible
from nambu_poisson.field import GF, QQ

int_matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)))


@given(int_matrices)
def test_rank_matches_sympy(rows):
    assert linalg.rank(QQ, QQ.array(rows)) == sympy.Matrix(rows).rank()


@given(int_matrices)
def test_nullspace_is_kernel_and_complete(rows):
    m = QQ.array(rows)
    basis = linalg.nullspace_basis(QQ, m)
    assert len(basis) == len(rows[0]) - sympy.Matrix(rows).rank()
    for v in basis:
        assert QQ.is_zero_array(m.dot(v))


@given(int_matrices)
def test_gram_kernel_equals_plain_kernel(rows):
    m = np.array(rows, dtype=np.int64)
    k1 = linalg.kernel_of_integer_matrix(QQ, m)
    k2 = linalg.nullspace_basis(QQ, QQ.array(rows))
    assert len(k1) == len(k2)
    for v in k1:
        assert QQ.is_zero_array(QQ.array(rows).dot(v))


@given(st.lists(st.lists(st.integers(0, 2), min_size=3, max_size=3), min_size=1, max_size=4))
def test_gf3_rank_by_counting_kernel(rows):
    # |ker| = p^(cols - rank), counted by brute force
    F = GF(3)
    m = np.array(rows)
    size = sum(1 for v in itertools.product(range(3), repeat=3) if not np.any(m.dot(v) % 3))
    assert 3 ** (3 - linalg.rank(F, F.array(rows))) == size
    assert len(linalg.kernel_of_integer_matrix(F, m)) == 3 - linalg.rank(F, F.array(rows))


def test_invert_roundtrip():
    m = QQ.array([[2, 1], [1, 1]])
    inv = linalg.invert(QQ, m)
    assert not np.any(linalg.matmul(QQ, m, inv) != QQ.identity(2))


def test_invert_singular():
    with pytest.raises(NotInvertible):
        linalg.invert(QQ, QQ.array([[1, 2], [2, 4]]))
    with pytest.raises(NotInvertible):
        linalg.invert(GF(3), GF(3).array([[1, 1], [1, 1]]))


def test_in_span():
    vs = [QQ.array([1, 0, 1]), QQ.array([0, 1, 1])]
    assert linalg.in_span(QQ, vs, QQ.array([2, 3, 5]))
    assert not linalg.in_span(QQ, vs, QQ.array([0, 0, 1]))
    assert linalg.in_span(QQ, [], QQ.zeros(3))


def test_rank_of_fractional_matrix():
    m = QQ.array([["1/2", "1/3"], ["3/2", 1]])
    assert linalg.rank(QQ, m) == 1
