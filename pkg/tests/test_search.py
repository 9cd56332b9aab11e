import itertools

import pytest
from hypothesis import given, strategies as st

from nambu_poisson.algebra import check_nambu_poisson
from nambu_poisson.errors import AxiomViolation, FieldMismatch
from nambu_poisson.field import GF, QQ
from nambu_poisson.fixtures import b4, trunc3, zero_algebra
from nambu_poisson.operators import check_nijenhuis
from nambu_poisson.search import SearchSpec, centered, decode, lift_to_rationals, search, space_size, verify
from nambu_poisson.tensors import LinearMap, Symmetry, random_map
from nambu_poisson.algebra import NambuPoissonAlgebra


def test_zero_algebra_gf2_all_sixteen():
    res = search(SearchSpec("nijenhuis", GF(2), base=zero_algebra(2, GF(2))))
    assert len(res.witnesses) == 16 and res.examined == 16 and not res.budget_exceeded
    mats = {tuple(w.matrix.flatten()) for w in res.witnesses}
    assert mats == set(itertools.product(range(2), repeat=4))


def test_b4_diagonal_gf3_subset_reverified():
    spec = SearchSpec("nijenhuis", GF(3), base=b4(GF(3)), diagonal=True)
    res = search(spec)
    assert 0 < len(res.witnesses) < 81
    for w in res.witnesses:
        assert check_nijenhuis(b4(GF(3)), w) is None
    # brute-force count with an independent enumeration
    count = sum(check_nijenhuis(b4(GF(3)), LinearMap.diagonal(GF(3), d)) is None
                for d in itertools.product(range(3), repeat=4))
    assert count == len(res.witnesses)


def test_np_algebra_search_gf2_dim2():
    spec = SearchSpec("np-algebra", GF(2), dim=2)
    res = search(spec)
    assert res.examined == 2 ** 6
    assert all(check_nambu_poisson(w) is None for w in res.witnesses)
    assert any(w == zero_algebra(2, GF(2)) for w in res.witnesses)


def test_np_algebra_dim3_sampled():
    spec = SearchSpec("np-algebra", GF(2), dim=3, budget=200, seed=4)
    res = search(spec)
    assert res.budget_exceeded and res.examined == 200
    assert all(verify(spec, w) for w in res.witnesses)


def test_determinism_and_jobs():
    spec = SearchSpec("reynolds", GF(3), base=trunc3(GF(3)), budget=300, seed=11)
    a, b = search(spec), search(spec)
    c = search(spec, jobs=2)
    assert a.indices == b.indices == c.indices
    assert all(x == y for x, y in zip(a.witnesses, c.witnesses))


@pytest.mark.parametrize("kind", ["nijenhuis", "reynolds", "twisted-rb"])
def test_witnesses_reverify(kind):
    spec = SearchSpec(kind, GF(3), base=b4(GF(3)), upper_triangular=True, budget=400, seed=2)
    res = search(spec)
    assert all(verify(spec, w) for w in res.witnesses)


def test_preconditions():
    with pytest.raises(FieldMismatch):
        SearchSpec("nijenhuis", GF(3), base=b4())
    with pytest.raises(FieldMismatch):
        SearchSpec("nijenhuis", QQ, base=b4())
    with pytest.raises(ValueError):
        SearchSpec("nijenhuis", GF(3), base=b4(GF(3)), budget=0)
    bad = NambuPoissonAlgebra(trunc3(GF(3)).product, random_map(GF(3), 3, Symmetry.FULLY_SKEW, seed=3))
    assert check_nambu_poisson(bad) is not None
    with pytest.raises(AxiomViolation):
        search(SearchSpec("nijenhuis", GF(3), base=bad))


def test_coefficient_subset():
    spec = SearchSpec("nijenhuis", GF(5), base=zero_algebra(2, GF(5)), coefficients=(0, 1))
    assert space_size(spec) == 16
    assert len(search(spec).witnesses) == 16


@given(st.integers(0, 100), st.sampled_from([2, 3, 5, 7]))
def test_centered_lift(x, p):
    c = centered(x, p)
    assert (c - x) % p == 0 and -(p // 2) <= c <= p // 2


def test_lift_identity_and_zero():
    F = GF(5)
    assert lift_to_rationals(LinearMap.identity(F, 3)) == LinearMap.identity(QQ, 3)
    assert lift_to_rationals(LinearMap.zero(F, 3)) == LinearMap.zero(QQ, 3)
    assert lift_to_rationals(LinearMap.diagonal(F, [4, 1, 0])) == LinearMap.diagonal(QQ, [-1, 1, 0])


def test_lift_keeps_skew_symmetry_in_char_two():
    A2 = b4(GF(2))
    assert lift_to_rationals(A2) == b4()


def test_lifted_b4_diagonals_recorded():
    res = search(SearchSpec("nijenhuis", GF(3), base=b4(GF(3)), diagonal=True))
    verdicts = [check_nijenhuis(b4(), lift_to_rationals(w)) is None for w in res.witnesses]
    assert len(verdicts) == len(res.witnesses) and any(verdicts)


def test_decode_is_bijective_on_small_space():
    spec = SearchSpec("nijenhuis", GF(2), base=zero_algebra(2, GF(2)))
    seen = {tuple(decode(spec, i).matrix.flatten()) for i in range(16)}
    assert len(seen) == 16
