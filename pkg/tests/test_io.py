import pytest
from hypothesis import given, strategies as st

from nambu_poisson.deformations import LinearDeformation12
from nambu_poisson.errors import IndexOutOfRange, ParseError, SymmetryViolation
from nambu_poisson.field import GF, QQ
from nambu_poisson.fixtures import b4, example_files, zero_algebra
from nambu_poisson.io import AlgebraFile, emit, emit_objects, parse
from nambu_poisson.ns import ns_from_nijenhuis
from nambu_poisson.operators import minus_cocycle
from nambu_poisson.representations import NPRepresentation, adjoint_rep
from nambu_poisson.tensors import LinearMap, Symmetry, random_map

HEAD = "nambu-poisson v1\nfield rational\n"


def test_parse_emit_identity_on_fixtures(fixture_algebra):
    _, A = fixture_algebra
    text = emit_objects(algebra=A)
    doc = parse(text)
    assert doc.algebra == A
    assert emit(doc) == text
    assert emit(parse(emit(doc))) == text


def test_zero_algebra_minimal_file():
    assert emit_objects(algebra=zero_algebra(3)) == HEAD + "dim 3\n[product]\n[bracket]\n"
    assert parse(HEAD + "dim 3\n[product]\n[bracket]\n").algebra == zero_algebra(3)


def test_b4_single_entry():
    text = emit_objects(algebra=b4())
    assert text.endswith("[bracket]\n1 2 3 4 1\n")
    assert parse(HEAD + "dim 4\n[bracket]\n1 2 3 4 1\n").algebra == b4()


def test_all_sections_roundtrip(fixture_algebra):
    _, A = fixture_algebra
    n = A.dim
    d = LinearDeformation12(A, random_map(QQ, n, Symmetry.SYMMETRIC, seed=1), random_map(QQ, n, "fully-skew", seed=2),
                            random_map(QQ, n, "fully-skew", seed=3))
    doc = AlgebraFile.from_objects(deformation=d, rep=adjoint_rep(A), pair=minus_cocycle(A),
                                   operator=random_map(QQ, n, seed=4, arity_=1))
    again = parse(emit(doc))
    assert again == doc
    assert again.deformation == d and again.rep == adjoint_rep(A) and again.pair == minus_cocycle(A)
    X = ns_from_nijenhuis(A, LinearMap.identity(QQ, n).scaled("3/2"))
    assert parse(emit_objects(ns=X)).ns == X


def test_gf_values_and_module_dim():
    F = GF(5)
    R = NPRepresentation.zero(F, 3, 2)
    r = LinearMap(F, F.array([[1, 4], [0, 2], [3, 3]]))
    text = emit_objects(algebra=zero_algebra(3, F), rep=R, operator=r)
    assert "field gf 5\n" in text and "module-dim 2\n" in text
    doc = parse(text)
    assert doc.operator == r and doc.m == 2


@given(seed=st.integers(0, 10**6), n=st.integers(1, 4))
def test_random_rational_roundtrip(seed, n):
    from nambu_poisson.algebra import NambuPoissonAlgebra
    P = random_map(QQ, n, Symmetry.SYMMETRIC, seed=seed, bound=3)
    B = random_map(QQ, n, Symmetry.FULLY_SKEW, seed=seed + 1, bound=3)
    A = NambuPoissonAlgebra(P, B)
    P2 = P.constants / 7
    A2 = NambuPoissonAlgebra.from_arrays(QQ, QQ.reduce(P2), B.constants)
    for X in (A, A2):
        assert parse(emit_objects(algebra=X)).algebra == X


def test_duplicate_slot_names_slot():
    with pytest.raises(ParseError) as exc:
        parse(HEAD + "dim 2\n[product]\n1 2 1 1\n1 2 1 3\n")
    assert "(1 2 1)" in str(exc.value) and "line 5" in str(exc.value) and exc.value.line == 6


def test_index_out_of_range():
    with pytest.raises(IndexOutOfRange):
        parse(HEAD + "dim 2\n[product]\n1 3 1 1\n")
    with pytest.raises(IndexOutOfRange):
        parse(HEAD + "dim 2\n[product]\n0 1 1 1\n")


def test_noncanonical_slot():
    with pytest.raises(SymmetryViolation):
        parse(HEAD + "dim 3\n[bracket]\n2 1 3 1 1\n")


@pytest.mark.parametrize("text,line,col", [
    ("nambu-poisson v2\n", 1, 1),
    (HEAD + "dim 2\n[product]\n1 1 1 x\n", 5, 7),
    (HEAD + "dim 2\n[product]\n1 1 1\n", 5, 1),
    (HEAD + "dim 2\n[nonsense]\n", 4, 1),
    (HEAD + "dim two\n", 3, 5),
    (HEAD + "dim 2\n[product]\n[product]\n", 5, 1),
    (HEAD + "dim 2\nweird 3\n", 4, 1),
    (HEAD + "dim 2\n[product]\n1 1 1 1/0\n", 5, 7),
])
def test_parse_errors_have_location(text, line, col):
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert (exc.value.line, exc.value.column) == (line, col)


def test_missing_header():
    with pytest.raises(ParseError):
        parse("nambu-poisson v1\ndim 2\n")


def test_comments_and_blank_lines():
    doc = parse("# a comment\nnambu-poisson v1\n\nfield rational  # inline\ndim 4\n[bracket]\n1 2 3 4 1 # e4\n")
    assert doc.algebra == b4()


def test_field_override():
    doc = parse(emit_objects(algebra=b4()), field_override=GF(3))
    assert doc.algebra == b4(GF(3))


def test_shipped_example_files_are_current():
    from pathlib import Path
    root = Path(__file__).resolve().parent.parent / "examples"
    for name, text in example_files().items():
        assert (root / name).read_text() == text
        assert emit(parse(text)) == text
