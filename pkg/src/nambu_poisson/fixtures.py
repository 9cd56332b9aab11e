"""Built-in example algebras.

``b4`` is the 4-dimensional algebra with zero product and the single bracket
``{e1, e2, e3} = e4`` (1-based).  ``trunc3`` is ``k[x]/(x^3)`` with basis
``1, x, x^2`` and zero bracket.

Operator fixtures come from pinned GF(3) searches (see :func:`searched_operators`).
"""

from __future__ import annotations

from functools import lru_cache

from .algebra import NambuPoissonAlgebra
from .field import QQ, Field
from .tensors import Symmetry, symmetrize


def zero_algebra(n: int, field: Field = QQ) -> NambuPoissonAlgebra:
    return NambuPoissonAlgebra.zero(field, n)


def trunc3(field: Field = QQ) -> NambuPoissonAlgebra:
    prod = [(i, j, i + j, 1) for i in range(3) for j in range(i, 3) if i + j < 3]
    return NambuPoissonAlgebra(symmetrize(field, prod, Symmetry.SYMMETRIC, 3),
                               symmetrize(field, [], Symmetry.FULLY_SKEW, 3))


def b4(field: Field = QQ) -> NambuPoissonAlgebra:
    return NambuPoissonAlgebra(symmetrize(field, [], Symmetry.SYMMETRIC, 4),
                               symmetrize(field, [(0, 1, 2, 3, 1)], Symmetry.FULLY_SKEW, 4))


BUILTIN = {
    "zero2": lambda field=QQ: zero_algebra(2, field),
    "zero3": lambda field=QQ: zero_algebra(3, field),
    "zero4": lambda field=QQ: zero_algebra(4, field),
    "trunc3": trunc3,
    "b4": b4,
}


def builtin(name: str, field: Field = QQ) -> NambuPoissonAlgebra:
    try:
        make = BUILTIN[name]
    except KeyError:
        raise KeyError(f"unknown example {name!r}; known: {', '.join(sorted(BUILTIN))}") from None
    return make(field)


def all_fixtures(field: Field = QQ) -> dict[str, NambuPoissonAlgebra]:
    return {name: make(field) for name, make in BUILTIN.items()}


# pinned searches: (kind, base, filter) -> seed 0, GF(3)
PINNED_SEARCHES = {
    "b4-diagonal-nijenhuis": ("nijenhuis", "b4", "diagonal"),
    "b4-diagonal-reynolds": ("reynolds", "b4", "diagonal"),
    "trunc3-triangular-reynolds": ("reynolds", "trunc3", "upper-triangular"),
}
SEARCH_PRIME = 3
SEARCH_SEED = 0


@lru_cache(maxsize=None)
def _searched(name: str):
    from .field import GF
    from .search import SearchSpec, search

    kind, base, filt = PINNED_SEARCHES[name]
    f = GF(SEARCH_PRIME)
    spec = SearchSpec(kind, f, base=builtin(base, f), seed=SEARCH_SEED, diagonal=filt == "diagonal",
                      upper_triangular=filt == "upper-triangular")
    return tuple(search(spec).witnesses)


def searched_operators(name: str, field: Field = QQ) -> list:
    """Witnesses of a pinned search; over QQ only lifts that re-verify are kept."""
    from .operators import check_nijenhuis, check_reynolds
    from .search import lift_to_rationals

    witnesses = _searched(name)
    if field != QQ:
        if getattr(field, "p", None) != SEARCH_PRIME:
            raise ValueError(f"pinned searches run over GF({SEARCH_PRIME})")
        return list(witnesses)
    kind, base, _ = PINNED_SEARCHES[name]
    A = builtin(base)
    check = check_nijenhuis if kind == "nijenhuis" else check_reynolds
    return [w for w in map(lift_to_rationals, witnesses) if check(A, w) is None]


DESCRIPTIONS = {
    "zero2": "zero product and bracket",
    "zero3": "zero product and bracket",
    "zero4": "zero product and bracket",
    "trunc3": "k[x]/(x^3) with zero bracket",
    "b4": "zero product, {e1, e2, e3} = e4",
}


def example_files() -> dict[str, str]:
    """Text of the shipped example files, keyed by file name."""
    from .io import emit_objects
    from .representations import NPRepresentation

    out = {f"{name}.alg": emit_objects(algebra=builtin(name)) for name in BUILTIN}
    out["zero2-zero-rep.alg"] = emit_objects(algebra=zero_algebra(2), rep=NPRepresentation.zero(QQ, 2, 1))
    nij = [N for N in searched_operators("b4-diagonal-nijenhuis") if len(set(N.matrix.diagonal())) > 2]
    out["b4-nijenhuis.mat"] = emit_objects(operator=nij[0])
    out["trunc3-reynolds.mat"] = emit_objects(operator=searched_operators("trunc3-triangular-reynolds")[-1])
    return out
