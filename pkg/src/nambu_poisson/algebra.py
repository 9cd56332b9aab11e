"""Algebra types and their axiom checkers.

Constructors only validate symmetry classes and dimensions; the axioms are
checked explicitly, so non-examples can be represented (and searched over).
Every checker returns ``None`` on success or the :class:`ViolationReport` of
the lexicographically first failing basis tuple.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AxiomViolation, DimensionMismatch
from .field import Field
from .identities import ViolationReport, first_of, first_violation, term
from .tensors import BilinearMap, Symmetry, TrilinearMap, field_of

__all__ = [
    "ViolationReport", "CommAssocAlgebra", "ThreeLieAlgebra", "NambuPoissonAlgebra", "LieAlgebra",
    "PoissonAlgebra", "check_comm_assoc", "check_fundamental_identity", "check_leibniz",
    "check_nambu_poisson", "check_lie", "check_poisson", "fix_coordinate", "require",
]


def _expect(m, symmetry, what):
    if Symmetry(m.symmetry) != symmetry:
        raise DimensionMismatch(f"{what} must be declared {symmetry.value}, got {m.symmetry.value}")


@dataclass(frozen=True, eq=False)
class CommAssocAlgebra:
    product: BilinearMap

    def __post_init__(self):
        _expect(self.product, Symmetry.SYMMETRIC, "product")
        if self.product.dim_out != self.product.dim_in:
            raise DimensionMismatch("product must map A x A -> A")

    @property
    def field(self) -> Field:
        return self.product.field

    @property
    def dim(self) -> int:
        return self.product.dim_in


@dataclass(frozen=True, eq=False)
class ThreeLieAlgebra:
    bracket: TrilinearMap

    def __post_init__(self):
        _expect(self.bracket, Symmetry.FULLY_SKEW, "bracket")
        if self.bracket.dim_out != self.bracket.dim_in:
            raise DimensionMismatch("bracket must map A x A x A -> A")

    @property
    def field(self) -> Field:
        return self.bracket.field

    @property
    def dim(self) -> int:
        return self.bracket.dim_in


@dataclass(frozen=True, eq=False)
class NambuPoissonAlgebra:
    """Symmetric product and fully skew ternary bracket on one space."""

    product: BilinearMap
    bracket: TrilinearMap

    def __post_init__(self):
        _expect(self.product, Symmetry.SYMMETRIC, "product")
        _expect(self.bracket, Symmetry.FULLY_SKEW, "bracket")
        field_of(self.product, self.bracket)
        n = self.product.dim_in
        if not (self.product.dim_out == n == self.bracket.dim_in == self.bracket.dim_out):
            raise DimensionMismatch("product and bracket must act on the same space")

    @property
    def field(self) -> Field:
        return self.product.field

    @property
    def dim(self) -> int:
        return self.product.dim_in

    @property
    def P(self) -> np.ndarray:
        return self.product.constants

    @property
    def B(self) -> np.ndarray:
        return self.bracket.constants

    @classmethod
    def from_arrays(cls, field: Field, P, B) -> "NambuPoissonAlgebra":
        return cls(BilinearMap(field, P, Symmetry.SYMMETRIC), TrilinearMap(field, B, Symmetry.FULLY_SKEW))

    @classmethod
    def zero(cls, field: Field, n: int) -> "NambuPoissonAlgebra":
        return cls.from_arrays(field, field.zeros((n, n, n)), field.zeros((n, n, n, n)))

    def comm_assoc(self) -> CommAssocAlgebra:
        return CommAssocAlgebra(self.product)

    def three_lie(self) -> ThreeLieAlgebra:
        return ThreeLieAlgebra(self.bracket)

    def __eq__(self, other):
        if not isinstance(other, NambuPoissonAlgebra):
            return NotImplemented
        return self.product == other.product and self.bracket == other.bracket

    __hash__ = None


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    bracket: BilinearMap

    def __post_init__(self):
        _expect(self.bracket, Symmetry.SKEW, "Lie bracket")

    @property
    def field(self) -> Field:
        return self.bracket.field

    @property
    def dim(self) -> int:
        return self.bracket.dim_in


@dataclass(frozen=True, eq=False)
class PoissonAlgebra:
    product: BilinearMap
    bracket: BilinearMap

    def __post_init__(self):
        _expect(self.product, Symmetry.SYMMETRIC, "product")
        _expect(self.bracket, Symmetry.SKEW, "Poisson bracket")
        field_of(self.product, self.bracket)
        n = self.product.dim_in
        if not (self.product.dim_out == n == self.bracket.dim_in == self.bracket.dim_out):
            raise DimensionMismatch("product and bracket must act on the same space")

    @property
    def field(self) -> Field:
        return self.product.field

    @property
    def dim(self) -> int:
        return self.product.dim_in

    def __eq__(self, other):
        if not isinstance(other, PoissonAlgebra):
            return NotImplemented
        return self.product == other.product and self.bracket == other.bracket

    __hash__ = None


# -- identities --------------------------------------------------------------

def assoc_violation(field, P, axiom="associativity"):
    return first_violation(field, axiom, term("abx,xcq->abcq", P, P), term("bcx,axq->abcq", P, P))


def fi_violation(field, B, axiom="fundamental identity"):
    lhs = term("cdex,abxq->abcdeq", B, B)
    rhs = term("abcx,xdeq->abcdeq", B, B) + term("abdx,cxeq->abcdeq", B, B) + term("abex,cdxq->abcdeq", B, B)
    return first_violation(field, axiom, lhs, rhs)


def leibniz_violation(field, P, B, axiom="Leibniz rule"):
    lhs = term("cdx,abxq->abcdq", P, B)
    rhs = term("abcx,xdq->abcdq", B, P) + term("abdx,cxq->abcdq", B, P)
    return first_violation(field, axiom, lhs, rhs)


def jacobi_violation(field, L, axiom="Jacobi identity"):
    lhs = term("bcx,axq->abcq", L, L)
    rhs = term("abx,xcq->abcq", L, L) + term("acx,bxq->abcq", L, L)
    return first_violation(field, axiom, lhs, rhs)


def binary_leibniz_violation(field, P, L, axiom="binary Leibniz rule"):
    lhs = term("bcx,axq->abcq", P, L)
    rhs = term("abx,xcq->abcq", L, P) + term("acx,bxq->abcq", L, P)
    return first_violation(field, axiom, lhs, rhs)


def check_comm_assoc(A) -> ViolationReport | None:
    """Associativity on all basis triples; commutativity is structural."""
    return assoc_violation(A.field, A.product.constants)


def check_fundamental_identity(L) -> ViolationReport | None:
    return fi_violation(L.field, L.bracket.constants)


def check_leibniz(A: NambuPoissonAlgebra) -> ViolationReport | None:
    return leibniz_violation(A.field, A.P, A.B)


def check_nambu_poisson(A: NambuPoissonAlgebra) -> ViolationReport | None:
    return first_of(lambda: check_comm_assoc(A), lambda: check_fundamental_identity(A), lambda: check_leibniz(A))


def check_lie(L: LieAlgebra) -> ViolationReport | None:
    return jacobi_violation(L.field, L.bracket.constants)


def check_poisson(P: PoissonAlgebra) -> ViolationReport | None:
    f, prod, br = P.field, P.product.constants, P.bracket.constants
    return first_of(lambda: assoc_violation(f, prod), lambda: jacobi_violation(f, br),
                    lambda: binary_leibniz_violation(f, prod, br))


def require(report: ViolationReport | None, what: str) -> None:
    """Raise :class:`AxiomViolation` when a precondition check failed."""
    if report is not None:
        raise AxiomViolation(f"{what}: {report}", report)


def as_vector(field: Field, x, n: int) -> np.ndarray:
    v = np.asarray(field.array(x) if not isinstance(x, np.ndarray) else field.reduce(x), dtype=object)
    if v.shape != (n,):
        raise DimensionMismatch(f"expected a vector of length {n}, got shape {v.shape}")
    return v


def fix_coordinate(A: NambuPoissonAlgebra, x0, strict: bool = False) -> PoissonAlgebra:
    """Poisson algebra ``(A, ., {a, b} = {x0, a, b})``."""
    if strict:
        require(check_nambu_poisson(A), "fix_coordinate needs a Nambu-Poisson algebra")
    f = A.field
    x0 = as_vector(f, x0, A.dim)
    L = f.reduce(np.einsum("i,iabq->abq", x0, A.B))
    return PoissonAlgebra(A.product, BilinearMap(f, L, Symmetry.SKEW))
