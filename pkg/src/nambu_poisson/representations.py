"""Representations of 3-Lie, Nambu-Poisson and Poisson algebras.

Action tensors store End(V) blocks explicitly:

* ``mu[a, i, j]`` is entry ``(i, j)`` of the matrix ``mu(e_a)``,
* ``rho[a, b, i, j]`` is entry ``(i, j)`` of ``rho(e_a, e_b)``,

so ``mu(e_a) e_j = sum_i mu[a, i, j] f_i``.  Identities between operators are
checked on basis vectors of V: the witness tuple ends with the index of the
module basis vector the operators were applied to.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (
    NambuPoissonAlgebra, PoissonAlgebra, ThreeLieAlgebra, ViolationReport, as_vector, fix_coordinate, require,
)
from .errors import DimensionMismatch, SymmetryViolation
from .field import Field
from .identities import first_of, first_violation, term
from .tensors import BilinearMap, Symmetry, TrilinearMap, freeze, symmetry_defect


def _check_rho(field: Field, rho: np.ndarray) -> np.ndarray:
    rho = freeze(field, rho)
    if rho.ndim != 4 or rho.shape[0] != rho.shape[1] or rho.shape[2] != rho.shape[3]:
        raise DimensionMismatch(f"rho needs shape (n, n, m, m), got {rho.shape}")
    bad = symmetry_defect(field, rho, Symmetry.SKEW_FIRST_TWO)
    if bad:
        raise SymmetryViolation("rho must be skew-symmetric in its two algebra arguments")
    return rho


def _check_mu(field: Field, mu: np.ndarray) -> np.ndarray:
    mu = freeze(field, mu)
    if mu.ndim != 3 or mu.shape[1] != mu.shape[2]:
        raise DimensionMismatch(f"mu needs shape (n, m, m), got {mu.shape}")
    return mu


@dataclass(frozen=True, eq=False)
class ThreeLieRep:
    field: Field
    rho: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "rho", _check_rho(self.field, self.rho))

    @property
    def n(self) -> int:
        return self.rho.shape[0]

    @property
    def m(self) -> int:
        return self.rho.shape[2]


@dataclass(frozen=True, eq=False)
class NPRepresentation:
    field: Field
    mu: np.ndarray
    rho: np.ndarray

    def __post_init__(self):
        mu = _check_mu(self.field, self.mu)
        rho = _check_rho(self.field, self.rho)
        if mu.shape[0] != rho.shape[0] or mu.shape[1] != rho.shape[2]:
            raise DimensionMismatch(f"mu {mu.shape} and rho {rho.shape} disagree on dimensions")
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "rho", rho)

    @property
    def n(self) -> int:
        return self.mu.shape[0]

    @property
    def m(self) -> int:
        return self.mu.shape[1]

    def three_lie(self) -> ThreeLieRep:
        return ThreeLieRep(self.field, self.rho)

    @classmethod
    def zero(cls, field: Field, n: int, m: int) -> "NPRepresentation":
        return cls(field, field.zeros((n, m, m)), field.zeros((n, n, m, m)))

    def __eq__(self, other):
        if not isinstance(other, NPRepresentation):
            return NotImplemented
        return (self.field == other.field and self.mu.shape == other.mu.shape and self.rho.shape == other.rho.shape
                and not np.any(self.mu != other.mu) and not np.any(self.rho != other.rho))

    __hash__ = None


@dataclass(frozen=True, eq=False)
class PoissonRep:
    field: Field
    mu: np.ndarray
    rho_x0: np.ndarray

    def __post_init__(self):
        mu = _check_mu(self.field, self.mu)
        r = _check_mu(self.field, self.rho_x0)
        if mu.shape != r.shape:
            raise DimensionMismatch(f"mu {mu.shape} and rho_x0 {r.shape} disagree on dimensions")
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "rho_x0", r)

    @property
    def n(self) -> int:
        return self.mu.shape[0]

    @property
    def m(self) -> int:
        return self.mu.shape[1]


def _match(A, R) -> Field:
    A.field.check_same(R.field)
    if A.dim != R.n:
        raise DimensionMismatch(f"algebra has dimension {A.dim} but the representation expects {R.n}")
    return A.field


# -- identities --------------------------------------------------------------

def three_lie_rep_violation(field, B, rho) -> ViolationReport | None:
    def first():
        lhs = term("abix,cdxj->abcdji", rho, rho) - term("cdix,abxj->abcdji", rho, rho)
        rhs = term("abcx,xdij->abcdji", B, rho) + term("abdx,cxij->abcdji", B, rho)
        return first_violation(field, "3-Lie representation (commutator)", lhs, rhs)

    def second():
        lhs = term("abcx,xdij->abcdji", B, rho)
        rhs = (term("abix,cdxj->abcdji", rho, rho) + term("bcix,adxj->abcdji", rho, rho)
               + term("caix,bdxj->abcdji", rho, rho))
        return first_violation(field, "3-Lie representation (bracket)", lhs, rhs)

    return first_of(first, second)


def mu_mult_violation(field, P, mu) -> ViolationReport | None:
    return first_violation(field, "mu multiplicative", term("abx,xij->abji", P, mu), term("aix,bxj->abji", mu, mu))


def np_rep_compat_violation(field, P, B, mu, rho) -> ViolationReport | None:
    def first():
        lhs = term("abcx,xij->abcji", B, mu)
        rhs = term("abix,cxj->abcji", rho, mu) - term("cix,abxj->abcji", mu, rho)
        return first_violation(field, "mu of bracket", lhs, rhs)

    def second():
        lhs = term("bcx,axij->abcji", P, rho)
        rhs = term("bix,acxj->abcji", mu, rho) + term("cix,abxj->abcji", mu, rho)
        return first_violation(field, "rho of product", lhs, rhs)

    return first_of(first, second)


def check_3lie_rep(L: ThreeLieAlgebra, R: ThreeLieRep) -> ViolationReport | None:
    f = _match(L, R)
    return three_lie_rep_violation(f, L.bracket.constants, R.rho)


def check_np_rep(A: NambuPoissonAlgebra, R: NPRepresentation) -> ViolationReport | None:
    f = _match(A, R)
    return first_of(
        lambda: mu_mult_violation(f, A.P, R.mu),
        lambda: three_lie_rep_violation(f, A.B, R.rho),
        lambda: np_rep_compat_violation(f, A.P, A.B, R.mu, R.rho),
    )


def check_poisson_rep(P: PoissonAlgebra, R: PoissonRep) -> ViolationReport | None:
    f = _match(P, R)
    prod, L, mu, r = P.product.constants, P.bracket.constants, R.mu, R.rho_x0
    return first_of(
        lambda: mu_mult_violation(f, prod, mu),
        lambda: first_violation(f, "Lie representation", term("abx,xij->abji", L, r),
                                term("aix,bxj->abji", r, r) - term("bix,axj->abji", r, r)),
        lambda: first_violation(f, "mu of Poisson bracket", term("abx,xij->abji", L, mu),
                                term("aix,bxj->abji", r, mu) - term("bix,axj->abji", mu, r)),
        lambda: first_violation(f, "Lie action of product", term("abx,xij->abji", prod, r),
                                term("aix,bxj->abji", mu, r) + term("bix,axj->abji", mu, r)),
    )


# -- constructions -----------------------------------------------------------

def adjoint_rep(A: NambuPoissonAlgebra) -> NPRepresentation:
    """``mu(a) b = a . b`` and ``rho(a, b) c = {a, b, c}``."""
    return NPRepresentation(A.field, A.P.transpose(0, 2, 1), A.B.transpose(0, 1, 3, 2))


def _semidirect_bracket(field, B, rho, psi=None) -> np.ndarray:
    n, m = B.shape[0], rho.shape[2]
    big = field.zeros((n + m,) * 4)
    big[:n, :n, :n, :n] = B
    block = rho.transpose(0, 1, 3, 2)  # [a, b, j, i]: rho(a, b) f_j has f_i coordinate
    minus = field.reduce(-block)
    big[:n, :n, n:, n:] = block                              # {a, b, w} -> rho(a, b) w
    big[n:, :n, :n, n:] = block.transpose(2, 0, 1, 3)        # {u, b, c} -> rho(b, c) u
    big[:n, n:, :n, n:] = minus.transpose(0, 2, 1, 3)        # {a, v, c} -> rho(c, a) v
    if psi is not None:
        big[:n, :n, :n, n:] = psi
    return big


def _semidirect_product(field, P, mu, phi=None) -> np.ndarray:
    n, m = P.shape[0], mu.shape[1]
    big = field.zeros((n + m,) * 3)
    big[:n, :n, :n] = P
    block = mu.transpose(0, 2, 1)  # [a, j, i]
    big[:n, n:, n:] = block
    big[n:, :n, n:] = block.transpose(1, 0, 2)
    if phi is not None:
        big[:n, :n, n:] = phi
    return big


def semidirect_3lie(L: ThreeLieAlgebra, R: ThreeLieRep) -> ThreeLieAlgebra:
    f = _match(L, R)
    return ThreeLieAlgebra(TrilinearMap(f, _semidirect_bracket(f, L.bracket.constants, R.rho), Symmetry.FULLY_SKEW))


def semidirect_np(A: NambuPoissonAlgebra, R: NPRepresentation) -> NambuPoissonAlgebra:
    f = _match(A, R)
    return NambuPoissonAlgebra.from_arrays(f, _semidirect_product(f, A.P, R.mu), _semidirect_bracket(f, A.B, R.rho))


def restrict_rep_x0(A: NambuPoissonAlgebra, R: NPRepresentation, x0, strict: bool = False) -> PoissonRep:
    """``(V; mu, rho_x0)`` with ``rho_x0(a) = rho(x0, a)``."""
    f = _match(A, R)
    if strict:
        require(check_np_rep(A, R), "restrict_rep_x0 needs a representation")
    x0 = as_vector(f, x0, A.dim)
    return PoissonRep(f, R.mu, f.reduce(np.einsum("k,kaij->aij", x0, R.rho)))


def restrict_to_poisson(A: NambuPoissonAlgebra, R: NPRepresentation, x0):
    """Both halves of the coordinate-fixing construction at once."""
    return fix_coordinate(A, x0), restrict_rep_x0(A, R, x0)


def as_bilinear_action(field: Field, mu: np.ndarray) -> BilinearMap:
    """View ``mu`` of the adjoint kind as the bilinear map ``(a, b) -> mu(a) b``."""
    return BilinearMap(field, mu.transpose(0, 2, 1))
