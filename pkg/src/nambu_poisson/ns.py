"""NS-commutative, NS-3-Lie and NS-Nambu-Poisson algebras.

Tensors: ``diamond[a, b, k]`` is the ``e_k`` coordinate of ``a <> b``,
``sq[a, b, c, k]`` that of ``[a, b, c]`` and similarly for ``star`` and
``dsq`` (the double bracket).  Derived operations:

    a (.) b     = a <> b + b <> a + a * b
    {{a, b, c}} = [a, b, c] + [b, c, a] + [c, a, b] + [[a, b, c]]
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .algebra import NambuPoissonAlgebra, ViolationReport, require
from .cohomology import CocyclePair
from .errors import DimensionMismatch, NotInvertible
from .field import Field
from .identities import act, evaluate, first_of, first_violation, term
from .operators import (
    TwistedOCandidate, _nijenhuis_parts, _square, check_nijenhuis, check_reynolds, check_twisted_o,
    reynolds_deformed,
)
from .representations import NPRepresentation
from .tensors import BilinearMap, Symmetry, TrilinearMap, field_of


def _expect(m, symmetry, what):
    if Symmetry(m.symmetry) != symmetry:
        raise DimensionMismatch(f"{what} must be declared {symmetry.value}, got {Symmetry(m.symmetry).value}")


@dataclass(frozen=True, eq=False)
class NSCommAlgebra:
    diamond: BilinearMap
    star: BilinearMap

    def __post_init__(self):
        _expect(self.star, Symmetry.SYMMETRIC, "star")
        field_of(self.diamond, self.star)

    @property
    def field(self) -> Field:
        return self.diamond.field

    @property
    def dim(self) -> int:
        return self.diamond.dim_in


@dataclass(frozen=True, eq=False)
class NS3LieAlgebra:
    sq: TrilinearMap
    dsq: TrilinearMap

    def __post_init__(self):
        _expect(self.sq, Symmetry.SKEW_FIRST_TWO, "[ , , ]")
        _expect(self.dsq, Symmetry.FULLY_SKEW, "[[ , , ]]")
        field_of(self.sq, self.dsq)

    @property
    def field(self) -> Field:
        return self.sq.field

    @property
    def dim(self) -> int:
        return self.sq.dim_in


@dataclass(frozen=True, eq=False)
class NSNambuPoissonAlgebra:
    diamond: BilinearMap
    star: BilinearMap
    sq: TrilinearMap
    dsq: TrilinearMap

    def __post_init__(self):
        _expect(self.star, Symmetry.SYMMETRIC, "star")
        _expect(self.sq, Symmetry.SKEW_FIRST_TWO, "[ , , ]")
        _expect(self.dsq, Symmetry.FULLY_SKEW, "[[ , , ]]")
        field_of(self.diamond, self.star, self.sq, self.dsq)
        n = self.diamond.dim_in
        if any(m.dim_in != n or m.dim_out != n for m in (self.diamond, self.star, self.sq, self.dsq)):
            raise DimensionMismatch("all four operations must act on one space")

    @property
    def field(self) -> Field:
        return self.diamond.field

    @property
    def dim(self) -> int:
        return self.diamond.dim_in

    @classmethod
    def from_arrays(cls, field: Field, diamond, star, sq, dsq) -> "NSNambuPoissonAlgebra":
        return cls(BilinearMap(field, diamond, Symmetry.NONE), BilinearMap(field, star, Symmetry.SYMMETRIC),
                   TrilinearMap(field, sq, Symmetry.SKEW_FIRST_TWO), TrilinearMap(field, dsq, Symmetry.FULLY_SKEW))

    @classmethod
    def zero(cls, field: Field, n: int) -> "NSNambuPoissonAlgebra":
        return cls.from_arrays(field, field.zeros((n,) * 3), field.zeros((n,) * 3), field.zeros((n,) * 4),
                               field.zeros((n,) * 4))

    @classmethod
    def from_np(cls, A: NambuPoissonAlgebra) -> "NSNambuPoissonAlgebra":
        """``(0, ., 0, {,,})``."""
        f, n = A.field, A.dim
        return cls.from_arrays(f, f.zeros((n,) * 3), A.P, f.zeros((n,) * 4), A.B)

    def ns_comm(self) -> NSCommAlgebra:
        return NSCommAlgebra(self.diamond, self.star)

    def ns_3lie(self) -> NS3LieAlgebra:
        return NS3LieAlgebra(self.sq, self.dsq)

    def __eq__(self, other):
        if not isinstance(other, NSNambuPoissonAlgebra):
            return NotImplemented
        return (self.diamond == other.diamond and self.star == other.star and self.sq == other.sq
                and self.dsq == other.dsq)

    __hash__ = None


# -- derived operations --------------------------------------------------------

def odot(field: Field, D, St) -> np.ndarray:
    return field.reduce(D + D.transpose(1, 0, 2) + St)


def total_bracket(field: Field, S, Dq) -> np.ndarray:
    return field.reduce(S + np.einsum("bcaq->abcq", S) + np.einsum("cabq->abcq", S) + Dq)


# -- checkers ------------------------------------------------------------------

def _ns_comm_violation(f, D, St) -> ViolationReport | None:
    O = odot(f, D, St)

    def first():
        return first_violation(f, "NS-commutative (diamond)", term("bcx,axq->abcq", D, D),
                               term("abx,xcq->abcq", O, D))

    def second():
        lhs = term("bcx,axq->abcq", St, D) + term("bcx,axq->abcq", O, St)
        rhs = term("acx,bxq->abcq", St, D) + term("acx,bxq->abcq", O, St)
        return first_violation(f, "NS-commutative (star)", lhs, rhs)

    return first_of(first, second)


def _ns_3lie_violation(f, S, Dq) -> ViolationReport | None:
    TB = total_bracket(f, S, Dq)

    def first():
        lhs = term("cdex,abxq->abcdeq", S, S)
        rhs = (term("abcx,xdeq->abcdeq", TB, S) + term("abdx,cxeq->abcdeq", TB, S)
               + term("abex,cdxq->abcdeq", S, S))
        return first_violation(f, "NS-3-Lie (first)", lhs, rhs)

    def second():
        lhs = term("abcx,xdeq->abcdeq", TB, S)
        rhs = (term("cdex,abxq->abcdeq", S, S) + term("adex,bcxq->abcdeq", S, S)
               + term("bdex,caxq->abcdeq", S, S))
        return first_violation(f, "NS-3-Lie (second)", lhs, rhs)

    def third():
        lhs = term("cdex,abxq->abcdeq", TB, Dq) + term("cdex,abxq->abcdeq", Dq, S)
        rhs = (term("abcx,xdeq->abcdeq", TB, Dq) + term("abdx,cxeq->abcdeq", TB, Dq)
               + term("abex,cdxq->abcdeq", TB, Dq) + term("abcx,dexq->abcdeq", Dq, S)
               + term("abdx,ecxq->abcdeq", Dq, S) + term("abex,cdxq->abcdeq", Dq, S))
        return first_violation(f, "NS-3-Lie (third)", lhs, rhs)

    return first_of(first, second, third)


def check_ns_commutative(X: NSCommAlgebra) -> ViolationReport | None:
    return _ns_comm_violation(X.field, X.diamond.constants, X.star.constants)


def check_ns_3lie(X: NS3LieAlgebra) -> ViolationReport | None:
    return _ns_3lie_violation(X.field, X.sq.constants, X.dsq.constants)


def check_ns_np(X: NSNambuPoissonAlgebra) -> ViolationReport | None:
    f = X.field
    D, St, S, Dq = X.diamond.constants, X.star.constants, X.sq.constants, X.dsq.constants
    O, TB = odot(f, D, St), total_bracket(f, S, Dq)

    def np1():
        lhs = term("abcx,xdq->abcdq", TB, D)
        rhs = term("cdx,abxq->abcdq", D, S) - term("abdx,cxq->abcdq", S, D)
        return first_violation(f, "NS compatibility (double bracket and diamond)", lhs, rhs)

    def np2():
        lhs = term("abx,xcdq->abcdq", O, S)
        rhs = term("bcdx,axq->abcdq", S, D) + term("acdx,bxq->abcdq", S, D)
        return first_violation(f, "NS compatibility (bracket of odot)", lhs, rhs)

    def np3():
        lhs = term("cdx,abxq->abcdq", O, Dq) + term("cdx,abxq->abcdq", St, S)
        rhs = (term("abdx,cxq->abcdq", TB, St) + term("abdx,cxq->abcdq", Dq, D)
               + term("abcx,xdq->abcdq", TB, St) + term("abcx,dxq->abcdq", Dq, D))
        return first_violation(f, "NS compatibility (star and double bracket)", lhs, rhs)

    return first_of(lambda: _ns_comm_violation(f, D, St), lambda: _ns_3lie_violation(f, S, Dq), np1, np2, np3)


# -- constructions -------------------------------------------------------------

def subadjacent_np(X: NSNambuPoissonAlgebra, strict: bool = True) -> NambuPoissonAlgebra:
    """``(A, (.), {{ , , }})``."""
    if strict:
        require(check_ns_np(X), "subadjacent_np needs an NS-Nambu-Poisson algebra")
    f = X.field
    return NambuPoissonAlgebra.from_arrays(f, odot(f, X.diamond.constants, X.star.constants),
                                           total_bracket(f, X.sq.constants, X.dsq.constants))


def ns_induced_rep_cocycle(X: NSNambuPoissonAlgebra, strict: bool = True):
    """``(A; mu_<>, rho_[]) `` and ``(phi_*, psi_[[]])`` over the subadjacent algebra."""
    if strict:
        require(check_ns_np(X), "ns_induced_rep_cocycle needs an NS-Nambu-Poisson algebra")
    f = X.field
    rep = NPRepresentation(f, X.diamond.constants.transpose(0, 2, 1), X.sq.constants.transpose(0, 1, 3, 2))
    return rep, CocyclePair(X.star, X.dsq)


def ns_from_nijenhuis(A: NambuPoissonAlgebra, N, strict: bool = True) -> NSNambuPoissonAlgebra:
    """``<>_N = N(a).b``, ``*_N = -N(a.b)``, ``[]_N = {N(a), N(b), c}``, ``[[]]_N = -N(T1)``."""
    f, n = A.field, A.dim
    M = _square(A, N)
    if strict:
        require(check_nijenhuis(A, M), "ns_from_nijenhuis needs a Nijenhuis operator")
    _, t1, _ = _nijenhuis_parts(A, M)
    return NSNambuPoissonAlgebra.from_arrays(
        f,
        evaluate(f, act(A.P, M, (0,)), (n,) * 3),
        evaluate(f, -act(A.P, out=M), (n,) * 3),
        evaluate(f, act(A.B, M, (0, 1)), (n,) * 4),
        evaluate(f, -act(t1, out=M), (n,) * 4),
    )


def ns_from_twisted_o(c: TwistedOCandidate, A: NambuPoissonAlgebra, strict: bool = True) -> NSNambuPoissonAlgebra:
    """``u <> v = mu(r u) v``, ``u * v = phi(r u, r v)``, ``[u,v,w] = rho(r u, r v) w``, ``[[u,v,w]] = psi(...)``."""
    if strict:
        require(check_twisted_o(c, A), "ns_from_twisted_o needs a twisted O-operator")
    f, m = A.field, c.rep.m
    r, mu, rho = c.r.matrix, c.rep.mu, c.rep.rho
    phi, psi = c.pair.phi.constants, c.pair.psi.constants
    return NSNambuPoissonAlgebra.from_arrays(
        f,
        evaluate(f, term("xa,xib->abi", r, mu), (m,) * 3),
        evaluate(f, term("xa,yb,xyi->abi", r, r, phi), (m,) * 3),
        evaluate(f, term("xa,yb,xyic->abci", r, r, rho), (m,) * 4),
        evaluate(f, term("xa,yb,zc,xyzi->abci", r, r, r, psi), (m,) * 4),
    )


def transfer_ns_via_invertible(c: TwistedOCandidate, A: NambuPoissonAlgebra,
                               strict: bool = True) -> NSNambuPoissonAlgebra:
    """NS structure on A transported along an invertible ``r``.

    ``a <> b = r(mu(a) r^-1 b)``, ``a * b = r(phi(a, b))``,
    ``[a, b, c] = r(rho(a, b) r^-1 c)`` and ``[[a, b, c]] = r(psi(a, b, c))``.
    """
    f, n = A.field, A.dim
    r = c.r.matrix
    if r.shape[0] != r.shape[1]:
        raise NotInvertible(f"r is {r.shape[0]}x{r.shape[1]}, not square")
    rinv = linalg.invert(f, r)
    if strict:
        require(check_twisted_o(c, A), "transfer_ns_via_invertible needs a twisted O-operator")
    mu, rho = c.rep.mu, c.rep.rho
    phi, psi = c.pair.phi.constants, c.pair.psi.constants
    return NSNambuPoissonAlgebra.from_arrays(
        f,
        evaluate(f, term("aiy,yb,qi->abq", mu, rinv, r), (n,) * 3),
        evaluate(f, term("abi,qi->abq", phi, r), (n,) * 3),
        evaluate(f, term("abiy,yc,qi->abcq", rho, rinv, r), (n,) * 4),
        evaluate(f, term("abci,qi->abcq", psi, r), (n,) * 4),
    )


def ns_from_reynolds(A: NambuPoissonAlgebra, R, strict: bool = True):
    """``(A, ._R, {,,}_R)`` and the NS structure ``(R(a).b, -R(a).R(b), {R(a),R(b),c}, -{R(a),R(b),R(c)})``."""
    f, n = A.field, A.dim
    M = _square(A, R)
    if strict:
        require(check_reynolds(A, M), "ns_from_reynolds needs a Reynolds operator")
    deformed = reynolds_deformed(A, M, strict=False)
    ns = NSNambuPoissonAlgebra.from_arrays(
        f,
        evaluate(f, act(A.P, M, (0,)), (n,) * 3),
        evaluate(f, -act(A.P, M, (0, 1)), (n,) * 3),
        evaluate(f, act(A.B, M, (0, 1)), (n,) * 4),
        evaluate(f, -act(A.B, M, (0, 1, 2)), (n,) * 4),
    )
    return deformed, ns


def identity_candidate(X: NSNambuPoissonAlgebra, strict: bool = True) -> TwistedOCandidate:
    """``Id: A -> A`` with the representation and cocycle induced by ``X``."""
    from .tensors import LinearMap

    rep, pair = ns_induced_rep_cocycle(X, strict=strict)
    return TwistedOCandidate(LinearMap.identity(X.field, X.dim), rep, pair)
