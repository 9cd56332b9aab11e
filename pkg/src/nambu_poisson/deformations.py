"""(1,2)-linear deformations, their equivalences and trivial deformations.

A deformation ``(phi1; psi1, psi2)`` of ``(A, ., {,,})`` has

    a ._t b     = a . b + t phi1(a, b)
    {a, b, c}_t = {a, b, c} + t psi1(a, b, c) + t^2 psi2(a, b, c).

Validity is decided by two independent routes: expanding each axiom as an
exact polynomial in ``t`` (:func:`check_deformation_direct`), and checking the
list of conditions on the generating maps (:func:`check_deformation_theorem`).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import NambuPoissonAlgebra, ViolationReport, check_nambu_poisson
from .cohomology import CocyclePair, check_np_2cocycle
from .errors import DimensionMismatch
from .identities import ZERO, Terms, act, act_sum, evaluate, first_of, first_violation, term
from .representations import adjoint_rep
from .tensors import BilinearMap, LinearMap, Symmetry, TrilinearMap, field_of
from .tpoly import TPoly, tpoly_multi


@dataclass(frozen=True, eq=False)
class LinearDeformation12:
    base: NambuPoissonAlgebra
    phi1: BilinearMap
    psi1: TrilinearMap
    psi2: TrilinearMap

    def __post_init__(self):
        field_of(self.base, self.phi1, self.psi1, self.psi2)
        if Symmetry(self.phi1.symmetry) != Symmetry.SYMMETRIC:
            raise DimensionMismatch("phi1 must be declared symmetric")
        for name in ("psi1", "psi2"):
            if Symmetry(getattr(self, name).symmetry) != Symmetry.FULLY_SKEW:
                raise DimensionMismatch(f"{name} must be declared fully-skew")
        n = self.base.dim
        for m in (self.phi1, self.psi1, self.psi2):
            if m.dim_in != n or m.dim_out != n:
                raise DimensionMismatch(f"deformation maps must be {n}-dimensional endomorphic maps")

    @property
    def field(self):
        return self.base.field

    @property
    def dim(self) -> int:
        return self.base.dim

    @classmethod
    def from_arrays(cls, base: NambuPoissonAlgebra, phi1, psi1, psi2) -> "LinearDeformation12":
        f = base.field
        return cls(base, BilinearMap(f, phi1, Symmetry.SYMMETRIC), TrilinearMap(f, psi1, Symmetry.FULLY_SKEW),
                   TrilinearMap(f, psi2, Symmetry.FULLY_SKEW))

    @classmethod
    def undeformed(cls, base: NambuPoissonAlgebra) -> "LinearDeformation12":
        n, f = base.dim, base.field
        return cls.from_arrays(base, f.zeros((n, n, n)), f.zeros((n,) * 4), f.zeros((n,) * 4))

    def product_poly(self) -> TPoly:
        return TPoly([self.base.P, self.phi1.constants])

    def bracket_poly(self) -> TPoly:
        return TPoly([self.base.B, self.psi1.constants, self.psi2.constants])

    def at(self, t) -> NambuPoissonAlgebra:
        """The algebra obtained by substituting a field value for ``t``."""
        f = self.field
        t = f.convert(t)
        P = f.reduce(self.base.P + self.phi1.constants * t)
        B = f.reduce(self.base.B + self.psi1.constants * t + self.psi2.constants * (t * t))
        return NambuPoissonAlgebra.from_arrays(f, P, B)

    def __eq__(self, other):
        if not isinstance(other, LinearDeformation12):
            return NotImplemented
        return (self.base == other.base and self.phi1 == other.phi1 and self.psi1 == other.psi1
                and self.psi2 == other.psi2)

    __hash__ = None


# -- generic binary forms of the three axioms --------------------------------
# X is the inner operation, Y the outer one.

def assoc_form(X, Y) -> tuple[Terms, Terms]:
    """``Y(X(a, b), c)`` against ``Y(a, X(b, c))``."""
    return term("abx,xcq->abcq", X, Y), term("bcx,axq->abcq", X, Y)


def fi_form(X, Y) -> tuple[Terms, Terms]:
    lhs = term("cdex,abxq->abcdeq", X, Y)
    rhs = term("abcx,xdeq->abcdeq", X, Y) + term("abdx,cxeq->abcdeq", X, Y) + term("abex,cdxq->abcdeq", X, Y)
    return lhs, rhs


def leibniz_lhs(Pin, Bout) -> Terms:
    return term("cdx,abxq->abcdq", Pin, Bout)


def leibniz_rhs(Bin, Pout) -> Terms:
    return term("abcx,xdq->abcdq", Bin, Pout) + term("abdx,cxq->abcdq", Bin, Pout)


def _poly_identity(field, name, lhs: TPoly, rhs: TPoly):
    for k in range(max(len(lhs), len(rhs))):
        left, right = lhs[k] or ZERO, rhs[k] or ZERO
        report = first_violation(field, f"{name} (coefficient of t^{k})", left, right)
        if report is not None:
            return report
    return None


def check_deformation_direct(d: LinearDeformation12) -> ViolationReport | None:
    """Expand associativity, the fundamental identity and the Leibniz rule in ``t``."""
    f = d.field
    Pt, Bt = d.product_poly(), d.bracket_poly()

    def assoc():
        lhs = tpoly_multi(lambda X, Y: assoc_form(X, Y)[0], Pt, Pt)
        rhs = tpoly_multi(lambda X, Y: assoc_form(X, Y)[1], Pt, Pt)
        return _poly_identity(f, "deformed associativity", lhs, rhs)

    def fi():
        lhs = tpoly_multi(lambda X, Y: fi_form(X, Y)[0], Bt, Bt)
        rhs = tpoly_multi(lambda X, Y: fi_form(X, Y)[1], Bt, Bt)
        return _poly_identity(f, "deformed fundamental identity", lhs, rhs)

    def leibniz():
        lhs = tpoly_multi(leibniz_lhs, Pt, Bt)
        rhs = tpoly_multi(leibniz_rhs, Bt, Pt)
        return _poly_identity(f, "deformed Leibniz rule", lhs, rhs)

    return first_of(assoc, fi, leibniz)


def _prefixed(report: ViolationReport | None, prefix: str) -> ViolationReport | None:
    if report is None:
        return None
    return ViolationReport(f"{prefix}: {report.axiom}", report.witness, report.left, report.right)


def check_deformation_theorem(d: LinearDeformation12) -> ViolationReport | None:
    """The three-clause characterization of generating triples.

    (i) ``(phi1, psi1)`` is a 2-cocycle in the adjoint representation;
    (ii) ``(A, phi1, psi2)`` is a Nambu-Poisson algebra;
    (iii) the mixed identities in degrees 2 and 3 of the fundamental identity
    and degree 2 of the Leibniz rule.
    """
    f, A = d.field, d.base
    P, B = A.P, A.B
    phi1, psi1, psi2 = d.phi1.constants, d.psi1.constants, d.psi2.constants

    def clause_i():
        pair = CocyclePair(d.phi1, d.psi1)
        return _prefixed(check_np_2cocycle(A, adjoint_rep(A), pair), "clause (i) cocycle")

    def clause_ii():
        return _prefixed(check_nambu_poisson(NambuPoissonAlgebra(d.phi1, d.psi2)), "clause (ii) (A, phi1, psi2)")

    def fi_t2():
        lhs = (term("cdex,abxq->abcdeq", B, psi2) + term("cdex,abxq->abcdeq", psi2, B)
               + term("cdex,abxq->abcdeq", psi1, psi1))
        rhs = ZERO
        for X, Y in ((B, psi2), (psi2, B), (psi1, psi1)):
            rhs = rhs + (term("abcx,xdeq->abcdeq", X, Y) + term("abdx,cxeq->abcdeq", X, Y)
                         + term("abex,cdxq->abcdeq", X, Y))
        return first_violation(f, "clause (iii) mixed fundamental identity, degree 2", lhs, rhs)

    def fi_t3():
        lhs = term("cdex,abxq->abcdeq", psi2, psi1) + term("cdex,abxq->abcdeq", psi1, psi2)
        rhs = (term("abcx,xdeq->abcdeq", psi2, psi1) + term("abcx,xdeq->abcdeq", psi1, psi2)
               + term("abdx,cxeq->abcdeq", psi2, psi1) + term("abdx,cxeq->abcdeq", psi1, psi2)
               + term("abex,cdxq->abcdeq", psi2, psi1) + term("abex,cdxq->abcdeq", psi1, psi2))
        return first_violation(f, "clause (iii) mixed fundamental identity, degree 3", lhs, rhs)

    def leibniz_t2():
        # psi2(a,b,c.d) + psi1(a,b,phi1(c,d))
        lhs = term("cdx,abxq->abcdq", P, psi2) + term("cdx,abxq->abcdq", phi1, psi1)
        # phi1(c, psi1(a,b,d)) + c . psi2(a,b,d) + phi1(psi1(a,b,c), d) + psi2(a,b,c) . d
        rhs = (term("abdx,cxq->abcdq", psi1, phi1) + term("abdx,cxq->abcdq", psi2, P)
               + term("abcx,xdq->abcdq", psi1, phi1) + term("abcx,xdq->abcdq", psi2, P))
        return first_violation(f, "clause (iii) mixed Leibniz rule, degree 2", lhs, rhs)

    return first_of(clause_i, clause_ii, fi_t2, fi_t3, leibniz_t2)


# -- equivalences --------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class EquivalenceWitness:
    """``Id + tN``; validated only by :func:`check_equivalence`."""

    N: LinearMap

    @property
    def field(self):
        return self.N.field


def _matrix(N) -> np.ndarray:
    if isinstance(N, EquivalenceWitness):
        N = N.N
    return N.matrix if isinstance(N, LinearMap) else np.asarray(N, dtype=object)


def check_equivalence(N, d: LinearDeformation12, d2: LinearDeformation12,
                      cross_check: bool = True) -> ViolationReport | None:
    """Whether ``Id + tN`` is a homomorphism from ``d`` to ``d2``.

    Decided by the eight coefficient identities; with ``cross_check`` the
    verdict is compared against the t-polynomial homomorphism expansion.
    """
    f = field_of(d, d2)
    M = _matrix(N)
    n = d.dim
    if d2.dim != n or M.shape != (n, n):
        raise DimensionMismatch("N, d and d' must share the base dimension")
    if not (d.base == d2.base):
        raise DimensionMismatch("deformations must be over the same base algebra")
    M = f.reduce(M)
    report = _equivalence_identities(f, M, d, d2)
    if cross_check:
        other = check_equivalence_tpoly(M, d, d2)
        if (report is None) != (other is None):
            raise RuntimeError(f"equivalence routes disagree: {report} vs {other}")
    return report


def _equivalence_identities(f, M, d, d2) -> ViolationReport | None:
    P, B = d.base.P, d.base.B
    phi1, psi1, psi2 = d.phi1.constants, d.psi1.constants, d.psi2.constants
    phi1p, psi1p, psi2p = d2.phi1.constants, d2.psi1.constants, d2.psi2.constants

    def n_of(T):
        return act(T, out=M)

    def eq1():
        lhs = term("abq->abq", phi1) - term("abq->abq", phi1p)
        rhs = act_sum(P, M, 1) - n_of(P)
        return first_violation(f, "equivalence, product, t^1", lhs, rhs)

    def eq2():
        return first_violation(f, "equivalence, product, t^2", n_of(phi1), act_sum(phi1p, M, 1) + act_sum(P, M, 2))

    def eq3():
        return first_violation(f, "equivalence, product, t^3", act_sum(phi1p, M, 2), ZERO)

    def eq4():
        lhs = term("abcq->abcq", psi1) - term("abcq->abcq", psi1p)
        return first_violation(f, "equivalence, bracket, t^1", lhs, act_sum(B, M, 1) - n_of(B))

    def eq5():
        lhs = term("abcq->abcq", psi2) - term("abcq->abcq", psi2p)
        rhs = act_sum(B, M, 2) + act_sum(psi1p, M, 1) - n_of(psi1)
        return first_violation(f, "equivalence, bracket, t^2", lhs, rhs)

    def eq6():
        rhs = act_sum(B, M, 3) + act_sum(psi1p, M, 2) + act_sum(psi2p, M, 1)
        return first_violation(f, "equivalence, bracket, t^3", n_of(psi2), rhs)

    def eq7():
        return first_violation(f, "equivalence, bracket, t^4", act_sum(psi1p, M, 3) + act_sum(psi2p, M, 2), ZERO)

    def eq8():
        return first_violation(f, "equivalence, bracket, t^5", act_sum(psi2p, M, 3), ZERO)

    return first_of(eq1, eq2, eq3, eq4, eq5, eq6, eq7, eq8)


def check_equivalence_tpoly(N, d: LinearDeformation12, d2: LinearDeformation12) -> ViolationReport | None:
    """``(Id + tN)(x *_t y) = (Id + tN)x *'_t (Id + tN)y`` expanded as t-polynomials."""
    f = field_of(d, d2)
    M = f.reduce(_matrix(N))
    Phi = TPoly([f.identity(d.dim), M])

    def prod():
        lhs = tpoly_multi(lambda T, G: term("abx,qx->abq", T, G), d.product_poly(), Phi)
        rhs = tpoly_multi(lambda G1, G2, T: term("xa,yb,xyq->abq", G1, G2, T), Phi, Phi, d2.product_poly())
        return _poly_identity(f, "homomorphism of products", lhs, rhs)

    def bracket():
        lhs = tpoly_multi(lambda T, G: term("abcx,qx->abcq", T, G), d.bracket_poly(), Phi)
        rhs = tpoly_multi(lambda G1, G2, G3, T: term("xa,yb,zc,xyzq->abcq", G1, G2, G3, T),
                          Phi, Phi, Phi, d2.bracket_poly())
        return _poly_identity(f, "homomorphism of brackets", lhs, rhs)

    return first_of(prod, bracket)


# -- trivial deformations --------------------------------------------------------

@dataclass(frozen=True, eq=False)
class TrivialWitnessData:
    deformation: LinearDeformation12
    constraint_report: ViolationReport | None

    @property
    def constraints_hold(self) -> bool:
        return self.constraint_report is None


def extract_trivial_witness_data(N, base: NambuPoissonAlgebra) -> TrivialWitnessData:
    """Generating maps of the deformation made trivial by ``Id + tN``.

    ``phi1 = N(a).b + a.N(b) - N(a.b)``, ``psi1 = S1 - N{a,b,c}`` and
    ``psi2 = S2 - N(psi1)``, where S1 and S2 sum the brackets with ``N`` in
    one and two slots.  The constraints ``N(phi1) = N(a).N(b)`` and
    ``N(psi2) = {N(a), N(b), N(c)}`` are checked and reported.
    """
    f = base.field
    M = _matrix(N)
    n = base.dim
    if M.shape != (n, n):
        raise DimensionMismatch(f"N must be {n}x{n}, got {M.shape}")
    M = f.reduce(M)
    P, B = base.P, base.B
    phi1 = evaluate(f, act_sum(P, M, 1) - act(P, out=M), (n, n, n))
    psi1 = evaluate(f, act_sum(B, M, 1) - act(B, out=M), (n,) * 4)
    psi2 = evaluate(f, act_sum(B, M, 2) - act(psi1, out=M), (n,) * 4)
    d = LinearDeformation12.from_arrays(base, phi1, psi1, psi2)

    def first():
        return first_violation(f, "trivial deformation, N(phi1) = N(a).N(b)",
                               act(phi1, out=M), act(P, M, (0, 1)))

    def second():
        return first_violation(f, "trivial deformation, N(psi2) = {N(a), N(b), N(c)}",
                               act(psi2, out=M), act(B, M, (0, 1, 2)))

    return TrivialWitnessData(d, first_of(first, second))
