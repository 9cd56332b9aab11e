"""Nijenhuis, twisted O- and Reynolds operators.

Linear maps are matrices ``M[row, column]``.  An operator ``r: V -> A`` is an
``n x m`` matrix, so ``r(f_u) = sum_x r[x, u] e_x``.

The 3-Lie half of the Nijenhuis condition uses the expression
``{N(a), b, c} + {a, N(b), c} + {a, b, N(c)} - N{a, b, c}`` for the inner
correction term throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .algebra import NambuPoissonAlgebra, PoissonAlgebra, ViolationReport, as_vector, fix_coordinate, require
from .cohomology import CocyclePair, check_np_2cocycle, restrict_cocycle_x0, twisted_semidirect
from .errors import DimensionMismatch, HypothesisFailed
from .identities import act, act_sum, evaluate, first_of, first_violation, term
from .representations import NPRepresentation, adjoint_rep, check_np_rep, restrict_rep_x0
from .tensors import LinearMap


def matrix_of(field, M, shape=None) -> np.ndarray:
    a = M.matrix if isinstance(M, LinearMap) else np.asarray(M, dtype=object)
    if a.ndim != 2 or (shape is not None and a.shape != tuple(shape)):
        raise DimensionMismatch(f"expected a {shape[0]}x{shape[1]} matrix, got shape {a.shape}")
    return field.reduce(a)


def _square(A, N) -> np.ndarray:
    return matrix_of(A.field, N, (A.dim, A.dim))


# -- Nijenhuis operators ------------------------------------------------------

def _nijenhuis_parts(A, M):
    """Deformed product, the bracket correction ``T1`` and the deformed bracket."""
    f, n = A.field, A.dim
    P, B = A.P, A.B
    prod_n = evaluate(f, act_sum(P, M, 1) - act(P, out=M), (n,) * 3)
    t1 = evaluate(f, act_sum(B, M, 1) - act(B, out=M), (n,) * 4)
    bracket_n = evaluate(f, act_sum(B, M, 2) - act(t1, out=M), (n,) * 4)
    return prod_n, t1, bracket_n


def check_nijenhuis(A: NambuPoissonAlgebra, N) -> ViolationReport | None:
    f = A.field
    M = _square(A, N)
    prod_n, _, bracket_n = _nijenhuis_parts(A, M)
    return first_of(
        lambda: first_violation(f, "Nijenhuis (product)", act(A.P, M, (0, 1)), act(prod_n, out=M)),
        lambda: first_violation(f, "Nijenhuis (bracket)", act(A.B, M, (0, 1, 2)), act(bracket_n, out=M)),
    )


def deform_by_nijenhuis(A: NambuPoissonAlgebra, N, strict: bool = True) -> NambuPoissonAlgebra:
    """``A_N`` with ``a ._N b = N(a).b + a.N(b) - N(a.b)`` and the matching bracket."""
    M = _square(A, N)
    if strict:
        require(check_nijenhuis(A, M), "deform_by_nijenhuis needs a Nijenhuis operator")
    prod_n, _, bracket_n = _nijenhuis_parts(A, M)
    return NambuPoissonAlgebra.from_arrays(A.field, prod_n, bracket_n)


def check_homomorphism(f_map, A, A2) -> ViolationReport | None:
    """``f(a.b) = f(a).f(b)`` and ``f{a,b,c} = {f(a),f(b),f(c)}`` on basis tuples."""
    field = A.field
    field.check_same(A2.field)
    F = matrix_of(field, f_map, (A2.dim, A.dim))
    return first_of(
        lambda: first_violation(field, "homomorphism (product)", term("abx,qx->abq", A.P, F),
                                term("xa,yb,xyq->abq", F, F, A2.P)),
        lambda: first_violation(field, "homomorphism (bracket)", term("abcx,qx->abcq", A.B, F),
                                term("xa,yb,zc,xyzq->abcq", F, F, F, A2.B)),
    )


def nijenhuis_power_check(A: NambuPoissonAlgebra, N, kmax: int) -> list:
    """Reports of ``check_nijenhuis`` for ``N^0, ..., N^kmax`` (``None`` means pass)."""
    M = _square(A, N)
    require(check_nijenhuis(A, M), "nijenhuis_power_check needs a Nijenhuis operator")
    op = LinearMap(A.field, M)
    return [check_nijenhuis(A, op.power(k)) for k in range(kmax + 1)]


def nijenhuis_induced_rep_cocycle(A: NambuPoissonAlgebra, N, strict: bool = True):
    """``(A; mu_N, rho_N)`` and ``(phi_N, psi_N)`` over the deformed algebra ``A_N``.

    ``mu_N(a) b = N(a).b``, ``rho_N(a, b) c = {N(a), N(b), c}``,
    ``phi_N(a, b) = -N(a.b)`` and ``psi_N = -N(T1)`` with ``T1`` the bracket
    correction term.
    """
    f = A.field
    M = _square(A, N)
    if strict:
        require(check_nijenhuis(A, M), "nijenhuis_induced_rep_cocycle needs a Nijenhuis operator")
    n = A.dim
    _, t1, _ = _nijenhuis_parts(A, M)
    mu = evaluate(f, term("xa,xji->aij", M, A.P), (n, n, n))
    rho = evaluate(f, term("xa,yb,xyji->abij", M, M, A.B), (n,) * 4)
    phi = evaluate(f, -act(A.P, out=M), (n,) * 3)
    psi = evaluate(f, -act(t1, out=M), (n,) * 4)
    return NPRepresentation(f, mu, rho), CocyclePair.from_arrays(f, phi, psi)


# -- twisted O-operators --------------------------------------------------------

@dataclass(frozen=True, eq=False)
class TwistedOCandidate:
    r: LinearMap
    rep: NPRepresentation
    pair: CocyclePair

    def __post_init__(self):
        r = self.r if isinstance(self.r, LinearMap) else LinearMap(self.rep.field, self.r)
        object.__setattr__(self, "r", r)
        self.rep.field.check_same(r.field)
        self.rep.field.check_same(self.pair.field)
        n, m = self.rep.n, self.rep.m
        if r.matrix.shape != (n, m):
            raise DimensionMismatch(f"r must be a {n}x{m} matrix V -> A, got {r.matrix.shape}")
        if self.pair.n != n or self.pair.m != m:
            raise DimensionMismatch("cocycle pair dimensions do not match the representation")

    @property
    def field(self):
        return self.rep.field


def _validate(c: TwistedOCandidate, A, what: str) -> None:
    require(check_np_rep(A, c.rep), f"{what} needs a representation")
    require(check_np_2cocycle(A, c.rep, c.pair), f"{what} needs a Nambu-Poisson 2-cocycle")


def _induced_inner(c: TwistedOCandidate):
    """Formal sums for ``u ._r v`` and ``{u, v, w}_r`` in V coordinates."""
    r, mu, rho = c.r.matrix, c.rep.mu, c.rep.rho
    phi, psi = c.pair.phi.constants, c.pair.psi.constants
    prod = (term("xa,xib->abi", r, mu) + term("xb,xia->abi", r, mu)
            + term("xa,yb,xyi->abi", r, r, phi))
    bracket = (term("xa,yb,xyic->abci", r, r, rho) + term("xb,yc,xyia->abci", r, r, rho)
               + term("xc,ya,xyib->abci", r, r, rho) + term("xa,yb,zc,xyzi->abci", r, r, r, psi))
    return prod, bracket


def _twisted_o_violation(c: TwistedOCandidate, A) -> ViolationReport | None:
    f = A.field
    r = c.r.matrix
    m = c.rep.m
    prod, bracket = _induced_inner(c)

    def first():
        inner = evaluate(f, prod, (m, m, m))
        return first_violation(f, "twisted O-operator (product)", term("xa,yb,xyq->abq", r, r, A.P),
                               act(inner, out=r))

    def second():
        inner = evaluate(f, bracket, (m, m, m, m))
        return first_violation(f, "twisted O-operator (bracket)", term("xa,yb,zc,xyzq->abcq", r, r, r, A.B),
                               act(inner, out=r))

    return first_of(first, second)


def check_twisted_o(c: TwistedOCandidate, A: NambuPoissonAlgebra, strict: bool = True) -> ViolationReport | None:
    """Both twisted O-operator identities on basis tuples of V.

    With ``strict`` the representation and the cocycle are validated first and
    an :class:`AxiomViolation` is raised if either is invalid.
    """
    if c.rep.n != A.dim:
        raise DimensionMismatch("candidate and algebra dimensions differ")
    if strict:
        _validate(c, A, "check_twisted_o")
    return _twisted_o_violation(c, A)


def graph_subalgebra_check(c: TwistedOCandidate, A: NambuPoissonAlgebra, strict: bool = True):
    """Closure of ``span{(r(f_u), f_u)}`` inside the twisted semidirect product.

    A vector ``(x, v)`` of ``A + V`` lies in the graph iff ``x = r(v)``; the
    report compares the two sides of that test.
    """
    if c.rep.n != A.dim:
        raise DimensionMismatch("candidate and algebra dimensions differ")
    if strict:
        _validate(c, A, "graph_subalgebra_check")
    f = A.field
    n, m = A.dim, c.rep.m
    T = twisted_semidirect(A, c.rep, c.pair)
    G = np.concatenate([c.r.matrix, f.identity(m)], axis=0)  # columns: graph basis
    proj_a = np.concatenate([f.identity(n), f.zeros((n, m))], axis=1)
    r_proj_v = np.concatenate([f.zeros((n, n)), c.r.matrix], axis=1)

    def closure(name, spec, shape, k):
        vals = evaluate(f, term(spec, *([G] * k), T.P if k == 2 else T.B), shape)
        return first_violation(f, name, act(vals, out=proj_a), act(vals, out=r_proj_v))

    return first_of(
        lambda: closure("graph closure (product)", "xa,yb,xyq->abq", (m, m, n + m), 2),
        lambda: closure("graph closure (bracket)", "xa,yb,zc,xyzq->abcq", (m, m, m, n + m), 3),
    )


def induced_np_on_V(c: TwistedOCandidate, A: NambuPoissonAlgebra, strict: bool = True) -> NambuPoissonAlgebra:
    """``(V, ._r, {,,}_r)``."""
    if strict:
        require(check_twisted_o(c, A), "induced_np_on_V needs a twisted O-operator")
    f, m = A.field, c.rep.m
    prod, bracket = _induced_inner(c)
    return NambuPoissonAlgebra.from_arrays(f, evaluate(f, prod, (m,) * 3), evaluate(f, bracket, (m,) * 4))


# -- Reynolds operators ---------------------------------------------------------

def check_reynolds(A: NambuPoissonAlgebra, R) -> ViolationReport | None:
    f = A.field
    M = _square(A, R)
    P, B = A.P, A.B
    n = A.dim

    def binary():
        inner = evaluate(f, act_sum(P, M, 1) - act(P, M, (0, 1)), (n,) * 3)
        return first_violation(f, "Reynolds (product)", act(P, M, (0, 1)), act(inner, out=M))

    def ternary():
        inner = evaluate(f, act_sum(B, M, 2) - act(B, M, (0, 1, 2)), (n,) * 4)
        return first_violation(f, "Reynolds (bracket)", act(B, M, (0, 1, 2)), act(inner, out=M))

    return first_of(binary, ternary)


def minus_cocycle(A: NambuPoissonAlgebra) -> CocyclePair:
    """``(phi_-, psi_-) = (-a.b, -{a, b, c})`` in the adjoint representation."""
    f = A.field
    return CocyclePair.from_arrays(f, f.reduce(-A.P), f.reduce(-A.B))


def reynolds_candidate(A: NambuPoissonAlgebra, R) -> TwistedOCandidate:
    """``R`` viewed as a twisted Rota-Baxter operator for the pair ``(phi_-, psi_-)``."""
    return TwistedOCandidate(LinearMap(A.field, _square(A, R)), adjoint_rep(A), minus_cocycle(A))


def reynolds_deformed(A: NambuPoissonAlgebra, R, strict: bool = True) -> NambuPoissonAlgebra:
    """``a ._R b = R(a).b + a.R(b) - R(a).R(b)`` and the matching bracket."""
    M = _square(A, R)
    if strict:
        require(check_reynolds(A, M), "reynolds_deformed needs a Reynolds operator")
    f, n = A.field, A.dim
    P, B = A.P, A.B
    prod = evaluate(f, act_sum(P, M, 1) - act(P, M, (0, 1)), (n,) * 3)
    bracket = evaluate(f, act_sum(B, M, 2) - act(B, M, (0, 1, 2)), (n,) * 4)
    return NambuPoissonAlgebra.from_arrays(f, prod, bracket)


# -- restriction to Poisson algebras -------------------------------------------

@dataclass(frozen=True)
class PoissonTwistedResult:
    x0: np.ndarray
    poisson: PoissonAlgebra
    report: ViolationReport | None

    @property
    def passed(self) -> bool:
        return self.report is None


def twisted_o_restrict_poisson(c: TwistedOCandidate, A: NambuPoissonAlgebra, u0,
                               strict: bool = True) -> PoissonTwistedResult:
    """Check ``r`` as a twisted O-operator on ``(A, ., {,}_x0)`` with ``x0 = r(u0)``.

    Raises :class:`HypothesisFailed` unless ``rho(r(u), r(v)) u0 = 0`` on all
    basis pairs.
    """
    f = A.field
    if strict:
        require(check_twisted_o(c, A), "twisted_o_restrict_poisson needs a twisted O-operator")
    m = c.rep.m
    r = c.r.matrix
    u0 = as_vector(f, u0, m)
    hyp = f.reduce(np.einsum("xa,yb,xyij,j->abi", r, r, c.rep.rho, u0))
    bad = np.argwhere(hyp != 0)
    if len(bad):
        u, v = (int(i) for i in bad[0][:2])
        raise HypothesisFailed(f"rho(r(u), r(v)) u0 != 0 at basis pair {(u + 1, v + 1)}", (u, v))
    x0 = f.reduce(r.dot(u0))
    P = fix_coordinate(A, x0)
    PR = restrict_rep_x0(A, c.rep, x0)
    pc = restrict_cocycle_x0(A, c.rep, c.pair, x0)
    mu, rx = PR.mu, PR.rho_x0
    phi, psx = pc.phi.constants, pc.psi_x0.constants

    def product():
        inner = evaluate(f, term("xa,xib->abi", r, mu) + term("xb,xia->abi", r, mu)
                         + term("xa,yb,xyi->abi", r, r, phi), (m, m, m))
        return first_violation(f, "Poisson twisted O-operator (product)",
                               term("xa,yb,xyq->abq", r, r, P.product.constants), act(inner, out=r))

    def bracket():
        inner = evaluate(f, term("xa,xib->abi", r, rx) - term("xb,xia->abi", r, rx)
                         + term("xa,yb,xyi->abi", r, r, psx), (m, m, m))
        return first_violation(f, "Poisson twisted O-operator (bracket)",
                               term("xa,yb,xyq->abq", r, r, P.bracket.constants), act(inner, out=r))

    return PoissonTwistedResult(x0, P, first_of(product, bracket))


def invertible(c: TwistedOCandidate) -> bool:
    M = c.r.matrix
    return M.shape[0] == M.shape[1] and linalg.rank(c.field, M) == M.shape[0]
