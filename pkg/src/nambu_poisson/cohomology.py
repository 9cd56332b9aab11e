"""Nambu-Poisson 2-cocycles, coboundaries and second cohomology dimensions.

Each cocycle identity is written once, as a table of signed einsum terms over
named operands.  The cochain operand carries a ``~`` placeholder axis: it is
dropped when checking a single cochain and becomes a batch axis when the
identity is linearized over unit cochains to assemble the cocycle system.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from . import linalg
from .algebra import NambuPoissonAlgebra, PoissonAlgebra, ViolationReport, as_vector, check_nambu_poisson, require
from .errors import DimensionMismatch
from .field import Field, PrimeField
from .identities import ZERO, Terms, evaluate, evaluate_scaled, first_of, first_violation, term
from .representations import (
    NPRepresentation, PoissonRep, _match, _semidirect_bracket, _semidirect_product, check_np_rep,
)
from .tensors import BilinearMap, Symmetry, TrilinearMap, canonical_slots, field_of

# (sign, spec, operand names); sign +1 on the left side, -1 on the right side
HARRISON = (
    (+1, "~bcx,aqx->~abcq", ("phi", "mu")),
    (+1, "bcx,~axq->~abcq", ("P", "phi")),
    (-1, "abx,~xcq->~abcq", ("P", "phi")),
    (-1, "~abx,cqx->~abcq", ("phi", "mu")),
)

THREE_LIE_COCYCLE = (
    (+1, "cdex,~abxq->~abcdeq", ("B", "psi")),
    (+1, "~cdex,abqx->~abcdeq", ("psi", "rho")),
    (-1, "abcx,~xdeq->~abcdeq", ("B", "psi")),
    (-1, "abdx,~cxeq->~abcdeq", ("B", "psi")),
    (-1, "abex,~cdxq->~abcdeq", ("B", "psi")),
    (-1, "~abcx,deqx->~abcdeq", ("psi", "rho")),
    (-1, "~abdx,ecqx->~abcdeq", ("psi", "rho")),
    (-1, "~abex,cdqx->~abcdeq", ("psi", "rho")),
)

COMPATIBILITY = (
    (+1, "cdx,~abxq->~abcdq", ("P", "psi")),
    (+1, "~cdx,abqx->~abcdq", ("phi", "rho")),
    (-1, "abdx,~cxq->~abcdq", ("B", "phi")),
    (-1, "~abdx,cqx->~abcdq", ("psi", "mu")),
    (-1, "abcx,~xdq->~abcdq", ("B", "phi")),
    (-1, "~abcx,dqx->~abcdq", ("psi", "mu")),
)

LIE_COCYCLE = (
    (+1, "~bcx,aqx->~abcq", ("psi", "rho")),
    (+1, "~cax,bqx->~abcq", ("psi", "rho")),
    (+1, "~abx,cqx->~abcq", ("psi", "rho")),
    (+1, "bcx,~axq->~abcq", ("L", "psi")),
    (+1, "cax,~bxq->~abcq", ("L", "psi")),
    (+1, "abx,~cxq->~abcq", ("L", "psi")),
)

POISSON_COMPATIBILITY = (
    (+1, "bcx,~axq->~abcq", ("P", "psi")),
    (+1, "~bcx,aqx->~abcq", ("phi", "rho")),
    (-1, "acx,~bxq->~abcq", ("L", "phi")),
    (-1, "~acx,bqx->~abcq", ("psi", "mu")),
    (-1, "abx,~xcq->~abcq", ("L", "phi")),
    (-1, "~abx,cqx->~abcq", ("psi", "mu")),
)


def build_sides(table, ops: dict, batch: str | None = None) -> tuple[Terms, Terms]:
    """Both sides of an identity; with ``batch`` only the terms linear in that cochain."""
    lhs, rhs = ZERO, ZERO
    for sign, spec, names in table:
        if batch is not None and batch not in names:
            continue
        spec = spec.replace("~", "u" if batch else "")
        t = term(spec, *(ops[k] for k in names))
        if sign > 0:
            lhs = lhs + t
        else:
            rhs = rhs + t
    return lhs, rhs


def identity_violation(field: Field, axiom: str, table, ops: dict) -> ViolationReport | None:
    lhs, rhs = build_sides(table, ops)
    return first_violation(field, axiom, lhs, rhs)


@dataclass(frozen=True, eq=False)
class CocyclePair:
    """Symmetric ``phi: A x A -> V`` and fully skew ``psi: A x A x A -> V``."""

    phi: BilinearMap
    psi: TrilinearMap

    def __post_init__(self):
        field_of(self.phi, self.psi)
        if Symmetry(self.phi.symmetry) != Symmetry.SYMMETRIC:
            raise DimensionMismatch("phi must be declared symmetric")
        if Symmetry(self.psi.symmetry) != Symmetry.FULLY_SKEW:
            raise DimensionMismatch("psi must be declared fully-skew")
        if self.phi.dim_in != self.psi.dim_in or self.phi.dim_out != self.psi.dim_out:
            raise DimensionMismatch("phi and psi must have the same source and target")

    @property
    def field(self) -> Field:
        return self.phi.field

    @property
    def n(self) -> int:
        return self.phi.dim_in

    @property
    def m(self) -> int:
        return self.phi.dim_out

    @classmethod
    def from_arrays(cls, field: Field, phi, psi) -> "CocyclePair":
        return cls(BilinearMap(field, phi, Symmetry.SYMMETRIC), TrilinearMap(field, psi, Symmetry.FULLY_SKEW))

    @classmethod
    def zero(cls, field: Field, n: int, m: int) -> "CocyclePair":
        return cls.from_arrays(field, field.zeros((n, n, m)), field.zeros((n, n, n, m)))

    def coordinates(self) -> np.ndarray:
        """Coordinates on canonical slots: phi (i <= j, k) then psi (i < j < k, l)."""
        n = self.n
        phi = [self.phi.constants[s] for s in canonical_slots(n, Symmetry.SYMMETRIC)]
        psi = [self.psi.constants[s] for s in canonical_slots(n, Symmetry.FULLY_SKEW)]
        parts = [np.asarray(p, dtype=object).reshape(-1) for p in (phi, psi) if len(p)]
        return np.concatenate(parts) if parts else np.zeros(0, dtype=object)

    def __eq__(self, other):
        if not isinstance(other, CocyclePair):
            return NotImplemented
        return self.phi == other.phi and self.psi == other.psi

    __hash__ = None


@dataclass(frozen=True)
class CohomologyDims:
    dim_Z2: int
    dim_B2: int
    dim_H2: int

    def __post_init__(self):
        if self.dim_H2 != self.dim_Z2 - self.dim_B2 or self.dim_H2 < 0:
            raise ValueError(f"inconsistent dimensions {self}")

    def as_dict(self) -> dict:
        return {"dim_Z2": self.dim_Z2, "dim_B2": self.dim_B2, "dim_H2": self.dim_H2}


def _pair_match(A, R, pair) -> Field:
    f = _match(A, R)
    f.check_same(pair.field)
    if pair.n != A.dim or pair.m != R.m:
        raise DimensionMismatch(f"cochains map {pair.n}-dim to {pair.m}-dim, expected {A.dim} to {R.m}")
    return f


def _ops(A, R, phi=None, psi=None) -> dict:
    return {"P": A.P, "B": A.B, "mu": R.mu, "rho": R.rho, "phi": phi, "psi": psi}


def check_harrison_2cocycle(A, R: NPRepresentation, phi: BilinearMap) -> ViolationReport | None:
    f = _match(A, R)
    if Symmetry(phi.symmetry) != Symmetry.SYMMETRIC:
        from .errors import SymmetryViolation
        raise SymmetryViolation("Harrison cochains must be symmetric")
    return identity_violation(f, "Harrison cocycle", HARRISON, _ops(A, R, phi=phi.constants))


def check_3lie_2cocycle(L, R, psi: TrilinearMap) -> ViolationReport | None:
    f = _match(L, R)
    if Symmetry(psi.symmetry) != Symmetry.FULLY_SKEW:
        from .errors import SymmetryViolation
        raise SymmetryViolation("3-Lie cochains must be fully skew")
    ops = {"B": L.bracket.constants, "rho": R.rho, "psi": psi.constants}
    return identity_violation(f, "3-Lie cocycle", THREE_LIE_COCYCLE, ops)


def check_np_2cocycle(A: NambuPoissonAlgebra, R: NPRepresentation, pair: CocyclePair) -> ViolationReport | None:
    f = _pair_match(A, R, pair)
    ops = _ops(A, R, pair.phi.constants, pair.psi.constants)
    return first_of(
        lambda: identity_violation(f, "Harrison cocycle", HARRISON, ops),
        lambda: identity_violation(f, "3-Lie cocycle", THREE_LIE_COCYCLE, ops),
        lambda: identity_violation(f, "cocycle compatibility", COMPATIBILITY, ops),
    )


def coboundary_terms(A, R, F) -> tuple[Terms, Terms]:
    """Formal sums for ``phi_f`` and ``psi_f``; ``F`` may carry a leading batch axis."""
    b = "u" if np.ndim(F) == 3 else ""
    P, B, mu, rho = A.P, A.B, R.mu, R.rho
    phi = (term(f"{b}xb,aqx->{b}abq", F, mu) - term(f"abx,{b}qx->{b}abq", P, F)
           + term(f"{b}xa,bqx->{b}abq", F, mu))
    psi = (term(f"{b}xc,abqx->{b}abcq", F, rho) + term(f"{b}xa,bcqx->{b}abcq", F, rho)
           + term(f"{b}xb,caqx->{b}abcq", F, rho) - term(f"abcx,{b}qx->{b}abcq", B, F))
    return phi, psi


def coboundary(A: NambuPoissonAlgebra, R: NPRepresentation, f) -> CocyclePair:
    """``(phi_f, psi_f)`` for a linear map ``f: A -> V`` given as an ``m x n`` matrix."""
    field = _match(A, R)
    F = np.asarray(getattr(f, "matrix", f), dtype=object)
    if F.shape != (R.m, A.dim):
        raise DimensionMismatch(f"f must be a {R.m}x{A.dim} matrix, got {F.shape}")
    F = field.reduce(F)
    phi_t, psi_t = coboundary_terms(A, R, F)
    n, m = A.dim, R.m
    return CocyclePair.from_arrays(field, evaluate(field, phi_t, (n, n, m)), evaluate(field, psi_t, (n, n, n, m)))


def twisted_semidirect(A: NambuPoissonAlgebra, R: NPRepresentation, pair: CocyclePair) -> NambuPoissonAlgebra:
    f = _pair_match(A, R, pair)
    P = _semidirect_product(f, A.P, R.mu, pair.phi.constants)
    B = _semidirect_bracket(f, A.B, R.rho, pair.psi.constants)
    return NambuPoissonAlgebra.from_arrays(f, P, B)


# -- the linear system -------------------------------------------------------

def _unit_cochains(field: Field, n: int, m: int):
    """Batches of unit symmetric phi's and unit skew psi's, in coordinate order."""
    sym = canonical_slots(n, Symmetry.SYMMETRIC)
    skw = canonical_slots(n, Symmetry.FULLY_SKEW)
    phis = np.zeros((len(sym) * m, n, n, m), dtype=np.int64)
    for s, (i, j) in enumerate(sym):
        for k in range(m):
            phis[s * m + k, i, j, k] = phis[s * m + k, j, i, k] = 1
    psis = np.zeros((len(skw) * m, n, n, n, m), dtype=np.int64)
    for s, (i, j, k) in enumerate(skw):
        for l in range(m):
            u = s * m + l
            psis[u, i, j, k, l] = psis[u, j, k, i, l] = psis[u, k, i, j, l] = 1
            psis[u, j, i, k, l] = psis[u, i, k, j, l] = psis[u, k, j, i, l] = -1
    return field.array(phis), field.array(psis)


def _residual_columns(field: Field, table, ops: dict, batch_name: str, units):
    """``(matrix, scale)``: column ``u`` times ``1/scale`` is ``lhs - rhs`` for unit ``u``."""
    if len(units) == 0:
        return None
    ops = dict(ops)
    ops[batch_name] = units
    lhs, rhs = build_sides(table, ops, batch=batch_name)
    ints, scale = evaluate_scaled(field, lhs - rhs)
    return ints.reshape(len(units), -1).T, scale


def _join(field: Field, left, right, widths) -> np.ndarray:
    """Place two residual halves sharing rows side by side on one common scale."""
    parts = [x for x in (left, right) if x is not None]
    rows = parts[0][0].shape[0]
    if left is not None and right is not None:
        (a, sa), (b, sb) = left, right
        a, b = a.astype(object) * sb, b.astype(object) * sa
        if isinstance(field, PrimeField):
            a, b = a % field.p, b % field.p
    else:
        a = left[0] if left is not None else np.zeros((rows, widths[0]), dtype=np.int64)
        b = right[0] if right is not None else np.zeros((rows, widths[1]), dtype=np.int64)
    if a.dtype == object or b.dtype == object:
        a, b = a.astype(object), b.astype(object)
    return np.hstack([a, b])


@dataclass(frozen=True, eq=False)
class CocycleSpace:
    """Exact description of Z^2 and B^2 in canonical cocycle coordinates."""

    field: Field
    n: int
    m: int
    z_basis: list
    b_generators: np.ndarray
    dims: CohomologyDims

    def contains(self, pair: CocyclePair) -> bool:
        """Whether the coordinate vector of ``pair`` lies in the computed Z^2."""
        v = pair.coordinates()
        if not self.z_basis:
            return self.field.is_zero_array(v)
        return linalg.in_span(self.field, self.z_basis, v)


def cocycle_system(A: NambuPoissonAlgebra, R: NPRepresentation) -> tuple[np.ndarray, int, int]:
    """Integer constraint matrix on (phi, psi) coordinates and the two block widths."""
    f = _match(A, R)
    n, m = A.dim, R.m
    phis, psis = _unit_cochains(f, n, m)
    ops = _ops(A, R)
    up, us = len(phis), len(psis)
    blocks = []
    h = _residual_columns(f, HARRISON, ops, "phi", phis)
    if h is not None:
        blocks.append(_join(f, h, None, (up, us)))
    t = _residual_columns(f, THREE_LIE_COCYCLE, ops, "psi", psis)
    if t is not None:
        blocks.append(_join(f, None, t, (up, us)))
    cp = _residual_columns(f, COMPATIBILITY, ops, "phi", phis)
    cs = _residual_columns(f, COMPATIBILITY, ops, "psi", psis)
    if cp is not None or cs is not None:
        blocks.append(_join(f, cp, cs, (up, us)))
    if not blocks:
        return np.zeros((0, up + us), dtype=np.int64), up, us
    if any(b.dtype == object for b in blocks):
        blocks = [b.astype(object) for b in blocks]
    M = np.vstack(blocks)
    return M[np.any(M != 0, axis=1)], up, us


def cocycle_space(A: NambuPoissonAlgebra, R: NPRepresentation, strict: bool = True) -> CocycleSpace:
    f = _match(A, R)
    if strict:
        require(check_nambu_poisson(A), "cohomology needs a Nambu-Poisson algebra")
        require(check_np_rep(A, R), "cohomology needs a representation")
    n, m = A.dim, R.m
    M, up, us = cocycle_system(A, R)
    total = up + us
    if M.shape[0] == 0:
        z_basis = [linalg_unit(f, total, i) for i in range(total)]
    else:
        z_basis = linalg.kernel_of_integer_matrix(f, M)
    # coboundaries of the n*m unit maps f = E_{qi}
    units = np.zeros((n * m, m, n), dtype=np.int64)
    for q in range(m):
        for i in range(n):
            units[q * n + i, q, i] = 1
    units = f.array(units) if units.size else f.zeros((0, m, n))
    if len(units) and total:
        phi_t, psi_t = coboundary_terms(A, R, units)
        phi_v = evaluate(f, phi_t, (len(units), n, n, m))
        psi_v = evaluate(f, psi_t, (len(units), n, n, n, m))
        sym = canonical_slots(n, Symmetry.SYMMETRIC)
        skw = canonical_slots(n, Symmetry.FULLY_SKEW)
        cols = []
        if sym:
            cols.append(np.stack([phi_v[(slice(None),) + s] for s in sym], axis=1).reshape(len(units), -1))
        if skw:
            cols.append(np.stack([psi_v[(slice(None),) + s] for s in skw], axis=1).reshape(len(units), -1))
        gens = np.concatenate(cols, axis=1)
        dim_b = linalg.rank(f, gens)
    else:
        gens = np.zeros((0, total), dtype=object)
        dim_b = 0
    dims = CohomologyDims(len(z_basis), dim_b, len(z_basis) - dim_b)
    return CocycleSpace(f, n, m, z_basis, gens, dims)


def linalg_unit(field: Field, size: int, i: int) -> np.ndarray:
    v = field.zeros(size)
    v[i] = field.convert(1)
    return v


def cocycle_space_dims(A: NambuPoissonAlgebra, R: NPRepresentation) -> CohomologyDims:
    """``(dim Z^2, dim B^2, dim H^2)``; raises AxiomViolation for invalid input."""
    return cocycle_space(A, R, strict=True).dims


def unknown_count(n: int, m: int) -> int:
    return (n * (n + 1) // 2 + comb(n, 3)) * m


# -- Poisson restriction -----------------------------------------------------

@dataclass(frozen=True, eq=False)
class PoissonCocyclePair:
    phi: BilinearMap
    psi_x0: BilinearMap

    def __post_init__(self):
        field_of(self.phi, self.psi_x0)
        if Symmetry(self.phi.symmetry) != Symmetry.SYMMETRIC:
            raise DimensionMismatch("phi must be declared symmetric")
        if Symmetry(self.psi_x0.symmetry) != Symmetry.SKEW:
            raise DimensionMismatch("psi_x0 must be declared skew")

    @property
    def field(self) -> Field:
        return self.phi.field


def restrict_cocycle_x0(A: NambuPoissonAlgebra, R: NPRepresentation, pair: CocyclePair, x0,
                        strict: bool = False) -> PoissonCocyclePair:
    """``(phi, psi_x0)`` with ``psi_x0(a, b) = psi(x0, a, b)``."""
    f = _pair_match(A, R, pair)
    if strict:
        require(check_np_2cocycle(A, R, pair), "restrict_cocycle_x0 needs a 2-cocycle")
    x0 = as_vector(f, x0, A.dim)
    psi_x0 = f.reduce(np.einsum("k,kabq->abq", x0, pair.psi.constants))
    return PoissonCocyclePair(pair.phi, BilinearMap(f, psi_x0, Symmetry.SKEW))


def check_poisson_2cocycle(P: PoissonAlgebra, R: PoissonRep, phi: BilinearMap, psi_x0: BilinearMap):
    """Harrison condition, Lie 2-cocycle sum and the mixed compatibility."""
    from .errors import SymmetryViolation

    if Symmetry(phi.symmetry) != Symmetry.SYMMETRIC:
        raise SymmetryViolation("phi must be symmetric")
    if Symmetry(psi_x0.symmetry) != Symmetry.SKEW:
        raise SymmetryViolation("psi_x0 must be skew")
    f = _match(P, R)
    ops = {"P": P.product.constants, "L": P.bracket.constants, "mu": R.mu, "rho": R.rho_x0,
           "phi": phi.constants, "psi": psi_x0.constants}
    return first_of(
        lambda: identity_violation(f, "Harrison cocycle", HARRISON, ops),
        lambda: identity_violation(f, "Lie cocycle", LIE_COCYCLE, ops),
        lambda: identity_violation(f, "Poisson cocycle compatibility", POISSON_COMPATIBILITY, ops),
    )
