"""Brute-force search over GF(p) for operators and small algebras.

Candidates are indexed by integers in ``range(size)``; index ``i`` is decoded
as base-``len(coefficients)`` digits filling the free entries in a fixed
order.  When ``size <= budget`` every index is tried, otherwise ``budget``
distinct indices are drawn with a seeded generator.  Workers (``jobs > 1``)
get contiguous slices of the index list and results are merged in index
order, so the output does not depend on ``jobs``.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from itertools import combinations_with_replacement, combinations

import numpy as np

from .algebra import NambuPoissonAlgebra, check_nambu_poisson, require
from .cohomology import CocyclePair
from .errors import FieldMismatch
from .field import QQ, Field, PrimeField
from .operators import TwistedOCandidate, check_nijenhuis, check_reynolds, check_twisted_o
from .representations import adjoint_rep
from .tensors import LinearMap, Symmetry, symmetrize, to_entries

KINDS = ("nijenhuis", "reynolds", "twisted-rb", "np-algebra")


@dataclass(frozen=True)
class SearchSpec:
    """What to search for.

    ``base`` is required for the operator kinds; ``dim`` for ``np-algebra``.
    ``coefficients`` defaults to all of GF(p).  ``cocycle`` is the pair used
    by ``twisted-rb`` (zero pair when omitted).
    """

    kind: str
    field: PrimeField
    base: NambuPoissonAlgebra | None = None
    dim: int | None = None
    coefficients: tuple | None = None
    budget: int = 10_000
    seed: int = 0
    diagonal: bool = False
    upper_triangular: bool = False
    cocycle: CocyclePair | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown search kind {self.kind!r}; expected one of {', '.join(KINDS)}")
        if not isinstance(self.field, PrimeField):
            raise FieldMismatch("search runs over GF(p) only")
        if self.budget < 1:
            raise ValueError("budget must be at least 1")
        if self.kind == "np-algebra":
            if self.dim is None or self.dim < 1:
                raise ValueError("np-algebra search needs a positive dim")
        else:
            if self.base is None:
                raise ValueError(f"{self.kind} search needs a base algebra")
            if self.base.field != self.field:
                raise FieldMismatch(f"base algebra is over {self.base.field.name}, search over {self.field.name}")
            if self.cocycle is not None and self.cocycle.field != self.field:
                raise FieldMismatch("cocycle field differs from the search field")
        coefs = self.coeffs
        if not coefs:
            raise ValueError("empty coefficient set")

    @property
    def coeffs(self) -> tuple:
        p = self.field.p
        if self.coefficients is None:
            return tuple(range(p))
        return tuple(sorted({int(c) % p for c in self.coefficients}))

    @property
    def n(self) -> int:
        return self.dim if self.kind == "np-algebra" else self.base.dim


@dataclass
class SearchResult:
    witnesses: list
    examined: int
    space_size: int
    budget_exceeded: bool = False
    indices: list = dc_field(default_factory=list)

    def __len__(self):
        return len(self.witnesses)


# -- candidate spaces ----------------------------------------------------------

def _matrix_slots(spec: SearchSpec) -> list[tuple]:
    n = spec.n
    if spec.diagonal:
        return [(i, i) for i in range(n)]
    if spec.upper_triangular:
        return [(i, j) for i in range(n) for j in range(i, n)]
    return [(i, j) for i in range(n) for j in range(n)]


def _algebra_slots(n: int) -> list[tuple]:
    prod = [("P",) + s + (k,) for s in combinations_with_replacement(range(n), 2) for k in range(n)]
    br = [("B",) + s + (k,) for s in combinations(range(n), 3) for k in range(n)]
    return prod + br


def free_slots(spec: SearchSpec) -> list[tuple]:
    return _algebra_slots(spec.n) if spec.kind == "np-algebra" else _matrix_slots(spec)


def space_size(spec: SearchSpec) -> int:
    return len(spec.coeffs) ** len(free_slots(spec))


def _digits(index: int, base: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        index, d = divmod(index, base)
        out.append(d)
    return out


def decode(spec: SearchSpec, index: int):
    """Candidate number ``index`` (a LinearMap or a NambuPoissonAlgebra)."""
    f, n, coefs = spec.field, spec.n, spec.coeffs
    slots = free_slots(spec)
    vals = [coefs[d] for d in _digits(index, len(coefs), len(slots))]
    if spec.kind != "np-algebra":
        m = f.zeros((n, n))
        for (i, j), v in zip(slots, vals):
            m[i, j] = v
        return LinearMap(f, m)
    prod = [s[1:] + (v,) for s, v in zip(slots, vals) if s[0] == "P" and v]
    br = [s[1:] + (v,) for s, v in zip(slots, vals) if s[0] == "B" and v]
    return NambuPoissonAlgebra(symmetrize(f, prod, Symmetry.SYMMETRIC, n),
                               symmetrize(f, br, Symmetry.FULLY_SKEW, n))


def verify(spec: SearchSpec, witness) -> bool:
    """Exact checker for the declared kind."""
    if spec.kind == "np-algebra":
        return check_nambu_poisson(witness) is None
    A = spec.base
    if spec.kind == "nijenhuis":
        return check_nijenhuis(A, witness) is None
    if spec.kind == "reynolds":
        return check_reynolds(A, witness) is None
    pair = spec.cocycle or CocyclePair.zero(spec.field, A.dim, A.dim)
    return check_twisted_o(TwistedOCandidate(witness, adjoint_rep(A), pair), A, strict=False) is None


def candidate_indices(spec: SearchSpec) -> tuple[list[int], bool]:
    size = space_size(spec)
    if size <= spec.budget:
        return list(range(size)), False
    picked = random.Random(spec.seed).sample(range(size), spec.budget)
    return sorted(picked), True


def _scan(spec: SearchSpec, indices) -> list[tuple[int, object]]:
    found = []
    for i in indices:
        cand = decode(spec, i)
        if verify(spec, cand):
            found.append((i, cand))
    return found


def search(spec: SearchSpec, jobs: int = 1) -> SearchResult:
    if spec.kind != "np-algebra":
        require(check_nambu_poisson(spec.base), f"{spec.kind} search needs a Nambu-Poisson base algebra")
        if spec.kind == "twisted-rb" and spec.cocycle is not None:
            from .cohomology import check_np_2cocycle

            require(check_np_2cocycle(spec.base, adjoint_rep(spec.base), spec.cocycle),
                    "twisted-rb search needs a 2-cocycle")
    indices, sampled = candidate_indices(spec)
    if jobs > 1 and len(indices) > 1:
        step = -(-len(indices) // jobs)
        chunks = [indices[k:k + step] for k in range(0, len(indices), step)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_scan, [spec] * len(chunks), chunks))
        found = [hit for part in parts for hit in part]
    else:
        found = _scan(spec, indices)
    return SearchResult(witnesses=[w for _, w in found], examined=len(indices), space_size=space_size(spec),
                        budget_exceeded=sampled, indices=[i for i, _ in found])


# -- lifting -------------------------------------------------------------------

def centered(x: int, p: int) -> int:
    x = int(x) % p
    return x - p if x > p // 2 else x


def _lift_array(arr: np.ndarray, p: int, target: Field) -> np.ndarray:
    if arr.size == 0:
        return target.zeros(arr.shape)
    return target.array(np.vectorize(lambda v: centered(v, p), otypes=[object])(arr).tolist())


def _lift_map(t, p: int, target: Field):
    sym = Symmetry(t.symmetry)
    entries = [e[:-1] + (centered(e[-1], p),) for e in to_entries(t)]
    entries = [e for e in entries if e[-1]]
    return symmetrize(target, entries, sym, t.dim_in, t.dim_out, arity_=t.constants.ndim - 1)


def lift_to_rationals(witness, target: Field = QQ):
    """Centered lift of a GF(p) witness; the caller must re-run the exact checker."""
    from .tensors import BilinearMap, TrilinearMap

    p = witness.field.p
    if isinstance(witness, LinearMap):
        return LinearMap(target, _lift_array(witness.matrix, p, target))
    if isinstance(witness, NambuPoissonAlgebra):
        return NambuPoissonAlgebra(_lift_map(witness.product, p, target), _lift_map(witness.bracket, p, target))
    if isinstance(witness, (BilinearMap, TrilinearMap)):
        return _lift_map(witness, p, target)
    raise TypeError(f"cannot lift {type(witness).__name__}")
