"""Random generators shared by the unit and acceptance tests."""

import numpy as np

from nambu_poisson.cohomology import CocyclePair, coboundary
from nambu_poisson.deformations import LinearDeformation12, extract_trivial_witness_data
from nambu_poisson.operators import TwistedOCandidate, minus_cocycle
from nambu_poisson.representations import adjoint_rep
from nambu_poisson.tensors import LinearMap, Symmetry, TrilinearMap, random_map


def random_deformation(A, seed):
    """Mix of arbitrary triples, coboundary triples and trivial-deformation triples."""
    n, f = A.dim, A.field
    rng = np.random.default_rng(seed)
    kind = seed % 4
    if kind == 0:
        return LinearDeformation12(A, random_map(f, n, Symmetry.SYMMETRIC, seed=rng, bound=1),
                                   random_map(f, n, Symmetry.FULLY_SKEW, seed=rng, bound=1),
                                   random_map(f, n, Symmetry.FULLY_SKEW, seed=rng, bound=1))
    if kind == 1:
        c = coboundary(A, adjoint_rep(A), random_map(f, n, seed=rng, arity_=1, bound=1))
        return LinearDeformation12(A, c.phi, c.psi, TrilinearMap(f, f.zeros((n,) * 4), Symmetry.FULLY_SKEW))
    if kind == 2:
        N = random_map(f, n, seed=rng, arity_=1, bound=1)
    else:
        N = LinearMap.identity(f, n).scaled(int(rng.integers(-3, 4)))
    return extract_trivial_witness_data(N, A).deformation


def random_candidate(A, seed, m=None, pair_kind=None):
    """Twisted O candidate on the adjoint rep; pair is a coboundary, the minus pair or zero."""
    n, f = A.dim, A.field
    rng = np.random.default_rng(seed)
    R = adjoint_rep(A)
    kind = pair_kind if pair_kind is not None else seed % 3
    if kind == 0:
        pair = coboundary(A, R, random_map(f, n, seed=rng, arity_=1, bound=1))
    elif kind == 1:
        pair = minus_cocycle(A)
    else:
        pair = CocyclePair.zero(f, n, n)
    style = int(rng.integers(0, 3))
    if style == 0:
        r = random_map(f, n, seed=rng, arity_=1, bound=1)
    elif style == 1:
        r = LinearMap.diagonal(f, rng.integers(-1, 2, size=n).tolist())
    else:
        r = LinearMap.zero(f, n)
    return TwistedOCandidate(r, R, pair)
