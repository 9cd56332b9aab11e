"""Naive reference implementations used as test oracles.

Everything here is written with explicit loops over Fractions (or ints mod p)
and never touches the library's einsum machinery.  Vectors are dicts
``{index: value}`` with zero entries dropped.
"""

from fractions import Fraction
from itertools import product as iproduct

import numpy as np


class Ring:
    def __init__(self, p=None):
        self.p = p

    def __call__(self, x):
        if self.p is None:
            return Fraction(int(x.numerator), int(x.denominator)) if hasattr(x, "denominator") else Fraction(x)
        return int(x) % self.p


def ring_of(field):
    return Ring(getattr(field, "p", None))


def plain(arr, R):
    """Library object array -> nested lists of Fractions / ints."""
    a = np.asarray(arr, dtype=object)
    if a.ndim == 0:
        return R(a.item())
    return [plain(x, R) for x in a]


def clean(v, R):
    return {k: R(x) for k, x in v.items() if R(x) != 0}


def add(R, *vs, signs=None):
    out = {}
    signs = signs or [1] * len(vs)
    for s, v in zip(signs, vs):
        for k, x in v.items():
            out[k] = out.get(k, 0) + s * x
    return clean(out, R)


def unit(i):
    return {i: 1}


def scale(R, c, v):
    return clean({k: c * x for k, x in v.items()}, R)


def bil(R, T, x, y):
    """T(x, y) for T[i][j][k]."""
    out = {}
    for i, xi in x.items():
        for j, yj in y.items():
            for k, t in enumerate(T[i][j]):
                if t:
                    out[k] = out.get(k, 0) + xi * yj * t
    return clean(out, R)


def tri(R, T, x, y, z):
    out = {}
    for i, xi in x.items():
        for j, yj in y.items():
            for k, zk in z.items():
                for q, t in enumerate(T[i][j][k]):
                    if t:
                        out[q] = out.get(q, 0) + xi * yj * zk * t
    return clean(out, R)


def lin(R, M, x):
    """M[out][in] applied to x."""
    out = {}
    for j, xj in x.items():
        for i in range(len(M)):
            if M[i][j]:
                out[i] = out.get(i, 0) + M[i][j] * xj
    return clean(out, R)


def act1(R, mu, a, v):
    """mu(a) v with mu[a][i][j] the (i, j) entry of mu(e_a)."""
    out = {}
    for s, as_ in a.items():
        for j, vj in v.items():
            for i in range(len(mu[s])):
                if mu[s][i][j]:
                    out[i] = out.get(i, 0) + as_ * vj * mu[s][i][j]
    return clean(out, R)


def act2(R, rho, a, b, v):
    out = {}
    for s, as_ in a.items():
        for t, bt in b.items():
            for j, vj in v.items():
                mat = rho[s][t]
                for i in range(len(mat)):
                    if mat[i][j]:
                        out[i] = out.get(i, 0) + as_ * bt * vj * mat[i][j]
    return clean(out, R)


def first_failure(checks, n, arity):
    """checks: list of (name, fn(tuple) -> (lhs, rhs)); returns (name, witness) or None."""
    for name, fn in checks:
        for w in iproduct(range(n), repeat=arity):
            lhs, rhs = fn(*w)
            if lhs != rhs:
                return name, w
    return None


def first_failure_mixed(checks, n):
    """Like first_failure but each check carries its own arity."""
    for name, arity, fn in checks:
        for w in iproduct(range(n), repeat=arity):
            lhs, rhs = fn(*w)
            if lhs != rhs:
                return name, w
    return None


# -- algebra axioms --------------------------------------------------------------

def np_failure(P, B, R, n):
    e = unit
    return first_failure_mixed([
        ("associativity", 3, lambda a, b, c: (bil(R, P, bil(R, P, e(a), e(b)), e(c)),
                                              bil(R, P, e(a), bil(R, P, e(b), e(c))))),
        ("fundamental identity", 5, lambda a, b, c, d, x: (
            tri(R, B, e(a), e(b), tri(R, B, e(c), e(d), e(x))),
            add(R, tri(R, B, tri(R, B, e(a), e(b), e(c)), e(d), e(x)),
                tri(R, B, e(c), tri(R, B, e(a), e(b), e(d)), e(x)),
                tri(R, B, e(c), e(d), tri(R, B, e(a), e(b), e(x)))))),
        ("Leibniz rule", 4, lambda a, b, c, d: (
            tri(R, B, e(a), e(b), bil(R, P, e(c), e(d))),
            add(R, bil(R, P, tri(R, B, e(a), e(b), e(c)), e(d)), bil(R, P, e(c), tri(R, B, e(a), e(b), e(d)))))),
    ], n)


def poisson_failure(P, L, R, n):
    e = unit
    return first_failure_mixed([
        ("associativity", 3, lambda a, b, c: (bil(R, P, bil(R, P, e(a), e(b)), e(c)),
                                              bil(R, P, e(a), bil(R, P, e(b), e(c))))),
        ("Jacobi", 3, lambda a, b, c: (add(R, bil(R, L, e(a), bil(R, L, e(b), e(c))),
                                           bil(R, L, e(b), bil(R, L, e(c), e(a))),
                                           bil(R, L, e(c), bil(R, L, e(a), e(b)))), {})),
        ("Leibniz", 3, lambda a, b, c: (bil(R, L, e(a), bil(R, P, e(b), e(c))),
                                        add(R, bil(R, P, bil(R, L, e(a), e(b)), e(c)),
                                            bil(R, P, e(b), bil(R, L, e(a), e(c)))))),
    ], n)


# -- representations -------------------------------------------------------------

def rep_failure(P, B, mu, rho, R, n, m):
    """Identities checked on basis tuples of A and a basis vector of V."""
    e = unit

    def mm(a, v):
        return act1(R, mu, a, v)

    def rr(a, b, v):
        return act2(R, rho, a, b, v)

    checks = [
        ("mu multiplicative", 2, lambda a, b, v: (mm(bil(R, P, e(a), e(b)), e(v)), mm(e(a), mm(e(b), e(v))))),
        ("3-Lie rep commutator", 4, lambda a, b, c, d, v: (
            add(R, rr(e(a), e(b), rr(e(c), e(d), e(v))), rr(e(c), e(d), rr(e(a), e(b), e(v))), signs=[1, -1]),
            add(R, rr(tri(R, B, e(a), e(b), e(c)), e(d), e(v)), rr(e(c), tri(R, B, e(a), e(b), e(d)), e(v))))),
        ("3-Lie rep bracket", 4, lambda a, b, c, d, v: (
            rr(tri(R, B, e(a), e(b), e(c)), e(d), e(v)),
            add(R, rr(e(a), e(b), rr(e(c), e(d), e(v))), rr(e(b), e(c), rr(e(a), e(d), e(v))),
                rr(e(c), e(a), rr(e(b), e(d), e(v)))))),
        ("mu of bracket", 3, lambda a, b, c, v: (
            mm(tri(R, B, e(a), e(b), e(c)), e(v)),
            add(R, rr(e(a), e(b), mm(e(c), e(v))), mm(e(c), rr(e(a), e(b), e(v))), signs=[1, -1]))),
        ("rho of product", 3, lambda a, b, c, v: (
            rr(e(a), bil(R, P, e(b), e(c)), e(v)),
            add(R, mm(e(b), rr(e(a), e(c), e(v))), mm(e(c), rr(e(a), e(b), e(v)))))),
    ]
    for name, k, fn in checks:
        for w in iproduct(range(n), repeat=k):
            for v in range(m):
                lhs, rhs = fn(*w, v)
                if lhs != rhs:
                    return name, w
    return None


# -- cocycles --------------------------------------------------------------------

def cocycle_residuals(P, B, mu, rho, phi, psi, R, n):
    """All residual vectors of the three cocycle identities, in a fixed order."""
    e = unit

    def f2(a, b):
        return bil(R, phi, a, b)

    def f3(a, b, c):
        return tri(R, psi, a, b, c)

    out = []
    for a, b, c in iproduct(range(n), repeat=3):
        lhs = add(R, act1(R, mu, e(a), f2(e(b), e(c))), f2(e(a), bil(R, P, e(b), e(c))))
        rhs = add(R, f2(bil(R, P, e(a), e(b)), e(c)), act1(R, mu, e(c), f2(e(a), e(b))))
        out.append(add(R, lhs, rhs, signs=[1, -1]))
    for a, b, c, d, x in iproduct(range(n), repeat=5):
        lhs = add(R, f3(e(a), e(b), tri(R, B, e(c), e(d), e(x))), act2(R, rho, e(a), e(b), f3(e(c), e(d), e(x))))
        rhs = add(R, f3(tri(R, B, e(a), e(b), e(c)), e(d), e(x)), f3(e(c), tri(R, B, e(a), e(b), e(d)), e(x)),
                  f3(e(c), e(d), tri(R, B, e(a), e(b), e(x))), act2(R, rho, e(d), e(x), f3(e(a), e(b), e(c))),
                  act2(R, rho, e(x), e(c), f3(e(a), e(b), e(d))), act2(R, rho, e(c), e(d), f3(e(a), e(b), e(x))))
        out.append(add(R, lhs, rhs, signs=[1, -1]))
    for a, b, c, d in iproduct(range(n), repeat=4):
        lhs = add(R, f3(e(a), e(b), bil(R, P, e(c), e(d))), act2(R, rho, e(a), e(b), f2(e(c), e(d))))
        rhs = add(R, f2(e(c), tri(R, B, e(a), e(b), e(d))), act1(R, mu, e(c), f3(e(a), e(b), e(d))),
                  f2(tri(R, B, e(a), e(b), e(c)), e(d)), act1(R, mu, e(d), f3(e(a), e(b), e(c))))
        out.append(add(R, lhs, rhs, signs=[1, -1]))
    return out


def is_cocycle(P, B, mu, rho, phi, psi, R, n):
    return all(not r for r in cocycle_residuals(P, B, mu, rho, phi, psi, R, n))


def coboundary(P, B, mu, rho, F, R, n, m):
    """(phi_f, psi_f) as nested lists; F[q][i] is the matrix of f: A -> V."""
    e = unit

    def f(v):
        return lin(R, F, v)

    phi = [[[0] * m for _ in range(n)] for _ in range(n)]
    psi = [[[[0] * m for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for a, b in iproduct(range(n), repeat=2):
        v = add(R, act1(R, mu, e(a), f(e(b))), act1(R, mu, e(b), f(e(a))), f(bil(R, P, e(a), e(b))),
                signs=[1, 1, -1])
        for q, x in v.items():
            phi[a][b][q] = x
    for a, b, c in iproduct(range(n), repeat=3):
        v = add(R, act2(R, rho, e(a), e(b), f(e(c))), act2(R, rho, e(b), e(c), f(e(a))),
                act2(R, rho, e(c), e(a), f(e(b))), f(tri(R, B, e(a), e(b), e(c))), signs=[1, 1, 1, -1])
        for q, x in v.items():
            psi[a][b][c][q] = x
    return phi, psi


# -- operators -------------------------------------------------------------------

def nijenhuis_failure(P, B, N, R, n):
    e = unit

    def Nv(v):
        return lin(R, N, v)

    def prod(a, b):
        lhs = bil(R, P, Nv(e(a)), Nv(e(b)))
        inner = add(R, bil(R, P, Nv(e(a)), e(b)), bil(R, P, e(a), Nv(e(b))), Nv(bil(R, P, e(a), e(b))),
                    signs=[1, 1, -1])
        return lhs, Nv(inner)

    def br(a, b, c):
        x, y, z = e(a), e(b), e(c)
        lhs = tri(R, B, Nv(x), Nv(y), Nv(z))
        s2 = add(R, tri(R, B, Nv(x), Nv(y), z), tri(R, B, Nv(x), y, Nv(z)), tri(R, B, x, Nv(y), Nv(z)))
        s1 = add(R, tri(R, B, Nv(x), y, z), tri(R, B, x, Nv(y), z), tri(R, B, x, y, Nv(z)))
        inner = add(R, s2, Nv(s1), Nv(Nv(tri(R, B, x, y, z))), signs=[1, -1, 1])
        return lhs, Nv(inner)

    return first_failure_mixed([("product", 2, prod), ("bracket", 3, br)], n)


def reynolds_holds(P, B, M, R, n):
    e = unit

    def Rv(v):
        return lin(R, M, v)

    for a, b in iproduct(range(n), repeat=2):
        lhs = bil(R, P, Rv(e(a)), Rv(e(b)))
        inner = add(R, bil(R, P, Rv(e(a)), e(b)), bil(R, P, e(a), Rv(e(b))), lhs, signs=[1, 1, -1])
        if lhs != Rv(inner):
            return False
    for a, b, c in iproduct(range(n), repeat=3):
        x, y, z = e(a), e(b), e(c)
        lhs = tri(R, B, Rv(x), Rv(y), Rv(z))
        s2 = add(R, tri(R, B, Rv(x), Rv(y), z), tri(R, B, Rv(x), y, Rv(z)), tri(R, B, x, Rv(y), Rv(z)))
        if lhs != Rv(add(R, s2, lhs, signs=[1, -1])):
            return False
    return True


def twisted_o_holds(P, B, r, mu, rho, phi, psi, R, n, m):
    """r: V -> A with r[x][u]; identities on basis vectors of V."""
    e = unit

    def rv(u):
        return lin(R, r, u)

    for u, v in iproduct(range(m), repeat=2):
        lhs = bil(R, P, rv(e(u)), rv(e(v)))
        inner = add(R, act1(R, mu, rv(e(u)), e(v)), act1(R, mu, rv(e(v)), e(u)), bil(R, phi, rv(e(u)), rv(e(v))))
        if lhs != rv(inner):
            return False
    for u, v, w in iproduct(range(m), repeat=3):
        a, b, c = rv(e(u)), rv(e(v)), rv(e(w))
        lhs = tri(R, B, a, b, c)
        inner = add(R, act2(R, rho, a, b, e(w)), act2(R, rho, b, c, e(u)), act2(R, rho, c, a, e(v)),
                    tri(R, psi, a, b, c))
        if lhs != rv(inner):
            return False
    return True


# -- NS algebras -----------------------------------------------------------------

def ns_holds(D, St, S, Dq, R, n):
    e = unit

    def dia(x, y):
        return bil(R, D, x, y)

    def star(x, y):
        return bil(R, St, x, y)

    def sq(x, y, z):
        return tri(R, S, x, y, z)

    def dsq(x, y, z):
        return tri(R, Dq, x, y, z)

    def odot(x, y):
        return add(R, dia(x, y), dia(y, x), star(x, y))

    def tb(x, y, z):
        return add(R, sq(x, y, z), sq(y, z, x), sq(z, x, y), dsq(x, y, z))

    for a, b, c in iproduct(range(n), repeat=3):
        x, y, z = e(a), e(b), e(c)
        if dia(x, dia(y, z)) != dia(odot(x, y), z):
            return False
        if add(R, dia(x, star(y, z)), star(x, odot(y, z))) != add(R, dia(y, star(x, z)), star(y, odot(x, z))):
            return False
    for a, b, c, d, f in iproduct(range(n), repeat=5):
        x, y, z, u, w = e(a), e(b), e(c), e(d), e(f)
        if sq(x, y, sq(z, u, w)) != add(R, sq(tb(x, y, z), u, w), sq(z, tb(x, y, u), w), sq(z, u, sq(x, y, w))):
            return False
        if sq(tb(x, y, z), u, w) != add(R, sq(x, y, sq(z, u, w)), sq(y, z, sq(x, u, w)), sq(z, x, sq(y, u, w))):
            return False
        lhs = add(R, dsq(x, y, tb(z, u, w)), sq(x, y, dsq(z, u, w)))
        rhs = add(R, dsq(tb(x, y, z), u, w), dsq(z, tb(x, y, u), w), dsq(z, u, tb(x, y, w)),
                  sq(u, w, dsq(x, y, z)), sq(w, z, dsq(x, y, u)), sq(z, u, dsq(x, y, w)))
        if lhs != rhs:
            return False
    for a, b, c, d in iproduct(range(n), repeat=4):
        x, y, z, u = e(a), e(b), e(c), e(d)
        if dia(tb(x, y, z), u) != add(R, sq(x, y, dia(z, u)), dia(z, sq(x, y, u)), signs=[1, -1]):
            return False
        if sq(odot(x, y), z, u) != add(R, dia(x, sq(y, z, u)), dia(y, sq(x, z, u))):
            return False
        lhs = add(R, dsq(x, y, odot(z, u)), sq(x, y, star(z, u)))
        rhs = add(R, star(z, tb(x, y, u)), dia(z, dsq(x, y, u)), star(tb(x, y, z), u), dia(u, dsq(x, y, z)))
        if lhs != rhs:
            return False
    return True
