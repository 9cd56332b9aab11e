"""Dense exact linear algebra over QQ and GF(p).

Matrices are plain 2-d numpy object arrays holding canonical field elements
(see :mod:`nambu_poisson.field`); every function takes the field explicitly.
Row operations are vectorized over whole rows.
"""

from __future__ import annotations

from math import lcm

import numpy as np
from gmpy2 import mpq

from .errors import DimensionMismatch, NotInvertible
from .field import Field, PrimeField


def _as_matrix(field: Field, m) -> np.ndarray:
    arr = np.asarray(m, dtype=object)
    if arr.ndim != 2:
        raise DimensionMismatch(f"expected a 2-d matrix, got shape {arr.shape}")
    return field.reduce(arr) if arr.size else arr.copy()


def _pick_pivot(field: Field, col: np.ndarray, start: int):
    """Row index of the pivot in ``col[start:]``, or None if the column is zero."""
    nz = np.flatnonzero(col[start:] != 0)
    if not len(nz):
        return None
    if isinstance(field, PrimeField):
        return start + int(nz[0])
    # largest numerator first, ties broken by the smallest denominator
    best = max(nz, key=lambda i: (abs(col[start + i].numerator), -col[start + i].denominator))
    return start + int(best)


def rref_mod_p(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """RREF of an integer matrix over GF(p) using int64 row operations."""
    a = np.array(a, dtype=np.int64) % p
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if not len(nz):
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if len(hit):
            a[hit] = (a[hit] - np.outer(col[hit], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rref(field: Field, m) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    if isinstance(field, PrimeField):
        a = np.asarray(m, dtype=object)
        if a.ndim != 2:
            raise DimensionMismatch(f"expected a 2-d matrix, got shape {a.shape}")
        ints = field.reduce(a).astype(np.int64) if a.size else np.zeros(a.shape, dtype=np.int64)
        red, piv = rref_mod_p(ints, field.p)
        return red.astype(object), piv
    a = _as_matrix(field, m)
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = _pick_pivot(field, a[:, c], r)
        if piv is None:
            continue
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = field.inverse(a[r, c])
        a[r] = a[r] * inv
        col = a[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col != 0)
        if len(hit):
            a[hit] = a[hit] - np.outer(col[hit], a[r])
        pivots.append(c)
        r += 1
    return a, pivots


def gram(m: np.ndarray) -> np.ndarray:
    """``m.T @ m`` for an integer matrix, on int64 when that cannot overflow."""
    m = np.asarray(m)
    if m.size == 0:
        return np.zeros((m.shape[1], m.shape[1]), dtype=object)
    big = max(abs(int(m.max())), abs(int(m.min())))
    if m.dtype != object and big * big * m.shape[0] < 2**62:
        return m.astype(np.int64).T.dot(m.astype(np.int64)).astype(object)
    m = m.astype(object)
    return m.T.dot(m)


def kernel_of_integer_matrix(field: Field, m: np.ndarray) -> list[np.ndarray]:
    """Nullspace of a tall integer matrix.

    Over QQ the kernel of ``m`` equals the kernel of ``m.T @ m`` (the Gram
    matrix is positive semidefinite), which is square and small.  Over GF(p)
    that shortcut is invalid, so the matrix is reduced directly mod p.
    """
    m = np.asarray(m)
    if isinstance(field, PrimeField):
        return nullspace_basis(field, m.astype(object))
    return nullspace_basis(field, field.array(gram(m)))


def rank(field: Field, m) -> int:
    """Row rank by exact Gaussian elimination."""
    a = np.asarray(m, dtype=object)
    if a.size == 0:
        return 0
    return len(rref(field, a)[1])


def nullspace_basis(field: Field, m) -> list[np.ndarray]:
    """Basis of ``{v : m v = 0}``, one vector per free column."""
    a = np.asarray(m, dtype=object)
    if a.ndim != 2:
        raise DimensionMismatch(f"expected a 2-d matrix, got shape {a.shape}")
    cols = a.shape[1]
    if a.shape[0] == 0:
        reduced, pivots = np.zeros((0, cols), dtype=object), []
    else:
        reduced, pivots = rref(field, a)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = field.zeros(cols)
        v[f] = field.convert(1)
        for row, pc in enumerate(pivots):
            v[pc] = field.convert(-reduced[row, f])
        basis.append(v)
    return basis


def matmul(field: Field, a, b) -> np.ndarray:
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    if a.shape[-1] != b.shape[0]:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    return field.reduce(a.dot(b))


def invert(field: Field, m) -> np.ndarray:
    """Exact inverse; raises NotInvertible for singular input."""
    a = _as_matrix(field, m)
    n, k = a.shape
    if n != k:
        raise DimensionMismatch(f"cannot invert a {n}x{k} matrix")
    aug = np.concatenate([a, field.identity(n)], axis=1)
    reduced, pivots = rref(field, aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise NotInvertible(f"matrix has rank {sum(1 for p in pivots if p < n)} < {n}")
    return reduced[:, n:].copy()


def in_span(field: Field, vectors, v) -> bool:
    """Whether ``v`` is a linear combination of ``vectors``."""
    vectors = [np.asarray(x, dtype=object) for x in vectors]
    if not vectors:
        return field.is_zero_array(v)
    base = np.array(vectors, dtype=object)
    return rank(field, base) == rank(field, np.vstack([base, np.asarray(v, dtype=object)[None, :]]))


def scale_rows_to_int(field: Field, m) -> np.ndarray:
    """Clear denominators row by row; the row space is unchanged."""
    a = np.asarray(m, dtype=object)
    if isinstance(field, PrimeField) or a.size == 0:
        return a
    out = np.empty(a.shape, dtype=object)
    for i, row in enumerate(a):
        d = 1
        for x in row:
            d = lcm(d, int(mpq(x).denominator))
        out[i] = np.frompyfunc(lambda x, d=d: mpq(int(mpq(x).numerator) * (d // int(mpq(x).denominator))), 1, 1)(row)
    return out
