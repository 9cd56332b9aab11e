"""Exact evaluation of multilinear identities on basis tuples.

Every identity in the package is written as ``lhs == rhs`` where both sides
are formal sums of einsum contractions (:class:`Terms`).  The output axes of
each contraction are the basis indices of the tuple being tested, followed by
one axis for the coordinate of the resulting vector.

Evaluation is exact.  Rational operands are rescaled to integer arrays by
their common denominators; the integer contraction runs on int64 whenever a
coefficient bound proves it cannot overflow, and on Python ints otherwise.
"""

from __future__ import annotations

import math
from itertools import combinations
from dataclasses import dataclass

import numpy as np
from gmpy2 import mpq

from .field import Field, PrimeField

_SAFE = 2**62
_PATHS: dict = {}


def _einsum(spec, arrays):
    if len(arrays) < 3:
        return np.einsum(spec, *arrays)
    key = (spec,) + tuple(a.shape for a in arrays)
    path = _PATHS.get(key)
    if path is None:
        path = _PATHS[key] = np.einsum_path(spec, *arrays, optimize="greedy")[0]
    return np.einsum(spec, *arrays, optimize=path)


@dataclass(frozen=True)
class ViolationReport:
    """First failing basis tuple of an identity.

    ``witness`` holds 0-based basis indices; ``left`` and ``right`` are the
    coordinate vectors of the two sides at that tuple.
    """

    axiom: str
    witness: tuple
    left: tuple
    right: tuple

    def __str__(self):
        w = ", ".join(str(i + 1) for i in self.witness)
        left = ", ".join(str(x) for x in self.left)
        right = ", ".join(str(x) for x in self.right)
        return f"{self.axiom} fails at basis tuple ({w}): [{left}] != [{right}]"

    def as_dict(self, field: Field | None = None) -> dict:
        fmt = field.format if field is not None else str
        return {
            "axiom": self.axiom,
            "witness": [i + 1 for i in self.witness],
            "left": [fmt(x) for x in self.left],
            "right": [fmt(x) for x in self.right],
        }


class Terms:
    """Signed formal sum of einsum contractions ``coef * einsum(spec, *ops)``."""

    __slots__ = ("items",)

    def __init__(self, items=()):
        self.items = tuple(items)

    def __add__(self, other: "Terms") -> "Terms":
        return Terms(self.items + other.items)

    def __neg__(self) -> "Terms":
        return Terms((-c, s, ops) for c, s, ops in self.items)

    def __sub__(self, other: "Terms") -> "Terms":
        return self + (-other)

    def __mul__(self, k: int) -> "Terms":
        return Terms((c * k, s, ops) for c, s, ops in self.items)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.items)

    def __repr__(self):
        return "Terms(" + " + ".join(f"{c}*[{s}]" for c, s, _ in self.items) + ")"


ZERO = Terms()


def term(spec: str, *operands, coef: int = 1) -> Terms:
    return Terms([(coef, spec, tuple(operands))])


def terms_sum(parts) -> Terms:
    out = ZERO
    for p in parts:
        out = out + p
    return out


class _Prepared:
    __slots__ = ("ints", "den", "maxabs")

    def __init__(self, ints, den, maxabs):
        self.ints = ints
        self.den = den
        self.maxabs = maxabs


def _prepare(field: Field, arr: np.ndarray) -> _Prepared:
    arr = np.asarray(arr, dtype=object)
    if isinstance(field, PrimeField):
        ints = arr.astype(np.int64) if arr.size else np.zeros(arr.shape, dtype=np.int64)
        return _Prepared(ints, 1, field.p - 1)
    if arr.size == 0:
        return _Prepared(np.zeros(arr.shape, dtype=np.int64), 1, 0)
    vals = [mpq(x) for x in arr.ravel().tolist()]
    den = math.lcm(*{int(v.denominator) for v in vals})
    flat = [int(v.numerator) * (den // int(v.denominator)) for v in vals]
    maxabs = max(map(abs, flat))
    nums = np.array(flat, dtype=np.int64 if maxabs < _SAFE else object).reshape(arr.shape)
    return _Prepared(nums, den, maxabs)


class _Evaluator:
    """Shared preparation for all terms of one identity."""

    def __init__(self, field: Field, *sides: Terms):
        self.field = field
        self.cache = {}
        self.dims = {}
        for side in sides:
            for _, spec, ops in side.items:
                ins = spec.split("->")[0].split(",")
                if len(ins) != len(ops):
                    raise ValueError(f"spec {spec!r} expects {len(ins)} operands, got {len(ops)}")
                for letters, op in zip(ins, ops):
                    if id(op) not in self.cache:
                        self.cache[id(op)] = (op, _prepare(field, op))
                    shape = np.shape(op)
                    if len(shape) != len(letters):
                        raise ValueError(f"operand of shape {shape} does not match {letters!r} in {spec!r}")
                    for ch, d in zip(letters, shape):
                        if self.dims.setdefault(ch, d) != d:
                            # letters are local to a spec; only flag clashes within one spec
                            pass
        self.sides = sides
        self.scale = 1
        for side in sides:
            for _, spec, ops in side.items:
                self.scale = math.lcm(self.scale, self._den(ops))

    def _den(self, ops) -> int:
        d = 1
        for op in ops:
            d *= self.cache[id(op)][1].den
        return d

    def out_shape(self, spec: str, ops) -> tuple:
        ins, out = spec.split("->")
        dims = {}
        for letters, op in zip(ins.split(","), ops):
            for ch, d in zip(letters, np.shape(op)):
                dims[ch] = d
        return tuple(dims[ch] for ch in out)

    def _bound(self, coef, spec, ops) -> int:
        ins, out = spec.split("->")
        dims = {}
        b = abs(coef) * (self.scale // self._den(ops))
        for letters, op in zip(ins.split(","), ops):
            b *= self.cache[id(op)][1].maxabs
            for ch, d in zip(letters, np.shape(op)):
                dims[ch] = d
        for ch, d in dims.items():
            if ch not in out:
                b *= d
        return b

    def use_int64(self) -> bool:
        total = 0
        for side in self.sides:
            for coef, spec, ops in side.items:
                if any(self.cache[id(op)][1].ints.dtype == object for op in ops):
                    return False
                total += self._bound(coef, spec, ops)
        return total < _SAFE

    def side(self, terms: Terms, shape, chunk=None, fast=True):
        """Integer array equal to ``scale`` times the value of ``terms``."""
        acc = None
        for coef, spec, ops in terms.items:
            ins, out = spec.split("->")
            arrays = []
            for letters, op in zip(ins.split(","), ops):
                a = self.cache[id(op)][1].ints
                if not fast and a.dtype != object:
                    a = a.astype(object)
                if chunk is not None:
                    a = a[tuple(slice(chunk, chunk + 1) if ch == out[0] else slice(None) for ch in letters)]
                arrays.append(a)
            val = _einsum(spec, arrays)
            mult = coef * (self.scale // self._den(ops))
            if mult != 1:
                val = val * mult
            acc = val if acc is None else acc + val
        if acc is None:
            if chunk is not None:
                shape = (1,) + tuple(shape[1:])
            acc = np.zeros(shape, dtype=np.int64 if fast else object)
        return acc

    def to_field(self, ints: np.ndarray) -> np.ndarray:
        field = self.field
        ints = np.asarray(ints)
        if isinstance(field, PrimeField):
            p = field.p
            return np.frompyfunc(lambda v: int(v) % p, 1, 1)(ints).astype(object) if ints.size else ints.astype(object)
        s = self.scale
        if ints.size == 0:
            return ints.astype(object)
        return np.frompyfunc(lambda v: mpq(int(v), s), 1, 1)(ints).astype(object)


def _shape_of(ev: _Evaluator, *sides: Terms):
    shape = None
    for side in sides:
        for _, spec, ops in side.items:
            s = ev.out_shape(spec, ops)
            if shape is None:
                shape = s
            elif s != shape:
                raise ValueError(f"inconsistent term shapes {shape} and {s}")
    return shape


def evaluate(field: Field, terms: Terms, shape=None) -> np.ndarray:
    """Canonical field array holding the value of a formal sum."""
    ev = _Evaluator(field, terms)
    shp = _shape_of(ev, terms) or shape
    if shp is None:
        raise ValueError("cannot infer the shape of an empty sum")
    ints = ev.side(terms, shp, fast=ev.use_int64())
    return ev.to_field(ints)


def evaluate_scaled(field: Field, terms: Terms, shape=None):
    """``(ints, scale)`` with ``ints / scale`` the value of ``terms``.

    Over GF(p) the integers are reduced into ``range(p)`` and ``scale`` is 1.
    """
    ev = _Evaluator(field, terms)
    shp = _shape_of(ev, terms) or shape
    if shp is None:
        raise ValueError("cannot infer the shape of an empty sum")
    ints = ev.side(terms, shp, fast=ev.use_int64())
    if isinstance(field, PrimeField):
        return ints % field.p, 1
    return ints, ev.scale


def first_violation(field: Field, axiom: str, lhs: Terms, rhs: Terms, chunked: bool = True):
    """Lexicographically first basis tuple where ``lhs != rhs``, or ``None``.

    The last output axis is the coordinate axis; the others form the witness.
    """
    if not lhs and not rhs:
        return None
    ev = _Evaluator(field, lhs, rhs)
    shape = _shape_of(ev, lhs, rhs)
    if shape is None or 0 in shape:
        return None
    fast = ev.use_int64()
    p = field.p if isinstance(field, PrimeField) else None
    chunks = range(shape[0]) if (chunked and len(shape) > 2) else [None]
    for c in chunks:
        left = ev.side(lhs, shape, chunk=c, fast=fast)
        right = ev.side(rhs, shape, chunk=c, fast=fast)
        diff = left - right
        if p is not None:
            diff = diff % p
        bad = np.argwhere(diff != 0)
        if len(bad):
            idx = tuple(int(i) for i in bad[0][:-1])
            lv = ev.to_field(left[idx])
            rv = ev.to_field(right[idx])
            if c is not None:
                idx = (idx[0] + c,) + idx[1:]
            return ViolationReport(axiom, idx, tuple(lv), tuple(rv))
    return None


def first_of(*checks):
    """Run lazily supplied checks in order and return the first report."""
    for check in checks:
        report = check()
        if report is not None:
            return report
    return None


def act(T, M=None, slots=(), out=None) -> Terms:
    """``T`` with the matrix ``M`` applied to the input ``slots`` and ``out`` to the value.

    ``T`` has its input axes first and the value axis last; matrices are stored
    ``[row, column]``, so ``M`` acts by ``e_a -> sum_x M[x, a] e_x``.
    """
    k = np.ndim(T) - 1
    ins = "abcd"[:k]
    fresh = iter("uvwz")
    letters, ops, extra = list(ins), [T], []
    for i in slots:
        new = next(fresh)
        extra.append(new + ins[i])
        letters[i] = new
        ops.append(M)
    if out is None:
        spec = ",".join(["".join(letters) + "q"] + extra) + f"->{ins}q"
    else:
        spec = ",".join(["".join(letters) + "y"] + extra + ["qy"]) + f"->{ins}q"
        ops.append(out)
    return term(spec, *ops)


def act_sum(T, M, k: int, out=None) -> Terms:
    """Sum of :func:`act` over every choice of ``k`` input slots."""
    total = ZERO
    for s in combinations(range(np.ndim(T) - 1), k):
        total = total + act(T, M, s, out)
    return total
