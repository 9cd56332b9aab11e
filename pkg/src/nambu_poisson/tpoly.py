"""Polynomials in a formal parameter ``t`` with exact coefficients.

Coefficients can be :class:`~nambu_poisson.field.Scalar` values, canonical
field arrays (structure tensors), or formal sums
(:class:`~nambu_poisson.identities.Terms`).  Products are formed with
:meth:`TPoly.combine`, which takes the bilinear rule used to multiply two
coefficients, so the same class serves scalar arithmetic and the t-expansion
of composite operations.
"""

from __future__ import annotations

import operator
from typing import Callable

import numpy as np

from .field import Scalar


def _is_zero(c) -> bool:
    if c is None:
        return True
    if isinstance(c, Scalar):
        return not c
    if isinstance(c, np.ndarray):
        return not np.any(c != 0)
    if hasattr(c, "items"):  # Terms
        return not c
    return c == 0


def _add(x, y):
    if x is None:
        return y
    if y is None:
        return x
    return x + y


class TPoly:
    """``coeffs[k]`` is the coefficient of ``t**k``; trailing zeros are trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and _is_zero(coeffs[-1]):
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return None

    def __iter__(self):
        return iter(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other: "TPoly") -> "TPoly":
        size = max(len(self), len(other))
        return TPoly(_add(self[k], other[k]) for k in range(size))

    def __neg__(self) -> "TPoly":
        return TPoly(None if c is None else -c for c in self.coeffs)

    def __sub__(self, other: "TPoly") -> "TPoly":
        return self + (-other)

    def combine(self, f: Callable, other: "TPoly") -> "TPoly":
        """Cauchy product where coefficients multiply through ``f``."""
        if not self or not other:
            return TPoly()
        out = [None] * (len(self) + len(other) - 1)
        for i, x in enumerate(self.coeffs):
            if _is_zero(x):
                continue
            for j, y in enumerate(other.coeffs):
                if _is_zero(y):
                    continue
                out[i + j] = _add(out[i + j], f(x, y))
        return TPoly(out)

    def __mul__(self, other):
        if isinstance(other, TPoly):
            return self.combine(operator.mul, other)
        return TPoly(None if c is None else c * other for c in self.coeffs)

    def __call__(self, t):
        """Horner evaluation at a concrete value of ``t``."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * t + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, TPoly):
            return NotImplemented
        return len(self) == len(other) and all(_is_zero(a - b) if a is not None and b is not None else
                                               _is_zero(a) and _is_zero(b)
                                               for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def __repr__(self):
        return f"TPoly({list(self.coeffs)!r})"


def tpoly_multi(f: Callable, *polys: TPoly) -> TPoly:
    """Multilinear Cauchy product: ``f`` receives one coefficient per factor."""
    if any(not p for p in polys):
        return TPoly()
    out: dict[int, object] = {}

    def rec(i, deg, picked):
        if i == len(polys):
            out[deg] = _add(out.get(deg), f(*picked))
            return
        for k, c in enumerate(polys[i].coeffs):
            if not _is_zero(c):
                rec(i + 1, deg + k, picked + (c,))

    rec(0, 0, ())
    top = max(out) if out else -1
    return TPoly(out.get(k) for k in range(top + 1))
