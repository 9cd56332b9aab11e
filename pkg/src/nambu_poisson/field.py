"""Exact ground fields: the rationals and small prime fields.

Tensors store raw field elements in numpy object arrays (``gmpy2.mpq`` for
the rationals, Python ``int`` in ``range(p)`` for GF(p)); the field tag lives
on the container.  :class:`Scalar` is the tagged element type for code that
works with single values.
"""

from __future__ import annotations

import math
from functools import lru_cache

import gmpy2
import numpy as np
from gmpy2 import mpq

from .errors import FieldMismatch

MAX_PRIME = 2**16


class Field:
    """Common interface of :data:`QQ` and :class:`PrimeField`."""

    name: str
    characteristic: int

    def __call__(self, value) -> "Scalar":
        return Scalar(self, self.convert(value))

    def convert(self, value):
        raise NotImplementedError

    def inverse(self, x):
        raise NotImplementedError

    def array(self, data) -> np.ndarray:
        """Object array of canonical elements built from nested numbers."""
        arr = np.array(data, dtype=object)
        if arr.size == 0:
            return arr
        return np.frompyfunc(self.convert, 1, 1)(arr).astype(object)

    def zeros(self, shape) -> np.ndarray:
        return self.array(np.zeros(shape, dtype=np.int64))

    def identity(self, n: int) -> np.ndarray:
        return self.array(np.eye(n, dtype=np.int64))

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        """Bring an object array produced by raw arithmetic back to canonical form."""
        raise NotImplementedError

    def is_zero_array(self, arr: np.ndarray) -> bool:
        return not np.any(self.reduce(np.asarray(arr, dtype=object)) != 0)

    def format(self, x) -> str:
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def lift(self, x) -> int:
        """Integer representative used by random generation and serialization."""
        raise NotImplementedError

    def check_same(self, other: "Field") -> None:
        if self != other:
            raise FieldMismatch(f"cannot combine {self.name} with {other.name}")


class Rationals(Field):
    name = "rational"
    characteristic = 0

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def convert(self, value):
        if isinstance(value, Scalar):
            self.check_same(value.field)
            return value.value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, float):
            raise TypeError("floating point values are not exact")
        return mpq(value)

    def inverse(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / mpq(x)

    def reduce(self, arr):
        arr = np.asarray(arr, dtype=object)
        if arr.size == 0:
            return arr
        return np.frompyfunc(mpq, 1, 1)(arr).astype(object)

    def format(self, x) -> str:
        x = mpq(x)
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"

    def parse(self, text: str):
        text = text.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            if int(den) == 0:
                raise ValueError(f"zero denominator in {text!r}")
            return mpq(int(num), int(den))
        return mpq(int(text))

    def lift(self, x) -> int:
        x = mpq(x)
        if x.denominator != 1:
            raise ValueError(f"{x} is not an integer")
        return int(x.numerator)


QQ = Rationals()


class PrimeField(Field):
    characteristic: int

    def __init__(self, p: int):
        if not 2 <= p < MAX_PRIME or not gmpy2.is_prime(p):
            raise ValueError(f"GF(p) needs a prime p < {MAX_PRIME}, got {p}")
        self.p = p
        self.characteristic = p
        self.name = f"gf {p}"

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def convert(self, value):
        if isinstance(value, Scalar):
            self.check_same(value.field)
            return value.value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, (int, np.integer)):
            return int(value) % self.p
        q = mpq(value)
        return int(q.numerator) * pow(int(q.denominator), -1, self.p) % self.p

    def inverse(self, x):
        x = int(x) % self.p
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p)

    def reduce(self, arr):
        arr = np.asarray(arr, dtype=object)
        if arr.size == 0:
            return arr
        return np.frompyfunc(self.convert, 1, 1)(arr).astype(object)

    def format(self, x) -> str:
        return str(int(x) % self.p)

    def parse(self, text: str):
        text = text.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            return int(num) * pow(int(den), -1, self.p) % self.p
        return int(text) % self.p

    def lift(self, x) -> int:
        return int(x) % self.p


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_spec(spec: str) -> Field:
    """``"rational"`` or ``"gf <p>"`` (also ``gf:<p>``, ``GF(p)``)."""
    s = spec.strip().lower().replace(":", " ").replace("(", " ").replace(")", " ")
    if s in ("rational", "q", "qq", "rationals"):
        return QQ
    parts = s.split()
    if len(parts) == 2 and parts[0] == "gf":
        return GF(int(parts[1]))
    raise ValueError(f"unknown field {spec!r}")


class Scalar:
    """A field element carrying its field tag."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        self.field = field
        self.value = value

    def _coerce(self, other):
        if isinstance(other, Scalar):
            self.field.check_same(other.field)
            return other.value
        if isinstance(other, float):
            raise TypeError("floating point values are not exact")
        return self.field.convert(other)

    def _wrap(self, raw):
        return Scalar(self.field, self.field.convert(raw))

    def __add__(self, other):
        return self._wrap(self.value + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self.value - self._coerce(other))

    def __rsub__(self, other):
        return self._wrap(self._coerce(other) - self.value)

    def __mul__(self, other):
        return self._wrap(self.value * self._coerce(other))

    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(-self.value)

    def inverse(self) -> "Scalar":
        return Scalar(self.field, self.field.inverse(self.value))

    def __truediv__(self, other):
        return self * Scalar(self.field, self._coerce(other)).inverse()

    def __rtruediv__(self, other):
        return Scalar(self.field, self._coerce(other)) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, Scalar) and other.field != self.field:
            return False
        try:
            return self.value == self._coerce(other)
        except (TypeError, FieldMismatch):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.field!r}({self.field.format(self.value)})"


def common_denominator(arr: np.ndarray) -> int:
    """Least common multiple of the denominators of a rational object array."""
    den = 1
    for x in np.asarray(arr, dtype=object).flat:
        d = int(mpq(x).denominator)
        if d != 1:
            den = math.lcm(den, d)
    return den
