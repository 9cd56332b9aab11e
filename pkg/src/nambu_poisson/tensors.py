"""Structure-constant tensors with declared symmetry classes.

Conventions (0-based indices everywhere inside the library):

* ``BilinearMap.constants[i, j, k]`` is the ``e_k`` coordinate of ``f(e_i, e_j)``.
* ``TrilinearMap.constants[i, j, k, l]`` is the ``e_l`` coordinate of ``f(e_i, e_j, e_k)``.
* ``LinearMap.matrix[out, in]``, so ``f(e_j) = sum_i matrix[i, j] e_i``.

Arrays are canonical field elements in numpy object arrays and are frozen
(read-only) once wrapped.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DimensionMismatch, SymmetryViolation
from .field import Field, PrimeField
from . import linalg


class Symmetry(str, Enum):
    NONE = "none"
    SYMMETRIC = "symmetric"
    SKEW = "skew"  # alternating binary map
    FULLY_SKEW = "fully-skew"
    SKEW_FIRST_TWO = "skew-first-two"


BILINEAR_CLASSES = (Symmetry.NONE, Symmetry.SYMMETRIC, Symmetry.SKEW)
TRILINEAR_CLASSES = (Symmetry.NONE, Symmetry.FULLY_SKEW, Symmetry.SKEW_FIRST_TWO)


def freeze(field: Field, arr) -> np.ndarray:
    out = np.array(arr, dtype=object)
    if out.size:
        out = field.reduce(out)
    out.flags.writeable = False
    return out


def neg(field: Field, arr) -> np.ndarray:
    arr = np.asarray(arr, dtype=object)
    return field.reduce(-arr) if arr.size else arr


def _alternating_bad(arr, axes) -> bool:
    """True if any entry with a repeated index among ``axes`` is nonzero."""
    for a, b in itertools.combinations(axes, 2):
        if np.any(np.diagonal(arr, axis1=a, axis2=b) != 0):
            return True
    return False


def symmetry_defect(field: Field, arr: np.ndarray, symmetry: Symmetry):
    """Human-readable reason ``arr`` is not in ``symmetry``, or None."""
    symmetry = Symmetry(symmetry)
    if symmetry == Symmetry.NONE:
        return None
    if symmetry == Symmetry.SYMMETRIC:
        if np.any(arr != arr.transpose(1, 0, 2)):
            return "tensor is not symmetric in its two inputs"
        return None
    minus = neg(field, arr)
    if symmetry == Symmetry.SKEW:
        if np.any(arr != minus.transpose(1, 0, 2)) or _alternating_bad(arr, (0, 1)):
            return "tensor is not alternating in its two inputs"
        return None
    if symmetry == Symmetry.SKEW_FIRST_TWO:
        if np.any(arr != minus.transpose(1, 0, 2, 3)) or _alternating_bad(arr, (0, 1)):
            return "tensor is not alternating in its first two inputs"
        return None
    if symmetry == Symmetry.FULLY_SKEW:
        if (np.any(arr != minus.transpose(1, 0, 2, 3)) or np.any(arr != minus.transpose(0, 2, 1, 3))
                or _alternating_bad(arr, (0, 1, 2))):
            return "tensor is not fully skew in its three inputs"
        return None
    raise ValueError(symmetry)


@dataclass(frozen=True, eq=False)
class BilinearMap:
    field: Field
    constants: np.ndarray
    symmetry: Symmetry = Symmetry.NONE

    def __post_init__(self):
        c = freeze(self.field, self.constants)
        if c.ndim != 3 or c.shape[0] != c.shape[1]:
            raise DimensionMismatch(f"bilinear constants need shape (n, n, m), got {c.shape}")
        sym = Symmetry(self.symmetry)
        if sym not in BILINEAR_CLASSES:
            raise SymmetryViolation(f"{sym.value} is not a bilinear symmetry class")
        bad = symmetry_defect(self.field, c, sym)
        if bad:
            raise SymmetryViolation(bad)
        object.__setattr__(self, "constants", c)
        object.__setattr__(self, "symmetry", sym)

    @property
    def dim_in(self) -> int:
        return self.constants.shape[0]

    @property
    def dim_out(self) -> int:
        return self.constants.shape[2]

    def __call__(self, x, y):
        return apply_bilinear(self, x, y)

    def __eq__(self, other):
        if not isinstance(other, BilinearMap):
            return NotImplemented
        return (self.field == other.field and self.constants.shape == other.constants.shape
                and not np.any(self.constants != other.constants))

    __hash__ = None

    @classmethod
    def zero(cls, field: Field, n: int, m: int | None = None, symmetry=Symmetry.NONE):
        return cls(field, field.zeros((n, n, n if m is None else m)), symmetry)


@dataclass(frozen=True, eq=False)
class TrilinearMap:
    field: Field
    constants: np.ndarray
    symmetry: Symmetry = Symmetry.NONE

    def __post_init__(self):
        c = freeze(self.field, self.constants)
        if c.ndim != 4 or not (c.shape[0] == c.shape[1] == c.shape[2]):
            raise DimensionMismatch(f"trilinear constants need shape (n, n, n, m), got {c.shape}")
        sym = Symmetry(self.symmetry)
        if sym not in TRILINEAR_CLASSES:
            raise SymmetryViolation(f"{sym.value} is not a trilinear symmetry class")
        bad = symmetry_defect(self.field, c, sym)
        if bad:
            raise SymmetryViolation(bad)
        object.__setattr__(self, "constants", c)
        object.__setattr__(self, "symmetry", sym)

    @property
    def dim_in(self) -> int:
        return self.constants.shape[0]

    @property
    def dim_out(self) -> int:
        return self.constants.shape[3]

    def __call__(self, x, y, z):
        return apply_trilinear(self, x, y, z)

    def __eq__(self, other):
        if not isinstance(other, TrilinearMap):
            return NotImplemented
        return (self.field == other.field and self.constants.shape == other.constants.shape
                and not np.any(self.constants != other.constants))

    __hash__ = None

    @classmethod
    def zero(cls, field: Field, n: int, m: int | None = None, symmetry=Symmetry.NONE):
        return cls(field, field.zeros((n, n, n, n if m is None else m)), symmetry)


@dataclass(frozen=True, eq=False)
class LinearMap:
    """A matrix from an ``dim_in``-dimensional space to a ``dim_out``-dimensional one."""

    field: Field
    matrix: np.ndarray

    def __post_init__(self):
        m = freeze(self.field, self.matrix)
        if m.ndim != 2:
            raise DimensionMismatch(f"linear map needs a 2-d matrix, got shape {m.shape}")
        object.__setattr__(self, "matrix", m)

    @property
    def dim_in(self) -> int:
        return self.matrix.shape[1]

    @property
    def dim_out(self) -> int:
        return self.matrix.shape[0]

    @property
    def is_square(self) -> bool:
        return self.dim_in == self.dim_out

    def __call__(self, x):
        x = np.asarray(x, dtype=object)
        if x.shape != (self.dim_in,):
            raise DimensionMismatch(f"vector of length {x.shape} for a map with {self.dim_in} inputs")
        return self.field.reduce(self.matrix.dot(x))

    def compose(self, other: "LinearMap") -> "LinearMap":
        """``self`` after ``other``."""
        self.field.check_same(other.field)
        return LinearMap(self.field, linalg.matmul(self.field, self.matrix, other.matrix))

    def power(self, k: int) -> "LinearMap":
        if not self.is_square:
            raise DimensionMismatch("powers need a square map")
        out = LinearMap.identity(self.field, self.dim_in)
        for _ in range(k):
            out = out.compose(self)
        return out

    def inverse(self) -> "LinearMap":
        return LinearMap(self.field, linalg.invert(self.field, self.matrix))

    def scaled(self, lam) -> "LinearMap":
        lam = self.field.convert(lam)
        return LinearMap(self.field, self.matrix * lam)

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return (self.field == other.field and self.matrix.shape == other.matrix.shape
                and not np.any(self.matrix != other.matrix))

    __hash__ = None

    @classmethod
    def identity(cls, field: Field, n: int) -> "LinearMap":
        return cls(field, field.identity(n))

    @classmethod
    def zero(cls, field: Field, rows: int, cols: int | None = None) -> "LinearMap":
        return cls(field, field.zeros((rows, rows if cols is None else cols)))

    @classmethod
    def diagonal(cls, field: Field, values) -> "LinearMap":
        values = list(values)
        m = field.zeros((len(values), len(values)))
        for i, v in enumerate(values):
            m[i, i] = field.convert(v)
        return cls(field, m)


def _vec(field: Field, x, n: int) -> np.ndarray:
    x = np.asarray(x, dtype=object)
    if x.shape != (n,):
        raise DimensionMismatch(f"expected a vector of length {n}, got shape {x.shape}")
    return x


def apply_bilinear(b: BilinearMap, x, y) -> np.ndarray:
    n = b.dim_in
    x, y = _vec(b.field, x, n), _vec(b.field, y, n)
    return b.field.reduce(np.einsum("i,j,ijk->k", x, y, b.constants))


def apply_trilinear(t: TrilinearMap, x, y, z) -> np.ndarray:
    n = t.dim_in
    x, y, z = (_vec(t.field, v, n) for v in (x, y, z))
    return t.field.reduce(np.einsum("i,j,k,ijkl->l", x, y, z, t.constants))


def basis_vector(field: Field, n: int, i: int) -> np.ndarray:
    v = field.zeros(n)
    v[i] = field.convert(1)
    return v


def is_canonical(slot: tuple, symmetry: Symmetry) -> bool:
    """Whether an input slot is the representative listed in files."""
    symmetry = Symmetry(symmetry)
    if symmetry == Symmetry.NONE:
        return True
    if symmetry == Symmetry.SYMMETRIC:
        return slot[0] <= slot[1]
    if symmetry in (Symmetry.SKEW, Symmetry.SKEW_FIRST_TWO):
        return slot[0] < slot[1]
    if symmetry == Symmetry.FULLY_SKEW:
        return slot[0] < slot[1] < slot[2]
    raise ValueError(symmetry)


def _orbit(slot: tuple, symmetry: Symmetry):
    """(image slot, sign) pairs generated from a canonical slot."""
    if symmetry == Symmetry.NONE:
        return [(slot, 1)]
    if symmetry == Symmetry.SYMMETRIC:
        i, j = slot
        return [((i, j), 1), ((j, i), 1)]
    if symmetry == Symmetry.SKEW:
        i, j = slot
        return [((i, j), 1), ((j, i), -1)]
    if symmetry == Symmetry.SKEW_FIRST_TWO:
        i, j, k = slot
        return [((i, j, k), 1), ((j, i, k), -1)]
    if symmetry == Symmetry.FULLY_SKEW:
        out = []
        for perm in itertools.permutations(range(3)):
            inv = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
            out.append((tuple(slot[p] for p in perm), -1 if inv % 2 else 1))
        return out
    raise ValueError(symmetry)


def arity(symmetry: Symmetry) -> int | None:
    symmetry = Symmetry(symmetry)
    if symmetry in (Symmetry.SYMMETRIC, Symmetry.SKEW):
        return 2
    if symmetry in (Symmetry.FULLY_SKEW, Symmetry.SKEW_FIRST_TWO):
        return 3
    return None


def symmetrize(field: Field, entries, symmetry, n: int, m: int | None = None, arity_: int | None = None):
    """Build a full tensor from canonical sparse entries.

    ``entries`` is an iterable of ``(*slot, out, value)`` tuples with 0-based
    indices.  Returns a :class:`BilinearMap` or :class:`TrilinearMap`.
    """
    symmetry = Symmetry(symmetry)
    k = arity(symmetry) or arity_
    if k not in (2, 3):
        raise ValueError("arity must be given for symmetry 'none'")
    m = n if m is None else m
    arr = field.zeros((n,) * k + (m,))
    seen = {}
    for entry in entries:
        entry = tuple(entry)
        if len(entry) != k + 2:
            raise ValueError(f"entry {entry!r} should have {k} slot indices, an output index and a value")
        slot, out, value = tuple(int(i) for i in entry[:k]), int(entry[k]), field.convert(entry[k + 1])
        if not is_canonical(slot, symmetry):
            raise SymmetryViolation(f"slot {tuple(i + 1 for i in slot)} is not canonical for {symmetry.value}")
        key = slot + (out,)
        if key in seen and seen[key] != value:
            raise SymmetryViolation(f"slot {tuple(i + 1 for i in key)} given twice with different values")
        seen[key] = value
        for image, sign in _orbit(slot, symmetry):
            arr[image + (out,)] = value if sign == 1 else field.convert(-value)
    cls = BilinearMap if k == 2 else TrilinearMap
    return cls(field, arr, symmetry)


def to_entries(tensor, symmetry=None) -> list[tuple]:
    """Canonical nonzero sparse entries of a map, in lexicographic slot order."""
    arr = tensor.constants if hasattr(tensor, "constants") else np.asarray(tensor, dtype=object)
    symmetry = Symmetry(symmetry if symmetry is not None else getattr(tensor, "symmetry", Symmetry.NONE))
    out = []
    for idx in zip(*np.nonzero(arr != 0)):
        idx = tuple(int(i) for i in idx)
        if symmetry == Symmetry.NONE or is_canonical(idx[:-1], symmetry):
            out.append(idx + (arr[idx],))
    out.sort(key=lambda e: e[:-1])
    return out


def random_entries_array(field: Field, shape, rng: np.random.Generator, bound: int) -> np.ndarray:
    vals = rng.integers(-bound, bound + 1, size=shape)
    return field.array(vals.tolist()) if vals.size else field.zeros(shape)


def random_map(field: Field, n: int, symmetry=Symmetry.NONE, seed=0, bound: int = 2, m: int | None = None,
               arity_: int | None = None):
    """Seeded random map in the requested symmetry class with entries in [-bound, bound].

    For ``Symmetry.NONE`` pass ``arity_`` (2 or 3); ``arity_ = 1`` gives a
    random :class:`LinearMap` with an ``m x n`` matrix.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    symmetry = Symmetry(symmetry)
    m = n if m is None else m
    k = arity(symmetry) or arity_
    if k == 1:
        return LinearMap(field, random_entries_array(field, (m, n), rng, bound))
    slots = [s for s in itertools.product(range(n), repeat=k) if is_canonical(s, symmetry)]
    vals = rng.integers(-bound, bound + 1, size=(len(slots), m))
    entries = [s + (o, int(vals[i, o])) for i, s in enumerate(slots) for o in range(m) if vals[i, o]]
    return symmetrize(field, entries, symmetry, n, m, arity_=k)


def canonical_slots(n: int, symmetry, k: int | None = None) -> list[tuple]:
    symmetry = Symmetry(symmetry)
    k = arity(symmetry) or k
    return [s for s in itertools.product(range(n), repeat=k) if is_canonical(s, symmetry)]


def field_of(*objs) -> Field:
    """Common field of several tagged containers; raises FieldMismatch otherwise."""
    fields = [o.field for o in objs if o is not None]
    f = fields[0]
    for g in fields[1:]:
        f.check_same(g)
    return f


def characteristic_two(field: Field) -> bool:
    return isinstance(field, PrimeField) and field.p == 2
