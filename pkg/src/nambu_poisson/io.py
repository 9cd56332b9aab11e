"""Text format for algebras, representations, cocycles, operators and NS data.

Example::

    nambu-poisson v1
    field rational
    dim 4
    [product]
    [bracket]
    1 2 3 4 1

Header lines: the version line, ``field rational`` or ``field gf <p>``,
``dim <n>`` and optionally ``module-dim <m>`` (defaults to ``n``).  Each
section lists sparse entries ``<indices...> <value>`` with 1-based indices;
only canonical slots may appear (``i <= j`` for symmetric inputs, strictly
increasing for skew ones).  ``#`` starts a comment.

Values are integers or ``p/q`` over the rationals, integers over GF(p).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field as dc_field
from pathlib import Path

import numpy as np

from .algebra import NambuPoissonAlgebra, PoissonAlgebra
from .cohomology import CocyclePair
from .deformations import LinearDeformation12
from .errors import IndexOutOfRange, ParseError, SymmetryViolation
from .field import Field, PrimeField, field_from_spec
from .ns import NSNambuPoissonAlgebra
from .representations import NPRepresentation
from .tensors import BilinearMap, LinearMap, Symmetry, _orbit, is_canonical

VERSION_LINE = "nambu-poisson v1"

# name -> (axes as "n"/"m" letters, symmetry of the leading input slots, number of slot axes)
SECTIONS = {
    "product": ("nnn", Symmetry.SYMMETRIC, 2),
    "bracket": ("nnnn", Symmetry.FULLY_SKEW, 3),
    "lie": ("nnn", Symmetry.SKEW, 2),
    "mu": ("nmm", Symmetry.NONE, 3),
    "rho": ("nnmm", Symmetry.SKEW, 2),
    "phi": ("nnm", Symmetry.SYMMETRIC, 2),
    "psi": ("nnnm", Symmetry.FULLY_SKEW, 3),
    "operator": ("nm", Symmetry.NONE, 2),
    "diamond": ("nnn", Symmetry.NONE, 3),
    "star": ("nnn", Symmetry.SYMMETRIC, 2),
    "sq": ("nnnn", Symmetry.SKEW_FIRST_TWO, 3),
    "dsq": ("nnnn", Symmetry.FULLY_SKEW, 3),
    "phi1": ("nnn", Symmetry.SYMMETRIC, 2),
    "psi1": ("nnnn", Symmetry.FULLY_SKEW, 3),
    "psi2": ("nnnn", Symmetry.FULLY_SKEW, 3),
}
ORDER = tuple(SECTIONS)

GROUPS = {
    "algebra": ("product", "bracket"),
    "rep": ("mu", "rho"),
    "pair": ("phi", "psi"),
    "ns": ("diamond", "star", "sq", "dsq"),
    "deformation": ("phi1", "psi1", "psi2"),
}


def _shape(name: str, n: int, m: int) -> tuple:
    return tuple(n if c == "n" else m for c in SECTIONS[name][0])


def _slot_canonical(slot: tuple, symmetry: Symmetry) -> bool:
    if symmetry == Symmetry.SKEW_FIRST_TWO:
        return slot[0] < slot[1]
    if symmetry == Symmetry.NONE:
        return True
    return is_canonical(slot, symmetry)


def _fill(field: Field, name: str, arr: np.ndarray, idx: tuple, value) -> None:
    _, sym, k = SECTIONS[name]
    slot, rest = idx[:k], idx[k:]
    if sym == Symmetry.NONE:
        arr[idx] = value
        return
    base = slot[:2] if sym in (Symmetry.SKEW, Symmetry.SKEW_FIRST_TWO) else slot
    tail = slot[len(base):] + rest
    orbit_sym = Symmetry.SKEW if sym == Symmetry.SKEW_FIRST_TWO else sym
    for image, sign in _orbit(base, orbit_sym):
        arr[image + tail] = value if sign == 1 else field.convert(-value)


@dataclass(eq=False)
class AlgebraFile:
    """Parsed file: header data plus full (symmetrized) section arrays."""

    field: Field
    dim: int
    module_dim: int | None = None
    sections: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        for name in self.sections:
            if name not in SECTIONS:
                raise ValueError(f"unknown section {name!r}")
        # building the objects validates the declared symmetry classes
        for attr in ("algebra", "poisson", "rep", "pair", "operator", "ns", "deformation"):
            getattr(self, attr)

    @property
    def m(self) -> int:
        return self.dim if self.module_dim is None else self.module_dim

    def has(self, *names) -> bool:
        return any(nm in self.sections for nm in names)

    def _arr(self, name):
        if name in self.sections:
            return self.sections[name]
        return self.field.zeros(_shape(name, self.dim, self.m))

    @property
    def algebra(self) -> NambuPoissonAlgebra | None:
        if not self.has(*GROUPS["algebra"]):
            return None
        return NambuPoissonAlgebra.from_arrays(self.field, self._arr("product"), self._arr("bracket"))

    @property
    def poisson(self) -> PoissonAlgebra | None:
        if not self.has("lie"):
            return None
        return PoissonAlgebra(BilinearMap(self.field, self._arr("product"), Symmetry.SYMMETRIC),
                              BilinearMap(self.field, self._arr("lie"), Symmetry.SKEW))

    @property
    def rep(self) -> NPRepresentation | None:
        if not self.has(*GROUPS["rep"]):
            return None
        return NPRepresentation(self.field, self._arr("mu"), self._arr("rho"))

    @property
    def pair(self) -> CocyclePair | None:
        if not self.has(*GROUPS["pair"]):
            return None
        return CocyclePair.from_arrays(self.field, self._arr("phi"), self._arr("psi"))

    @property
    def operator(self) -> LinearMap | None:
        return LinearMap(self.field, self.sections["operator"]) if "operator" in self.sections else None

    @property
    def ns(self) -> NSNambuPoissonAlgebra | None:
        if not self.has(*GROUPS["ns"]):
            return None
        return NSNambuPoissonAlgebra.from_arrays(self.field, *(self._arr(s) for s in GROUPS["ns"]))

    @property
    def deformation(self) -> LinearDeformation12 | None:
        if not self.has(*GROUPS["deformation"]):
            return None
        base = self.algebra or NambuPoissonAlgebra.zero(self.field, self.dim)
        return LinearDeformation12.from_arrays(base, *(self._arr(s) for s in GROUPS["deformation"]))

    def __eq__(self, other):
        if not isinstance(other, AlgebraFile):
            return NotImplemented
        if (self.field, self.dim, self.m) != (other.field, other.dim, other.m):
            return False
        if set(self.sections) != set(other.sections):
            return False
        return all(not np.any(self.sections[k] != other.sections[k]) for k in self.sections)

    __hash__ = None

    @classmethod
    def from_objects(cls, *, algebra=None, poisson=None, rep=None, pair=None, operator=None, ns=None,
                     deformation=None, field: Field | None = None, dim: int | None = None,
                     module_dim: int | None = None) -> "AlgebraFile":
        secs = {}
        if deformation is not None:
            algebra = algebra or deformation.base
            secs["phi1"], secs["psi1"], secs["psi2"] = (deformation.phi1.constants, deformation.psi1.constants,
                                                        deformation.psi2.constants)
        if algebra is not None:
            secs["product"], secs["bracket"] = algebra.P, algebra.B
        if poisson is not None:
            secs["product"], secs["lie"] = poisson.product.constants, poisson.bracket.constants
        if rep is not None:
            secs["mu"], secs["rho"] = rep.mu, rep.rho
        if pair is not None:
            secs["phi"], secs["psi"] = pair.phi.constants, pair.psi.constants
        if ns is not None:
            for s, t in zip(GROUPS["ns"], (ns.diamond, ns.star, ns.sq, ns.dsq)):
                secs[s] = t.constants
        if operator is not None:
            secs["operator"] = operator.matrix if isinstance(operator, LinearMap) else operator
        objs = [o for o in (algebra, poisson, rep, pair, ns, deformation) if o is not None]
        if field is None:
            field = objs[0].field if objs else operator.field
        if dim is None:
            if objs:
                o = objs[0]
                dim = o.dim if hasattr(o, "dim") else o.n
            else:
                dim = secs["operator"].shape[0]
        m = module_dim
        if m is None:
            if rep is not None:
                m = rep.m
            elif pair is not None:
                m = pair.m
            elif operator is not None:
                m = secs["operator"].shape[1]
        if m == dim:
            m = None
        return cls(field, dim, m, {k: secs[k] for k in ORDER if k in secs})


# -- parsing -------------------------------------------------------------------

_TOKEN = re.compile(r"\S+")


def _tokens(line: str):
    return [(mt.group(), mt.start() + 1) for mt in _TOKEN.finditer(line)]


def _int(tok: str, lineno: int, col: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer {what}, got {tok!r}", lineno, col) from None


def _value(field: Field, tok: str, lineno: int, col: int):
    if isinstance(field, PrimeField):
        return field.convert(_int(tok, lineno, col, "value"))
    if not re.fullmatch(r"[+-]?\d+(/\d+)?", tok):
        raise ParseError(f"expected an integer or p/q value, got {tok!r}", lineno, col)
    try:
        return field.parse(tok)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(str(exc), lineno, col) from None


def parse(source, field_override: Field | None = None) -> AlgebraFile:
    """Parse a file path or the text of a file.

    ``field_override`` reads the values in another field than the header's.
    """
    if isinstance(source, Path) or (isinstance(source, str) and "\n" not in source and Path(source).exists()):
        text = Path(source).read_text()
    else:
        text = source
    lines = text.splitlines()
    header: dict = {}
    raw: dict[str, list] = {}
    current = None
    seen_version = False
    for lineno, full in enumerate(lines, 1):
        line = full.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        toks = _tokens(line)
        if not seen_version:
            if line.strip() != VERSION_LINE:
                raise ParseError(f"first line must be {VERSION_LINE!r}", lineno, toks[0][1])
            seen_version = True
            continue
        head, col = toks[0]
        if head.startswith("["):
            mt = re.fullmatch(r"\[([a-z0-9-]+)\]", head)
            if not mt or len(toks) != 1:
                raise ParseError(f"malformed section header {line.strip()!r}", lineno, col)
            name = mt.group(1)
            if name not in SECTIONS:
                raise ParseError(f"unknown section [{name}]", lineno, col)
            if name in raw:
                raise ParseError(f"section [{name}] appears twice", lineno, col)
            raw[name] = []
            current = name
            continue
        if current is None:
            key = head
            if key in header:
                raise ParseError(f"header key {key!r} given twice", lineno, col)
            if key == "field":
                try:
                    header["field"] = field_from_spec(" ".join(t for t, _ in toks[1:]))
                except ValueError as exc:
                    raise ParseError(str(exc), lineno, toks[1][1] if len(toks) > 1 else col) from None
            elif key in ("dim", "module-dim"):
                if len(toks) != 2:
                    raise ParseError(f"{key} takes one integer", lineno, col)
                v = _int(toks[1][0], lineno, toks[1][1], key)
                if v < 1:
                    raise ParseError(f"{key} must be positive", lineno, toks[1][1])
                header[key] = v
            else:
                raise ParseError(f"unknown header key {key!r}", lineno, col)
            continue
        raw[current].append((lineno, toks))
    if not seen_version:
        raise ParseError("empty file", 1, 1)
    for key in ("field", "dim"):
        if key not in header:
            raise ParseError(f"missing header line {key!r}", None)
    field = field_override or header["field"]
    n = header["dim"]
    m = header.get("module-dim")
    mm = n if m is None else m
    sections = {}
    for name in ORDER:
        if name not in raw:
            continue
        shape = _shape(name, n, mm)
        _, sym, k = SECTIONS[name]
        arr = field.zeros(shape)
        seen = {}
        for lineno, toks in raw[name]:
            if len(toks) != len(shape) + 1:
                raise ParseError(f"[{name}] entries need {len(shape)} indices and a value", lineno, toks[0][1])
            idx = []
            for (tok, col), size in zip(toks, shape):
                i = _int(tok, lineno, col, "index")
                if not 1 <= i <= size:
                    raise IndexOutOfRange(f"line {lineno}, column {col}: index {i} outside 1..{size} in [{name}]")
                idx.append(i - 1)
            idx = tuple(idx)
            shown = " ".join(str(i + 1) for i in idx)
            if not _slot_canonical(idx[:k], sym):
                raise SymmetryViolation(
                    f"line {lineno}: slot ({shown}) in [{name}] is not canonical for {sym.value} inputs")
            if idx in seen:
                raise ParseError(f"duplicate slot ({shown}) in [{name}], first given on line {seen[idx]}",
                                 lineno, toks[0][1])
            seen[idx] = lineno
            tok, col = toks[-1]
            _fill(field, name, arr, idx, _value(field, tok, lineno, col))
        sections[name] = arr
    return AlgebraFile(field, n, m if m != n else None, sections)


# -- emitting ------------------------------------------------------------------

def _canonical_entries(name: str, arr: np.ndarray):
    _, sym, k = SECTIONS[name]
    for idx in itertools.product(*(range(s) for s in arr.shape)):
        if arr[idx] != 0 and _slot_canonical(idx[:k], sym):
            yield idx, arr[idx]


def emit(doc: AlgebraFile) -> str:
    f = doc.field
    lines = [VERSION_LINE, "field " + f.name, f"dim {doc.dim}"]
    if doc.m != doc.dim:
        lines.append(f"module-dim {doc.m}")
    for name in ORDER:
        if name not in doc.sections:
            continue
        lines.append(f"[{name}]")
        for idx, v in _canonical_entries(name, doc.sections[name]):
            lines.append(" ".join(str(i + 1) for i in idx) + " " + f.format(v))
    return "\n".join(lines) + "\n"


def emit_objects(**objects) -> str:
    return emit(AlgebraFile.from_objects(**objects))


def load(path, field_override: Field | None = None) -> AlgebraFile:
    return parse(Path(path), field_override)


def dump(doc: AlgebraFile, path) -> None:
    Path(path).write_text(emit(doc))
