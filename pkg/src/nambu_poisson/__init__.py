"""Exact structure-constant toolkit for ternary Nambu-Poisson algebras."""

from .algebra import (
    NambuPoissonAlgebra, PoissonAlgebra, ViolationReport, check_comm_assoc, check_fundamental_identity,
    check_leibniz, check_nambu_poisson, check_poisson, fix_coordinate,
)
from .cohomology import (
    CocyclePair, CohomologyDims, check_np_2cocycle, check_poisson_2cocycle, coboundary, cocycle_space,
    cocycle_space_dims, restrict_cocycle_x0, twisted_semidirect,
)
from .deformations import (
    LinearDeformation12, check_deformation_direct, check_deformation_theorem, check_equivalence,
    extract_trivial_witness_data,
)
from .errors import (
    AxiomViolation, DimensionMismatch, FieldMismatch, HypothesisFailed, IndexOutOfRange, NambuPoissonError,
    NotInvertible, ParseError, SymmetryViolation,
)
from .field import GF, QQ
from .fixtures import all_fixtures, b4, builtin, trunc3, zero_algebra
from .io import AlgebraFile, emit, emit_objects, parse
from .ns import (
    NSNambuPoissonAlgebra, check_ns_np, ns_from_nijenhuis, ns_from_reynolds, ns_from_twisted_o,
    ns_induced_rep_cocycle, subadjacent_np, transfer_ns_via_invertible,
)
from .operators import (
    TwistedOCandidate, check_homomorphism, check_nijenhuis, check_reynolds, check_twisted_o, deform_by_nijenhuis,
    graph_subalgebra_check, induced_np_on_V, minus_cocycle, nijenhuis_power_check, twisted_o_restrict_poisson,
)
from .representations import NPRepresentation, adjoint_rep, check_np_rep, restrict_rep_x0, semidirect_np
from .search import SearchResult, SearchSpec, lift_to_rationals, search
from .tensors import BilinearMap, LinearMap, Symmetry, TrilinearMap

__all__ = [
    "NambuPoissonAlgebra", "PoissonAlgebra", "ViolationReport", "check_comm_assoc", "check_fundamental_identity",
    "check_leibniz", "check_nambu_poisson", "check_poisson", "fix_coordinate", "CocyclePair", "CohomologyDims",
    "check_np_2cocycle", "check_poisson_2cocycle", "coboundary", "cocycle_space", "cocycle_space_dims",
    "restrict_cocycle_x0", "twisted_semidirect", "LinearDeformation12", "check_deformation_direct",
    "check_deformation_theorem", "check_equivalence", "extract_trivial_witness_data", "AxiomViolation",
    "DimensionMismatch", "FieldMismatch", "HypothesisFailed", "IndexOutOfRange", "NambuPoissonError",
    "NotInvertible", "ParseError", "SymmetryViolation", "GF", "QQ", "all_fixtures", "b4", "builtin", "trunc3",
    "zero_algebra", "AlgebraFile", "emit", "emit_objects", "parse", "NSNambuPoissonAlgebra", "check_ns_np",
    "ns_from_nijenhuis", "ns_from_reynolds", "ns_from_twisted_o", "ns_induced_rep_cocycle", "subadjacent_np",
    "transfer_ns_via_invertible", "TwistedOCandidate", "check_homomorphism", "check_nijenhuis", "check_reynolds",
    "check_twisted_o", "deform_by_nijenhuis", "graph_subalgebra_check", "induced_np_on_V", "minus_cocycle",
    "nijenhuis_power_check", "twisted_o_restrict_poisson", "NPRepresentation", "adjoint_rep", "check_np_rep",
    "restrict_rep_x0", "semidirect_np", "SearchResult", "SearchSpec", "lift_to_rationals", "search", "BilinearMap",
    "LinearMap", "Symmetry", "TrilinearMap",
]

__version__ = "0.1.0"
