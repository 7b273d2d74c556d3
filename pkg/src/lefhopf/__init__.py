"""Lefschetz numbers, Euler characteristics, degrees and fixed point indices
of selfmaps of finite simplicial complexes, over exact rationals."""

from .exactla import Matrix, det, rank, rref_decompose, solve_modulo
from .fixindex import (
    DegenerateFixedPoint,
    GeneralPositionError,
    HypothesisViolation,
    NonIsolatedFixedPoints,
    enumerate_fixed_points,
    local_index,
    total_index,
    verify_normalization,
)
from .homology import (
    boundary_matrices,
    chain_map,
    induced_on_homology,
    selfmap_chain,
    subdivision_equivalence,
)
from .lefschetz import (
    AxiomReport,
    degree,
    euler,
    relative_lefschetz,
    verify_identity,
    wedge_degrees,
)
from .scomplex import (
    CarrierComplex,
    Complex,
    GeoSelfMap,
    SimplicialMap,
    WedgeStructure,
    barycentric_subdivide,
    build_complex,
    generate,
    suspend,
    suspend_map,
    validate_simplicial_map,
    wedge_sum,
)

# lefschetz() and homology() are not re-exported: the names belong to the submodules.

__all__ = [
    "Matrix",
    "det",
    "rank",
    "rref_decompose",
    "solve_modulo",
    "DegenerateFixedPoint",
    "GeneralPositionError",
    "HypothesisViolation",
    "NonIsolatedFixedPoints",
    "enumerate_fixed_points",
    "local_index",
    "total_index",
    "verify_normalization",
    "boundary_matrices",
    "chain_map",
    "induced_on_homology",
    "selfmap_chain",
    "subdivision_equivalence",
    "AxiomReport",
    "degree",
    "euler",
    "relative_lefschetz",
    "verify_identity",
    "wedge_degrees",
    "CarrierComplex",
    "Complex",
    "GeoSelfMap",
    "SimplicialMap",
    "WedgeStructure",
    "barycentric_subdivide",
    "build_complex",
    "generate",
    "suspend",
    "suspend_map",
    "validate_simplicial_map",
    "wedge_sum",
]

__version__ = "0.1.0"
