"""hamloc: exact cobordism invariants of Hamiltonian circle/torus actions.

Everything is computed from isolated fixed-point data alone, in exact
rational arithmetic: Duistermaat-Heckman measures, reduced volumes,
Jeffrey-Kirwan pairings, symplectic cuts, and equivariant Riemann-Roch
characters.
"""

from .algebra import (
    LaurentPolynomial,
    PiecewisePolynomialMeasure,
    Polynomial,
    Rational,
    RationalFunction,
    as_rational,
    format_rational,
    laurent_div_exact,
    measure_add,
    measure_eval_density,
    measure_integrate,
    measure_truncate,
    poly_derivative,
)
from .errors import (
    ConsistencyError,
    InexactDivisionError,
    NonGenericDirectionError,
    NonRegularError,
    NotQuasiFreeError,
    SpaceFormatError,
)
from .spaces import (
    ConsistencyReport,
    FixedPointDatum,
    HamiltonianSpaceData,
    LinearModel,
    QuasiFreeCensus,
    build_projective,
    build_projective_torus,
    disjoint_union,
    find_generic_direction,
    linearize,
    product,
    restrict_to_circle,
    reverse,
    space_from_json_dict,
    space_to_json_dict,
    quasi_free_census,
    validate_consistency,
)
from .dh import cut_measure, dh_jump, dh_measure, linear_model_measure, total_volume
from .reduction import (
    ChamberDecomposition,
    ToricReductionData,
    chamber_decomposition,
    jk_pairing,
    linear_reduced_volume,
    reduced_volume,
    toric_reduction_data,
)
from .quantization import (
    EquivariantCharacter,
    PrequantSpace,
    RRReport,
    character,
    cut_character,
    multiplicity,
    partition_count,
    verify_rr_identity,
)

__version__ = "0.1.0"

__all__ = [
    "Rational",
    "Polynomial",
    "PiecewisePolynomialMeasure",
    "LaurentPolynomial",
    "RationalFunction",
    "as_rational",
    "format_rational",
    "laurent_div_exact",
    "measure_add",
    "measure_eval_density",
    "measure_integrate",
    "measure_truncate",
    "poly_derivative",
    "FixedPointDatum",
    "HamiltonianSpaceData",
    "LinearModel",
    "ConsistencyReport",
    "QuasiFreeCensus",
    "build_projective",
    "build_projective_torus",
    "disjoint_union",
    "find_generic_direction",
    "linearize",
    "product",
    "restrict_to_circle",
    "reverse",
    "space_from_json_dict",
    "space_to_json_dict",
    "quasi_free_census",
    "validate_consistency",
    "cut_measure",
    "dh_jump",
    "dh_measure",
    "linear_model_measure",
    "total_volume",
    "ChamberDecomposition",
    "ToricReductionData",
    "chamber_decomposition",
    "jk_pairing",
    "linear_reduced_volume",
    "reduced_volume",
    "toric_reduction_data",
    "EquivariantCharacter",
    "PrequantSpace",
    "RRReport",
    "character",
    "cut_character",
    "multiplicity",
    "partition_count",
    "verify_rr_identity",
    "ConsistencyError",
    "InexactDivisionError",
    "NonGenericDirectionError",
    "NonRegularError",
    "NotQuasiFreeError",
    "SpaceFormatError",
]
