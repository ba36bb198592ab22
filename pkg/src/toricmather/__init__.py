"""Exact characteristic-class invariants of projective toric varieties.

Given a configuration of lattice points, this package computes the face
lattice of its convex hull, normalized lattice volumes, Chern-Schwartz-
MacPherson and Chern-Mather cycles (with local Euler obstructions supplied
as validated data), polar degrees, and the degree of the dual variety.  All
arithmetic is exact.
"""

__version__ = "0.1.0"

from .configuration import (
    InputDocument,
    PointConfiguration,
    ValidatedConfiguration,
    normalize_dimension,
    parse_input,
    read_input_file,
    validate,
)
from .cycles import (
    ConstructibleFunction,
    CycleVector,
    ObstructionMatrix,
    canonical_face_order,
    csm_cycle,
    degree_sequence,
    euler_characteristic,
    indicator_coefficients,
    mather_cycle,
    mather_cycle_recursive,
    obstruction_matrix,
)
from .errors import (
    ConsistencyError,
    DegenerateDimensionError,
    DuplicatePointError,
    EmptyInputError,
    InputError,
    MissingEulerEntryError,
    NonUnitDiagonalError,
    ToricMatherError,
    UnknownFaceIdError,
    WrongDimensionError,
)
from .euler import (
    CoherenceViolation,
    EulerData,
    EulerSpec,
    SmoothnessAssumptionWarning,
    check_coherence,
    euler_assume_smooth,
    euler_curve_strategy,
    euler_from_input,
    parse_euler_block,
    resolve_euler,
    restrict_to_closure,
)
from .lattice import (
    AffineLatticeBasis,
    affine_lattice_basis,
    determinant,
    hermite_normal_form,
    smith_normal_form,
)
from .polar import (
    DualDegree,
    degree_transform_matrix,
    dual_variety_degree,
    mather_degrees,
    mather_from_polar_degrees,
    polar_degrees,
    polar_from_mather_degrees,
)
from .polytope import (
    Face,
    FacePoset,
    QuotientConfiguration,
    build_face_poset,
    curve_multiplicity,
    is_pyramid,
    is_smooth_along,
    normalized_volume,
    quotient_configuration,
    sub_configuration,
)

__all__ = [
    "__version__",
    "AffineLatticeBasis",
    "CoherenceViolation",
    "ConsistencyError",
    "ConstructibleFunction",
    "CycleVector",
    "DegenerateDimensionError",
    "DualDegree",
    "DuplicatePointError",
    "EmptyInputError",
    "EulerData",
    "EulerSpec",
    "Face",
    "FacePoset",
    "InputDocument",
    "InputError",
    "MissingEulerEntryError",
    "NonUnitDiagonalError",
    "ObstructionMatrix",
    "PointConfiguration",
    "QuotientConfiguration",
    "SmoothnessAssumptionWarning",
    "ToricMatherError",
    "UnknownFaceIdError",
    "ValidatedConfiguration",
    "WrongDimensionError",
    "affine_lattice_basis",
    "build_face_poset",
    "canonical_face_order",
    "check_coherence",
    "csm_cycle",
    "curve_multiplicity",
    "degree_sequence",
    "degree_transform_matrix",
    "determinant",
    "dual_variety_degree",
    "euler_assume_smooth",
    "euler_characteristic",
    "euler_curve_strategy",
    "euler_from_input",
    "hermite_normal_form",
    "indicator_coefficients",
    "is_pyramid",
    "is_smooth_along",
    "mather_cycle",
    "mather_cycle_recursive",
    "mather_degrees",
    "mather_from_polar_degrees",
    "normalize_dimension",
    "normalized_volume",
    "obstruction_matrix",
    "parse_euler_block",
    "parse_input",
    "polar_degrees",
    "polar_from_mather_degrees",
    "quotient_configuration",
    "read_input_file",
    "resolve_euler",
    "restrict_to_closure",
    "smith_normal_form",
    "sub_configuration",
    "validate",
]
