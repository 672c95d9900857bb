"""Characteristic classes of projective schemes from homogeneous ideals.

The pipeline: parse an ideal, count projective degrees over a finite field,
assemble Segre and inclusion-exclusion Segre classes, and cap with the
tangent class for CSM, Fulton and Milnor classes plus the Euler
characteristic.
"""

from .characteristic import (
    ClassReport,
    compute_report,
    csm,
    euler,
    fulton,
    milnor,
    milnor_measure,
)
from .chow import (
    ChowClass,
    chern_tangent,
    ci_segre_oracle,
    dual,
    integral,
    pushforward_linear_embedding,
    tensor_by,
    truncated_inverse,
    truncated_mul,
)
from .errors import (
    BudgetExceededError,
    CharclassError,
    GenericityError,
    InputError,
    NotZeroDimensionalError,
    ParseError,
)
from .groebner import (
    GroebnerBasis,
    MonomialOrder,
    groebner_basis,
    intersect_ideals,
    normal_form,
    quotient_dimension_count,
)
from .ideals import (
    IdealPresentation,
    graded_piece,
    ideal_sum,
    parse_ideal_file,
    parse_ideal_text,
    partial_derivatives,
    principal_ideal,
    product_ideal,
)
from .poly import Monomial, Polynomial, PolyRing
from .segre import (
    GenericityContext,
    ProjectiveDegrees,
    projective_degrees,
    segre_class,
)
from .sm_segre import (
    HypersurfaceDatum,
    singularity_subscheme,
    sm_segre,
    sm_segre_hypersurface,
    sm_segre_inclusion_exclusion,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CharclassError",
    "ChowClass",
    "ClassReport",
    "GenericityContext",
    "GenericityError",
    "GroebnerBasis",
    "HypersurfaceDatum",
    "IdealPresentation",
    "InputError",
    "Monomial",
    "MonomialOrder",
    "NotZeroDimensionalError",
    "ParseError",
    "Polynomial",
    "PolyRing",
    "ProjectiveDegrees",
    "chern_tangent",
    "ci_segre_oracle",
    "compute_report",
    "csm",
    "dual",
    "euler",
    "fulton",
    "graded_piece",
    "groebner_basis",
    "ideal_sum",
    "integral",
    "intersect_ideals",
    "milnor",
    "milnor_measure",
    "normal_form",
    "parse_ideal_file",
    "parse_ideal_text",
    "partial_derivatives",
    "principal_ideal",
    "product_ideal",
    "projective_degrees",
    "pushforward_linear_embedding",
    "quotient_dimension_count",
    "segre_class",
    "singularity_subscheme",
    "sm_segre",
    "sm_segre_hypersurface",
    "sm_segre_inclusion_exclusion",
    "tensor_by",
    "truncated_inverse",
    "truncated_mul",
]
