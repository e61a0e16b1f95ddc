"""Finite-groupoid models of 2-Segal objects, relative 2-Segal objects and their spans.

Checks the Segal-type conditions on truncated simplicial groupoids, builds the
Waldhausen, relative and hermitian S-constructions of bounded ``F_q`` vector
spaces, and reads off Hall algebras and modules with exact rational arithmetic.
"""

from .fin_groupoid import (
    FinGroupoid,
    GroupoidFunctor,
    HomotopyFixedPoints,
    InvolutionDatum,
    IsoCommaPullback,
    TableGroupoid,
    cardinality,
    homotopy_fixed_points,
    is_equivalence,
    iso_comma_pullback,
)
from .hall import (
    HallVector,
    hall_module_action,
    hall_product,
    isotropic_oracle,
    oracle_counts,
    structure_constants,
    verify_laws,
)
from .hermitian import Duality, build_R, duality_on_S, fixed_point_identification, project_R_to_S, tw_to_product
from .segal_checks import (
    CheckReport,
    is_1_segal,
    is_2_segal,
    is_active_equifibered,
    is_decomposition_space,
    is_relative_2_segal_family,
    is_relative_2_segal_morphism,
    is_relative_segal,
)
from .simplicial_objects import (
    IndexShape,
    InsufficientDepth,
    SimplicialMorphism,
    TruncatedSimplicialGroupoid,
    nerve,
    theta_L_convert,
    theta_L_inverse,
    twisted_arrow,
)
from .spans import SimplicialSpan, compose_spans, is_2_segal_span
from .waldhausen import FqVect, build_S, build_S_rel, closure_predicates, induced_map_S

__version__ = "0.1.0"

__all__ = [
    "CheckReport",
    "Duality",
    "FinGroupoid",
    "FqVect",
    "GroupoidFunctor",
    "HallVector",
    "HomotopyFixedPoints",
    "IndexShape",
    "InsufficientDepth",
    "InvolutionDatum",
    "IsoCommaPullback",
    "SimplicialMorphism",
    "SimplicialSpan",
    "TableGroupoid",
    "TruncatedSimplicialGroupoid",
    "build_R",
    "build_S",
    "build_S_rel",
    "cardinality",
    "closure_predicates",
    "compose_spans",
    "duality_on_S",
    "fixed_point_identification",
    "hall_module_action",
    "hall_product",
    "homotopy_fixed_points",
    "induced_map_S",
    "is_1_segal",
    "is_2_segal",
    "is_2_segal_span",
    "is_active_equifibered",
    "is_decomposition_space",
    "is_equivalence",
    "is_relative_2_segal_family",
    "is_relative_2_segal_morphism",
    "is_relative_segal",
    "iso_comma_pullback",
    "isotropic_oracle",
    "nerve",
    "oracle_counts",
    "project_R_to_S",
    "structure_constants",
    "theta_L_convert",
    "theta_L_inverse",
    "tw_to_product",
    "twisted_arrow",
    "verify_laws",
]
