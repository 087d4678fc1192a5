"""Gorenstein Fano polytopes built from order and chain polytopes of finite posets."""

from __future__ import annotations

from .constructions import (
    chain_polytope,
    gamma,
    gamma_of_posets,
    omega,
    omega_of_posets,
    order_polytope,
    six_polytopes,
)
from .ehrhart import EhrhartPolynomial, ehrhart_equal, ehrhart_polynomial, volume, volume_omega_formula
from .errors import (
    BudgetExceeded,
    CycleDetected,
    DimensionMismatch,
    EmptyInput,
    GFPolyError,
    NoCommonLinearExtension,
    NotAnIdeal,
    NotFullDimensional,
    ParseError,
    SearchBudgetExceeded,
)
from .polytope import (
    LatticePolytope,
    count_lattice_points,
    f_vector,
    h_representation,
    lattice_points,
    unimodular_equivalent,
)
from .posets import (
    Poset,
    adjoin_bottom,
    antichains,
    delta_W,
    from_cover_relations,
    has_common_linear_extension,
    ideal_star,
    ideals,
    linear_extension_count,
    max_elements,
    ordinal_sum,
)
from .reflexive import NormalityCertificate, classify_reflexive_2d, is_normal, is_reflexive, reflexivity_report
from .toric import generate_family, rings_isomorphism_check, spair_reduce_verify, verify_system

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CycleDetected",
    "DimensionMismatch",
    "EhrhartPolynomial",
    "EmptyInput",
    "GFPolyError",
    "LatticePolytope",
    "NoCommonLinearExtension",
    "NormalityCertificate",
    "NotAnIdeal",
    "NotFullDimensional",
    "ParseError",
    "Poset",
    "SearchBudgetExceeded",
    "adjoin_bottom",
    "antichains",
    "chain_polytope",
    "classify_reflexive_2d",
    "count_lattice_points",
    "delta_W",
    "ehrhart_equal",
    "ehrhart_polynomial",
    "f_vector",
    "from_cover_relations",
    "gamma",
    "gamma_of_posets",
    "generate_family",
    "h_representation",
    "has_common_linear_extension",
    "ideal_star",
    "ideals",
    "is_normal",
    "is_reflexive",
    "lattice_points",
    "linear_extension_count",
    "max_elements",
    "omega",
    "omega_of_posets",
    "order_polytope",
    "ordinal_sum",
    "reflexivity_report",
    "rings_isomorphism_check",
    "six_polytopes",
    "spair_reduce_verify",
    "unimodular_equivalent",
    "verify_system",
    "volume",
    "volume_omega_formula",
]
