"""Exact-arithmetic kernels for partition strata, determinantal ideals and
finite-field flag counts.

Partitions are passed as weakly decreasing sequences of positive ints and
returned as lists (or as dict keys, as tuples).  Fields are named by string:
"QQ" for the rationals, "GF(p)" for a prime field.
"""

from locmod._core import (
    BudgetError,
    affine_orbit_dim,
    character_multiplicity,
    coinvariant_dim_formula,
    coinvariant_dimension,
    dcp_ideal_generators,
    dominance_leq,
    dual,
    e2_ideal_generators,
    enumerate_strata,
    generic_fiber_dim,
    generic_ideal_generators,
    homogeneous_stratify,
    hook_content_dimension,
    kostka_foulkes,
    kostka_number,
    lattice_stratify,
    matrix_power_in_sigma,
    nearby_cycle_multiplicity,
    nilpotent_orbit_dim,
    operator_ideal_equals_sigma,
    s_max,
    s_min,
    set_all_budgets,
    special_fiber_dim,
    special_ideal_generators,
    springer_fiber_count,
    symmetric_group_character,
    tensor_minuscule_decompose,
    verify_tensor_vs_kostka,
)

__all__ = [
    "BudgetError",
    "affine_orbit_dim",
    "character_multiplicity",
    "coinvariant_dim_formula",
    "coinvariant_dimension",
    "dcp_ideal_generators",
    "dominance_leq",
    "dual",
    "e2_ideal_generators",
    "enumerate_strata",
    "generic_fiber_dim",
    "generic_ideal_generators",
    "homogeneous_stratify",
    "hook_content_dimension",
    "kostka_foulkes",
    "kostka_number",
    "lattice_stratify",
    "matrix_power_in_sigma",
    "nearby_cycle_multiplicity",
    "nilpotent_orbit_dim",
    "operator_ideal_equals_sigma",
    "s_max",
    "s_min",
    "set_all_budgets",
    "special_fiber_dim",
    "special_ideal_generators",
    "springer_fiber_count",
    "symmetric_group_character",
    "tensor_minuscule_decompose",
    "verify_tensor_vs_kostka",
]

__version__ = "0.1.0"
