"""Representation-theoretic invariants of quantized Gieseker moduli spaces.

The package computes, with exact rational arithmetic throughout:

* parameter diagnostics (global dimension, localization, finite dimensional
  representations) driven by denominator windows;
* the chain of two-sided ideals, symplectic leaf dimensions, and the
  antichain calculus for ideals of tensor powers;
* the wall-and-chamber combinatorics of one-parameter subgroups and their
  fixed loci;
* category-theoretic invariants of the highest weight categories attached to
  the moduli spaces: Poincare polynomials, support dimensions, annihilators,
  and block structure;
* an exact bound-quiver engine that builds the model block algebra and
  machine-checks its expected homological properties.
"""

from .diagnostics import (
    IRRATIONAL,
    CartanFactor,
    CartanSummand,
    DiagnosticsReport,
    Parameter,
    abelian_localization_holds,
    as_parameter,
    cartan_decomposition,
    diagnose,
    dual_parameter,
    findim_dimension_rank_one,
    format_parameter,
    has_finite_dimensional_rep,
    has_finite_global_dimension,
    parse_parameter,
    reduced_denominator,
    singular_set,
)
from .errors import RegimeError
from .partitions import (
    Hook,
    Multipartition,
    Partition,
    check_partition,
    count_multipartitions,
    count_partitions,
    divide_with_remainder,
    enumerate_compositions,
    enumerate_multipartitions,
    enumerate_partitions,
    format_multipartition,
    format_partition,
    hook_partition,
    hooks,
    is_partition,
    multipartition_size,
    parse_multipartition,
    parse_partition,
    quotient_size,
    removable_corners,
    remove_corner,
    size,
    transpose,
)
from .ideal_lattice import (
    IdealAntichain,
    IdealChain,
    IdealChainEntry,
    antichain_normalize,
    contains,
    count_ideals,
    enumerate_ideals,
    enumerate_leaves,
    format_antichain,
    from_up_closure,
    ideal_chain,
    intersect,
    leaf_dimension,
    minimal_members,
    minimal_transversals,
    parse_antichain,
    product,
    sum_,
    to_intersection_form,
    to_sum_form,
    up_closure,
)
from .torus_chambers import (
    Cocharacter,
    FixedComponent,
    Wall,
    WallSet,
    fixed_components_k0,
    format_cocharacter,
    is_dominant,
    is_generic,
    parse_cocharacter,
    same_chamber,
    violated_walls,
    walls,
)
from .category_o import (
    BlockStructure,
    SupportReport,
    annihilator_index,
    block_structure,
    fixed_point_weight,
    legal_removals,
    poincare_polynomial,
    polynomial_string,
    semisimplicity,
    support_dimension,
    support_dimension_recursive,
    support_recursion_values,
    top_cohomology_check,
)
from .quiver_engine import (
    ExtResult,
    ModelAlgebra,
    ProjectiveSum,
    QuiverModule,
    Resolution,
    build_model_algebra,
    cartan_matrix,
    costandard,
    delta_multiplicities,
    dual_module,
    ext_groups,
    ext_to_simple,
    hom_space,
    is_isomorphic,
    k0_class_check,
    minimal_projective_resolution,
    module_from_arrows,
    projective,
    quotient,
    simple,
    standard,
    submodule,
    tilting,
    verify_model_properties,
)

__version__ = "0.1.0"

__all__ = [
    "IRRATIONAL",
    "BlockStructure",
    "CartanFactor",
    "CartanSummand",
    "Cocharacter",
    "DiagnosticsReport",
    "ExtResult",
    "FixedComponent",
    "Hook",
    "IdealAntichain",
    "IdealChain",
    "IdealChainEntry",
    "ModelAlgebra",
    "Multipartition",
    "Parameter",
    "Partition",
    "ProjectiveSum",
    "QuiverModule",
    "RegimeError",
    "Resolution",
    "SupportReport",
    "Wall",
    "WallSet",
    "abelian_localization_holds",
    "annihilator_index",
    "antichain_normalize",
    "as_parameter",
    "block_structure",
    "build_model_algebra",
    "cartan_decomposition",
    "cartan_matrix",
    "check_partition",
    "contains",
    "costandard",
    "count_ideals",
    "count_multipartitions",
    "count_partitions",
    "delta_multiplicities",
    "diagnose",
    "divide_with_remainder",
    "dual_module",
    "dual_parameter",
    "enumerate_compositions",
    "enumerate_ideals",
    "enumerate_leaves",
    "enumerate_multipartitions",
    "enumerate_partitions",
    "ext_groups",
    "ext_to_simple",
    "findim_dimension_rank_one",
    "fixed_components_k0",
    "fixed_point_weight",
    "format_antichain",
    "format_cocharacter",
    "format_multipartition",
    "format_parameter",
    "format_partition",
    "from_up_closure",
    "has_finite_dimensional_rep",
    "has_finite_global_dimension",
    "hom_space",
    "hook_partition",
    "hooks",
    "ideal_chain",
    "intersect",
    "is_dominant",
    "is_generic",
    "is_isomorphic",
    "is_partition",
    "k0_class_check",
    "leaf_dimension",
    "legal_removals",
    "minimal_members",
    "minimal_projective_resolution",
    "minimal_transversals",
    "module_from_arrows",
    "multipartition_size",
    "parse_antichain",
    "parse_cocharacter",
    "parse_multipartition",
    "parse_parameter",
    "parse_partition",
    "poincare_polynomial",
    "polynomial_string",
    "product",
    "projective",
    "quotient",
    "quotient_size",
    "reduced_denominator",
    "removable_corners",
    "remove_corner",
    "same_chamber",
    "semisimplicity",
    "simple",
    "singular_set",
    "size",
    "standard",
    "submodule",
    "sum_",
    "support_dimension",
    "support_dimension_recursive",
    "support_recursion_values",
    "tilting",
    "to_intersection_form",
    "to_sum_form",
    "top_cohomology_check",
    "transpose",
    "up_closure",
    "verify_model_properties",
    "violated_walls",
    "walls",
]
