"""Exact decision procedures for absorbing-type properties of submodules
and ideals over finite commutative rings, plus the constructions (quotients,
products, localizations, idealizations, amalgamations) that transport them,
a submodule-lattice enumerator, named verification suites, and a CLI.
"""

__version__ = "0.1.0"

from .constructions import (
    LocalizationResult,
    ModuleLocalizationResult,
    MultiplicativeSet,
    amalgamated_module,
    amalgamation_ring,
    idealization_ideal,
    idealization_ring,
    idealization_subset,
    localize_module,
    localize_ring,
    localize_submodule,
    product_module,
    product_submodule,
    quotient_ideal,
    quotient_module,
    quotient_submodule,
    restrict_scalars,
    restricted_submodule,
    saturate,
)
from .errors import (
    AbsorbError,
    CrossStructureError,
    DegenerateLocalizationError,
    ElaborationError,
    InvalidConstructionError,
    InvalidOrderError,
    NotProperError,
    SizeBoundError,
    SpecSyntaxError,
    UnknownSuiteError,
)
from .lattice import (
    DecompositionReport,
    SubmoduleLattice,
    all_ideals,
    all_multiplicative_sets,
    all_submodules,
    decomposition_check,
    search_counterexample,
)
from .modules import (
    CyclicModule,
    FiniteModule,
    Ideal,
    ModuleHom,
    ProductModule,
    ProductOverProductRing,
    QuotientModule,
    RingAsModule,
    Submodule,
    annihilator,
    colon_ideal,
    colon_ideal_global,
    colon_submodule,
    cyclic_submodule,
    full_submodule,
    identity_module_hom,
    intersect_submodules,
    m_radical,
    radical,
    span,
    sum_submodules,
    zero_submodule,
)
from .predicates import (
    PROPERTY_CHECKS,
    PropertyReport,
    RingSubset,
    Witness,
    check_property,
    is_classical_primary,
    is_gsdf_absorbing,
    is_prime_submodule,
    is_primary_submodule,
    is_sdf_absorbing,
    is_sdf_absorbing_ideal,
    is_sdf_primary_ideal,
    replay_witness,
    setwise_sdf_primary,
)
from .rings import (
    AmalgamationRing,
    FiniteRing,
    IdealizationRing,
    ProductRing,
    QuotientRing,
    RingHom,
    SubringOnIdempotent,
    ZMod,
    identity_hom,
    make_zmod,
    product_ring,
    reduction_hom,
    units,
)
from .specdsl import (
    SpecNode,
    elaborate_module,
    elaborate_ring,
    elaborate_sub,
    parse_module_spec,
    parse_ring_spec,
    parse_spec,
    parse_sub_spec,
    render,
)
from .suites import (
    SUITE_IDS,
    SuiteReport,
    ZnClassification,
    ZnRow,
    classify_zn,
    gsdf_zero_zn,
    is_pk_or_2pk,
    run_suite,
)
