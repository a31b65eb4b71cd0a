"""Growth series of structure groups and monoids of conjugation-quandle
Yang-Baxter solutions, with independent brute-force verification oracles."""

__version__ = "0.1.0"

from .series import (
    BivariateSeries,
    Polynomial,
    RationalGF,
    TruncatedSeries,
    bivariate_binomial,
    bivariate_exp,
    expand_rational,
    series_derivative,
)
from .algebra import (
    ConjugacyDecomposition,
    FiniteGroupTable,
    Permutation,
    QuandleSolution,
    SetPartition,
    class_product_table,
    commutator_subgroup,
    conjugacy_classes,
    conjugation_solution,
    enumerate_set_partitions,
    generic_length_series,
    integer_partition_multiplicity,
    make_dihedral_group,
    make_symmetric_group,
    reflection_solution,
    transposition_solution,
)
from .group_growth import (
    ConjugationGrowthResult,
    DefectRecord,
    DefectSeriesResult,
    as_full_conjugation_gf,
    as_reflections_group_gf,
    as_transpositions_group_gf,
    class2_lift,
    defect_measure,
    defect_series,
    is_commutator_length_one,
    solomon_series,
)
from .transposition_monoid import (
    FTSImage,
    TranspositionWord,
    egf_transposition_monoids,
    fts_embed,
    fts_growth_gf,
    fts_image_membership,
    fts_normal_form,
    monoid_growth_transpositions,
    word_partition,
)
from .reflection_monoid import (
    InvariantTuple,
    NormalForm,
    ReflectionWord,
    density_of_product,
    elements_equal,
    essentialise,
    frs_embed,
    frs_growth_gf,
    frs_image_contains,
    invariants,
    lift_to_coprime,
    monoid_growth_reflections,
    normal_form,
    push_through,
    triple_gcd_witness,
)
from .oracle import (
    BallEnumeration,
    BudgetExceededError,
    OrbitEnumeration,
    group_ball_enumerate,
    monoid_orbit_enumerate,
    orbit_equal,
)

__all__ = [
    "__version__",
    # series
    "Polynomial",
    "RationalGF",
    "TruncatedSeries",
    "BivariateSeries",
    "expand_rational",
    "series_derivative",
    "bivariate_binomial",
    "bivariate_exp",
    # algebra
    "Permutation",
    "FiniteGroupTable",
    "ConjugacyDecomposition",
    "QuandleSolution",
    "SetPartition",
    "make_symmetric_group",
    "make_dihedral_group",
    "conjugacy_classes",
    "class_product_table",
    "commutator_subgroup",
    "conjugation_solution",
    "reflection_solution",
    "transposition_solution",
    "generic_length_series",
    "enumerate_set_partitions",
    "integer_partition_multiplicity",
    # group growth
    "class2_lift",
    "solomon_series",
    "as_transpositions_group_gf",
    "as_reflections_group_gf",
    "defect_measure",
    "defect_series",
    "as_full_conjugation_gf",
    "is_commutator_length_one",
    "DefectRecord",
    "DefectSeriesResult",
    "ConjugationGrowthResult",
    # transposition monoid
    "TranspositionWord",
    "FTSImage",
    "word_partition",
    "fts_embed",
    "fts_image_membership",
    "fts_normal_form",
    "fts_growth_gf",
    "monoid_growth_transpositions",
    "egf_transposition_monoids",
    # reflection monoid
    "ReflectionWord",
    "InvariantTuple",
    "NormalForm",
    "invariants",
    "essentialise",
    "push_through",
    "normal_form",
    "elements_equal",
    "density_of_product",
    "triple_gcd_witness",
    "lift_to_coprime",
    "frs_embed",
    "frs_image_contains",
    "frs_growth_gf",
    "monoid_growth_reflections",
    # oracle
    "OrbitEnumeration",
    "BallEnumeration",
    "BudgetExceededError",
    "monoid_orbit_enumerate",
    "group_ball_enumerate",
    "orbit_equal",
]
