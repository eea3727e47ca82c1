"""Computational models of finite semigroups, groupoids, rings and graded
rings, with exhaustive classifiers for regularity and grading properties."""

__version__ = "0.1.0"

from .constructions import (
    DegreeMap,
    GoodGrading,
    bn_index,
    check_good_grading_prop,
    good_grading,
    groupoid_ring,
    matrix_bn_grading,
    matrix_units_semigroup,
    semigroup_ring,
    validate_degree_map,
)
from .gradings import (
    EpsilonWitness,
    GradedRing,
    GradedVnrWitness,
    Verdict,
    base_components_vnr,
    check_corollaries,
    check_eps_characterizations,
    check_lemma_technical,
    check_prop_switch,
    check_theorem_groupoid,
    check_theorem_inverse_semigroup,
    check_theorem_main,
    is_epsilon_strong,
    is_graded_vnr,
    is_nearly_epsilon_strong,
    is_strong,
    is_symmetric,
    product_subgroup,
    regrade_groupoid_to_semigroup,
    structurally_equal,
    validate_grading,
)
from .groupoids import (
    FiniteGroupoid,
    disjoint_union,
    group_groupoid,
    pair_groupoid,
    to_inverse_semigroup,
    validate_groupoid,
)
from .rings import (
    FiniteAdditiveGroup,
    FiniteRing,
    RegularityWitness,
    Subgroup,
    SUnitalityWitness,
    additive_closure,
    check_tominaga,
    check_vnr_characterization,
    common_unit,
    cyclic_ring,
    field_f4,
    idempotent_generator,
    is_left_s_unital,
    is_right_s_unital,
    is_s_unital,
    is_von_neumann_regular,
    left_ideal,
    left_unity,
    matrix_ring,
    multiples_ring,
    opposite_ring,
    product_ring,
    right_ideal,
    right_unity,
    s_unitality,
    unity,
    validate_additive_group,
    validate_ring,
    zero_multiplication_ring,
)
from .semigroups import (
    FiniteSemigroup,
    SemigroupClassification,
    chain_semilattice,
    classify_semigroup,
    cyclic_group,
    enumerate_semigroups,
    idempotents,
    inverses,
    left_zero_semigroup,
    monogenic_semigroup,
    sample_semigroups,
    validate_semigroup,
    weak_inverses,
)
