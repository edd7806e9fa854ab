"""Exact constructions, axiom checkers and grading machinery for
composition superalgebras over Q and small finite fields."""

from .fields import (
    GF,
    QQ,
    DivisionByZero,
    Field,
    FieldError,
    InfiniteField,
    MixedFields,
    Scalar,
    enumerate_elements,
    field_arith,
    field_from_string,
    primitive_cube_root,
)
from .abelian import (
    AbElement,
    AbGroup,
    AbHom,
    WrongGroup,
    group_from_string,
    hom_apply,
    invariant_factors_by_minors,
    presentation_to_group,
    smith_normal_form,
)
from .superalgebra import (
    CheckFailed,
    Element,
    MixedAlgebras,
    Morphism,
    NoUnit,
    OddArgument,
    SuperAlgebra,
    conjugate,
    eval_b,
    eval_q0,
    identity_morphism,
    is_morphism,
    is_regular_superform,
    multiply,
)
from .constructions import (
    BadAutomorphism,
    CanonicalBasis,
    NoCubeRoot,
    NotHurwitz,
    NotIsotropic,
    NotSplit,
    PeirceDecomposition,
    WrongCharacteristic,
    ZeroAlpha,
    adapt_basis_to_automorphism,
    b12,
    b12_lambda,
    b42,
    canonical_basis_find,
    cayley_dickson,
    cayley_dickson_super,
    nonsplit_quadratic,
    okubo_super,
    para_hurwitz,
    peirce_decomposition,
    petersson_twist,
    pseudo_octonion,
    split_hurwitz,
    super_split_cayley,
    super_split_quaternion,
    tau_nst,
    tau_omega,
    tau_st,
)
from .axioms import (
    check_composition_super,
    check_conjugation_invariance,
    check_hurwitz,
    check_orthogonality,
    check_phi_invariance,
    check_remark_identities,
    check_symmetric,
    find_para_units,
)
from .gradings import (
    Grading,
    SupportTooLarge,
    TripleNotZeroSum,
    coarsenings_enum,
    gamma_equiv,
    gamma_grading_b12,
    gamma_grading_b42,
    gamma_grading_cd4,
    gamma_grading_dim8,
    grading_from_components,
    grading_from_degrees,
    induce,
    is_refinement,
    main_grading,
    over_universal_group,
    support,
    trivial_grading,
    universal_group,
    validate,
    zero_sum_triples,
)
from .search import (
    BudgetExhausted,
    DimensionTooLarge,
    EnumResult,
    SearchBudget,
    enumerate_all_gradings,
    enumerate_automorphisms,
    find_graded_map,
    fine_check,
    try_verify_graded,
)
from .catalog import (
    ENTRIES,
    FieldConditionUnmet,
    build_entry,
    catalog_ids,
    iso_condition_dim8,
    iso_condition_small,
    okubo_gamma_equiv,
    verify_catalog,
    verify_entry,
    verify_iso_theorems,
)

__version__ = "0.1.0"
