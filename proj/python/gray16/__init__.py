"""Gray maps over 2-groups of order up to 16."""

from gray16._core import (
    Automorphism,
    GrayMapTable,
    GroupTable,
    SurveyRow,
    aut_order,
    automorphism_group,
    base_gray_map,
    build_builtin,
    builtin_names,
    canonical_type2,
    classify_order16,
    contains_subgroup_isomorphic_to,
    count_involutions,
    direct_product,
    graymap_to_text,
    hamming_distance,
    hamming_weight,
    inner_automorphism,
    is_isomorphic,
    run_cli,
    standard_type1,
    subgroups,
    type1_catalog,
    type2_survey,
    verify_gray_map,
    weight_parity_feasible,
)

__all__ = [
    "Automorphism",
    "GrayMapTable",
    "GroupTable",
    "SurveyRow",
    "aut_order",
    "automorphism_group",
    "base_gray_map",
    "build_builtin",
    "builtin_names",
    "canonical_type2",
    "classify_order16",
    "contains_subgroup_isomorphic_to",
    "count_involutions",
    "direct_product",
    "graymap_to_text",
    "hamming_distance",
    "hamming_weight",
    "inner_automorphism",
    "is_isomorphic",
    "run_cli",
    "standard_type1",
    "subgroups",
    "type1_catalog",
    "type2_survey",
    "verify_gray_map",
    "weight_parity_feasible",
]
