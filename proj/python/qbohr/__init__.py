"""Slice-regular Bohr inequality toolkit over the quaternions."""

from ._core import (
    Quaternion,
    QSeries,
    RadiusResult,
    admissibility_condition,
    admissibility_constant,
    admissibility_scale,
    area_sum,
    bohr_sum,
    build_extremal,
    cli_main,
    closed_form_value,
    conj,
    conjugation_transform,
    evaluate,
    halfspace_proof_poly,
    halfspace_sum,
    improved_sum,
    infimum_objective,
    inverse,
    modulus,
    mul,
    parse_series,
    powered_sum,
    radius_classical,
    radius_deriv_starlike,
    radius_generalized,
    radius_generalized_infimum,
    radius_halfspace,
    radius_starlike,
    refined_sum,
    regular_conjugate,
    regular_reciprocal,
    sample_boundary,
    sample_class,
    sample_sphere,
    series_to_json,
    sharpness_witness,
    slice_decompose,
    slice_derivative,
    star_product,
    symmetrization,
    theorem_radius,
    validate_class,
    verify,
)

__all__ = [
    "Quaternion",
    "QSeries",
    "RadiusResult",
    "admissibility_condition",
    "admissibility_constant",
    "admissibility_scale",
    "area_sum",
    "bohr_sum",
    "build_extremal",
    "cli_main",
    "closed_form_value",
    "conj",
    "conjugation_transform",
    "evaluate",
    "halfspace_proof_poly",
    "halfspace_sum",
    "improved_sum",
    "infimum_objective",
    "inverse",
    "modulus",
    "mul",
    "parse_series",
    "powered_sum",
    "radius_classical",
    "radius_deriv_starlike",
    "radius_generalized",
    "radius_generalized_infimum",
    "radius_halfspace",
    "radius_starlike",
    "refined_sum",
    "regular_conjugate",
    "regular_reciprocal",
    "sample_boundary",
    "sample_class",
    "sample_sphere",
    "series_to_json",
    "sharpness_witness",
    "slice_decompose",
    "slice_derivative",
    "star_product",
    "symmetrization",
    "theorem_radius",
    "validate_class",
    "verify",
]

__version__ = "0.1.0"
