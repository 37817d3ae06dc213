"""Minor lifts of multiaffine polynomials (Python front end of the C++ library)."""

from ._core import (
    LpmError,
    Poly,
    check_dual_identity,
    check_fischer_hadamard,
    check_nlc,
    derivation_matrix,
    dual,
    eigenvalues,
    elementary,
    in_cone_matrix,
    in_cone_vector,
    is_stable,
    minor_lift_eval,
    pencil_coeffs,
    permutation_walk,
    rayleigh_w,
    real_roots,
    restriction_value,
    run_battery,
    sample_in_cone_matrix,
    spanning_tree_poly,
    spanning_tree_poly_edges,
    spectral_containment,
    verify_factorization,
)

__all__ = [
    "LpmError",
    "Poly",
    "check_dual_identity",
    "check_fischer_hadamard",
    "check_nlc",
    "derivation_matrix",
    "dual",
    "eigenvalues",
    "elementary",
    "in_cone_matrix",
    "in_cone_vector",
    "is_stable",
    "minor_lift_eval",
    "pencil_coeffs",
    "permutation_walk",
    "rayleigh_w",
    "real_roots",
    "restriction_value",
    "run_battery",
    "sample_in_cone_matrix",
    "spanning_tree_poly",
    "spanning_tree_poly_edges",
    "spectral_containment",
    "verify_factorization",
]
