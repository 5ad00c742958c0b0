"""Sum-of-squares oracles and exact quadratic-form checks behind the
Steinhaus tiling obstruction."""

from steinhaus._core import (
    FormError,
    QuadForm,
    check_binary_form,
    check_form_range,
    cholesky_basis,
    decompose_four_squares,
    decompose_three_squares,
    decompose_two_squares,
    find_linear_sos,
    four_power_obstruction,
    gram_equivalent,
    gram_of,
    integer_square_root,
    is_sum_of_d_squares,
    run_cli,
    scan_form,
    search_diagonal_ternary,
    tiling_level,
    verify_det_identity,
    verify_residue_claims,
    verify_ternary_theorem,
    __version__,
)

__all__ = [
    "FormError",
    "QuadForm",
    "check_binary_form",
    "check_form_range",
    "cholesky_basis",
    "decompose_four_squares",
    "decompose_three_squares",
    "decompose_two_squares",
    "find_linear_sos",
    "four_power_obstruction",
    "gram_equivalent",
    "gram_of",
    "integer_square_root",
    "is_sum_of_d_squares",
    "run_cli",
    "scan_form",
    "search_diagonal_ternary",
    "tiling_level",
    "verify_det_identity",
    "verify_residue_claims",
    "verify_ternary_theorem",
    "__version__",
]
