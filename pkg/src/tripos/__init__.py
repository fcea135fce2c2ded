"""Exact-arithmetic generators and property checkers for combinatorial
triangular arrays: log-concavity of rows, (strong) q-log-convexity and
-concavity of row generating functions, total positivity of the associated
matrices, and preservation of these properties under the generalized
binomial and window-sum transforms."""

__version__ = "0.1.0"

from .algebra import ExactRat, QPoly, det_exact, poly_geq_q
from .properties import (
    NumSeq,
    PolySeq,
    PropertyReport,
    hankel,
    is_log_concave,
    is_log_convex,
    is_pf_r,
    is_q_log_concave,
    is_q_log_convex,
    is_q_tp2,
    is_strongly_q_log_concave,
    is_strongly_q_log_convex,
    is_tp_r,
    toeplitz,
)
from .triangles import (
    CoeffScheme,
    ConstParams,
    Triangle,
    bisnomial,
    bisnomial_row,
    build_preset,
    from_bisnomial,
    from_const_params,
    from_five_term,
    from_three_term,
    preset,
    row_poly,
    row_polys,
)
from .transforms import (
    BilinearForm,
    bisnomial_transform,
    check_preservation,
    transform_minor_form,
    window_sum,
)
from .conditions import (
    ConditionReport,
    log_concavity_conditions,
    log_concavity_conditions_const,
    q_log_convexity_conditions,
    verify_tail_recurrence,
)
from .oeis import BFile, fetch_bfile, parse_bfile, reshape

__all__ = [
    "BFile",
    "BilinearForm",
    "CoeffScheme",
    "ConditionReport",
    "ConstParams",
    "ExactRat",
    "NumSeq",
    "PolySeq",
    "PropertyReport",
    "QPoly",
    "Triangle",
    "bisnomial",
    "bisnomial_row",
    "bisnomial_transform",
    "build_preset",
    "check_preservation",
    "det_exact",
    "fetch_bfile",
    "from_bisnomial",
    "from_const_params",
    "from_five_term",
    "from_three_term",
    "hankel",
    "is_log_concave",
    "is_log_convex",
    "is_pf_r",
    "is_q_log_concave",
    "is_q_log_convex",
    "is_q_tp2",
    "is_strongly_q_log_concave",
    "is_strongly_q_log_convex",
    "is_tp_r",
    "log_concavity_conditions",
    "log_concavity_conditions_const",
    "parse_bfile",
    "poly_geq_q",
    "preset",
    "q_log_convexity_conditions",
    "reshape",
    "row_poly",
    "row_polys",
    "toeplitz",
    "transform_minor_form",
    "verify_tail_recurrence",
    "window_sum",
]
