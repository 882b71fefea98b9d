"""Exact lengths of local cohomology of thickenings of 2x2 minors of a 2 x m matrix."""

from ._thickening import (
    IntegralityError,
    binom,
    catalan,
    conjugate,
    contains,
    cumulative_identity_check,
    cumulative_length,
    cumulative_length_via_decomposition,
    det_support,
    dual_index,
    enumerate_w,
    enumerate_z,
    epsilon3,
    identity_sum_check,
    layer_length_closed,
    layer_length_via_decomposition,
    layer_summands,
    local_cohomology_length,
    nonvanishing_hi_indices,
    select_st,
    shift_normalize,
    ssyt_count,
    weyl_dim,
)

__all__ = [
    "IntegralityError",
    "binom",
    "catalan",
    "conjugate",
    "contains",
    "cumulative_identity_check",
    "cumulative_length",
    "cumulative_length_via_decomposition",
    "det_support",
    "dual_index",
    "enumerate_w",
    "enumerate_z",
    "epsilon3",
    "identity_sum_check",
    "layer_length_closed",
    "layer_length_via_decomposition",
    "layer_summands",
    "local_cohomology_length",
    "nonvanishing_hi_indices",
    "select_st",
    "shift_normalize",
    "ssyt_count",
    "weyl_dim",
]
