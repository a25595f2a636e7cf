"""Weighted fractional cumulative residual inaccuracy measures."""

from ._core import (
    MeasureError,
    SurvivalModel,
    __version__,
    chaos_curve,
    compare_series,
    cre,
    dwfgcri,
    dwfgcri_phr,
    dwfgcri_po,
    estimate_wfgcri_phr,
    estimate_wfgcri_two_sample,
    fgcre,
    iterate_map,
    parse_model,
    rolling_wfgcri,
    run_study,
    run_suite,
    shannon_entropy,
    wcri,
    wfgcre,
    wfgcri,
    wfgcri_closed_form_exp,
)

__all__ = [
    "MeasureError",
    "SurvivalModel",
    "__version__",
    "chaos_curve",
    "compare_series",
    "cre",
    "dwfgcri",
    "dwfgcri_phr",
    "dwfgcri_po",
    "estimate_wfgcri_phr",
    "estimate_wfgcri_two_sample",
    "fgcre",
    "iterate_map",
    "parse_model",
    "rolling_wfgcri",
    "run_study",
    "run_suite",
    "shannon_entropy",
    "wcri",
    "wfgcre",
    "wfgcri",
    "wfgcri_closed_form_exp",
]
