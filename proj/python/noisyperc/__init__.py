"""Noisy birth/death percolation: ER vs Achlioptas product-rule simulation and detection statistics."""

from ._core import (
    DynamicGraph,
    __version__,
    closedform,
    empirical_auc,
    formulas_csv,
    kde,
    max_second_component,
    mc_pvalue,
    quantile_difference,
    roc,
    sample_statistic,
    silverman_bandwidth,
    simulate,
)

__all__ = [
    "DynamicGraph",
    "__version__",
    "closedform",
    "empirical_auc",
    "formulas_csv",
    "kde",
    "max_second_component",
    "mc_pvalue",
    "quantile_difference",
    "roc",
    "sample_statistic",
    "silverman_bandwidth",
    "simulate",
]
