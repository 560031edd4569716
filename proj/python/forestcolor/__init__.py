"""Dynamic edge coloring of forests: algorithms, adversaries and the experiment harness."""

from ._core import (
    CSV_HEADER,
    HISTOGRAM_HEADER,
    ForestColorError,
    Session,
    algorithm_ids,
    count_colorings,
    histogram,
    run_criterion,
    run_experiment,
    suite_criteria,
    toggle_expected_recourse,
    workload_ids,
)

__all__ = [
    "CSV_HEADER",
    "HISTOGRAM_HEADER",
    "ForestColorError",
    "Session",
    "algorithm_ids",
    "count_colorings",
    "histogram",
    "run_criterion",
    "run_experiment",
    "suite_criteria",
    "toggle_expected_recourse",
    "workload_ids",
]
__version__ = "0.1.0"
