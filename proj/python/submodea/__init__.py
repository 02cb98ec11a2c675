"""Single-objective evolutionary algorithms for constrained submodular maximization.

Budget-incrementing (1+lambda)-EA and (1+1)-EA with archive, greedy and
exhaustive baselines, a graph max-coverage problem family, and a seeded
benchmark harness with rank-sum comparison output.
"""

from ._core import (
    Instance,
    archive_parameters,
    brute_force,
    budget_grid,
    coverage_instance,
    coverage_instance_from_edges,
    greedy,
    knapsack_instance,
    load_graph_info,
    mean_std,
    one_plus_lambda_parameters,
    rank_sum_test,
    run_experiment,
    run_gsemo,
    run_one_plus_lambda,
    run_one_plus_one_archive,
    single_bit_flip_probability,
    submodularity_ratio,
    __version__,
)

__all__ = [
    "Instance",
    "archive_parameters",
    "brute_force",
    "budget_grid",
    "coverage_instance",
    "coverage_instance_from_edges",
    "greedy",
    "knapsack_instance",
    "load_graph_info",
    "mean_std",
    "one_plus_lambda_parameters",
    "rank_sum_test",
    "run_experiment",
    "run_gsemo",
    "run_one_plus_lambda",
    "run_one_plus_one_archive",
    "single_bit_flip_probability",
    "submodularity_ratio",
    "__version__",
]
