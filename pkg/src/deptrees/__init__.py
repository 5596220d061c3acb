"""Exact combinatorics of dependency trees.

A dependency tree is a rooted plane tree whose root carries an ordered
sequence of left subtrees and an ordered sequence of right subtrees, each
itself a dependency tree.  The counting sequence by node count starts
1, 2, 7, 30, 143, 728 (A006013) and its generating function T(z)
satisfies T(1-T)^2 = z.

The package provides exhaustive enumeration (the oracle), big-integer
counting by three independent routes, exact power-series machinery for
the generating-function identities, asymptotics, exactly uniform random
sampling, additive-parameter statistics, and a cross-validation suite.
"""
from .additive import (
    CumulativeResult,
    TollSpec,
    builtin_tolls,
    cumulative_by_enumeration,
    cumulative_gf,
    cumulative_gf_via_sequences,
    cumulative_summary,
    fold_cost,
    mean_parameter,
    toll_by_name,
)
from .counting import (
    ASYMPTOTICS,
    GROWTH_RATE,
    SINGULARITY,
    AsymptoticConstants,
    CountTable,
    build_count_table,
    count_closed_form,
    growth_ratio,
    lagrange_coefficient,
    relative_error,
    stirling_log_approx,
)
from .sampler import SamplerState, sample_forest, sample_tree
from .series import (
    PowerSeries,
    eval_T_numeric,
    solve_tree_gf,
    verify_functional_identity,
    z_times_derivative,
)
from .trees import (
    DEFAULT_ORACLE_LIMIT,
    DepTree,
    Forest,
    OracleLimitError,
    ParseError,
    enumerate_forests,
    enumerate_trees,
    parse,
    parse_forest,
    serialize,
    serialize_forest,
    size,
    total_size,
)
from .verification import CheckResult, run_verification

__version__ = "0.1.0"

__all__ = [
    "ASYMPTOTICS",
    "AsymptoticConstants",
    "CheckResult",
    "CountTable",
    "CumulativeResult",
    "DEFAULT_ORACLE_LIMIT",
    "DepTree",
    "Forest",
    "GROWTH_RATE",
    "OracleLimitError",
    "ParseError",
    "PowerSeries",
    "SINGULARITY",
    "SamplerState",
    "TollSpec",
    "build_count_table",
    "builtin_tolls",
    "count_closed_form",
    "cumulative_by_enumeration",
    "cumulative_gf",
    "cumulative_gf_via_sequences",
    "cumulative_summary",
    "enumerate_forests",
    "enumerate_trees",
    "eval_T_numeric",
    "fold_cost",
    "growth_ratio",
    "lagrange_coefficient",
    "mean_parameter",
    "parse",
    "parse_forest",
    "relative_error",
    "run_verification",
    "sample_forest",
    "sample_tree",
    "serialize",
    "serialize_forest",
    "size",
    "solve_tree_gf",
    "stirling_log_approx",
    "toll_by_name",
    "total_size",
    "verify_functional_identity",
    "z_times_derivative",
    "__version__",
]
