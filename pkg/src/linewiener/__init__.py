"""Exact Wiener indices of iterated line graphs.

Compute W(L^k(G)) and the ratios R_k = W(L^k)/W exactly, compare trees
against the equal-order path, evaluate the closed forms for paths, spiders
and quipus, enumerate free trees, and search tree space for R_2 minimizers.
All arithmetic is integer or rational; nothing is rounded.
"""

from .analysis import (
    CheckResult,
    MinimizerReport,
    RatioReport,
    SubdividedQuipuCheck,
    SubdividedQuipuDeviation,
    ThresholdReport,
    beats_path,
    closed_form_oracle_checks,
    limit_quotient_checks,
    line_identity_checks,
    line_wiener_tree_identity,
    min_r2_search,
    near_balanced_checks,
    ratio_rk,
    star_minimizes_r1,
    subdivided_quipu_beats_path,
    subdivided_quipu_deviation,
    subdivided_quipu_scan,
    threshold_scan,
    worked_example_checks,
)
from .enumeration import (
    automorphism_group_order,
    canonical_code,
    free_trees,
    tree_centers,
)
from .errors import (
    BudgetExceededError,
    DisconnectedGraphError,
    EmptyGraphError,
    GraphFormatError,
    LineWienerError,
    NotATreeError,
    ParameterError,
    SearchLimitError,
)
from .families import (
    BalancedQuipu,
    Complete,
    FamilySpec,
    Path,
    Quipu,
    Spider,
    Star,
    SubdividedQuipu,
    build,
    format_family,
    parse_family,
    spec_order,
)
from .formulas import (
    CASES,
    SpiderCaseValues,
    balanced_spider_case,
    d2_quipu,
    d2_spider,
    deficit_quotient,
    path_deficit,
    r2_path,
    spider_case_arms,
    w_path,
    w_quipu,
    w_spider,
)
from .graphio import read_graph, sniff_format, write_graph
from .graphs import (
    DEFAULT_BUDGET,
    Graph,
    degree_sequence,
    is_connected,
    is_tree,
    iterated_line_graph,
    line_graph,
    predicted_line_edge_count,
    wiener_index,
)

__version__ = "0.1.0"

__all__ = [
    "BalancedQuipu",
    "BudgetExceededError",
    "CASES",
    "CheckResult",
    "Complete",
    "DEFAULT_BUDGET",
    "DisconnectedGraphError",
    "EmptyGraphError",
    "FamilySpec",
    "Graph",
    "GraphFormatError",
    "LineWienerError",
    "MinimizerReport",
    "NotATreeError",
    "ParameterError",
    "Path",
    "Quipu",
    "RatioReport",
    "SearchLimitError",
    "Spider",
    "SpiderCaseValues",
    "Star",
    "SubdividedQuipu",
    "SubdividedQuipuCheck",
    "SubdividedQuipuDeviation",
    "ThresholdReport",
    "automorphism_group_order",
    "balanced_spider_case",
    "beats_path",
    "build",
    "canonical_code",
    "closed_form_oracle_checks",
    "d2_quipu",
    "d2_spider",
    "deficit_quotient",
    "degree_sequence",
    "format_family",
    "free_trees",
    "is_connected",
    "is_tree",
    "iterated_line_graph",
    "limit_quotient_checks",
    "line_graph",
    "line_identity_checks",
    "line_wiener_tree_identity",
    "min_r2_search",
    "near_balanced_checks",
    "parse_family",
    "path_deficit",
    "predicted_line_edge_count",
    "r2_path",
    "ratio_rk",
    "read_graph",
    "sniff_format",
    "spec_order",
    "spider_case_arms",
    "star_minimizes_r1",
    "subdivided_quipu_beats_path",
    "subdivided_quipu_deviation",
    "subdivided_quipu_scan",
    "threshold_scan",
    "tree_centers",
    "w_path",
    "w_quipu",
    "w_spider",
    "wiener_index",
    "worked_example_checks",
    "write_graph",
]
