"""Minimum-state probabilistic finite-state automaton inference.

The package infers the smallest probabilistic finite-state machine that
explains a finite symbol sequence: a splitting heuristic, exact
branch-and-bound searches over the history compatibility graph, a
clique-cover reformulation of the same problem and a benchmark harness
for comparing them.
"""

from .bench import (
    BenchConfig,
    CSV_HEADER,
    METHODS,
    parse_bench_config,
    random_machine,
    run_bench,
    write_csv,
)
from .cliques import (
    CoverResult,
    PipelineResult,
    bron_kerbosch,
    clique_pipeline,
    enumerate_exact_covers,
    min_clique_cover,
    reconstruct_deterministic,
)
from .cssr import cssr, cssr_reconstruct, cssr_split
from .errors import (
    CoverOverflowError,
    DeadEndError,
    DegenerateSampleError,
    EmptySequenceError,
    EmptyStateError,
    FormatError,
    MinpfsaError,
    SequenceTooShortError,
    TooLargeForOracleError,
    UnobservedHistoryError,
)
from .exact import (
    IPModel,
    SolveResult,
    brute_force_min_states,
    build_ip_model,
    greedy_independent_set,
    solve_ip_model,
    solve_msdpfsa,
    solve_msndpfsa,
    succ_table,
    to_lp_text,
)
from .machine import (
    PFSA,
    StatePartition,
    build_machine,
    check_determinism,
    from_json,
    partition_from_blocks,
    sample,
    split_to_deterministic,
    to_dot,
    to_json,
)
from .sequences import (
    BINARY,
    Alphabet,
    ConditionalDistribution,
    SymbolSequence,
    WindowCounts,
    cond_dist,
    count_windows,
    from_text,
    from_tokens,
    gen_fixture,
    histories,
    parse_sequence,
    state_dist,
    successor,
)
from .stat_tests import (
    TESTS,
    CompatibilityGraph,
    TestConfig,
    chi2_pvalue,
    compatibility_graph,
    ft_pvalue,
    ks_pvalue,
    pairwise_pvalues,
    pvalue,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "BINARY",
    "BenchConfig",
    "CSV_HEADER",
    "CompatibilityGraph",
    "ConditionalDistribution",
    "CoverOverflowError",
    "CoverResult",
    "DeadEndError",
    "DegenerateSampleError",
    "EmptySequenceError",
    "EmptyStateError",
    "FormatError",
    "IPModel",
    "METHODS",
    "MinpfsaError",
    "PFSA",
    "PipelineResult",
    "SequenceTooShortError",
    "SolveResult",
    "StatePartition",
    "SymbolSequence",
    "TESTS",
    "TestConfig",
    "TooLargeForOracleError",
    "UnobservedHistoryError",
    "WindowCounts",
    "bron_kerbosch",
    "brute_force_min_states",
    "build_ip_model",
    "build_machine",
    "check_determinism",
    "chi2_pvalue",
    "clique_pipeline",
    "compatibility_graph",
    "cond_dist",
    "count_windows",
    "cssr",
    "cssr_reconstruct",
    "cssr_split",
    "enumerate_exact_covers",
    "from_json",
    "from_text",
    "from_tokens",
    "ft_pvalue",
    "gen_fixture",
    "greedy_independent_set",
    "histories",
    "ks_pvalue",
    "min_clique_cover",
    "pairwise_pvalues",
    "parse_bench_config",
    "parse_sequence",
    "partition_from_blocks",
    "pvalue",
    "random_machine",
    "reconstruct_deterministic",
    "run_bench",
    "sample",
    "solve_ip_model",
    "solve_msdpfsa",
    "solve_msndpfsa",
    "split_to_deterministic",
    "state_dist",
    "succ_table",
    "successor",
    "to_dot",
    "to_json",
    "to_lp_text",
    "write_csv",
]
