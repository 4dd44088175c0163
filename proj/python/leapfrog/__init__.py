"""Leapfrog adjacent-swap rewriting on finite posets."""

from ._leapfrog import (
    ConfluenceReport,
    LeapfrogError,
    Poset,
    apply_swap,
    check_confluence,
    classify_pair,
    critical_pairs,
    enumerate_labeled_posets,
    export_dot,
    fence_exists,
    find_fence,
    gen_named_poset,
    gen_random_arrangement,
    gen_random_poset,
    is_terminal,
    parse_poset,
    permissible_swaps,
    predict_swap_count,
    predict_terminal,
    reachable_set,
    run_to_terminal,
    write_poset,
    write_trace,
)

__all__ = [
    "ConfluenceReport",
    "LeapfrogError",
    "Poset",
    "apply_swap",
    "check_confluence",
    "classify_pair",
    "critical_pairs",
    "enumerate_labeled_posets",
    "export_dot",
    "fence_exists",
    "find_fence",
    "gen_named_poset",
    "gen_random_arrangement",
    "gen_random_poset",
    "is_terminal",
    "parse_poset",
    "permissible_swaps",
    "predict_swap_count",
    "predict_terminal",
    "reachable_set",
    "run_to_terminal",
    "write_poset",
    "write_trace",
]
