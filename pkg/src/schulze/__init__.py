"""Schulze-method election engine.

Weighted majority graphs from ranked ballots (direct tallying and a
dominance-count route), exact widest-path baselines, possible-winner
computation by decremental strong-connectivity, and matrix-dominance
instance generators used for cross-validation.
"""

from .ballots import (
    BallotParseError,
    PreferenceProfile,
    format_profile,
    pairwise_tallies,
    parse_profile,
    random_profile,
    rank_encode,
)
from .bottleneck import (
    BottleneckMatrix,
    WIDTH_SENTINEL,
    apbp,
    schulze_ranking,
    ssbp,
    verify_winner,
    winners_from_bottlenecks,
)
from .decremental_scc import LevelReport, SccContractError, SccState, iter_weight_levels
from .dominance import (
    DominanceInstance,
    dominance_counts,
    dominance_product_blocked,
    dominance_product_bruteforce,
    has_dominating_pair,
    make_entries_distinct,
)
from .majority_graph import (
    ComparisonGraph,
    GraphFormatError,
    build_comparison_graph,
    build_wmg_fast,
    build_wmg_naive,
    format_graph,
    parse_graph,
    random_comparison_graph,
    random_margin_graph,
)
from .reductions import (
    ReductionInstance,
    decide_dominating_pairs_via_schulze,
    dominance_to_wmg_instance,
    dominating_pairs_to_schulze_instance,
    recover_dominance_from_wmg,
)
from .winners import WinnerTrace, find_all_winners, find_winner, smith_set

__version__ = "0.1.0"

__all__ = [
    "BallotParseError",
    "BottleneckMatrix",
    "ComparisonGraph",
    "DominanceInstance",
    "GraphFormatError",
    "LevelReport",
    "PreferenceProfile",
    "ReductionInstance",
    "SccContractError",
    "SccState",
    "WIDTH_SENTINEL",
    "WinnerTrace",
    "apbp",
    "build_comparison_graph",
    "build_wmg_fast",
    "build_wmg_naive",
    "decide_dominating_pairs_via_schulze",
    "dominance_counts",
    "dominance_product_blocked",
    "dominance_product_bruteforce",
    "dominance_to_wmg_instance",
    "dominating_pairs_to_schulze_instance",
    "find_all_winners",
    "find_winner",
    "format_graph",
    "format_profile",
    "has_dominating_pair",
    "iter_weight_levels",
    "make_entries_distinct",
    "pairwise_tallies",
    "parse_graph",
    "parse_profile",
    "random_comparison_graph",
    "random_margin_graph",
    "random_profile",
    "rank_encode",
    "recover_dominance_from_wmg",
    "schulze_ranking",
    "smith_set",
    "ssbp",
    "verify_winner",
    "winners_from_bottlenecks",
]
