"""Balanced chains and partitions for families of weighted hypergraphs.

All arithmetic on weights is exact (:class:`fractions.Fraction`); floating
point appears only in clearly named ``*_float`` helpers and heuristics.
"""

from .chains import (
    BUILDERS,
    DeletionState,
    HalfCover,
    build_chain,
    build_chain_greedy,
    build_chain_greedy_float,
    build_chain_steinitz,
    build_chain_two,
    default_algo,
    graph_chain,
    half_cover,
)
from .convert import TO_GRAPH, TO_HYPERGRAPH, coverage_trace, family_to_graph, graph_to_family, map_chain
from .core import (
    BlockedBipartiteGraph,
    Chain,
    InstanceFamily,
    WeightedHypergraph,
    cover_slack,
    cover_slack_float,
    delta,
    phi,
    phi_norm_sq,
    question_valid,
    unbalance,
    unbalance_float,
    unbalance_trace,
    w_star,
    w_star_float,
)
from .errors import *  # noqa: F401,F403
from .generators import (
    AlmostRegularGraph,
    AlmostRegularReport,
    gen_almost_regular,
    gen_hadamard_vectors,
    gen_mixed_family,
    gen_random_family,
    gen_zero_sum_vectors,
    sylvester,
    vectors_to_family,
)
from .io import parse_instance, serialize
from .oracles import LemmaReport, lemma_check, min_ordering_prefix_norm, optimal_chain, optimal_partition
from .partition import (
    ExtremePoint,
    PartitionResult,
    extreme_point,
    pairwise_vectors,
    partition_pairwise,
    partition_tucker,
    spencer_color,
    tucker_witness,
)
from .rng import SplitMix64
from .steinitz import VectorFamily, family_to_vectors, prefix_norms, steinitz_order

__version__ = "0.1.0"
