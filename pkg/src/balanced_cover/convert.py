"""Passing between blocked bipartite graphs and hypergraph families.

A right vertex of block ``i`` with neighbourhood ``R`` contributes ``1/m`` to
``w_i(R)``. With that dictionary, the number of block-``i`` vertices missed
by ``[n] - S`` is ``m * w_i*(S)``, so chains on the two sides correspond by
complementation.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import lcm

from .core import BlockedBipartiteGraph, Chain, InstanceFamily, WeightedHypergraph
from .errors import InvalidGraphError, UniformityError, ValidationError

TO_GRAPH = "to-graph"
TO_HYPERGRAPH = "to-hypergraph"


def graph_to_family(G: BlockedBipartiteGraph) -> InstanceFamily:
    if not isinstance(G, BlockedBipartiteGraph):
        raise InvalidGraphError("expected a BlockedBipartiteGraph")
    per_block: list[Counter] = [Counter() for _ in range(G.k)]
    for block, nbrs in G.right_vertices:
        if len(nbrs) != G.r:
            raise InvalidGraphError("right side is not regular")
        per_block[block - 1][nbrs] += 1
    hs = []
    for cnt in per_block:
        if sum(cnt.values()) != G.m:
            raise InvalidGraphError("blocks have unequal sizes")
        hs.append(WeightedHypergraph(G.n, {R: Fraction(c, G.m) for R, c in cnt.items()}))
    return InstanceFamily(hs)


def family_to_graph(F: InstanceFamily, scale: int = 1) -> BlockedBipartiteGraph:
    """Realise an ``r``-uniform family as a blocked bipartite graph.

    The block size is the least common multiple of all weight denominators,
    times ``scale``. Right vertices come out grouped by block, then by
    sorted neighbourhood.
    """
    if F.r is None:
        raise UniformityError("family_to_graph needs an r-uniform family")
    if not isinstance(scale, int) or scale < 1:
        raise ValidationError("scale must be a positive integer")
    m = lcm(*(w.denominator for h in F for w in h.edges.values())) * scale
    right = []
    for i, h in enumerate(F, 1):
        for R, w in h.edges.items():  # already sorted by key
            right.extend((i, R) for _ in range(int(w * m)))
    return BlockedBipartiteGraph(F.n, F.k, m, F.r, right)


def map_chain(chain: Chain, direction: str = TO_GRAPH) -> Chain:
    """Complement a chain: ``A_j = [n] - S_{n-j}`` (and back).

    Both directions reverse the ordering, so the map is an involution. The
    unbalance trace is dropped since it belongs to the other side.
    """
    if direction not in (TO_GRAPH, TO_HYPERGRAPH):
        raise ValueError(f"unknown direction {direction!r}")
    return Chain(tuple(reversed(chain.order)))


def coverage_trace(G: BlockedBipartiteGraph, chain: Chain) -> list[tuple[int, ...]]:
    """Per-block coverage ``|N(A_j, B_i)|`` along a left-side chain."""
    if chain.n != G.n:
        raise ValidationError("chain and graph have different left sets")
    return [G.coverage(mask) for mask in chain.prefix_masks()]
