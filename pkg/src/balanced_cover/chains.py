"""Chain builders.

Every builder works backwards from ``S = [n]``, deleting one vertex at a
time, and returns the chain read forwards (first vertex = last survivor).
All arithmetic is on integers over the family's common denominator ``D``:
``w*`` and ``delta`` values are scaled by ``D`` and squared norms by ``D**2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .convert import TO_GRAPH, coverage_trace, graph_to_family, map_chain
from .core import (
    BlockedBipartiteGraph,
    Chain,
    InstanceFamily,
    delta,
    mask_members,
    unbalance_trace,
    w_star,
)
from .errors import ArityError, DimensionError, InvariantViolation, UniformityError


class DeletionState:
    """Incremental ``delta`` table, ``w*`` totals and ``phi`` for a shrinking set.

    Removing ``j`` deactivates each still-active edge through ``j`` and takes
    its weight off the ``delta`` entries of its other vertices, so one
    candidate scan costs ``O(|S| k)``.
    """

    def __init__(self, F: InstanceFamily, audit: bool = False):
        self.F = F
        self.k = F.k
        self.n = F.n
        self.D = D = F.common_denominator()
        self.audit_enabled = audit
        self.edge_verts = []
        self.weights = []
        self.active = []
        self.delta = []
        self.tot = []
        for h in F:
            masks, nums, den = h.scaled_edges()
            ws = [w * (D // den) for w in nums]
            verts = list(h.edges)
            dl = [0] * (self.n + 1)
            for e, vs in enumerate(verts):
                for v in vs:
                    dl[v] += ws[e]
            self.edge_verts.append(verts)
            self.weights.append(ws)
            self.active.append([True] * len(ws))
            self.delta.append(dl)
            self.tot.append(sum(ws))
        self.members = set(range(1, self.n + 1))
        self.phi = [self.tot[i] - self.tot[-1] for i in range(self.k - 1)]
        self.norm_sq = sum(x * x for x in self.phi)

    @property
    def size(self) -> int:
        return len(self.members)

    def x(self, j: int) -> list[int]:
        """``phi(S) - phi(S - {j})``, scaled by ``D``."""
        dk = self.delta[-1][j]
        return [self.delta[i][j] - dk for i in range(self.k - 1)]

    def norm_after(self, j: int) -> int:
        """``||phi(S - {j})||^2`` scaled by ``D**2``."""
        dk = self.delta[-1][j]
        dot = sq = 0
        for i in range(self.k - 1):
            xi = self.delta[i][j] - dk
            dot += self.phi[i] * xi
            sq += xi * xi
        return self.norm_sq - 2 * dot + sq

    def remove(self, j: int) -> None:
        xj = self.x(j)
        dot = sum(p * x for p, x in zip(self.phi, xj))
        self.norm_sq += -2 * dot + sum(x * x for x in xj)
        self.phi = [p - x for p, x in zip(self.phi, xj)]
        for i, h in enumerate(self.F):
            act, ws, verts, dl = self.active[i], self.weights[i], self.edge_verts[i], self.delta[i]
            for e in h.incident_edges(j):
                if act[e]:
                    act[e] = False
                    self.tot[i] -= ws[e]
                    for v in verts[e]:
                        dl[v] -= ws[e]
        self.members.discard(j)
        if self.audit_enabled:
            self.audit()

    def unbalance_scaled(self) -> int:
        return max(self.tot) - min(self.tot)

    def unbalance(self) -> Fraction:
        return Fraction(self.unbalance_scaled(), self.D)

    def audit(self) -> None:
        """Compare every incremental quantity with a from-scratch evaluation."""
        S = self.members
        for i, h in enumerate(self.F):
            if Fraction(self.tot[i], self.D) != w_star(h, S):
                raise InvariantViolation(f"w* total of hypergraph {i + 1} drifted")
            for j in S:
                if Fraction(self.delta[i][j], self.D) != delta(h, j, S):
                    raise InvariantViolation(f"delta[{i + 1}][{j}] drifted")
        if self.norm_sq != sum(p * p for p in self.phi):
            raise InvariantViolation("squared norm of phi drifted")
        if self.k > 1:
            expect = [self.tot[i] - self.tot[-1] for i in range(self.k - 1)]
            if expect != self.phi:
                raise InvariantViolation("phi drifted")


def _finish(F: InstanceFamily, removed: list[int], last: int, trace: list) -> Chain:
    order = (last, *reversed(removed))
    return Chain(order, tuple(trace))


def _trivial_chain(F: InstanceFamily) -> Chain:
    order = tuple(range(1, F.n + 1))
    return Chain(order, unbalance_trace(F, order))


def _require_uniform(F: InstanceFamily) -> None:
    if F.r is None:
        raise UniformityError("the family must be r-uniform")


def build_chain_greedy(F: InstanceFamily, audit: bool = False) -> Chain:
    """Delete the vertex whose removal leaves the smallest ``||phi||^2``.

    Ties go to the smallest vertex. For ``|S| > 2r`` the choice never leaves
    ``||phi||^2`` above ``(k-1)c``; below that the same rule just supplies
    the free ordering of the remaining set.
    """
    _require_uniform(F)
    if F.k < 2:
        return _trivial_chain(F)
    st = DeletionState(F, audit=audit)
    trace = [None] * F.n
    trace[-1] = st.unbalance()
    removed = []
    while st.size > 1:
        best_j = best = None
        for j in sorted(st.members):
            val = st.norm_after(j)
            if best is None or val < best:
                best, best_j = val, j
        st.remove(best_j)
        removed.append(best_j)
        trace[st.size - 1] = st.unbalance()
    (last,) = st.members
    return _finish(F, removed, last, trace)


def build_chain_two(F: InstanceFamily, audit: bool = False) -> Chain:
    """Two hypergraphs: delete a vertex whose ``delta`` gap has the sign of the ``w*`` gap.

    Keeps the unbalance at or below the cover slack at every step.
    """
    if F.k != 2:
        raise ArityError(f"build_chain_two needs k = 2, got k = {F.k}")
    _require_uniform(F)
    st = DeletionState(F, audit=audit)
    trace = [None] * F.n
    trace[-1] = st.unbalance()
    removed = []
    while st.size > 1:
        gap = st.tot[0] - st.tot[1]
        chosen = None
        for j in sorted(st.members):
            x = st.delta[0][j] - st.delta[1][j]
            if gap == 0 or (gap > 0 and x > 0) or (gap < 0 and x < 0):
                chosen = j
                break
        if chosen is None:
            raise InvariantViolation("no vertex with a matching delta sign; weights are not uniform")
        st.remove(chosen)
        removed.append(chosen)
        trace[st.size - 1] = st.unbalance()
    (last,) = st.members
    return _finish(F, removed, last, trace)


def build_chain_steinitz(F: InstanceFamily) -> Chain:
    """1-uniform families: order vertices by a Steinitz ordering of the ``phi`` increments."""
    from .steinitz import family_to_vectors, steinitz_order

    if F.r != 1:
        raise UniformityError("the Steinitz route needs a 1-uniform family")
    if F.k < 2:
        raise DimensionError("the Steinitz route needs k >= 2")
    perm = steinitz_order(family_to_vectors(F))
    order = tuple(i + 1 for i in perm)
    return Chain(order, unbalance_trace(F, order))


def build_chain_greedy_float(F: InstanceFamily) -> Chain:
    """Floating-point twin of :func:`build_chain_greedy` for benchmarking.

    The returned trace is recomputed exactly; only the choices are made in
    floating point, so they can differ from the exact builder on near-ties.
    """
    _require_uniform(F)
    if F.k < 2:
        return _trivial_chain(F)
    n, k = F.n, F.k
    dl = np.zeros((k, n + 1))
    edges = []
    for i, h in enumerate(F):
        for e, (vs, w) in enumerate(h.edges.items()):
            wf = float(w)
            for v in vs:
                dl[i, v] += wf
            edges.append((i, vs, wf))
    incident = [[] for _ in range(n + 1)]
    for idx, (_, vs, _) in enumerate(edges):
        for v in vs:
            incident[v].append(idx)
    active = np.ones(len(edges), dtype=bool)
    phi = np.zeros(k - 1)
    alive = np.ones(n + 1, dtype=bool)
    alive[0] = False
    removed = []
    for _ in range(n - 1):
        cand = np.nonzero(alive)[0]
        x = dl[:-1, cand] - dl[-1, cand]
        vals = ((phi[:, None] - x) ** 2).sum(axis=0)
        j = int(cand[int(np.argmin(vals))])
        phi = phi - (dl[:-1, j] - dl[-1, j])
        for idx in incident[j]:
            if active[idx]:
                active[idx] = False
                i, vs, wf = edges[idx]
                for v in vs:
                    dl[i, v] -= wf
        alive[j] = False
        removed.append(j)
    last = int(np.nonzero(alive)[0][0])
    order = (last, *reversed(removed))
    return Chain(order, unbalance_trace(F, order))


BUILDERS = {
    "greedy": build_chain_greedy,
    "two": build_chain_two,
    "steinitz": build_chain_steinitz,
    "greedy-float": build_chain_greedy_float,
}


def default_algo(F: InstanceFamily) -> str:
    return "two" if F.k == 2 else "greedy"


def build_chain(F: InstanceFamily, algo: str | None = None) -> Chain:
    algo = algo or default_algo(F)
    try:
        builder = BUILDERS[algo]
    except KeyError:
        raise ValueError(f"unknown chain algorithm {algo!r}") from None
    return builder(F)


def graph_chain(G: BlockedBipartiteGraph, algo: str | None = None):
    """Left-side chain for a blocked bipartite graph, with its coverage trace."""
    F = graph_to_family(G)
    A_chain = map_chain(build_chain(F, algo), TO_GRAPH)
    return A_chain, coverage_trace(G, A_chain)


@dataclass(frozen=True)
class HalfCover:
    S: frozenset
    j: int
    coverage: tuple[int, ...]          # |N(S, B_i)| for the returned S
    exceeding_coverage: tuple[int, ...]  # coverage of A_j, where some block passes m/2
    margin_holds: bool | None = None


def half_cover(G: BlockedBipartiteGraph, chain: Chain, slack: Fraction | None = None) -> HalfCover:
    """Longest chain prefix covering at most half of every block.

    ``j`` is the first step at which some block is more than half covered
    and ``S = A_{j-1}``. When ``slack`` (the cover slack ``c``) is given, also
    checks ``|N(S, B_i)| > m/2 - (c + sqrt(2(k-1)c)) m`` for every block, on
    squares so it stays exact.
    """
    if chain.n != G.n:
        raise ValueError("chain is not over the left set of the graph")
    masks = chain.prefix_masks()
    prev = 0
    for j, mask in enumerate(masks, 1):
        cov = G.coverage(mask)
        if any(2 * x > G.m for x in cov):
            S = frozenset(mask_members(prev))
            here = G.coverage(prev)
            margin = None
            if slack is not None:
                c = Fraction(slack)
                root_sq = 2 * (G.k - 1) * c
                margin = True
                for x in here:
                    t = Fraction(x, G.m) - Fraction(1, 2) + c
                    if not (t > 0 or root_sq > t * t):
                        margin = False
            return HalfCover(S, j, here, cov, margin)
        prev = mask
    raise InvariantViolation("the full left set must cover every block")
