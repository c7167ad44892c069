"""k-connected subgraph detection, decomposition into candidate pieces, and
the connectivity edge-bound formulas.

The obstruction this package cares about: a graph that erases with j
excluded vertices per step cannot contain a (j+2)-connected subgraph --
after deleting the first erased edge of such a subgraph, j+1 internally
disjoint paths still join its endpoints, and j exclusions cannot cut them
all, contradicting the uniqueness of the crossing edge.  `check_erasable_
obstruction` runs that test; search pruning relies on it being supergraph-
closed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import (
    Graph,
    VertexSet,
    bits_of,
    component_masks,
    members,
    _vertex_cut_masks,
)


def _induced_small_cut(g: Graph, piece: int, k: int) -> tuple[int, ...] | None:
    """Any vertex cut of size < k in g[piece], or None when g[piece] is
    k-connected (or complete).  Whitney: connectivity of a non-complete graph
    is the minimum local connectivity over non-adjacent pairs, so the first
    pair falling below k yields a usable cut."""
    verts = list(bits_of(piece))
    pos = {v: i for i, v in enumerate(verts)}
    m = len(verts)
    adj = [0] * m
    for i, v in enumerate(verts):
        for w in bits_of(g.adj[v] & piece):
            adj[i] |= 1 << pos[w]
    for i in range(m):
        for j in range(i + 1, m):
            if adj[i] >> j & 1:
                continue
            kappa, cut = _vertex_cut_masks(adj, m, i, j, stop_at=k)
            if kappa < k:
                return tuple(verts[x] for x in cut)
    return None


def decompose_k_connected(g: Graph, k: int) -> list[VertexSet]:
    """Vertex sets of k-connected pieces found by recursive cut splitting.

    A piece with more than k vertices either is k-connected (kept) or has a
    cut S of size < k; any k-connected subgraph stays connected after
    removing S, so it survives intact inside one component-plus-S child.
    The returned pieces therefore cover every k-connected subgraph of g.
    The decomposition is not canonical; only this coverage is guaranteed.
    """
    if k < 1:
        raise ValueError("need k >= 1")
    out: list[int] = []
    seen: set[int] = set()
    stack = [g.full_mask]
    while stack:
        piece = stack.pop()
        if piece in seen:
            continue
        seen.add(piece)
        size = piece.bit_count()
        if size <= k:
            continue
        cut = _induced_small_cut(g, piece, k)
        if cut is None:
            # k-connected, or complete: K_m is (m-1)-connected.
            is_complete = all(
                (g.adj[v] & piece).bit_count() == size - 1 for v in bits_of(piece)
            )
            if not is_complete or size - 1 >= k:
                out.append(piece)
            continue
        cmask = 0
        for w in cut:
            cmask |= 1 << w
        for comp in component_masks(g.adj, piece & ~cmask):
            child = comp | cmask
            if child.bit_count() < piece.bit_count():
                stack.append(child)
    return [members(p) for p in sorted(out)]


def has_k_connected_subgraph(g: Graph, k: int) -> VertexSet | None:
    """A vertex set inducing a k-connected subgraph, or None."""
    pieces = decompose_k_connected(g, k)
    return pieces[0] if pieces else None


def check_erasable_obstruction(g: Graph, j: int) -> bool:
    """True iff g has no (j+2)-connected subgraph; False disproves
    j-erasability."""
    if j < 1:
        raise ValueError("need j >= 1")
    return has_k_connected_subgraph(g, j + 2) is None


@dataclass(frozen=True)
class ConnectivityReport:
    k: int
    witness_subgraph: VertexSet | None
    decomposition: list[VertexSet]


def connectivity_report(g: Graph, k: int) -> ConnectivityReport:
    pieces = decompose_k_connected(g, k)
    return ConnectivityReport(k, pieces[0] if pieces else None, pieces)


@dataclass(frozen=True)
class EdgeBounds:
    """Closed-form thresholds above which a (k+1)-connected subgraph exists.

    `mader` = 3/2 (k - 1/3)(n - k), the conjectured tight value (proved
    unbeatable from below); `bk` = 19k/12 (n - k), the proven threshold,
    valid for n >= 5k/2 (`bk_applicable`).
    """

    n: int
    k: int
    mader: Fraction
    bk: Fraction
    bk_applicable: bool


def edge_bounds(n: int, k: int) -> EdgeBounds:
    if k < 2:
        raise ValueError("need k >= 2")
    if n < k + 1:
        raise ValueError("need n >= k+1")
    mader = Fraction(3, 2) * (Fraction(k) - Fraction(1, 3)) * (n - k)
    bk = Fraction(19 * k, 12) * (n - k)
    return EdgeBounds(n, k, mader, bk, n >= Fraction(5 * k, 2))
