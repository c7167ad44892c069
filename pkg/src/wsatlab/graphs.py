"""Compact labeled simple graphs on at most 64 vertices.

Vertices are integers 0..n-1 and every vertex set is a machine-word bitmask,
so neighborhood algebra (intersection, restriction to a working set, component
sweeps) is a handful of int operations.  Graphs are immutable after
construction and safe to share across workers; every operation here is a pure
function.

Besides the container this module provides the connectivity primitives the
rest of the package is built on: component decomposition inside an induced
vertex set, Menger-style local vertex connectivity via unit-capacity flow with
vertex splitting (including minimum-cut extraction), and a canonical form for
small graphs used by isomorph-free search.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64
CANON_MAX_VERTICES = 16

Edge = tuple[int, int]
VertexSet = tuple[int, ...]


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits_of(mask: int) -> Iterator[int]:
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def members(mask: int) -> VertexSet:
    return tuple(bits_of(mask))


def norm_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"loop edge at vertex {u}")
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph with per-vertex bitmask adjacency.

    `adj[v]` has bit `u` set iff {u,v} is an edge.  Symmetry and absence of
    loops are enforced at construction; instances are immutable.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        adj = [0] * n
        for u, v in edges:
            u, v = norm_edge(u, v)
            if v >= n:
                raise ValueError(f"edge ({u},{v}) has endpoint >= n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)

    @classmethod
    def from_adj(cls, adj: Sequence[int]) -> "Graph":
        g = object.__new__(cls)
        g.n = len(adj)
        g.adj = tuple(adj)
        return g

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls.from_adj([full ^ (1 << v) for v in range(n)])

    # -- basic queries ---------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> VertexSet:
        return members(self.adj[v])

    def edges(self) -> list[Edge]:
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits_of(rest):
                out.append((u, v))
        return out

    @property
    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    # -- derived graphs --------------------------------------------------

    def with_edge(self, u: int, v: int) -> "Graph":
        u, v = norm_edge(u, v)
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph.from_adj(adj)

    def without_edge(self, u: int, v: int) -> "Graph":
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph.from_adj(adj)

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph.from_adj(
            [(full ^ self.adj[v]) & ~(1 << v) for v in range(self.n)]
        )

    def relabeled(self, perm: Sequence[int]) -> "Graph":
        """Image under the vertex map v -> perm[v]."""
        adj = [0] * self.n
        for u, v in self.edges():
            pu, pv = perm[u], perm[v]
            adj[pu] |= 1 << pv
            adj[pv] |= 1 << pu
        return Graph.from_adj(adj)

    # -- connectivity ----------------------------------------------------

    def components(self, within: Iterable[int] | None = None) -> list[VertexSet]:
        mask = self.full_mask if within is None else mask_of(within)
        return [members(c) for c in component_masks(self.adj, mask)]

    def is_connected(self) -> bool:
        return len(component_masks(self.adj, self.full_mask)) <= 1


def component_masks(adj: Sequence[int], within: int) -> list[int]:
    """Component bitmasks of the subgraph induced on `within`, ascending by
    lowest member.  Isolated members of `within` are singleton components."""
    out = []
    rest = within
    while rest:
        start = rest & -rest
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for v in bits_of(frontier):
                nxt |= adj[v]
            nxt &= within & ~comp
            comp |= nxt
            frontier = nxt
        out.append(comp)
        rest &= ~comp
    return out


def reach_mask(adj: Sequence[int], start: int, within: int) -> int:
    """Vertices reachable from `start` (a vertex index) inside `within`."""
    comp = 1 << start
    frontier = comp
    while frontier:
        nxt = 0
        for v in bits_of(frontier):
            nxt |= adj[v]
        nxt &= within & ~comp
        comp |= nxt
        frontier = nxt
    return comp


def complement(g: Graph) -> Graph:
    return g.complement()


def connected_components(g: Graph, within: Iterable[int] | None = None) -> list[VertexSet]:
    return g.components(within)


# -- local vertex connectivity (Menger via vertex splitting) --------------


def vertex_cut(g: Graph, u: int, v: int, stop_at: int | None = None) -> tuple[int, VertexSet]:
    """Minimum u-v vertex cut avoiding both endpoints, with its size.

    Requires u != v and {u,v} not an edge (callers handle the adjacent case by
    deleting the edge first).  Computed as unit-capacity max flow on the split
    digraph: each internal vertex w becomes an arc in(w)->out(w) of capacity
    one, so augmenting-path count equals the number of internally
    vertex-disjoint u-v paths (Menger).  With `stop_at=k` the search aborts
    once k paths exist and reports (k, ()) -- enough for threshold queries.
    """
    if u == v:
        raise ValueError("local connectivity requires distinct endpoints")
    if g.has_edge(u, v):
        raise ValueError("endpoints must be non-adjacent; remove the edge first")
    return _vertex_cut_masks(g.adj, g.n, u, v, stop_at)


def _vertex_cut_masks(
    adj: Sequence[int], n: int, u: int, v: int, stop_at: int | None = None
) -> tuple[int, VertexSet]:
    # Node 2w = in(w), 2w+1 = out(w); source = out(u), sink = in(v).
    cap: dict[int, dict[int, int]] = {}

    def add_arc(a: int, b: int) -> None:
        cap.setdefault(a, {})[b] = cap.get(a, {}).get(b, 0) + 1
        cap.setdefault(b, {}).setdefault(a, 0)

    for w in range(n):
        if w != u and w != v:
            add_arc(2 * w, 2 * w + 1)
    for x in range(n):
        for y in bits_of(adj[x] >> (x + 1) << (x + 1)):
            add_arc(2 * x + 1, 2 * y)
            add_arc(2 * y + 1, 2 * x)

    source, sink = 2 * u + 1, 2 * v
    # Flow value never exceeds min degree; each augmentation is one BFS.
    limit = min(adj[u].bit_count(), adj[v].bit_count())
    if stop_at is not None:
        limit = min(limit, stop_at)
    flow = 0
    while flow < limit:
        parent = {source: -1}
        queue = deque([source])
        while queue:
            a = queue.popleft()
            if a == sink:
                break
            for b, c in cap.get(a, {}).items():
                if c > 0 and b not in parent:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while b != source:
            a = parent[b]
            cap[a][b] -= 1
            cap[b][a] += 1
            b = a
        flow += 1
    if stop_at is not None and flow >= stop_at:
        return flow, ()

    # Min cut: split arcs in(w)->out(w) crossing the residual-reachable set.
    seen = {source}
    queue = deque([source])
    while queue:
        a = queue.popleft()
        for b, c in cap.get(a, {}).items():
            if c > 0 and b not in seen:
                seen.add(b)
                queue.append(b)
    cut = tuple(
        w for w in range(n)
        if w != u and w != v and 2 * w in seen and 2 * w + 1 not in seen
    )
    assert len(cut) == flow
    return flow, cut


def local_vertex_connectivity(g: Graph, u: int, v: int) -> int:
    """Maximum number of internally vertex-disjoint u-v paths."""
    return vertex_cut(g, u, v)[0]


# -- canonical form --------------------------------------------------------


def canonical_form(g: Graph) -> bytes:
    """Canonical byte string: equal for two graphs iff they are isomorphic.

    Degree-based color refinement, then individualize-and-refine branching on
    the first non-singleton cell; the canonical image is the minimum packed
    adjacency bitstring over all discrete leaves.  The leaf set is closed
    under isomorphism (cell choice depends only on colors), so the minimum is
    a class invariant, and the bitstring encodes the whole graph.
    """
    if g.n > CANON_MAX_VERTICES:
        raise ValueError(f"canonical form limited to n <= {CANON_MAX_VERTICES}")
    key = canonical_key(g.adj, g.n)
    nbits = g.n * (g.n - 1) // 2
    return bytes([g.n]) + key.to_bytes((nbits + 7) // 8 or 1, "big")


def canonical_key(adj: Sequence[int], n: int) -> int:
    """Canonical upper-triangle adjacency bits as an int (row-major order
    over the canonical labeling).  Core of `canonical_form`; operates on raw
    masks so search loops can use it without building Graph objects."""
    if n == 1:
        return 0
    nbrs = [tuple(bits_of(adj[v])) for v in range(n)]
    best: int | None = None

    def refine(colors: list[int]) -> list[int]:
        while True:
            sigs = [(colors[v], tuple(sorted(colors[w] for w in nbrs[v]))) for v in range(n)]
            order = {s: i for i, s in enumerate(sorted(set(sigs)))}
            new = [order[s] for s in sigs]
            if new == colors:
                return colors
            colors = new

    def emit(colors: list[int]) -> int:
        perm = sorted(range(n), key=colors.__getitem__)
        bits = 0
        for i in range(n):
            ai = adj[perm[i]]
            for j in range(i + 1, n):
                bits = bits << 1 | (ai >> perm[j] & 1)
        return bits

    def search(colors: list[int]) -> None:
        nonlocal best
        colors = refine(colors)
        cell_of: dict[int, list[int]] = {}
        for v in range(n):
            cell_of.setdefault(colors[v], []).append(v)
        target = None
        for c in sorted(cell_of):
            if len(cell_of[c]) > 1:
                target = cell_of[c]
                break
        if target is None:
            bits = emit(colors)
            if best is None or bits < best:
                best = bits
            return
        for v in target:
            child = list(colors)
            child[v] = n + 1  # fresh maximal color, re-ranked by refine
            search(child)

    search([adj[v].bit_count() for v in range(n)])
    assert best is not None
    return best


# -- small generators (test and construction helpers) ----------------------


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def all_edges(n: int) -> list[Edge]:
    """Edges of K_n in lexicographic order."""
    return list(combinations(range(n), 2))
