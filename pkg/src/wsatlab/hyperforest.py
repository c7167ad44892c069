"""Auxiliary hyperforest bookkeeping for exact erase processes (one closed
vertex per step, i.e. n = s+t+1).

Each erase step updates a hypergraph on the fixed vertex set: first the
edge-operation splits the unique hyperedge containing the erased edge into
its surviving connected pieces of size >= 2, then the vertex-operation splits
every hyperedge through the closed vertex into components-plus-that-vertex.
The updated hypergraph stays a hyperforest (no Berge cycles; any two
hyperedges share at most one vertex), keeps every remaining graph edge inside
a hyperedge, and keeps every hyperedge inducing a connected subgraph.

With f = hyperedge count and c = component count (isolated vertices count as
components), the semi-invariant s = f + 2c grows by at least 1 per step; the
per-step excess q = (s_after - s_before) - 1 and its total Q turn edge-count
upper bounds for erasable graphs into arithmetic:  m + Q = s_final - s_0 with
s_final = 2n once the graph is empty.

Every step's (f, c) change decomposes as one of the vectors (1,0), (1,1),
(0,1), (-1,1) -- chosen by the edge-operation outcome, not by arithmetic
back-fitting -- plus a nonnegative vertex-operation surplus (lambda, 0).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import Edge, Graph, VertexSet, bits_of, component_masks, members, norm_edge
from .erase import EraseCertificate, ExactMode, ExactWitness

IncrementVector = tuple[int, int]
ALLOWED_INCREMENTS: tuple[IncrementVector, ...] = ((1, 0), (1, 1), (0, 1), (-1, 1))


class HyperforestError(ValueError):
    """Structural violation while updating or classifying a hyperforest step."""


@dataclass(frozen=True)
class HyperforestState:
    vertex_count: int
    hyperedges: tuple[int, ...]  # bitmasks, each of size >= 2, sorted

    def member_sets(self) -> list[VertexSet]:
        return [members(h) for h in self.hyperedges]

    @property
    def f(self) -> int:
        return len(self.hyperedges)

    @property
    def c(self) -> int:
        return _component_count(self.vertex_count, self.hyperedges)

    @property
    def s(self) -> int:
        return self.f + 2 * self.c


def _component_count(n: int, hyperedges: tuple[int, ...]) -> int:
    """Components of the vertex/hyperedge incidence graph, counting isolated
    vertices; union-find over vertices chained through hyperedges."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for h in hyperedges:
        vs = list(bits_of(h))
        r = find(vs[0])
        for v in vs[1:]:
            rv = find(v)
            if rv != r:
                parent[rv] = r
    return len({find(v) for v in range(n)})


@dataclass(frozen=True)
class TraceRecord:
    step_index: int
    erased: Edge
    closed: int
    f_before: int
    c_before: int
    f_after: int
    c_after: int
    increment: IncrementVector
    lam: int
    q: int

    def to_row(self) -> dict:
        return {
            "step": self.step_index,
            "edge": list(self.erased),
            "closed": self.closed,
            "f": self.f_after,
            "c": self.c_after,
            "s": self.f_after + 2 * self.c_after,
            "vector": list(self.increment),
            "lambda": self.lam,
            "q": self.q,
        }


@dataclass
class ProcessTrace:
    records: list[TraceRecord]
    s0: int
    total_q: int

    @property
    def step_count(self) -> int:
        return len(self.records)

    @property
    def s_final(self) -> int:
        if not self.records:
            return self.s0
        last = self.records[-1]
        return last.f_after + 2 * last.c_after

    def to_rows(self) -> list[dict]:
        return [r.to_row() for r in self.records]


@dataclass
class PropertyReport:
    ok: bool
    violations: list[str] = field(default_factory=list)


def init_hyperforest(g: Graph) -> HyperforestState:
    """Hyperedges are the connected components of g of size >= 2; isolated
    vertices carry no hyperedge but still count as components."""
    comps = [c for c in component_masks(g.adj, g.full_mask) if c.bit_count() >= 2]
    return HyperforestState(g.n, tuple(sorted(comps)))


def check_properties(state: HyperforestState, g: Graph) -> PropertyReport:
    """All structural requirements at once: edge coverage, induced
    connectivity, pairwise intersections <= 1, and incidence acyclicity."""
    violations = []
    hs = state.hyperedges
    for u, v in g.edges():
        pair = 1 << u | 1 << v
        if not any(h & pair == pair for h in hs):
            violations.append(f"edge ({u},{v}) not inside any hyperedge")
    for h in hs:
        if h.bit_count() < 2:
            violations.append(f"hyperedge {members(h)} has fewer than 2 vertices")
        elif len(component_masks(g.adj, h)) != 1:
            violations.append(f"hyperedge {members(h)} induces a disconnected subgraph")
    for i in range(len(hs)):
        for k in range(i + 1, len(hs)):
            inter = hs[i] & hs[k]
            if inter.bit_count() > 1:
                violations.append(
                    f"hyperedges {members(hs[i])} and {members(hs[k])} share"
                    f" {inter.bit_count()} vertices"
                )
    # Acyclic incidence forest: sum |F| = (#vertex nodes + #hyperedge nodes) - #components.
    incidence_edges = sum(h.bit_count() for h in hs)
    if incidence_edges != state.vertex_count + state.f - state.c:
        violations.append("incidence graph contains a cycle")
    return PropertyReport(not violations, violations)


def apply_step(
    state: HyperforestState, g_before: Graph, e: Edge, closed_vertex: int
) -> tuple[HyperforestState, TraceRecord]:
    """Edge-operation then vertex-operations for one exact erase step.

    `closed_vertex` is the witness's excluded vertex.  Raises if the erased
    edge lies in zero or several hyperedges (property 1 / hyperforest broken
    upstream) or if the observed (f, c) change is not an allowed increment
    plus (lambda >= 0, 0).
    """
    u, v = norm_edge(*e)
    if not g_before.has_edge(u, v):
        raise HyperforestError(f"edge ({u},{v}) not in current graph")
    pair = 1 << u | 1 << v
    owners = [h for h in state.hyperedges if h & pair == pair]
    if len(owners) != 1:
        raise HyperforestError(
            f"edge ({u},{v}) lies in {len(owners)} hyperedges (need exactly 1)"
        )
    target = owners[0]
    g_after = g_before.without_edge(u, v)

    pieces = component_masks(g_after.adj, target)
    if len(pieces) > 2:
        raise HyperforestError(
            f"hyperedge {members(target)} split into {len(pieces)} parts; "
            "it cannot have induced a connected subgraph before the step"
        )
    if len(pieces) == 1:
        vector: IncrementVector = (1, 0)
    else:
        small = sum(1 for p in pieces if p.bit_count() == 1)
        vector = (1, 1) if small == 0 else (0, 1) if small == 1 else (-1, 1)

    intermediate = [h for h in state.hyperedges if h != target]
    intermediate.extend(p for p in pieces if p.bit_count() >= 2)

    vbit = 1 << closed_vertex
    result: list[int] = []
    for h in sorted(intermediate):  # ascending minimum vertex: deterministic
        if h & vbit:
            for comp in component_masks(g_after.adj, h & ~vbit):
                result.append(comp | vbit)
        else:
            result.append(h)

    new_state = HyperforestState(state.vertex_count, tuple(sorted(result)))
    f0, c0 = state.f, state.c
    f1, c1 = new_state.f, new_state.c
    lam = f1 - f0 - vector[0]
    if c1 - c0 != vector[1] or lam < 0:
        raise HyperforestError(
            f"(f,c) moved ({f0},{c0})->({f1},{c1}), not vector {vector} plus"
            " a nonnegative hyperedge surplus"
        )
    q = (f1 + 2 * c1) - (f0 + 2 * c0) - 1
    record = TraceRecord(
        step_index=-1,
        erased=(u, v),
        closed=closed_vertex,
        f_before=f0,
        c_before=c0,
        f_after=f1,
        c_after=c1,
        increment=vector,
        lam=lam,
        q=q,
    )
    return new_state, record


def trace_process(g: Graph, cert: EraseCertificate) -> ProcessTrace:
    """Full bookkeeping run over an exact certificate with n = s+t+1.

    Structural properties are re-checked after every step; the semi-invariant
    must rise by at least 1 per step and land on s_final = 2n, so the step
    count and the excess Q satisfy  m + Q = 2n - s_0.
    """
    mode = cert.mode
    if not isinstance(mode, ExactMode):
        raise ValueError("tracing is defined for exact certificates only")
    if g.n != mode.s + mode.t + 1:
        raise ValueError(
            f"tracing needs n = s+t+1 (single closed vertex); got n={g.n},"
            f" s={mode.s}, t={mode.t}"
        )
    state = init_hyperforest(g)
    report = check_properties(state, g)
    if not report.ok:
        raise HyperforestError(f"initial state invalid: {report.violations}")
    s0 = state.s
    cur = g
    records: list[TraceRecord] = []
    prev_s = s0
    for idx, step in enumerate(cert.steps):
        w = step.witness
        if not isinstance(w, ExactWitness) or len(w.excluded) != 1:
            raise ValueError(f"step {idx}: tracing needs a single closed vertex")
        try:
            state, rec = apply_step(state, cur, step.edge, w.excluded[0])
        except HyperforestError as exc:
            raise HyperforestError(f"step {idx}: {exc}") from None
        cur = cur.without_edge(*step.edge)
        report = check_properties(state, cur)
        if not report.ok:
            raise HyperforestError(f"step {idx}: {report.violations}")
        rec = TraceRecord(**{**rec.__dict__, "step_index": idx})
        records.append(rec)
        new_s = state.s
        if new_s < prev_s + 1:
            raise HyperforestError(f"step {idx}: semi-invariant failed to increase")
        prev_s = new_s
    if cur.edge_count == 0:
        if state.f != 0 or state.c != g.n or state.s != 2 * g.n:
            raise HyperforestError(
                f"final state (f={state.f}, c={state.c}) is not the empty-graph state"
            )
    total_q = sum(r.q for r in records)
    if len(records) + total_q != prev_s - s0:
        raise HyperforestError("step count plus excess does not match the invariant rise")
    return ProcessTrace(records, s0, total_q)
