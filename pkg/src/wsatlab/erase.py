"""The erase process: the complement-side dual of weak K_{s,t}-saturation.

An edge e of G is erasable (exact mode, parameters s <= t) when the vertex
set splits into an excluded set of size n-s-t and two sides of sizes exactly
s and t such that e is the only edge between the sides.  Deleting the sides'
non-edges one at a time in the complement is exactly the saturation process,
so "G empties under erasure" and "complement(G) is weakly saturated" are the
same statement, provided the complement is K_{s,t}-free.

The relaxed j-erase drops the side-size constraint and fixes only the number
of excluded vertices; it is equivalent to the endpoints having local vertex
connectivity at most j once the edge itself is removed, which is how
witnesses are found here.  Any edge of any graph on j+1 vertices may be
erased (the degenerate case has no room for two sides plus j excluded).

Greedy erasure is complete: a witness stays valid when some other edge is
deleted, hence every spanning subgraph of an erasable graph is erasable and
the order of erasures never matters for the verdict.  Certificates store the
full witness of every step so they can be re-validated without any search.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
import json
from typing import Sequence, Union

from .graphs import (
    Edge,
    Graph,
    VertexSet,
    bits_of,
    component_masks,
    mask_of,
    members,
    norm_edge,
    reach_mask,
    _vertex_cut_masks,
)


# -- modes and witnesses -----------------------------------------------------


@dataclass(frozen=True)
class ExactMode:
    s: int
    t: int

    def __post_init__(self):
        if not 1 <= self.s <= self.t:
            raise ValueError(f"need 1 <= s <= t, got s={self.s}, t={self.t}")

    @property
    def kind(self) -> str:
        return "exact"


@dataclass(frozen=True)
class RelaxedMode:
    j: int

    def __post_init__(self):
        if self.j < 2:
            raise ValueError(f"relaxed mode needs j >= 2, got j={self.j}")

    @property
    def kind(self) -> str:
        return "relaxed"


Mode = Union[ExactMode, RelaxedMode]


@dataclass(frozen=True)
class ExactWitness:
    """Witness partition for one exact erasure.

    `side1` has size s and `side2` size t; together with `excluded` they
    partition the vertices, the edge's endpoints land in different sides (in
    either orientation), and the edge is the unique side1-side2 edge.
    """

    edge: Edge
    excluded: VertexSet
    side1: VertexSet
    side2: VertexSet


@dataclass(frozen=True)
class RelaxedWitness:
    """Cut of size exactly j separating the endpoints once the edge is gone."""

    edge: Edge
    cut: VertexSet


@dataclass(frozen=True)
class TrivialSmallGraph:
    """Degenerate relaxed witness: the whole graph has j+1 vertices."""

    edge: Edge


Witness = Union[ExactWitness, RelaxedWitness, TrivialSmallGraph]


@dataclass(frozen=True)
class EraseStep:
    edge: Edge
    witness: Witness


@dataclass
class EraseCertificate:
    mode: Mode
    n: int
    steps: list[EraseStep] = field(default_factory=list)

    @property
    def edge_order(self) -> list[Edge]:
        return [s.edge for s in self.steps]


@dataclass
class StuckReport:
    """Greedy failure: the remaining graph and the edges that admit no witness."""

    mode: Mode
    remaining: Graph
    tried: list[Edge]
    steps_done: list[EraseStep]


@dataclass
class VerificationReport:
    ok: bool
    steps_checked: int
    failed_step: int | None = None
    reason: str | None = None


# -- witness search kernels (raw masks) --------------------------------------


def _split_with_target(comp_u: int, others: list[int], need: int) -> int | None:
    """Extend comp_u by whole components so the side reaches `need` extra
    vertices; returns the side mask or None.  Subset-sum over component sizes
    with a bit-parallel reachability table and back-pointer reconstruction."""
    if need < 0:
        return None
    sizes = [c.bit_count() for c in others]
    ach = [1]
    for sz in sizes:
        ach.append(ach[-1] | ach[-1] << sz)
    if not ach[-1] >> need & 1:
        return None
    side = comp_u
    rem = need
    for i in range(len(sizes) - 1, -1, -1):
        if ach[i] >> rem & 1:
            continue  # reachable without component i
        side |= others[i]
        rem -= sizes[i]
    assert rem == 0
    return side


def _exact_witness_masks(
    adj: Sequence[int],
    n: int,
    s: int,
    t: int,
    u: int,
    v: int,
    excluded_first: VertexSet | None = None,
) -> tuple[int, int, int] | None:
    """Find (excluded_mask, side_s_mask, side_t_mask) for edge (u,v), or None.

    Iterates excluded sets in lexicographic order (optionally trying a hinted
    set first), splits off the components of (g - W) - e, and decides side
    sizes by subset-sum over component sizes.
    """
    j = n - s - t
    full = (1 << n) - 1
    ubit, vbit = 1 << u, 1 << v
    avail = tuple(bits_of(full & ~ubit & ~vbit))
    adj_u_cut = adj[u] & ~vbit  # edge (u,v) removed

    def try_excluded(wmask: int) -> tuple[int, int, int] | None:
        rem = full & ~wmask
        # component of u in (g - W) - e
        comp_u = ubit
        frontier = ubit
        first = True
        while frontier:
            nxt = 0
            for x in bits_of(frontier):
                nxt |= adj_u_cut if (first and x == u) else adj[x]
            first = False
            nxt &= rem & ~comp_u
            comp_u |= nxt
            frontier = nxt
        if comp_u & vbit:
            return None
        comp_v = reach_mask(adj, v, rem & ~comp_u)
        others = component_masks(adj, rem & ~comp_u & ~comp_v)
        cu = comp_u.bit_count()
        for su in (s, t) if s != t else (s,):
            side_u = _split_with_target(comp_u, others, su - cu)
            if side_u is not None:
                side_v = rem & ~side_u
                if su == s:
                    return wmask, side_u, side_v
                return wmask, side_v, side_u
        return None

    if excluded_first is not None and len(excluded_first) == j:
        wmask = mask_of(excluded_first)
        if not wmask & (ubit | vbit):
            got = try_excluded(wmask)
            if got:
                return got
    if j == 0:
        return try_excluded(0)
    for wtuple in combinations(avail, j):
        got = try_excluded(mask_of(wtuple))
        if got:
            return got
    return None


def _relaxed_witness_masks(
    adj: Sequence[int], n: int, j: int, u: int, v: int
) -> tuple[int, ...] | str | None:
    """Cut tuple for a relaxed j-erase of (u,v), "trivial" when n = j+1,
    None when the endpoints stay (j+1)-connected after removing the edge."""
    if n == j + 1:
        return "trivial"
    cut_adj = list(adj)
    cut_adj[u] &= ~(1 << v)
    cut_adj[v] &= ~(1 << u)
    # stop_at=j+1: a j-erase witness exists iff connectivity stays <= j, and
    # below the threshold the minimum cut comes back extracted.
    kappa, probe = _vertex_cut_masks(cut_adj, n, u, v, stop_at=j + 1)
    if kappa > j:
        return None
    cut = set(probe)
    for w in range(n):
        if len(cut) == j:
            break
        if w != u and w != v and w not in cut:
            cut.add(w)  # pad: extra removals cannot reconnect the endpoints
    return tuple(sorted(cut))


# -- public witness search ----------------------------------------------------


def find_exact_witness(
    g: Graph,
    e: Edge,
    s: int,
    t: int,
    excluded_hint: VertexSet | None = None,
) -> ExactWitness | None:
    """Search a witness for erasing `e` under side sizes (s, t).

    Designed for s >= 3 like everything at this vertex scale, but any
    1 <= s <= t is accepted (small-s runs back the bounds cross-checks).
    """
    u, v = norm_edge(*e)
    if s > t:
        raise ValueError("need s <= t")
    if g.n < s + t:
        raise ValueError(f"graph on {g.n} vertices cannot split into sides {s}+{t}")
    if not g.has_edge(u, v):
        raise ValueError(f"edge {e} not in graph")
    got = _exact_witness_masks(g.adj, g.n, s, t, u, v, excluded_first=excluded_hint)
    if got is None:
        return None
    wmask, smask, tmask = got
    return ExactWitness((u, v), members(wmask), members(smask), members(tmask))


def find_relaxed_witness(
    g: Graph, e: Edge, j: int
) -> RelaxedWitness | TrivialSmallGraph | None:
    if j < 2:
        raise ValueError("relaxed erase needs j >= 2")
    if g.n < j + 1:
        raise ValueError(f"graph on {g.n} vertices is below the j+1 = {j + 1} floor")
    u, v = norm_edge(*e)
    if not g.has_edge(u, v):
        raise ValueError(f"edge {e} not in graph")
    got = _relaxed_witness_masks(g.adj, g.n, j, u, v)
    if got is None:
        return None
    if got == "trivial":
        return TrivialSmallGraph((u, v))
    return RelaxedWitness((u, v), got)


# -- witness validation (definition-level, independent of the search path) ----


def witness_valid(g: Graph, witness: Witness, mode: Mode) -> tuple[bool, str | None]:
    u, v = witness.edge
    if not g.has_edge(u, v):
        return False, f"edge {witness.edge} absent"
    if isinstance(witness, ExactWitness):
        if not isinstance(mode, ExactMode):
            return False, "exact witness under non-exact mode"
        s, t = mode.s, mode.t
        wmask = mask_of(witness.excluded)
        smask = mask_of(witness.side1)
        tmask = mask_of(witness.side2)
        if wmask | smask | tmask != g.full_mask or (
            wmask & smask or wmask & tmask or smask & tmask
        ):
            return False, "excluded/side1/side2 do not partition the vertices"
        if smask.bit_count() != s or tmask.bit_count() != t:
            return False, f"side sizes {smask.bit_count()},{tmask.bit_count()} != {s},{t}"
        if not ((smask >> u & 1 and tmask >> v & 1) or (smask >> v & 1 and tmask >> u & 1)):
            return False, "edge endpoints not split across the sides"
        crossing = sum((g.adj[x] & tmask).bit_count() for x in bits_of(smask))
        if crossing != 1:
            return False, f"{crossing} edges between the sides (need exactly 1)"
        return True, None
    if isinstance(witness, RelaxedWitness):
        if not isinstance(mode, RelaxedMode):
            return False, "relaxed witness under non-relaxed mode"
        j = mode.j
        cmask = mask_of(witness.cut)
        if cmask.bit_count() != j or len(set(witness.cut)) != j:
            return False, f"cut size {len(witness.cut)} != j={j}"
        if cmask >> u & 1 or cmask >> v & 1:
            return False, "cut contains an endpoint"
        rem_adj = list(g.adj)
        rem_adj[u] &= ~(1 << v)
        rem_adj[v] &= ~(1 << u)
        reach = reach_mask(rem_adj, u, g.full_mask & ~cmask)
        if reach >> v & 1:
            return False, "cut does not separate the endpoints"
        return True, None
    if isinstance(witness, TrivialSmallGraph):
        if not isinstance(mode, RelaxedMode):
            return False, "trivial witness under non-relaxed mode"
        if g.n != mode.j + 1:
            return False, f"trivial witness needs n = j+1, graph has n={g.n}"
        return True, None
    return False, f"unknown witness type {type(witness).__name__}"


# -- greedy erasure ------------------------------------------------------------


def _validate_mode(g: Graph, mode: Mode) -> None:
    if isinstance(mode, ExactMode):
        if g.n < mode.s + mode.t:
            raise ValueError(f"n={g.n} below s+t={mode.s + mode.t}")
    else:
        if g.n < mode.j + 1:
            raise ValueError(f"n={g.n} below j+1={mode.j + 1}")


def _witness_for(adj: list[int], n: int, mode: Mode, u: int, v: int) -> Witness | None:
    if isinstance(mode, ExactMode):
        got = _exact_witness_masks(adj, n, mode.s, mode.t, u, v)
        if got is None:
            return None
        wmask, smask, tmask = got
        return ExactWitness((u, v), members(wmask), members(smask), members(tmask))
    got = _relaxed_witness_masks(adj, n, mode.j, u, v)
    if got is None:
        return None
    if got == "trivial":
        return TrivialSmallGraph((u, v))
    return RelaxedWitness((u, v), got)


def greedy_erase(g: Graph, mode: Mode) -> EraseCertificate | StuckReport:
    """Erase the first witness-admitting edge in lexicographic order until the
    graph empties (certificate) or no edge admits a witness (stuck report).

    Deleting edges never invalidates other witnesses, so greedy choice is both
    sound and complete: it empties the graph iff the graph is erasable.
    """
    _validate_mode(g, mode)
    n = g.n
    adj = list(g.adj)
    steps: list[EraseStep] = []
    while True:
        edges = []
        for u in range(n):
            rest = adj[u] >> (u + 1) << (u + 1)
            for v in bits_of(rest):
                edges.append((u, v))
        if not edges:
            return EraseCertificate(mode, n, steps)
        hit = None
        for u, v in edges:
            w = _witness_for(adj, n, mode, u, v)
            if w is not None:
                hit = (u, v, w)
                break
        if hit is None:
            return StuckReport(mode, Graph.from_adj(adj), edges, steps)
        u, v, w = hit
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        steps.append(EraseStep((u, v), w))


def erase_depth(g: Graph, mode: Mode) -> int:
    """Number of edges greedy erasure removes before stopping (the heuristic
    search score; equals |E| iff the graph is erasable)."""
    return greedy_depth_masks(list(g.adj), g.n, mode)[1]


def greedy_depth_masks(adj: list[int], n: int, mode: Mode) -> tuple[bool, int]:
    """(emptied, steps) of greedy erasure on raw masks; mutates `adj`.

    Same edge order and witness search as `greedy_erase`, but no witness
    objects are materialized -- this is the search engines' hot kernel.
    """
    depth = 0
    exact = isinstance(mode, ExactMode)
    while True:
        hit = False
        empty = True
        for u in range(n):
            rest = adj[u] >> (u + 1) << (u + 1)
            if rest:
                empty = False
            for v in bits_of(rest):
                if exact:
                    got = _exact_witness_masks(adj, n, mode.s, mode.t, u, v)
                else:
                    got = _relaxed_witness_masks(adj, n, mode.j, u, v)
                if got is not None:
                    adj[u] &= ~(1 << v)
                    adj[v] &= ~(1 << u)
                    depth += 1
                    hit = True
                    break
            if hit:
                break
        if empty:
            return True, depth
        if not hit:
            return False, depth


def replay_certificate(g: Graph, cert: EraseCertificate) -> VerificationReport:
    """Re-validate every stored witness against the evolving graph.

    Success requires each step's edge to be present at its turn, each witness
    to pass the definition-level check, no edge repeats, and the final graph
    to be empty; success therefore proves g erasable in the certificate mode.
    """
    try:
        _validate_mode(g, cert.mode)
    except ValueError as exc:
        return VerificationReport(False, 0, None, str(exc))
    if cert.n != g.n:
        return VerificationReport(False, 0, None, f"certificate n={cert.n} != graph n={g.n}")
    cur = g
    seen: set[Edge] = set()
    for idx, step in enumerate(cert.steps):
        e = norm_edge(*step.edge)
        if e in seen:
            return VerificationReport(False, idx, idx, f"edge {e} repeated")
        seen.add(e)
        if step.witness.edge != step.edge:
            return VerificationReport(False, idx, idx, "witness edge mismatch")
        if not cur.has_edge(*e):
            return VerificationReport(False, idx, idx, f"edge {e} absent at step {idx}")
        ok, why = witness_valid(cur, step.witness, cert.mode)
        if not ok:
            return VerificationReport(False, idx, idx, f"step {idx}: {why}")
        cur = cur.without_edge(*e)
    if cur.edge_count != 0:
        return VerificationReport(
            False, len(cert.steps), None,
            f"{cur.edge_count} edges remain after the last step",
        )
    return VerificationReport(True, len(cert.steps))


# -- K_{s,t} containment and weak saturation ----------------------------------


def contains_kst(g: Graph, s: int, t: int) -> tuple[VertexSet, VertexSet] | None:
    """Disjoint (A, B) with |A|=s, |B|=t and all s*t cross pairs present, or
    None.  Not-necessarily-induced subgraph search: s-subsets enumerated in
    descending-degree order, common neighborhoods kept as masks."""
    if s > t:
        raise ValueError("need s <= t")
    n = g.n
    if n < s + t:
        return None
    adj = g.adj
    cand = sorted(
        (v for v in range(n) if adj[v].bit_count() >= t),
        key=lambda v: (-adj[v].bit_count(), v),
    )
    if len(cand) < s:
        return None
    found: tuple[VertexSet, VertexSet] | None = None

    def extend(start: int, chosen: list[int], common: int) -> bool:
        nonlocal found
        if len(chosen) == s:
            bmask = common & ~mask_of(chosen)
            if bmask.bit_count() >= t:
                found = (tuple(sorted(chosen)), members(bmask)[:t])
                return True
            return False
        for i in range(start, len(cand)):
            if len(cand) - i < s - len(chosen):
                break
            v = cand[i]
            newc = common & adj[v]
            if newc.bit_count() < t:
                continue
            chosen.append(v)
            if extend(i + 1, chosen, newc):
                return True
            chosen.pop()
        return False

    extend(0, [], g.full_mask)
    return found


@dataclass
class SaturationReport:
    s: int
    t: int
    free: bool
    kst_found: tuple[VertexSet, VertexSet] | None
    erase_result: EraseCertificate | StuckReport
    saturated: bool
    additions: list[tuple[Edge, VertexSet, VertexSet]]
    edge_count: int


def is_weakly_saturated(h: Graph, s: int, t: int) -> SaturationReport:
    """Weak K_{s,t}-saturation via the complement duality.

    h is weakly saturated iff h is K_{s,t}-free and complement(h) empties
    under exact (s,t)-erasure.  Adding the erased edges to h in the same
    temporal order creates, at each step, a K_{s,t} whose parts are that
    step's witness sides -- the erased edge is the copy's unique missing
    cross pair, freshly supplied.
    """
    if h.n < s + t:
        raise ValueError(f"n={h.n} below s+t={s + t}")
    kst = contains_kst(h, s, t)
    res = greedy_erase(h.complement(), ExactMode(s, t))
    additions: list[tuple[Edge, VertexSet, VertexSet]] = []
    if isinstance(res, EraseCertificate):
        for step in res.steps:
            w = step.witness
            assert isinstance(w, ExactWitness)
            additions.append((step.edge, w.side1, w.side2))
    return SaturationReport(
        s=s,
        t=t,
        free=kst is None,
        kst_found=kst,
        erase_result=res,
        saturated=kst is None and isinstance(res, EraseCertificate),
        additions=additions,
        edge_count=h.edge_count,
    )


# -- certificate serialization -------------------------------------------------


def mode_to_dict(mode: Mode) -> dict:
    if isinstance(mode, ExactMode):
        return {"kind": "exact", "s": mode.s, "t": mode.t}
    return {"kind": "relaxed", "j": mode.j}


def mode_from_dict(d: dict) -> Mode:
    if d["kind"] == "exact":
        return ExactMode(d["s"], d["t"])
    if d["kind"] == "relaxed":
        return RelaxedMode(d["j"])
    raise ValueError(f"unknown mode kind {d['kind']!r}")


def _step_to_dict(step: EraseStep) -> dict:
    d: dict = {"edge": list(step.edge)}
    w = step.witness
    if isinstance(w, ExactWitness):
        d["excluded"] = list(w.excluded)
        d["side1"] = list(w.side1)
        d["side2"] = list(w.side2)
    elif isinstance(w, RelaxedWitness):
        d["cut"] = list(w.cut)
    else:
        d["trivial"] = True
    return d


def _step_from_dict(d: dict) -> EraseStep:
    edge = norm_edge(*d["edge"])
    if "side1" in d:
        w: Witness = ExactWitness(
            edge, tuple(d.get("excluded", [])), tuple(d["side1"]), tuple(d["side2"])
        )
    elif "cut" in d:
        w = RelaxedWitness(edge, tuple(d["cut"]))
    elif d.get("trivial"):
        w = TrivialSmallGraph(edge)
    else:
        raise ValueError(f"step {d!r} carries no witness")
    return EraseStep(edge, w)


def certificate_to_json(cert: EraseCertificate) -> str:
    return json.dumps(
        {
            "format": "wsatlab-certificate",
            "version": 1,
            "mode": mode_to_dict(cert.mode),
            "n": cert.n,
            "steps": [_step_to_dict(s) for s in cert.steps],
        }
    )


def certificate_from_json(text: str) -> EraseCertificate:
    d = json.loads(text)
    if d.get("format") != "wsatlab-certificate":
        raise ValueError("not a wsatlab certificate")
    return EraseCertificate(
        mode_from_dict(d["mode"]), d["n"], [_step_from_dict(s) for s in d["steps"]]
    )


def certificate_to_text(cert: EraseCertificate) -> str:
    if isinstance(cert.mode, ExactMode):
        head = f"mode exact s={cert.mode.s} t={cert.mode.t}"
    else:
        head = f"mode relaxed j={cert.mode.j}"
    lines = ["wsatlab-certificate v1", head, f"n {cert.n}"]
    for step in cert.steps:
        u, v = step.edge
        w = step.witness
        if isinstance(w, ExactWitness):
            lines.append(
                f"erase {u} {v} | excluded: {' '.join(map(str, w.excluded))}"
                f" | side1: {' '.join(map(str, w.side1))}"
                f" | side2: {' '.join(map(str, w.side2))}"
            )
        elif isinstance(w, RelaxedWitness):
            lines.append(f"erase {u} {v} | cut: {' '.join(map(str, w.cut))}")
        else:
            lines.append(f"erase {u} {v} | trivial")
    return "\n".join(lines) + "\n"


def certificate_from_text(text: str) -> EraseCertificate:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != "wsatlab-certificate v1":
        raise ValueError("missing 'wsatlab-certificate v1' header")
    head = lines[1].split()
    if head[:2] == ["mode", "exact"]:
        params = dict(p.split("=") for p in head[2:])
        mode: Mode = ExactMode(int(params["s"]), int(params["t"]))
    elif head[:2] == ["mode", "relaxed"]:
        params = dict(p.split("=") for p in head[2:])
        mode = RelaxedMode(int(params["j"]))
    else:
        raise ValueError(f"bad mode line {lines[1]!r}")
    if lines[2].split()[0] != "n":
        raise ValueError(f"bad n line {lines[2]!r}")
    n = int(lines[2].split()[1])
    steps = []
    for ln in lines[3:]:
        fields = [f.strip() for f in ln.split("|")]
        parts = fields[0].split()
        if parts[0] != "erase":
            raise ValueError(f"bad step line {ln!r}")
        edge = norm_edge(int(parts[1]), int(parts[2]))
        body: dict = {"edge": list(edge)}
        for f in fields[1:]:
            if f == "trivial":
                body["trivial"] = True
            else:
                name, _, rest = f.partition(":")
                body[name.strip()] = [int(x) for x in rest.split()]
        steps.append(_step_from_dict(body))
    return EraseCertificate(mode, n, steps)
