"""Deterministic generators for the extremal graphs, with their erasing or
saturation schedules.

Vertex labeling is fixed per family (label maps are part of the output), so
schedules, witnesses, and serialized forms are reproducible bit for bit.
Schedules carry a closed-vertex hint only where the source material states
one; replay falls back to witness search otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd

from .graphs import Edge, Graph, VertexSet, norm_edge


@dataclass(frozen=True)
class ScheduleStep:
    edge: Edge
    closed_hint: int | None = None


@dataclass(frozen=True)
class SaturationStep:
    edge: Edge
    side_s: VertexSet
    side_t: VertexSet


@dataclass
class ConstructionOutput:
    kind: str  # "erasable" | "saturated"
    s: int
    t: int
    graph: Graph
    vertex_labels: dict[str, int]
    expected_edge_count: int
    schedule: list[ScheduleStep] | None = None
    saturation_schedule: list[SaturationStep] | None = None

    def __post_init__(self):
        if self.graph.edge_count != self.expected_edge_count:
            raise AssertionError(
                f"construction has {self.graph.edge_count} edges,"
                f" expected {self.expected_edge_count}"
            )
        if len(self.vertex_labels) != self.graph.n:
            raise AssertionError("vertex labels are not a bijection onto V")


def fig1_graph(s: int) -> ConstructionOutput:
    """Erasable graph on 2s+1 vertices with 4s-4 edges (balanced case).

    A 4-cycle (a,b,c,d), a path a_0..a_{s-2} fully joined to a, and a path
    b_0..b_{s-3} fully joined to b.  The schedule opens the cycle by closing
    d, then a, then a, then a_0, and afterwards peels both fans edge by edge.
    """
    if s < 3:
        raise ValueError("need s >= 3")
    labels = {"a": 0, "b": 1, "c": 2, "d": 3}
    a_idx = [4 + i for i in range(s - 1)]
    b_idx = [4 + (s - 1) + i for i in range(s - 2)]
    for i, v in enumerate(a_idx):
        labels[f"a{i}"] = v
    for i, v in enumerate(b_idx):
        labels[f"b{i}"] = v
    a, b, c, d = 0, 1, 2, 3
    edges = [(a, b), (b, c), (c, d), (a, d)]
    edges += [(a_idx[i], a_idx[i + 1]) for i in range(s - 2)]
    edges += [(b_idx[i], b_idx[i + 1]) for i in range(s - 3)]
    edges += [(a, v) for v in a_idx]
    edges += [(b, v) for v in b_idx]
    g = Graph(2 * s + 1, edges)

    sched = [
        ScheduleStep(norm_edge(a, b), d),
        ScheduleStep(norm_edge(c, d), a),
        ScheduleStep(norm_edge(b, c), a),
        ScheduleStep(norm_edge(a, d), a_idx[0]),
    ]
    for i in range(s - 2):
        sched.append(ScheduleStep(norm_edge(a_idx[i], a), a_idx[i + 1]))
        sched.append(ScheduleStep(norm_edge(a_idx[i], a_idx[i + 1]), a))
    sched.append(ScheduleStep(norm_edge(a, a_idx[s - 2])))
    for i in range(s - 3):
        sched.append(ScheduleStep(norm_edge(b_idx[i], b), b_idx[i + 1]))
        sched.append(ScheduleStep(norm_edge(b_idx[i], b_idx[i + 1]), b))
    sched.append(ScheduleStep(norm_edge(b, b_idx[s - 3])))
    return ConstructionOutput("erasable", s, s, g, labels, 4 * s - 4, schedule=sched)


def _fig2_base(s: int, t: int, drop_a_last: bool) -> tuple[Graph, dict[str, int], list[int], list[int]]:
    labels = {"a": 0, "b": 1}
    a_idx = [2 + i for i in range(t)]
    b_idx = [2 + t + i for i in range(s - 1)]
    for i, v in enumerate(a_idx):
        labels[f"a{i}"] = v
    for i, v in enumerate(b_idx):
        labels[f"b{i}"] = v
    a, b = 0, 1
    edges = [(a, b), (b, a_idx[t - 1])]
    edges += [(a_idx[i], a_idx[i + 1]) for i in range(t - 1)]
    edges += [(b_idx[i], b_idx[i + 1]) for i in range(s - 2)]
    edges += [(a, v) for v in a_idx if not (drop_a_last and v == a_idx[t - 1])]
    edges += [(b, v) for v in b_idx]
    return Graph(s + t + 1, edges), labels, a_idx, b_idx


def _b_fan_schedule(b: int, b_idx: list[int]) -> list[ScheduleStep]:
    # Peel the b-fan: spoke then path edge at each inner vertex, last spoke free.
    sched = []
    for i in range(len(b_idx) - 1):
        sched.append(ScheduleStep(norm_edge(b_idx[i], b), b_idx[i + 1]))
        sched.append(ScheduleStep(norm_edge(b_idx[i], b_idx[i + 1]), b))
    sched.append(ScheduleStep(norm_edge(b, b_idx[-1])))
    return sched


def fig2_graph(s: int, t: int) -> ConstructionOutput:
    """Erasable graph on s+t+1 vertices with 2s+2t-2 edges, gcd(s,t) = 1.

    Paths P_a = a_0..a_{t-1} and P_b = b_0..b_{s-2}, adjacent hubs a and b,
    a joined to all of P_a, b joined to all of P_b and to a_{t-1}.  The path
    P_a is consumed in segments of s via the modular order h*s (mod t), which
    exhausts every path edge exactly because gcd(s,t) = 1.
    """
    if not 3 <= s < t:
        raise ValueError("need 3 <= s < t")
    if gcd(s, t) != 1:
        raise ValueError("this family needs gcd(s,t) = 1; its schedule stalls otherwise")
    g, labels, a_idx, b_idx = _fig2_base(s, t, drop_a_last=False)
    a, b = 0, 1
    sched = [
        ScheduleStep(norm_edge(a_idx[t - 1], b), a),
        ScheduleStep(norm_edge(a, b), a_idx[0]),
    ]
    for h in range(1, t):
        lo, hi = (h * s - 1) % t, (h * s) % t
        sched.append(ScheduleStep(norm_edge(a_idx[lo], a_idx[hi]), a))
    for i in range(t):
        sched.append(ScheduleStep(norm_edge(a_idx[i], a), b))
    sched += _b_fan_schedule(b, b_idx)
    return ConstructionOutput("erasable", s, t, g, labels, 2 * s + 2 * t - 2, schedule=sched)


def fig3_graph(s: int, t: int) -> ConstructionOutput:
    """Erasable graph on s+t+1 vertices with 2s+2t-3 edges (any 3 <= s < t):
    the previous family minus the edge {a, a_{t-1}}.

    The modular pass now stops after t/gcd(s,t) - 1 cuts, leaving disjoint
    gcd(s,t)-paths; the leftover path edges fall to a second pass that closes
    a, using segments that wrap around Z_t.
    """
    if not 3 <= s < t:
        raise ValueError("need 3 <= s < t")
    g, labels, a_idx, b_idx = _fig2_base(s, t, drop_a_last=True)
    a, b = 0, 1
    gg = gcd(s, t)
    sched = [
        ScheduleStep(norm_edge(a_idx[t - 1], b), a),
        ScheduleStep(norm_edge(a, b), a_idx[0]),
    ]
    done: set[Edge] = set()
    for h in range(1, t // gg):
        e = norm_edge(a_idx[(h * s - 1) % t], a_idx[(h * s) % t])
        sched.append(ScheduleStep(e, a))
        done.add(e)
    if gg > 1:
        e = norm_edge(a_idx[t - 2], a_idx[t - 1])
        sched.append(ScheduleStep(e, b))
        done.add(e)
    for i in range(t - 1):
        e = norm_edge(a_idx[i], a_idx[i + 1])
        if e not in done:
            sched.append(ScheduleStep(e, a))
    for i in range(t - 1):
        sched.append(ScheduleStep(norm_edge(a_idx[i], a), b))
    sched += _b_fan_schedule(b, b_idx)
    return ConstructionOutput("erasable", s, t, g, labels, 2 * s + 2 * t - 3, schedule=sched)


def theorem3_graph(s: int, t: int, j: int) -> ConstructionOutput:
    """The weakly K_{s,t}-saturated graph on s+t+j vertices (not a complement)
    with C(s+t+j,2) - j(s+t-2) - 2t + 3 edges.

    Parts A (clique, size s), B (size t, with a clique on b_{j+3}..b_t), and
    C (size j): all of A x B except {a_1,b_1}, all of (B - b_1) x C, and the
    single edge {b_1, b_{j+3}}.  The saturation schedule adds every missing
    edge together with the K_{s,t} parts its addition completes.
    """
    if not (2 < s <= t):
        raise ValueError("need 2 < s <= t")
    if not 2 <= j < t - 2:
        raise ValueError("need 2 <= j < t-2")
    n = s + t + j
    A = list(range(s))
    B = [s + i for i in range(t)]
    C = [s + t + i for i in range(j)]
    labels = {}
    for i, v in enumerate(A):
        labels[f"a{i + 1}"] = v
    for i, v in enumerate(B):
        labels[f"b{i + 1}"] = v
    for i, v in enumerate(C):
        labels[f"c{i + 1}"] = v

    def a(i: int) -> int:  # one-based, matching the construction's names
        return A[i - 1]

    def b(i: int) -> int:
        return B[i - 1]

    def c(i: int) -> int:
        return C[i - 1]

    edges = [(A[x], A[y]) for x in range(s) for y in range(x + 1, s)]
    edges += [(b(i), b(i2)) for i in range(j + 3, t + 1) for i2 in range(i + 1, t + 1)]
    edges += [
        (A[x], B[y]) for x in range(s) for y in range(t) if not (x == 0 and y == 0)
    ]
    edges += [(B[y], cv) for y in range(1, t) for cv in C]
    edges.append((b(1), b(j + 3)))
    g = Graph(n, edges)
    expected = comb(n, 2) - j * (s + t - 2) - 2 * t + 3

    sat: list[SaturationStep] = []

    def add(u: int, v: int, side_s: list[int], side_t: list[int]) -> None:
        sat.append(SaturationStep(norm_edge(u, v), tuple(sorted(side_s)), tuple(sorted(side_t))))

    add(a(1), b(1), A, B)
    for i in range(1, j + 1):
        add(b(1), c(i), [c(i)] + A[1:], B)
    for i in range(1, s + 1):
        for i2 in range(1, j + 1):
            add(a(i), c(i2), [c(i2)] + [x for x in A if x != a(i)], [a(i)] + B[: t - 1])
    for i in range(1, j + 1):
        for i2 in range(i + 1, j + 1):
            add(c(i), c(i2), [c(i)] + A[: s - 1], [c(i2)] + B[: t - 1])
    for i in range(1, j + 2):
        if j <= s - 2:
            side_t = A[: j + 1] + B[j + 3 : t] + [b(1), b(1 + i)]
            side_s = C + A[j + 1 : s] + [b(j + 3)]
        else:
            # For j >= s-1 the s-part takes c_1..c_{s-1}; the t-part then
            # needs all of A plus the leftover c's to reach size t.
            side_s = C[: s - 1] + [b(j + 3)]
            side_t = A + C[s - 1 :] + B[j + 3 : t] + [b(1), b(1 + i)]
        add(b(1 + i), b(j + 3), side_s, side_t)
    for i2 in range(j + 4, t + 1):
        for i in range(2, j + 3):
            side_t = [b(i)] + C + [b(1), a(s)] + [b(k) for k in range(j + 3, t + 1) if k != i2]
            add(b(i), b(i2), [b(i2)] + A[: s - 1], side_t)
        # i = 1 would repeat b_1 in the listed part; b_2 (now joined to b_{i2})
        # substitutes for the duplicate.
        side_t = [b(1)] + C + [a(s), b(2)] + [b(k) for k in range(j + 3, t + 1) if k != i2]
        add(b(1), b(i2), [b(i2)] + A[: s - 1], side_t)
    for i in range(1, j + 3):
        for i2 in range(i + 1, j + 3):
            side_t = [b(i2), a(s)] + C + B[j + 2 : t]
            add(b(i), b(i2), [b(i)] + A[: s - 1], side_t)

    return ConstructionOutput(
        "saturated", s, t, g, labels, expected, saturation_schedule=sat
    )


_APPENDIX_68 = [
    (1, 6), (1, 8), (2, 10), (2, 12), (3, 4), (3, 5), (3, 13), (3, 14),
    (4, 7), (4, 12), (4, 14), (5, 7), (5, 9), (5, 10), (6, 8), (6, 10),
    (6, 12), (7, 9), (7, 14), (8, 10), (8, 15), (10, 12), (10, 15),
    (11, 13), (12, 13), (13, 14),
]

_APPENDIX_810 = [
    (1, 3), (1, 6), (1, 9), (1, 11), (1, 16), (1, 17), (1, 18), (2, 7),
    (2, 9), (2, 10), (2, 14), (3, 8), (3, 11), (3, 18), (4, 9), (4, 13),
    (4, 14), (4, 15), (5, 6), (5, 8), (6, 11), (7, 13), (8, 17), (8, 19),
    (9, 14), (9, 15), (9, 19), (10, 13), (10, 17), (11, 17), (12, 14),
    (12, 15), (13, 14), (18, 19),
]


def appendix_graph(s: int, t: int) -> ConstructionOutput:
    """The computer-found erasable record graphs for gcd(s,t) > 1 pairs where
    the 2s+2t-2 edge count is still attained: (4,6), (6,8), (8,10)."""
    if (s, t) == (4, 6):
        labels = {"a": 0, "b": 1, "c": 2}
        a_idx = [3, 4, 5, 6]
        b_idx = [7, 8, 9, 10]
        for i, v in enumerate(a_idx):
            labels[f"a{i + 1}"] = v
        for i, v in enumerate(b_idx):
            labels[f"b{i + 1}"] = v
        edges = [(a_idx[i], a_idx[i + 1]) for i in range(3)]
        edges += [(b_idx[i], b_idx[i + 1]) for i in range(3)]
        edges += [(0, v) for v in a_idx]
        edges += [(1, v) for v in b_idx]
        edges += [(2, a_idx[0]), (2, a_idx[3]), (2, b_idx[3])]
        edges.append((a_idx[3], b_idx[1]))
        return ConstructionOutput(
            "erasable", 4, 6, Graph(11, edges), labels, 18
        )
    if (s, t) == (6, 8):
        edges = [(u - 1, v - 1) for u, v in _APPENDIX_68]
        labels = {f"v{i + 1}": i for i in range(15)}
        return ConstructionOutput("erasable", 6, 8, Graph(15, edges), labels, 26)
    if (s, t) == (8, 10):
        edges = [(u - 1, v - 1) for u, v in _APPENDIX_810]
        labels = {f"v{i + 1}": i for i in range(19)}
        return ConstructionOutput("erasable", 8, 10, Graph(19, edges), labels, 34)
    raise ValueError(f"no record graph for (s,t)=({s},{t}); have (4,6), (6,8), (8,10)")


FAMILIES = {
    "fig1": fig1_graph,
    "fig2": fig2_graph,
    "fig3": fig3_graph,
    "theorem3": theorem3_graph,
    "appendix": appendix_graph,
}
