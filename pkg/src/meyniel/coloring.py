"""Greedy max-saturation coloring (MCColor), MCS+Color, traces, replay.

MCColor repeatedly selects an uncolored vertex whose neighborhood currently
shows a maximum number of distinct colors (its saturation) and assigns it
the smallest color not present in that neighborhood. MCS+Color selects by
the count of already-colored neighbors instead, counting vertices rather
than distinct colors, and assigns colors the same way. Colors are the
integers 1, 2, ...; 0 marks an uncolored vertex.

Both algorithms leave the choice among equally ranked vertices open; here
that choice is an explicit TieBreakPolicy value, which makes any particular
run a reproducible input rather than an implementation accident.

Engine: each uncolored vertex sits in exactly one bucket keyed by its
current selection metric, with its position tracked for O(1) swap-removal.
The metric only grows, one bucket move per increment, and the total number
of increments is at most the edge count, so bucket maintenance is amortized
linear in n + m. The seeded policy picks inside the top bucket by one PRNG
draw (O(1)); the deterministic policies scan the top bucket, whose live
size is typically small. Distinct neighbor colors are tracked per vertex in
a set, giving O(1) amortized insert and membership.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from .errors import InvalidStepError, NotAPermutationError
from .graph import Graph
from .rng import Xorshift64Star

RULE_MCCOLOR = "mccolor"
RULE_MCS = "mcs"


@dataclass(frozen=True)
class MinIndex:
    """Prefer the smallest vertex id."""


@dataclass(frozen=True)
class MaxIndex:
    """Prefer the largest vertex id."""


@dataclass(frozen=True)
class Seeded:
    """Pick uniformly inside the top bucket with the documented PRNG."""

    seed: int


@dataclass(frozen=True)
class ExplicitPriority:
    """Fixed preference list: vertices earlier in ``ranking`` win ties."""

    ranking: tuple[int, ...]


TieBreakPolicy = Union[MinIndex, MaxIndex, Seeded, ExplicitPriority]


@dataclass(frozen=True)
class TraceStep:
    vertex: int
    saturation: int  # the selection metric at choice time
    color: int


@dataclass(frozen=True)
class Trace:
    """Ordered record of one greedy run; ``rule`` names the selection metric."""

    rule: str
    steps: tuple[TraceStep, ...]


@dataclass(frozen=True)
class TraceVerdict:
    valid: bool
    step: int | None = None  # 1-based step of the first violation
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.valid


def _rank_array(policy: TieBreakPolicy, n: int) -> list[int] | None:
    """Rank per vertex for the deterministic policies, None for Seeded."""
    if isinstance(policy, MinIndex):
        return list(range(n))
    if isinstance(policy, MaxIndex):
        return list(range(n - 1, -1, -1))
    if isinstance(policy, ExplicitPriority):
        if sorted(policy.ranking) != list(range(n)):
            raise NotAPermutationError(
                f"ranking must be a permutation of 0..{n - 1}"
            )
        rank = [0] * n
        for r, v in enumerate(policy.ranking):
            rank[v] = r
        return rank
    if isinstance(policy, Seeded):
        return None
    raise TypeError(f"unknown tie-break policy: {policy!r}")


def _greedy_run(g: Graph, policy: TieBreakPolicy, rule: str) -> tuple[list[int], Trace]:
    n = g.n
    adj = g.adjacency
    color = [0] * n
    steps: list[TraceStep] = []
    if n == 0:
        return color, Trace(rule, ())

    rank = _rank_array(policy, n)
    rng = Xorshift64Star(policy.seed) if isinstance(policy, Seeded) else None
    count_vertices = rule == RULE_MCS

    ncolors: list[set[int]] = [set() for _ in range(n)]
    metric = [0] * n
    buckets: list[list[int]] = [list(range(n))]
    pos = list(range(n))
    maxlevel = 0

    for _ in range(n):
        while not buckets[maxlevel]:
            maxlevel -= 1
        bucket = buckets[maxlevel]
        if rng is not None:
            i = (rng.next_u64() * len(bucket)) >> 64
            v = bucket[i]
        else:
            v = min(bucket, key=rank.__getitem__)
            i = bucket.index(v)
        last = bucket.pop()
        if last != v:
            bucket[i] = last
            pos[last] = i

        nc = ncolors[v]
        c = 1
        while c in nc:
            c += 1
        color[v] = c
        steps.append(TraceStep(v, maxlevel, c))

        for u in adj[v]:
            if color[u] == 0:
                su = ncolors[u]
                if count_vertices:
                    su.add(c)
                elif c in su:
                    continue
                else:
                    su.add(c)
                lvl = metric[u]
                b = buckets[lvl]
                iu = pos[u]
                lastu = b.pop()
                if lastu != u:
                    b[iu] = lastu
                    pos[lastu] = iu
                lvl += 1
                metric[u] = lvl
                if lvl == len(buckets):
                    buckets.append([])
                b2 = buckets[lvl]
                pos[u] = len(b2)
                b2.append(u)
                if lvl > maxlevel:
                    maxlevel = lvl

    return color, Trace(rule, tuple(steps))


def mccolor(
    g: Graph, policy: TieBreakPolicy = MinIndex()
) -> tuple[list[int], Trace]:
    """Greedy coloring by maximum saturation; returns (coloring, trace).

    The coloring is complete and proper; the trace records, per step, the
    chosen vertex, its saturation at choice time, and the assigned color.
    Identical (graph, policy) inputs produce identical traces.
    """
    return _greedy_run(g, policy, RULE_MCCOLOR)


def mcs_color(
    g: Graph, policy: TieBreakPolicy = MinIndex()
) -> tuple[list[int], Trace]:
    """Greedy coloring in maximum cardinality search order.

    Selection counts already-colored neighbors (with multiplicity of
    vertices, not colors); color assignment is smallest-absent, as in
    mccolor. The trace's saturation field records the colored-neighbor
    count.
    """
    return _greedy_run(g, policy, RULE_MCS)


def _replay(
    g: Graph, order: Sequence[int], rule: str
) -> Iterator[tuple[int, int, int, int, int]]:
    """Simulate a forced vertex order under the given selection rule.

    Yields (step, vertex, metric_at_choice, max_metric, smallest_absent)
    with 1-based steps, applying the smallest-absent color after each
    yield. Callers stop consuming at the first violation they care about.
    """
    n = g.n
    if sorted(order) != list(range(n)):
        raise NotAPermutationError("order must be a permutation of all vertices")
    if rule not in (RULE_MCCOLOR, RULE_MCS):
        raise ValueError(f"unknown rule {rule!r}")
    adj = g.adjacency
    count_vertices = rule == RULE_MCS
    color = [0] * n
    ncolors: list[set[int]] = [set() for _ in range(n)]
    metric = [0] * n
    level_counts = [n]
    maxlevel = 0
    for k, v in enumerate(order, start=1):
        while maxlevel > 0 and level_counts[maxlevel] == 0:
            maxlevel -= 1
        nc = ncolors[v]
        c = 1
        while c in nc:
            c += 1
        yield k, v, metric[v], maxlevel, c
        color[v] = c
        level_counts[metric[v]] -= 1
        for u in adj[v]:
            if color[u] == 0:
                su = ncolors[u]
                if count_vertices:
                    su.add(c)
                elif c in su:
                    continue
                else:
                    su.add(c)
                lvl = metric[u]
                level_counts[lvl] -= 1
                lvl += 1
                metric[u] = lvl
                if lvl == len(level_counts):
                    level_counts.append(0)
                level_counts[lvl] += 1
                if lvl > maxlevel:
                    maxlevel = lvl


def verify_trace(g: Graph, trace: Trace) -> TraceVerdict:
    """Check a trace against the selection and assignment rules.

    Valid means: at every step the recorded metric equals the recomputed
    one, the chosen vertex attains the maximum metric among uncolored
    vertices (so the step is legal under some tie-break), and the assigned
    color is the smallest absent from the colored neighborhood. The first
    violated condition is reported with its 1-based step.
    """
    order = [st.vertex for st in trace.steps]
    if sorted(order) != list(range(g.n)):
        return TraceVerdict(False, None, "steps do not visit every vertex exactly once")
    if trace.rule not in (RULE_MCCOLOR, RULE_MCS):
        return TraceVerdict(False, None, f"unknown rule {trace.rule!r}")
    for k, v, m_v, maxlevel, expected in _replay(g, order, trace.rule):
        st = trace.steps[k - 1]
        if st.saturation != m_v:
            return TraceVerdict(
                False, k, f"recorded saturation {st.saturation} != actual {m_v}"
            )
        if m_v < maxlevel:
            return TraceVerdict(False, k, f"saturation {m_v} < max {maxlevel}")
        if st.color != expected:
            return TraceVerdict(
                False, k, f"color {st.color} != smallest absent {expected}"
            )
    return TraceVerdict(True)


def replay_order(g: Graph, order: Sequence[int]) -> tuple[list[int], Trace]:
    """Run MCColor forced to color ``order`` left to right.

    Raises InvalidStepError with the 1-based step if some forced vertex does
    not attain the maximum saturation at its turn; otherwise returns the
    induced coloring and trace, exactly as an unforced run choosing these
    vertices would.
    """
    n = g.n
    color = [0] * n
    steps: list[TraceStep] = []
    for k, v, m_v, maxlevel, c in _replay(g, order, RULE_MCCOLOR):
        if m_v < maxlevel:
            raise InvalidStepError(k, f"saturation {m_v} < max {maxlevel}")
        color[v] = c
        steps.append(TraceStep(v, m_v, c))
    return color, Trace(RULE_MCCOLOR, tuple(steps))


def num_colors(coloring: Sequence[int]) -> int:
    """Largest assigned color (0 for an empty or fully uncolored coloring)."""
    return max(coloring, default=0)


def is_proper(g: Graph, coloring: Sequence[int]) -> bool:
    """Every vertex has a positive color and no edge joins equal colors."""
    if len(coloring) != g.n:
        return False
    if any(c < 1 for c in coloring):
        return False
    for u, v in g.edges():
        if coloring[u] == coloring[v]:
            return False
    return True


def describe_policy(policy: TieBreakPolicy) -> str:
    if isinstance(policy, MinIndex):
        return "min-index"
    if isinstance(policy, MaxIndex):
        return "max-index"
    if isinstance(policy, Seeded):
        return f"seeded:{policy.seed}"
    if isinstance(policy, ExplicitPriority):
        return "explicit:" + ",".join(map(str, policy.ranking))
    raise TypeError(f"unknown tie-break policy: {policy!r}")


def trace_to_text(trace: Trace) -> str:
    """Line-oriented form: one ``<step> <vertex> <saturation> <color>`` per line."""
    return "\n".join(
        f"{k} {st.vertex} {st.saturation} {st.color}"
        for k, st in enumerate(trace.steps, start=1)
    ) + ("\n" if trace.steps else "")


def trace_to_json_obj(trace: Trace) -> dict:
    """JSON-ready form: {"rule": ..., "steps": [{step, vertex, saturation, color}]}."""
    return {
        "rule": trace.rule,
        "steps": [
            {"step": k, "vertex": st.vertex, "saturation": st.saturation, "color": st.color}
            for k, st in enumerate(trace.steps, start=1)
        ],
    }


def trace_from_json_obj(obj: dict) -> Trace:
    steps = tuple(
        TraceStep(s["vertex"], s["saturation"], s["color"])
        for s in sorted(obj["steps"], key=lambda s: s["step"])
    )
    return Trace(obj["rule"], steps)
