"""Optimal coloring by iterated strong-stable-set removal, and a seeded
search harness that hunts for greedy runs using more colors than the
chromatic number.

On a graph whose every induced subgraph keeps the two-chord odd-cycle
property, removing a stable set that meets all maximal cliques lowers the
clique number by exactly one, and such a set always exists; iterating
therefore colors the graph with clique-number many colors, which is optimal
there. Candidate sets are read off a greedy run (color class 1 is always a
maximal stable set, and on such graphs usually a strong one); when the
candidate fails the exact check, an exact search supplies a replacement.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .coloring import (
    ExplicitPriority,
    MaxIndex,
    MinIndex,
    Seeded,
    TieBreakPolicy,
    Trace,
    describe_policy,
    mccolor,
    num_colors,
    trace_to_json_obj,
    verify_trace,
)
from .cycles import is_meyniel
from .errors import BudgetExceededError, DEFAULT_BUDGET, NotStronglyColorableError
from .exact import (
    StableSet,
    chromatic_number,
    clique_number,
    find_strong_stable_set,
    is_strong_stable_set,
)
from .graph import (
    Graph,
    counterexample_graph,
    emit_dimacs,
    gen_chordal,
    gen_random,
    induced_subgraph,
)
from .rng import Xorshift64Star, derive_seed

SOURCE_HEURISTIC = "heuristic"
SOURCE_FALLBACK = "exact-fallback"

MODE_HEURISTIC = "heuristic"
MODE_VERIFIED = "verified"


@dataclass(frozen=True)
class IteratedColoringReport:
    """Outcome of one iterated-removal run.

    coloring: per-vertex colors, vertices removed in round r get color r.
    rounds: the removed set of each round with its source, in round order.
    fallback_count: rounds where the greedy candidate failed the strong
    stable set check and the exact search supplied the set.
    """

    coloring: list[int]
    rounds: list[tuple[StableSet, str]]
    fallback_count: int

    @property
    def colors_used(self) -> int:
        return len(self.rounds)


def strong_stable_from_mccolor(
    g: Graph, policy: TieBreakPolicy = MinIndex()
) -> StableSet:
    """Color class 1 of a greedy run: a maximal stable set.

    Every vertex outside the class saw color 1 in its neighborhood when it
    was colored, so the class is maximal. Whether it meets every maximal
    clique is a separate check.
    """
    coloring, _ = mccolor(g, policy)
    return frozenset(v for v, c in enumerate(coloring) if c == 1)


def _project_policy(
    policy: TieBreakPolicy, old_to_new: dict[int, int]
) -> TieBreakPolicy:
    """The same tie-break intent on an induced subgraph's relabeled vertices.

    Index policies carry over as-is (relabeling is order preserving), an
    explicit ranking is filtered and relabeled, and a seeded policy reuses
    its seed so each round draws a fresh stream from the same origin.
    """
    if isinstance(policy, ExplicitPriority):
        return ExplicitPriority(
            tuple(old_to_new[v] for v in policy.ranking if v in old_to_new)
        )
    return policy


def optimal_color_meyniel(
    g: Graph,
    policy: TieBreakPolicy = MinIndex(),
    mode: str = MODE_VERIFIED,
    budget: int = DEFAULT_BUDGET,
) -> IteratedColoringReport:
    """Color by repeatedly removing a stable set meeting all maximal cliques.

    Round r removes one such set from the residual graph and colors it r.
    In verified mode the greedy candidate is checked exactly and replaced
    by an exact search when it falls short; if no strong stable set exists
    at some round (the graph is outside the guaranteed class), raises
    NotStronglyColorableError with that 1-based round. Heuristic mode
    skips the checks and trusts the greedy class, which stays a proper
    coloring but may exceed the optimum off the guaranteed class.
    """
    if mode not in (MODE_HEURISTIC, MODE_VERIFIED):
        raise ValueError(f"unknown mode {mode!r}")
    coloring = [0] * g.n
    rounds: list[tuple[StableSet, str]] = []
    fallbacks = 0

    residual = g
    to_original = {v: v for v in range(g.n)}
    round_index = 0
    while residual.n > 0:
        round_index += 1
        candidate = strong_stable_from_mccolor(residual, policy)
        source = SOURCE_HEURISTIC
        if mode == MODE_VERIFIED and not is_strong_stable_set(
            residual, candidate, budget
        ):
            found = find_strong_stable_set(residual, budget)
            if found is None:
                raise NotStronglyColorableError(round_index)
            candidate = found
            source = SOURCE_FALLBACK
            fallbacks += 1

        original = frozenset(to_original[v] for v in candidate)
        for v in original:
            coloring[v] = round_index
        rounds.append((original, source))

        keep = [v for v in range(residual.n) if v not in candidate]
        residual, old_to_new = induced_subgraph(residual, keep)
        policy = _project_policy(policy, old_to_new)
        to_original = {
            new: to_original[old] for old, new in old_to_new.items()
        }

    return IteratedColoringReport(coloring, rounds, fallbacks)


@dataclass(frozen=True)
class GapFinding:
    """One greedy run that used more colors than the chromatic number."""

    instance_index: int
    policy_index: int
    policy: str
    dimacs: str
    colors_used: int
    chromatic_number: int
    clique_number: int
    trace: Trace

    def to_json_obj(self) -> dict:
        return {
            "instance_index": self.instance_index,
            "policy_index": self.policy_index,
            "policy": self.policy,
            "dimacs": self.dimacs,
            "colors_used": self.colors_used,
            "chromatic_number": self.chromatic_number,
            "clique_number": self.clique_number,
            "trace": trace_to_json_obj(self.trace),
        }


@dataclass(frozen=True)
class GapSearchReport:
    instances_examined: int
    meyniel_instances: int
    runs: int
    skipped: int = 0
    notes: tuple[str, ...] = ()
    findings: list[GapFinding] = field(default_factory=list)

    def to_json_obj(self) -> dict:
        return {
            "instances_examined": self.instances_examined,
            "meyniel_instances": self.meyniel_instances,
            "runs": self.runs,
            "skipped": self.skipped,
            "notes": list(self.notes),
            "findings": [f.to_json_obj() for f in self.findings],
        }


def _policy_for(seed: int, instance_index: int, policy_index: int, n: int) -> TieBreakPolicy:
    """Deterministic policy cycle: min, max, seeded, random explicit ranking."""
    kind = policy_index % 4
    if kind == 0:
        return MinIndex()
    if kind == 1:
        return MaxIndex()
    sub = derive_seed(seed, instance_index * 1009 + policy_index)
    if kind == 2:
        return Seeded(sub)
    perm = list(range(n))
    Xorshift64Star(sub).shuffle(perm)
    return ExplicitPriority(tuple(perm))


@dataclass(frozen=True)
class _CellResult:
    qualifying: bool
    runs: int
    findings: list[GapFinding]
    note: str | None = None


def _search_instance(
    seed: int,
    idx: int,
    n: int,
    p: float,
    policies_per_instance: int,
    budget: int,
) -> _CellResult:
    """Examine one generated instance; budget exhaustion skips it with a note."""
    inst_seed = derive_seed(seed, idx)
    if idx % 2 == 0:
        g = gen_random(inst_seed, n, p)
    else:
        k = 2 + Xorshift64Star(inst_seed).below(3)
        g = gen_chordal(inst_seed, n, k)
    try:
        if not is_meyniel(g, budget):
            return _CellResult(False, 0, [])
        chi = chromatic_number(g, budget)
        omega = clique_number(g, budget)
        findings: list[GapFinding] = []
        runs = 0
        for j in range(policies_per_instance):
            policy = _policy_for(seed, idx, j, g.n)
            coloring, trace = mccolor(g, policy)
            runs += 1
            used = num_colors(coloring)
            if used > chi:
                # re-derive both facts before reporting a gap
                if not verify_trace(g, trace):
                    continue
                if not is_meyniel(g, budget):
                    continue
                findings.append(
                    GapFinding(
                        instance_index=idx,
                        policy_index=j,
                        policy=describe_policy(policy),
                        dimacs=emit_dimacs(g),
                        colors_used=used,
                        chromatic_number=chi,
                        clique_number=omega,
                        trace=trace,
                    )
                )
    except BudgetExceededError as exc:
        return _CellResult(False, 0, [], note=f"instance {idx} skipped: {exc}")
    return _CellResult(True, runs, findings)


def _builtin_cell(budget: int) -> _CellResult:
    """The ten-vertex example under its alphabetical ranking."""
    g = counterexample_graph()
    policy = ExplicitPriority(tuple(range(g.n)))
    coloring, trace = mccolor(g, policy)
    used = num_colors(coloring)
    try:
        chi = chromatic_number(g, budget)
        findings = []
        if used > chi and verify_trace(g, trace) and is_meyniel(g, budget):
            findings.append(
                GapFinding(
                    instance_index=-1,
                    policy_index=0,
                    policy=describe_policy(policy),
                    dimacs=emit_dimacs(g),
                    colors_used=used,
                    chromatic_number=chi,
                    clique_number=clique_number(g, budget),
                    trace=trace,
                )
            )
    except BudgetExceededError as exc:
        return _CellResult(False, 0, [], note=f"builtin instance skipped: {exc}")
    return _CellResult(True, 1, findings)


def gap_search(
    seed: int,
    instances: int,
    n: int = 24,
    p: float = 0.35,
    policies_per_instance: int = 4,
    include_builtin: bool = False,
    budget: int = DEFAULT_BUDGET,
    max_workers: int | None = None,
) -> GapSearchReport:
    """Hunt for greedy runs beating the chromatic number on qualifying graphs.

    Generates ``instances`` graphs from ``seed`` (even indices random with
    edge probability ``p``, odd indices chordal), keeps those passing the
    odd-cycle check, and runs the greedy coloring under a deterministic
    cycle of tie-break policies. Any run using more colors than the exact
    chromatic number is re-verified and reported with enough material to
    replay it: the instance in exchange format, the policy, the trace, and
    the exact numbers. Results are deterministic in (seed, parameters);
    instances are examined concurrently and merged in index order.
    """
    cells = [
        (seed, idx, n, p, policies_per_instance, budget)
        for idx in range(instances)
    ]
    results: list[_CellResult] = []
    if include_builtin:
        results.append(_builtin_cell(budget))
    if cells:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            results.extend(
                pool.map(lambda args: _search_instance(*args), cells)
            )
    return GapSearchReport(
        instances_examined=instances + (1 if include_builtin else 0),
        meyniel_instances=sum(1 for r in results if r.qualifying),
        runs=sum(r.runs for r in results),
        skipped=sum(1 for r in results if r.note is not None),
        notes=tuple(r.note for r in results if r.note is not None),
        findings=[f for r in results for f in r.findings],
    )
