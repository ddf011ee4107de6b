"""Exact desk-scale computations: chromatic number, maximal cliques,
strong stable sets.

Everything here is exponential in the worst case and intended for small
instances (tens of vertices). Each search takes a budget in work units and
raises BudgetExceededError rather than returning a wrong or truncated
answer.
"""

from __future__ import annotations

from typing import Iterator

from .errors import DEFAULT_BUDGET, BudgetExceededError
from .graph import Graph

StableSet = frozenset[int]


def maximal_cliques(g: Graph, budget: int = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    """All maximal cliques, each a sorted vertex tuple, in sorted order.

    Bron-Kerbosch with pivoting; the pivot is a vertex of P ∪ X covering
    the most of P, ties broken by smallest id. One work unit per recursive
    expansion. An empty graph has no cliques at all, so n = 0 gives [].
    """
    n = g.n
    nsets = g.neighbor_sets
    out: list[tuple[int, ...]] = []
    work = 0

    def expand(r: list[int], p: set[int], x: set[int]) -> None:
        nonlocal work
        work += 1
        if work > budget:
            raise BudgetExceededError(budget, "clique enumeration steps")
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot = max(
            sorted(p | x), key=lambda u: len(p & nsets[u])
        )
        for v in sorted(p - nsets[pivot]):
            nv = nsets[v]
            r.append(v)
            expand(r, p & nv, x & nv)
            r.pop()
            p.discard(v)
            x.add(v)

    if n > 0:
        expand([], set(range(n)), set())
    out.sort()
    return out


def clique_number(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    """Size of a largest clique; 0 for the empty graph."""
    cliques = maximal_cliques(g, budget)
    return max((len(c) for c in cliques), default=0)


def _greedy_clique(g: Graph) -> list[int]:
    """A maximal clique grown greedily from a max-degree vertex."""
    if g.n == 0:
        return []
    nsets = g.neighbor_sets
    start = max(range(g.n), key=lambda v: len(nsets[v]))
    clique = [start]
    candidates = set(nsets[start])
    while candidates:
        v = max(candidates, key=lambda u: len(candidates & nsets[u]))
        clique.append(v)
        candidates &= nsets[v]
    return clique


def chromatic_number(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    """Exact chromatic number by branch and bound.

    Vertices are colored in a saturation-first order; a branch may reuse
    any used color absent from the neighborhood or open exactly one fresh
    color, which breaks color-class symmetry. The lower bound is a greedy
    clique, the upper bound a greedy coloring. One work unit per vertex
    coloring attempt.
    """
    n = g.n
    if n == 0:
        return 0
    if g.m == 0:
        return 1
    nsets = g.neighbor_sets

    lower = len(_greedy_clique(g))

    # greedy upper bound: saturation order, smallest absent color
    from .coloring import MinIndex, mccolor, num_colors

    ub_coloring, _ = mccolor(g, MinIndex())
    best = num_colors(ub_coloring)
    if best == lower:
        return best

    color = [0] * n
    work = 0

    def solve(colored: int, used: int) -> None:
        nonlocal best, work
        if used >= best:
            return
        if colored == n:
            best = used
            return
        # most saturated uncolored vertex, largest degree to break ties
        vbest = -1
        sat_best = -1
        for v in range(n):
            if color[v] == 0:
                seen = {color[u] for u in nsets[v] if color[u] != 0}
                sat = len(seen)
                if sat > sat_best or (
                    sat == sat_best and len(nsets[v]) > len(nsets[vbest])
                ):
                    vbest = v
                    sat_best = sat
        v = vbest
        forbidden = {color[u] for u in nsets[v] if color[u] != 0}
        for c in range(1, used + 2):
            if c in forbidden:
                continue
            if c > used and used + 1 >= best:
                break
            work += 1
            if work > budget:
                raise BudgetExceededError(budget, "coloring search steps")
            color[v] = c
            solve(colored + 1, max(used, c))
            color[v] = 0
            if best == lower:
                return

    solve(0, 0)
    return best


def is_stable_set(g: Graph, s: StableSet | set[int]) -> bool:
    """No two vertices of ``s`` are adjacent."""
    nsets = g.neighbor_sets
    return all(not (nsets[u] & s) for u in s)


def is_strong_stable_set(
    g: Graph, s: StableSet | set[int], budget: int = DEFAULT_BUDGET
) -> bool:
    """True iff ``s`` is stable and meets every maximal clique of ``g``."""
    ss = frozenset(s)
    if not is_stable_set(g, ss):
        return False
    return all(ss & frozenset(c) for c in maximal_cliques(g, budget))


def find_strong_stable_set(
    g: Graph, budget: int = DEFAULT_BUDGET
) -> StableSet | None:
    """A stable set meeting every maximal clique, or None if none exists.

    Backtracking over the clique list: pick the first clique not yet hit,
    branch on its vertices in ascending order, keep the partial set stable.
    Existence is guaranteed on graphs whose every induced subgraph keeps
    the two-chord odd-cycle property, but not in general (a plain 5-cycle
    has none). One work unit per branch taken.
    """
    cliques = maximal_cliques(g, budget)
    if not cliques:
        return frozenset()
    nsets = g.neighbor_sets
    clique_sets = [frozenset(c) for c in cliques]
    work = 0

    def extend(chosen: set[int], blocked: set[int]) -> frozenset[int] | None:
        nonlocal work
        target = None
        for cs in clique_sets:
            if not (cs & chosen):
                target = cs
                break
        if target is None:
            return frozenset(chosen)
        for v in sorted(target):
            if v in blocked:
                continue
            work += 1
            if work > budget:
                raise BudgetExceededError(budget, "stable set search steps")
            chosen.add(v)
            found = extend(chosen, blocked | nsets[v] | {v})
            if found is not None:
                return found
            chosen.discard(v)
        return None

    return extend(set(), set())


def all_stable_sets(g: Graph, budget: int = DEFAULT_BUDGET) -> Iterator[StableSet]:
    """Every stable set, the empty one included, in lexicographic order.

    Exponential output; meant for cross-checking small cases.
    """
    n = g.n
    nsets = g.neighbor_sets
    work = 0

    def extend(chosen: list[int], start: int) -> Iterator[StableSet]:
        nonlocal work
        work += 1
        if work > budget:
            raise BudgetExceededError(budget, "stable set enumeration steps")
        yield frozenset(chosen)
        for v in range(start, n):
            if not (nsets[v] & set(chosen)):
                chosen.append(v)
                yield from extend(chosen, v + 1)
                chosen.pop()

    return extend([], 0)
