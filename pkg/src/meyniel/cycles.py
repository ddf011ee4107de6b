"""Meyniel recognition by exhaustive cycle enumeration.

A graph is Meyniel when every odd cycle of length at least five has at
least two chords. This module decides that property for desk-scale graphs
by enumerating simple cycles and returns a violating cycle as a checkable
certificate when the property fails. Polynomial-time recognition is out of
scope on purpose: the oracle trades asymptotics for certifiability.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DEFAULT_BUDGET, BudgetExceededError, NotACycleError
from .graph import Graph


@dataclass(frozen=True)
class CycleWitness:
    """An odd cycle of length >= 5 with at most one chord.

    Canonical form: the sequence starts at the cycle's minimum vertex and,
    of the two traversal directions, stores the lexicographically smaller
    one (second vertex less than last vertex).
    """

    vertices: tuple[int, ...]
    chord_count: int


@dataclass(frozen=True)
class MeynielVerdict:
    is_meyniel: bool
    witness: CycleWitness | None = None

    def __bool__(self) -> bool:
        return self.is_meyniel


def chord_count(g: Graph, cycle: tuple[int, ...] | list[int]) -> int:
    """Number of graph edges joining non-consecutive vertices of ``cycle``.

    Raises NotACycleError unless ``cycle`` is a simple cycle of g: at least
    three distinct in-range vertices with every cyclically consecutive pair
    adjacent.
    """
    k = len(cycle)
    if k < 3:
        raise NotACycleError(f"cycle needs at least 3 vertices, got {k}")
    seen = set()
    for v in cycle:
        if not (0 <= v < g.n):
            raise NotACycleError(f"vertex {v} out of range")
        if v in seen:
            raise NotACycleError(f"repeated vertex {v}")
        seen.add(v)
    nsets = g.neighbor_sets
    for i in range(k):
        u, v = cycle[i], cycle[(i + 1) % k]
        if v not in nsets[u]:
            raise NotACycleError(f"consecutive vertices {u} and {v} not adjacent")
    count = 0
    for i in range(k):
        for j in range(i + 2, k):
            if i == 0 and j == k - 1:
                continue  # cyclically consecutive
            if cycle[j] in nsets[cycle[i]]:
                count += 1
    return count


def is_meyniel(g: Graph, budget: int = DEFAULT_BUDGET) -> MeynielVerdict:
    """Decide the Meyniel property, certifying failure with a CycleWitness.

    Enumeration: depth-first search from each start vertex s over vertices
    greater than s, so each simple cycle is examined exactly once from its
    minimum vertex; of its two directions only the lexicographically smaller
    is recorded. A branch is cut as soon as the current path carries two
    chords, which cannot erase any cycle with at most one chord: every
    strict prefix of such a cycle's traversal has at most one chord, and the
    closing vertex is chord-checked before the cut. The first violation in
    this fixed order is returned, so identical inputs give identical
    witnesses.

    ``budget`` bounds the number of path extension steps, which also bounds
    the number of cycles examined; exceeding it raises BudgetExceededError.
    """
    n = g.n
    adj = g.adjacency
    nsets = g.neighbor_sets
    on_path = [False] * n
    on_path_neighbors = [0] * n  # per vertex: how many of its neighbors are on the path
    work = 0
    for s in range(n):
        path = [s]
        on_path[s] = True
        for v in adj[s]:
            on_path_neighbors[v] += 1
        added_chords = [0]
        path_chords = 0
        iters = [iter(adj[s])]
        while iters:
            w = next(iters[-1], None)
            if w is None:
                iters.pop()
                x = path.pop()
                on_path[x] = False
                for v in adj[x]:
                    on_path_neighbors[v] -= 1
                path_chords -= added_chords.pop()
                continue
            if w <= s or on_path[w]:
                continue
            added = on_path_neighbors[w] - 1  # edges to the path minus the predecessor
            path_chords += added
            added_chords.append(added)
            path.append(w)
            on_path[w] = True
            for v in adj[w]:
                on_path_neighbors[v] += 1
            work += 1
            if work > budget:
                raise BudgetExceededError(budget, "cycle enumeration steps")
            length = len(path)
            if length >= 3 and s in nsets[w]:
                # Closing edge (w, s) was counted as a chord when w was added.
                cc = path_chords - 1
                if length >= 5 and length % 2 == 1 and cc <= 1 and path[1] < path[-1]:
                    return MeynielVerdict(False, CycleWitness(tuple(path), cc))
            if path_chords >= 2:
                # No extension can complete into a cycle with fewer than two
                # chords; undo the append and move on.
                on_path[w] = False
                path.pop()
                for v in adj[w]:
                    on_path_neighbors[v] -= 1
                path_chords -= added_chords.pop()
                continue
            iters.append(iter(adj[w]))
        # the final backtrack above already removed s from the path state
    return MeynielVerdict(True, None)
