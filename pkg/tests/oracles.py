"""Independent brute-force reference implementations for cross-checking.

Everything here is written the dumbest defensible way: subset and
permutation enumeration, no pruning beyond feasibility, no shared code
with the package. Only usable for tiny graphs, which is the point.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

from meyniel import Graph, build_graph


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    """G(n, p) from the stdlib RNG, independent of the package generators."""
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return build_graph(n, edges)


def brute_is_clique(g: Graph, vs: tuple[int, ...]) -> bool:
    return all(g.has_edge(u, v) for u, v in combinations(vs, 2))


def brute_maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """All maximal cliques by checking every vertex subset."""
    out = []
    for size in range(1, g.n + 1):
        for vs in combinations(range(g.n), size):
            if not brute_is_clique(g, vs):
                continue
            members = set(vs)
            extendable = any(
                all(g.has_edge(w, v) for v in vs)
                for w in range(g.n)
                if w not in members
            )
            if not extendable:
                out.append(vs)
    return sorted(out)


def brute_k_colorable(g: Graph, k: int) -> bool:
    """Plain backtracking over vertices in index order, no symmetry tricks."""
    colors = [0] * g.n

    def assign(v: int) -> bool:
        if v == g.n:
            return True
        taken = {colors[u] for u in g.adjacency[v] if u < v}
        for c in range(1, k + 1):
            if c not in taken:
                colors[v] = c
                if assign(v + 1):
                    return True
        colors[v] = 0
        return False

    return assign(0)


def brute_chromatic(g: Graph) -> int:
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        if brute_k_colorable(g, k):
            return k
    raise AssertionError("unreachable: n colors always suffice")


def brute_stable_sets(g: Graph) -> list[frozenset[int]]:
    """Every stable set, the empty one included."""
    out = []
    for size in range(g.n + 1):
        for vs in combinations(range(g.n), size):
            if all(not g.has_edge(u, v) for u, v in combinations(vs, 2)):
                out.append(frozenset(vs))
    return out


def brute_strong_stable_sets(g: Graph) -> list[frozenset[int]]:
    cliques = [set(c) for c in brute_maximal_cliques(g)]
    return [
        s for s in brute_stable_sets(g) if all(s & c for c in cliques)
    ]


def brute_is_meyniel(g: Graph) -> bool:
    """Check every odd cycle of length >= 5 by permutation enumeration."""
    ns = g.neighbor_sets
    for k in range(5, g.n + 1, 2):
        for seq in permutations(range(g.n), k):
            if seq[0] != min(seq) or seq[1] > seq[-1]:
                continue  # one representative per cycle
            if not all(seq[(i + 1) % k] in ns[seq[i]] for i in range(k)):
                continue
            chords = sum(
                1
                for i in range(k)
                for j in range(i + 2, k)
                if not (i == 0 and j == k - 1) and seq[j] in ns[seq[i]]
            )
            if chords < 2:
                return False
    return True


def naive_greedy(
    g: Graph, rank: list[int], rule: str
) -> tuple[list[int], list[tuple[int, int, int]]]:
    """Reference greedy colorer: full rescan every step, recomputed metrics.

    rank decides ties (lower wins). Returns (coloring, steps) with steps as
    (vertex, metric, color) triples.
    """
    n = g.n
    color = [0] * n
    steps = []
    for _ in range(n):
        best = -1
        best_key: tuple[int, int] | None = None
        for v in range(n):
            if color[v]:
                continue
            if rule == "mccolor":
                metric = len({color[u] for u in g.adjacency[v] if color[u]})
            else:
                metric = sum(1 for u in g.adjacency[v] if color[u])
            key = (metric, -rank[v])
            if best_key is None or key > best_key:
                best, best_key = v, key
        taken = {color[u] for u in g.adjacency[best]}
        c = 1
        while c in taken:
            c += 1
        color[best] = c
        steps.append((best, best_key[0], c))
    return color, steps
