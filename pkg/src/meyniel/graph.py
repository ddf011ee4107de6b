"""Immutable simple undirected graphs: construction, DIMACS I/O, generators.

Vertices are dense integers 0..n-1. Adjacency lists are kept sorted so that
every iteration order in the toolkit is deterministic. Graphs are frozen
after construction and safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import (
    DuplicateEdgeError,
    EdgeCountMismatchError,
    MalformedHeaderError,
    SelfLoopError,
    VertexOutOfRangeError,
)
from .rng import Xorshift64Star

# Largest n for which the Bernoulli-per-pair generator path is used; above it
# gen_random switches to geometric skipping (see gen_random docstring).
_PAIRWISE_LIMIT = 2048


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with sorted adjacency lists.

    Invariants (enforced by the constructors in this module):
    no self-loops, no duplicate edges, adjacency is symmetric, every
    adjacency list is sorted ascending, and m is the edge count.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    m: int

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adjacency)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) pairs with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in self.adjacency[u]:
                if v > u:
                    yield (u, v)

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def __repr__(self) -> str:  # adjacency dumps are useless in test output
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list, rejecting anything non-simple.

    Duplicate edges are an error rather than being merged silently: a
    generator or parser that produces one has a bug worth surfacing.
    """
    if n < 0:
        raise ValueError("vertex count must be >= 0")
    adj: list[list[int]] = [[] for _ in range(n)]
    seen: set[tuple[int, int]] = set()
    count = 0
    for u, v in edges:
        if u == v:
            raise SelfLoopError(u)
        if not (0 <= u < n):
            raise VertexOutOfRangeError(u, n)
        if not (0 <= v < n):
            raise VertexOutOfRangeError(v, n)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError(*key)
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
        count += 1
    for a in adj:
        a.sort()
    return Graph(n=n, adjacency=tuple(tuple(a) for a in adj), m=count)


# The bundled 10-vertex counterexample on which MCColor can use 4 colors even
# though the chromatic number is 3. Letters map alphabetically: a=0 .. j=9.
COUNTEREXAMPLE_LETTERS = "abcdefghij"

_COUNTEREXAMPLE_EDGES = (
    (0, 1),  # a-b
    (0, 2),  # a-c
    (1, 2),  # b-c
    (2, 3),  # c-d
    (2, 5),  # c-f
    (2, 6),  # c-g
    (3, 4),  # d-e
    (4, 8),  # e-i
    (4, 9),  # e-j
    (5, 6),  # f-g
    (5, 7),  # f-h
    (6, 7),  # g-h
    (7, 8),  # h-i
    (7, 9),  # h-j
    (8, 9),  # i-j
)


# Colors a greedy max-saturation run assigns under the ranking a, b, ..., j:
# four colors on a three-colorable graph.
COUNTEREXAMPLE_ALPHABETICAL_COLORS = (1, 2, 3, 1, 2, 1, 2, 3, 1, 4)


def counterexample_graph() -> Graph:
    """The bundled 10-vertex Meyniel graph where MCColor can be non-optimal."""
    return build_graph(10, _COUNTEREXAMPLE_EDGES)


def parse_dimacs(text: str) -> Graph:
    """Parse a DIMACS .col instance.

    Accepted lines: comments ``c ...``, exactly one header ``p edge <n> <m>``,
    and edges ``e <u> <v>`` with 1-indexed endpoints. Vertices are shifted to
    0-indexed. The edge count must match the header.
    """
    n = -1
    declared_m = -1
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n >= 0:
                raise MalformedHeaderError(f"line {lineno}: second 'p' line")
            if len(parts) != 4 or parts[1] != "edge":
                raise MalformedHeaderError(f"line {lineno}: expected 'p edge <n> <m>'")
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise MalformedHeaderError(f"line {lineno}: non-integer header fields")
            if n < 0 or declared_m < 0:
                raise MalformedHeaderError(f"line {lineno}: negative header fields")
        elif parts[0] == "e":
            if n < 0:
                raise MalformedHeaderError(f"line {lineno}: edge before 'p' line")
            if len(parts) != 3:
                raise MalformedHeaderError(f"line {lineno}: expected 'e <u> <v>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise MalformedHeaderError(f"line {lineno}: non-integer endpoints")
            edges.append((u - 1, v - 1))
        else:
            raise MalformedHeaderError(f"line {lineno}: unknown line type {parts[0]!r}")
    if n < 0:
        raise MalformedHeaderError("missing 'p edge <n> <m>' line")
    if len(edges) != declared_m:
        raise EdgeCountMismatchError(declared_m, len(edges))
    return build_graph(n, edges)


def emit_dimacs(g: Graph) -> str:
    """Canonical DIMACS .col text: header first, edges 1-indexed, sorted."""
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def gen_random(seed: int, n: int, p: float) -> Graph:
    """Seeded Erdos-Renyi style G(n, p).

    Two regimes, chosen by n so the output is a fixed function of
    (seed, n, p):

    - n <= 2048: every pair (u, v), u < v, in lexicographic order draws
      u53() from the seeded stream and the edge is kept iff
      u53 < floor(p * 2^53). Pure integer compare, bit-reproducible
      everywhere.
    - n > 2048: geometric gap skipping, one uniform() draw per kept edge:
      gap = floor(log1p(-r) / log1p(-p)) advances through the lexicographic
      pair sequence. Reproducible on IEEE-754 doubles with a standard libm.

    p = 0 and p = 1 short-circuit to the empty and complete graph in both
    regimes.
    """
    if not (0.0 <= p <= 1.0):
        raise ValueError("p must be in [0, 1]")
    if n < 0:
        raise ValueError("n must be >= 0")
    if p == 0.0:
        return build_graph(n, [])
    if p == 1.0:
        return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    rng = Xorshift64Star(seed)
    edges: list[tuple[int, int]] = []
    if n <= _PAIRWISE_LIMIT:
        threshold = int(p * (1 << 53))
        for u in range(n):
            for v in range(u + 1, n):
                if rng.next_u53() < threshold:
                    edges.append((u, v))
    else:
        # Skip-based sampling: enumerate pair index t = v*(v-1)/2 + u over
        # u < v and jump ahead by geometric gaps.
        log1mp = math.log1p(-p)
        v, u = 1, -1
        while v < n:
            r = rng.uniform()
            gap = int(math.log1p(-r) / log1mp)
            u += 1 + gap
            while u >= v and v < n:
                u -= v
                v += 1
            if v < n:
                edges.append((u, v))
    return build_graph(n, edges)


def gen_chordal(seed: int, n: int, max_back_clique: int) -> Graph:
    """Seeded chordal graph built by clique attachment.

    Vertices arrive one at a time; vertex k is joined to a clique among the
    earlier vertices, grown greedily up to size min(k, max_back_clique) by
    repeatedly picking a seeded-random vertex and restricting candidates to
    its neighbors. Every back-neighborhood is a clique, so the reverse
    arrival order is a perfect elimination ordering and the result is
    chordal. Chordal graphs have no chordless cycle longer than a triangle,
    hence every cycle of length k has at least k - 3 chords and the output
    always satisfies the two-chord odd-cycle condition.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if max_back_clique < 1:
        raise ValueError("max_back_clique must be >= 1")
    rng = Xorshift64Star(seed)
    adj: list[set[int]] = [set() for _ in range(n)]
    edges: list[tuple[int, int]] = []
    for k in range(1, n):
        target = min(k, max_back_clique)
        candidates = list(range(k))
        clique: list[int] = []
        while len(clique) < target and candidates:
            pick = candidates[rng.below(len(candidates))]
            clique.append(pick)
            candidates = [u for u in candidates if u in adj[pick]]
        for u in clique:
            adj[u].add(k)
            adj[k].add(u)
            edges.append((u, k))
    return build_graph(n, edges)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``keep``, plus the old-id to new-id mapping.

    New ids follow the sorted order of the kept vertices.
    """
    kept = sorted(set(keep))
    for v in kept:
        if not (0 <= v < g.n):
            raise VertexOutOfRangeError(v, g.n)
    remap = {old: new for new, old in enumerate(kept)}
    edges = [
        (remap[u], remap[v])
        for u in kept
        for v in g.adjacency[u]
        if v > u and v in remap
    ]
    return build_graph(len(kept), edges), remap


def check_invariants(g: Graph) -> None:
    """Assert the structural invariants; used by tests after every constructor."""
    assert g.n == len(g.adjacency)
    total = 0
    for u, a in enumerate(g.adjacency):
        assert list(a) == sorted(set(a)), f"adjacency[{u}] not sorted/unique"
        assert u not in a, f"self-loop at {u}"
        for v in a:
            assert 0 <= v < g.n
            assert u in g.adjacency[v], f"asymmetric edge ({u}, {v})"
        total += len(a)
    assert g.m * 2 == total
