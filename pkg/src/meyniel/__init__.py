"""Greedy and optimal coloring for graphs with well-chorded odd cycles.

Core pieces: max-saturation greedy coloring with execution traces and trace
verification, exhaustive odd-cycle screening with witnesses, exact
desk-scale computations (chromatic number, maximal cliques, strong stable
sets), optimal coloring by iterated strong-stable-set removal, and a seeded
harness that hunts for greedy runs beating the chromatic number. An HTTP
service and a command line client live in meyniel.service and meyniel.cli.
"""

from .coloring import (
    ExplicitPriority,
    MaxIndex,
    MinIndex,
    Seeded,
    TieBreakPolicy,
    Trace,
    TraceStep,
    TraceVerdict,
    describe_policy,
    is_proper,
    mccolor,
    mcs_color,
    num_colors,
    replay_order,
    trace_from_json_obj,
    trace_to_json_obj,
    trace_to_text,
    verify_trace,
)
from .cycles import CycleWitness, MeynielVerdict, chord_count, is_meyniel
from .errors import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    DimacsFormatError,
    DuplicateEdgeError,
    EdgeCountMismatchError,
    GraphConstructionError,
    InvalidStepError,
    MalformedHeaderError,
    MeynielError,
    NotACycleError,
    NotAPermutationError,
    NotStronglyColorableError,
    SelfLoopError,
    VertexOutOfRangeError,
    resolve_budget,
)
from .exact import (
    StableSet,
    all_stable_sets,
    chromatic_number,
    clique_number,
    find_strong_stable_set,
    is_stable_set,
    is_strong_stable_set,
    maximal_cliques,
)
from .graph import (
    COUNTEREXAMPLE_ALPHABETICAL_COLORS,
    COUNTEREXAMPLE_LETTERS,
    Graph,
    build_graph,
    counterexample_graph,
    emit_dimacs,
    gen_chordal,
    gen_random,
    induced_subgraph,
    parse_dimacs,
)
from .optimal import (
    MODE_HEURISTIC,
    MODE_VERIFIED,
    GapFinding,
    GapSearchReport,
    IteratedColoringReport,
    gap_search,
    optimal_color_meyniel,
    strong_stable_from_mccolor,
)
from .rng import Xorshift64Star, derive_seed

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "BudgetExceededError",
    "COUNTEREXAMPLE_ALPHABETICAL_COLORS",
    "COUNTEREXAMPLE_LETTERS",
    "CycleWitness",
    "DEFAULT_BUDGET",
    "DimacsFormatError",
    "DuplicateEdgeError",
    "EdgeCountMismatchError",
    "ExplicitPriority",
    "GapFinding",
    "GapSearchReport",
    "Graph",
    "GraphConstructionError",
    "InvalidStepError",
    "IteratedColoringReport",
    "MODE_HEURISTIC",
    "MODE_VERIFIED",
    "MalformedHeaderError",
    "MaxIndex",
    "MeynielError",
    "MeynielVerdict",
    "MinIndex",
    "NotACycleError",
    "NotAPermutationError",
    "NotStronglyColorableError",
    "Seeded",
    "SelfLoopError",
    "StableSet",
    "TieBreakPolicy",
    "Trace",
    "TraceStep",
    "TraceVerdict",
    "VertexOutOfRangeError",
    "Xorshift64Star",
    "all_stable_sets",
    "build_graph",
    "chord_count",
    "chromatic_number",
    "clique_number",
    "counterexample_graph",
    "derive_seed",
    "describe_policy",
    "emit_dimacs",
    "find_strong_stable_set",
    "gap_search",
    "gen_chordal",
    "gen_random",
    "induced_subgraph",
    "is_meyniel",
    "is_proper",
    "is_stable_set",
    "is_strong_stable_set",
    "maximal_cliques",
    "mccolor",
    "mcs_color",
    "num_colors",
    "optimal_color_meyniel",
    "parse_dimacs",
    "replay_order",
    "resolve_budget",
    "strong_stable_from_mccolor",
    "trace_from_json_obj",
    "trace_to_json_obj",
    "trace_to_text",
    "verify_trace",
]
