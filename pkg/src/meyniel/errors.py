"""Exception types and budget defaults shared across the toolkit."""

import os

# Default work budget for the exhaustive oracles. Exceeding a budget raises
# BudgetExceededError; an oracle never returns a possibly-wrong answer.
DEFAULT_BUDGET = 10_000_000

BUDGET_ENV_VAR = "MEYNIEL_BUDGET"


def resolve_budget(explicit: int | None = None) -> int:
    """Budget precedence: explicit value, then MEYNIEL_BUDGET, then default."""
    if explicit is not None:
        if explicit < 1:
            raise ValueError("budget must be positive")
        return explicit
    env = os.environ.get(BUDGET_ENV_VAR)
    if env is not None:
        try:
            value = int(env)
        except ValueError:
            raise ValueError(f"{BUDGET_ENV_VAR} must be an integer, got {env!r}")
        if value < 1:
            raise ValueError(f"{BUDGET_ENV_VAR} must be positive, got {value}")
        return value
    return DEFAULT_BUDGET


class MeynielError(Exception):
    """Base class for all toolkit errors."""


class GraphConstructionError(MeynielError, ValueError):
    """Invalid input while building a graph."""


class SelfLoopError(GraphConstructionError):
    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"self-loop at vertex {vertex}")


class DuplicateEdgeError(GraphConstructionError):
    def __init__(self, u: int, v: int):
        self.edge = (u, v)
        super().__init__(f"duplicate edge ({u}, {v})")


class VertexOutOfRangeError(GraphConstructionError):
    def __init__(self, vertex: int, n: int):
        self.vertex = vertex
        self.n = n
        super().__init__(f"vertex {vertex} out of range for n={n}")


class DimacsFormatError(MeynielError, ValueError):
    """Malformed DIMACS .col input."""


class MalformedHeaderError(DimacsFormatError):
    pass


class EdgeCountMismatchError(DimacsFormatError):
    def __init__(self, declared: int, found: int):
        self.declared = declared
        self.found = found
        super().__init__(f"header declares {declared} edges, found {found}")


class NotACycleError(MeynielError, ValueError):
    """A vertex sequence that is not a simple cycle of the graph."""


class NotAPermutationError(MeynielError, ValueError):
    """A vertex sequence that is not a permutation of 0..n-1."""


class InvalidStepError(MeynielError):
    """A forced replay step violates the max-saturation selection rule.

    ``step`` is 1-based: step 1 is the first vertex colored.
    """

    def __init__(self, step: int, reason: str):
        self.step = step
        self.reason = reason
        super().__init__(f"invalid at step {step}: {reason}")


class BudgetExceededError(MeynielError):
    """An exact oracle ran out of its work budget before finishing.

    Budgets make exhaustive oracles fail loudly instead of silently
    returning a wrong or partial answer.
    """

    def __init__(self, budget: int, what: str = "work units"):
        self.budget = budget
        super().__init__(f"budget of {budget} {what} exceeded")


class NotStronglyColorableError(MeynielError):
    """Some residual graph had no stable set meeting all its maximal cliques."""

    def __init__(self, round_index: int):
        self.round_index = round_index
        super().__init__(
            f"no strong stable set exists in the residual graph at round {round_index}"
        )
