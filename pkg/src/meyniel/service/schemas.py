"""Request and response models for the HTTP service.

Domain outcomes (budget exhaustion, an order that no greedy run could
produce, a missing strong stable set) are reported in the response body
with status 200; only malformed requests map to HTTP errors.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field, model_validator

Status = Literal["ok", "invalid_order", "budget_exceeded", "not_strongly_colorable"]


class GraphIn(BaseModel):
    """Exactly one of ``dimacs`` (exchange format text) or ``builtin``."""

    dimacs: str | None = None
    builtin: Literal["counterexample"] | None = None

    @model_validator(mode="after")
    def _exactly_one(self) -> "GraphIn":
        if (self.dimacs is None) == (self.builtin is None):
            raise ValueError("provide exactly one of 'dimacs' or 'builtin'")
        return self


class PolicyIn(BaseModel):
    kind: Literal["min", "max", "seeded", "explicit"] = "min"
    seed: int | None = None
    ranking: list[int] | None = None

    @model_validator(mode="after")
    def _fields_match_kind(self) -> "PolicyIn":
        if self.kind == "seeded" and self.seed is None:
            raise ValueError("kind 'seeded' requires 'seed'")
        if self.kind == "explicit" and self.ranking is None:
            raise ValueError("kind 'explicit' requires 'ranking'")
        return self


class TraceStepOut(BaseModel):
    step: int
    vertex: int
    saturation: int
    color: int


class TraceOut(BaseModel):
    rule: str
    steps: list[TraceStepOut]


class RoundOut(BaseModel):
    vertices: list[int]
    source: Literal["heuristic", "exact-fallback"]


class ColorRequest(BaseModel):
    graph: GraphIn
    algo: Literal["mccolor", "mcs", "optimal"] = "mccolor"
    mode: Literal["heuristic", "verified"] = "verified"
    policy: PolicyIn = Field(default_factory=PolicyIn)
    order: list[int] | None = None
    include_trace: bool = False
    budget: int | None = Field(default=None, ge=1)


class ColorResponse(BaseModel):
    status: Status
    detail: str | None = None
    step: int | None = None
    colors: list[int] | None = None
    colors_used: int | None = None
    proper: bool | None = None
    trace: TraceOut | None = None
    rounds: list[RoundOut] | None = None
    fallback_count: int | None = None


class MeynielRequest(BaseModel):
    graph: GraphIn
    budget: int | None = Field(default=None, ge=1)


class WitnessOut(BaseModel):
    vertices: list[int]
    chord_count: int


class MeynielResponse(BaseModel):
    status: Status
    detail: str | None = None
    is_meyniel: bool | None = None
    witness: WitnessOut | None = None


class ChiRequest(BaseModel):
    graph: GraphIn
    budget: int | None = Field(default=None, ge=1)


class ChiResponse(BaseModel):
    status: Status
    detail: str | None = None
    chromatic_number: int | None = None


class CliquesRequest(BaseModel):
    graph: GraphIn
    budget: int | None = Field(default=None, ge=1)


class CliquesResponse(BaseModel):
    status: Status
    detail: str | None = None
    cliques: list[list[int]] | None = None
    clique_number: int | None = None


class CheckOut(BaseModel):
    name: str
    passed: bool
    detail: str


class VerifyCounterexampleRequest(BaseModel):
    # dimacs overrides the builtin ten-vertex graph, for self-tests
    graph: GraphIn | None = None
    budget: int | None = Field(default=None, ge=1)


class VerifyCounterexampleResponse(BaseModel):
    status: Status
    detail: str | None = None
    passed: bool | None = None
    checks: list[CheckOut] = []
    colors: list[int] | None = None
    colors_used: int | None = None
    chromatic_number: int | None = None
    optimal_colors_used: int | None = None


class SearchRequest(BaseModel):
    seed: int
    instances: int = Field(ge=0)
    n: int = Field(default=24, ge=0)
    p: float = Field(default=0.35, ge=0.0, le=1.0)
    policies_per_instance: int = Field(default=4, ge=1)
    include_builtin: bool = False
    budget: int | None = Field(default=None, ge=1)


class FindingOut(BaseModel):
    instance_index: int
    policy_index: int
    policy: str
    dimacs: str
    colors_used: int
    chromatic_number: int
    clique_number: int
    trace: TraceOut


class SearchResponse(BaseModel):
    status: Status
    detail: str | None = None
    instances_examined: int | None = None
    meyniel_instances: int | None = None
    runs: int | None = None
    skipped: int | None = None
    notes: list[str] = []
    findings: list[FindingOut] = []
