"""HTTP endpoints wrapping the core package.

Malformed requests (bad exchange-format text, a non-permutation ranking or
order, an order on the wrong algorithm) map to HTTP 400. Well-formed
requests whose computation ends in a domain outcome (budget exhausted,
forced order impossible, no strong stable set) return 200 with the outcome
in the ``status`` field.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..coloring import (
    ExplicitPriority,
    MaxIndex,
    MinIndex,
    Seeded,
    TieBreakPolicy,
    Trace,
    is_proper,
    mccolor,
    mcs_color,
    num_colors,
    replay_order,
    verify_trace,
)
from ..cycles import is_meyniel
from ..errors import (
    BudgetExceededError,
    DimacsFormatError,
    GraphConstructionError,
    InvalidStepError,
    NotAPermutationError,
    NotStronglyColorableError,
    resolve_budget,
)
from ..exact import (
    chromatic_number,
    clique_number,
    is_strong_stable_set,
    maximal_cliques,
)
from ..graph import (
    COUNTEREXAMPLE_ALPHABETICAL_COLORS,
    Graph,
    counterexample_graph,
    parse_dimacs,
)
from ..optimal import MODE_VERIFIED, gap_search, optimal_color_meyniel
from . import schemas as s


def _load_graph(graph_in: s.GraphIn) -> Graph:
    if graph_in.builtin is not None:
        return counterexample_graph()
    try:
        return parse_dimacs(graph_in.dimacs)
    except (DimacsFormatError, GraphConstructionError) as exc:
        raise HTTPException(status_code=400, detail=str(exc))


def _build_policy(p: s.PolicyIn) -> TieBreakPolicy:
    if p.kind == "min":
        return MinIndex()
    if p.kind == "max":
        return MaxIndex()
    if p.kind == "seeded":
        return Seeded(p.seed)
    return ExplicitPriority(tuple(p.ranking))


def _trace_out(trace: Trace) -> s.TraceOut:
    return s.TraceOut(
        rule=trace.rule,
        steps=[
            s.TraceStepOut(
                step=k, vertex=st.vertex, saturation=st.saturation, color=st.color
            )
            for k, st in enumerate(trace.steps, start=1)
        ],
    )


def create_app() -> FastAPI:
    app = FastAPI(title="meyniel", version=__version__)

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/color", response_model=s.ColorResponse, response_model_exclude_none=True)
    def color(req: s.ColorRequest) -> s.ColorResponse:
        g = _load_graph(req.graph)
        budget = resolve_budget(req.budget)

        if req.algo == "optimal":
            if req.order is not None:
                raise HTTPException(400, "a forced order applies to algo 'mccolor' only")
            try:
                report = optimal_color_meyniel(
                    g, _build_policy(req.policy), req.mode, budget
                )
            except NotAPermutationError as exc:
                raise HTTPException(400, str(exc))
            except NotStronglyColorableError as exc:
                return s.ColorResponse(
                    status="not_strongly_colorable", detail=str(exc)
                )
            except BudgetExceededError as exc:
                return s.ColorResponse(status="budget_exceeded", detail=str(exc))
            return s.ColorResponse(
                status="ok",
                colors=report.coloring,
                colors_used=report.colors_used,
                proper=is_proper(g, report.coloring),
                rounds=[
                    s.RoundOut(vertices=sorted(members), source=source)
                    for members, source in report.rounds
                ],
                fallback_count=report.fallback_count,
            )

        if req.order is not None:
            if req.algo != "mccolor":
                raise HTTPException(400, "a forced order applies to algo 'mccolor' only")
            try:
                coloring, trace = replay_order(g, req.order)
            except NotAPermutationError as exc:
                raise HTTPException(400, str(exc))
            except InvalidStepError as exc:
                return s.ColorResponse(
                    status="invalid_order", detail=str(exc), step=exc.step
                )
        else:
            run = mccolor if req.algo == "mccolor" else mcs_color
            try:
                coloring, trace = run(g, _build_policy(req.policy))
            except NotAPermutationError as exc:
                raise HTTPException(400, str(exc))

        return s.ColorResponse(
            status="ok",
            colors=coloring,
            colors_used=num_colors(coloring),
            proper=is_proper(g, coloring),
            trace=_trace_out(trace) if req.include_trace else None,
        )

    @app.post(
        "/check-meyniel",
        response_model=s.MeynielResponse,
        response_model_exclude_none=True,
    )
    def check_meyniel(req: s.MeynielRequest) -> s.MeynielResponse:
        g = _load_graph(req.graph)
        try:
            verdict = is_meyniel(g, resolve_budget(req.budget))
        except BudgetExceededError as exc:
            return s.MeynielResponse(status="budget_exceeded", detail=str(exc))
        witness = None
        if verdict.witness is not None:
            witness = s.WitnessOut(
                vertices=list(verdict.witness.vertices),
                chord_count=verdict.witness.chord_count,
            )
        return s.MeynielResponse(
            status="ok", is_meyniel=verdict.is_meyniel, witness=witness
        )

    @app.post("/chi", response_model=s.ChiResponse, response_model_exclude_none=True)
    def chi(req: s.ChiRequest) -> s.ChiResponse:
        g = _load_graph(req.graph)
        try:
            value = chromatic_number(g, resolve_budget(req.budget))
        except BudgetExceededError as exc:
            return s.ChiResponse(status="budget_exceeded", detail=str(exc))
        return s.ChiResponse(status="ok", chromatic_number=value)

    @app.post(
        "/cliques", response_model=s.CliquesResponse, response_model_exclude_none=True
    )
    def cliques(req: s.CliquesRequest) -> s.CliquesResponse:
        g = _load_graph(req.graph)
        try:
            found = maximal_cliques(g, resolve_budget(req.budget))
        except BudgetExceededError as exc:
            return s.CliquesResponse(status="budget_exceeded", detail=str(exc))
        return s.CliquesResponse(
            status="ok",
            cliques=[list(c) for c in found],
            clique_number=max((len(c) for c in found), default=0),
        )

    @app.post(
        "/verify-counterexample",
        response_model=s.VerifyCounterexampleResponse,
        response_model_exclude_none=True,
    )
    def verify_counterexample(
        req: s.VerifyCounterexampleRequest,
    ) -> s.VerifyCounterexampleResponse:
        """Re-derive the bundled instance's facts, in a fixed check order."""
        g = _load_graph(req.graph) if req.graph is not None else counterexample_graph()
        budget = resolve_budget(req.budget)
        checks: list[s.CheckOut] = []
        expected = list(COUNTEREXAMPLE_ALPHABETICAL_COLORS)
        strong_candidate = frozenset({0, 3, 5, 8})  # vertices a, d, f, i

        coloring: list[int] | None = None
        used: int | None = None
        chi_value: int | None = None
        optimal_used: int | None = None

        try:
            verdict = is_meyniel(g, budget)
            if verdict:
                detail = "no odd cycle has fewer than two chords"
            else:
                w = verdict.witness
                detail = f"cycle {list(w.vertices)} has {w.chord_count} chord(s)"
            checks.append(
                s.CheckOut(name="meyniel", passed=verdict.is_meyniel, detail=detail)
            )

            try:
                coloring, trace = replay_order(g, list(range(g.n)))
                run_ok = verify_trace(g, trace).valid
                detail = (
                    f"expected colors {expected}, got {coloring}"
                    if coloring != expected
                    else "ascending-id replay is a valid run with the expected colors"
                )
                checks.append(
                    s.CheckOut(
                        name="greedy-run",
                        passed=run_ok and coloring == expected,
                        detail=detail,
                    )
                )
            except InvalidStepError as exc:
                checks.append(
                    s.CheckOut(name="greedy-run", passed=False, detail=str(exc))
                )

            used = num_colors(coloring) if coloring is not None else None
            checks.append(
                s.CheckOut(
                    name="colors-used",
                    passed=used == 4,
                    detail=f"greedy run used {used} color(s)"
                    if used is not None
                    else "no valid greedy run",
                )
            )

            chi_value = chromatic_number(g, budget)
            checks.append(
                s.CheckOut(
                    name="chromatic",
                    passed=chi_value == 3,
                    detail=f"chromatic number is {chi_value}",
                )
            )

            in_range = g.n > max(strong_candidate)
            strong_ok = in_range and is_strong_stable_set(g, strong_candidate, budget)
            checks.append(
                s.CheckOut(
                    name="strong-stable",
                    passed=strong_ok,
                    detail="{a, d, f, i} is stable and meets every maximal clique"
                    if strong_ok
                    else "{a, d, f, i} is not a strong stable set here",
                )
            )

            try:
                report = optimal_color_meyniel(g, MinIndex(), MODE_VERIFIED, budget)
                optimal_used = report.colors_used
                checks.append(
                    s.CheckOut(
                        name="optimal",
                        passed=optimal_used == 3 and is_proper(g, report.coloring),
                        detail=f"iterated removal used {optimal_used} color(s)",
                    )
                )
            except NotStronglyColorableError as exc:
                checks.append(s.CheckOut(name="optimal", passed=False, detail=str(exc)))
        except BudgetExceededError as exc:
            return s.VerifyCounterexampleResponse(
                status="budget_exceeded", detail=str(exc), checks=checks
            )

        return s.VerifyCounterexampleResponse(
            status="ok",
            passed=all(c.passed for c in checks),
            checks=checks,
            colors=coloring,
            colors_used=used,
            chromatic_number=chi_value,
            optimal_colors_used=optimal_used,
        )

    @app.post(
        "/search", response_model=s.SearchResponse, response_model_exclude_none=True
    )
    def search(req: s.SearchRequest) -> s.SearchResponse:
        try:
            report = gap_search(
                seed=req.seed,
                instances=req.instances,
                n=req.n,
                p=req.p,
                policies_per_instance=req.policies_per_instance,
                include_builtin=req.include_builtin,
                budget=resolve_budget(req.budget),
            )
        except BudgetExceededError as exc:
            return s.SearchResponse(status="budget_exceeded", detail=str(exc))
        findings = [
            s.FindingOut(
                instance_index=f.instance_index,
                policy_index=f.policy_index,
                policy=f.policy,
                dimacs=f.dimacs,
                colors_used=f.colors_used,
                chromatic_number=f.chromatic_number,
                clique_number=f.clique_number,
                trace=_trace_out(f.trace),
            )
            for f in report.findings
        ]
        return s.SearchResponse(
            status="ok",
            instances_examined=report.instances_examined,
            meyniel_instances=report.meyniel_instances,
            runs=report.runs,
            skipped=report.skipped,
            notes=list(report.notes),
            findings=findings,
        )

    return app


app = create_app()
