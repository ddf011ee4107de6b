"""Command line client for the coloring service.

Every subcommand builds a request, sends it to the service (in process by
default, over HTTP with --server), and renders the response. Exit codes:
0 success, 1 negative verdict (not in the class, invalid order, failed
verification), 2 usage or input parse error, 3 budget exceeded.
"""

from __future__ import annotations

import asyncio
import json
import sys
from pathlib import Path

import click
import httpx

from .graph import COUNTEREXAMPLE_LETTERS, build_graph, counterexample_graph, emit_dimacs

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

_STATUS_EXIT = {
    "ok": EXIT_OK,
    "invalid_order": EXIT_NEGATIVE,
    "not_strongly_colorable": EXIT_NEGATIVE,
    "budget_exceeded": EXIT_BUDGET,
}


def _post(server: str | None, path: str, payload: dict) -> dict:
    """POST to the service; in process unless a server URL is given."""
    if server is None:
        from .service.app import app

        async def go() -> httpx.Response:
            transport = httpx.ASGITransport(app=app)
            async with httpx.AsyncClient(
                transport=transport, base_url="http://service"
            ) as client:
                return await client.post(path, json=payload)

        resp = asyncio.run(go())
    else:
        try:
            resp = httpx.post(
                server.rstrip("/") + path, json=payload, timeout=60.0
            )
        except httpx.HTTPError as exc:
            raise click.ClickException(f"cannot reach {server}: {exc}")
    if resp.status_code == 400:
        raise click.UsageError(resp.json().get("detail", "bad request"))
    if resp.status_code == 422:
        raise click.UsageError(f"invalid request: {resp.text}")
    if resp.status_code != 200:
        raise click.ClickException(f"service error {resp.status_code}: {resp.text}")
    return resp.json()


def _graph_payload(path: str | None, builtin: bool) -> dict:
    if builtin and path is not None:
        raise click.UsageError("give either a graph file or --builtin-counterexample")
    if builtin:
        return {"builtin": "counterexample"}
    if path is None:
        raise click.UsageError(
            "provide a graph file, '-' for stdin, or --builtin-counterexample"
        )
    if path == "-":
        return {"dimacs": sys.stdin.read()}
    p = Path(path)
    if not p.is_file():
        raise click.UsageError(f"no such file: {path}")
    return {"dimacs": p.read_text()}


def _vertex_names(n: int, builtin: bool) -> list[str]:
    if builtin and n == len(COUNTEREXAMPLE_LETTERS):
        return list(COUNTEREXAMPLE_LETTERS)
    return [str(v) for v in range(n)]


def _parse_order(text: str, builtin: bool) -> list[int]:
    tokens = [t.strip() for t in text.split(",") if t.strip()]
    letters = list(COUNTEREXAMPLE_LETTERS)
    out = []
    for t in tokens:
        if builtin and t in letters:
            out.append(letters.index(t))
            continue
        try:
            out.append(int(t))
        except ValueError:
            raise click.UsageError(f"bad vertex {t!r} in --order")
    return out


def _policy_payload(tie_break: str, seed: int | None) -> dict:
    if tie_break == "seeded":
        if seed is None:
            raise click.UsageError("--tie-break seeded requires --seed")
        return {"kind": "seeded", "seed": seed}
    return {"kind": tie_break}


def _emit(text: str, output: str | None) -> None:
    if output is None:
        click.echo(text)
    else:
        Path(output).write_text(text + "\n")


def _finish(body: dict, fmt: str, output: str | None, text: str, exit_code: int) -> None:
    if fmt == "json":
        _emit(json.dumps(body, indent=2), output)
    else:
        _emit(text, output)
    sys.exit(exit_code)


def _common_options(fn):
    fn = click.option(
        "--budget",
        type=int,
        default=None,
        envvar="MEYNIEL_BUDGET",
        help="work budget for exhaustive checks (env MEYNIEL_BUDGET)",
    )(fn)
    fn = click.option(
        "--format",
        "fmt",
        type=click.Choice(["text", "json"]),
        default="text",
        show_default=True,
        help="output rendering",
    )(fn)
    fn = click.option(
        "-o",
        "--output",
        type=click.Path(dir_okay=False),
        default=None,
        help="write the result to FILE instead of stdout",
    )(fn)
    fn = click.option(
        "--server",
        metavar="URL",
        default=None,
        help="send requests to a running service instead of in process",
    )(fn)
    return fn


def _graph_options(fn):
    fn = click.argument("graph", required=False, type=click.Path(allow_dash=True))(fn)
    fn = click.option(
        "--builtin-counterexample",
        "builtin",
        is_flag=True,
        help="use the bundled 10-vertex instance (vertices a..j)",
    )(fn)
    return fn


@click.group()
@click.version_option(package_name="meyniel")
def cli() -> None:
    """Greedy and optimal graph coloring with traces and exact checks.

    Graphs are DIMACS .col files (or '-' for stdin); 1-indexed in files,
    0-indexed in JSON output.
    """


@cli.command()
@_graph_options
@click.option(
    "--algo",
    type=click.Choice(["mccolor", "mcs", "optimal"]),
    default="mccolor",
    show_default=True,
    help="coloring algorithm",
)
@click.option(
    "--mode",
    type=click.Choice(["heuristic", "verified"]),
    default="verified",
    show_default=True,
    help="for --algo optimal: check each removed set exactly, or trust the greedy class",
)
@click.option(
    "--tie-break",
    type=click.Choice(["min", "max", "seeded"]),
    default="min",
    show_default=True,
    help="choice among equally ranked vertices",
)
@click.option("--seed", type=int, default=None, help="seed for --tie-break seeded")
@click.option(
    "--order",
    default=None,
    metavar="V1,V2,...",
    help="force this vertex order (mccolor only); fails if some step is not max-saturation",
)
@click.option("--trace", "with_trace", is_flag=True, help="include the step trace")
@_common_options
def color(graph, builtin, algo, mode, tie_break, seed, order, with_trace, budget, fmt, output, server):
    """Color a graph and report the number of colors used."""
    payload: dict = {
        "graph": _graph_payload(graph, builtin),
        "algo": algo,
        "mode": mode,
        "policy": _policy_payload(tie_break, seed),
        "include_trace": with_trace,
    }
    if order is not None:
        payload["order"] = _parse_order(order, builtin)
    if budget is not None:
        payload["budget"] = budget
    body = _post(server, "/color", payload)

    lines: list[str] = []
    if body["status"] == "ok":
        names = _vertex_names(len(body["colors"]), builtin)
        lines.append(f"colors used: {body['colors_used']}")
        lines.append(
            "coloring: "
            + " ".join(f"{names[v]}={c}" for v, c in enumerate(body["colors"]))
        )
        lines.append(f"proper: {'yes' if body['proper'] else 'no'}")
        if body.get("rounds") is not None:
            for r, row in enumerate(body["rounds"], start=1):
                members = " ".join(names[v] for v in row["vertices"])
                lines.append(f"round {r} [{row['source']}]: {members}")
            lines.append(f"fallbacks: {body['fallback_count']}")
        if with_trace and body.get("trace") is not None:
            lines.append("trace:")
            for st in body["trace"]["steps"]:
                lines.append(
                    f"  step {st['step']}: {names[st['vertex']]}"
                    f" saturation {st['saturation']} -> color {st['color']}"
                )
    else:
        lines.append(f"{body['status'].replace('_', ' ')}: {body.get('detail', '')}")
    _finish(body, fmt, output, "\n".join(lines), _STATUS_EXIT[body["status"]])


@cli.command("check-meyniel")
@_graph_options
@_common_options
def check_meyniel(graph, builtin, budget, fmt, output, server):
    """Check the two-chord odd-cycle property; print a witness if it fails."""
    payload: dict = {"graph": _graph_payload(graph, builtin)}
    if budget is not None:
        payload["budget"] = budget
    body = _post(server, "/check-meyniel", payload)

    if body["status"] != "ok":
        text = f"budget exceeded: {body.get('detail', '')}"
        _finish(body, fmt, output, text, _STATUS_EXIT[body["status"]])
    if body["is_meyniel"]:
        _finish(body, fmt, output, "meyniel: yes", EXIT_OK)
    w = body["witness"]
    names = _vertex_names(1 + max(w["vertices"]), builtin)
    cycle = " ".join(names[v] for v in w["vertices"])
    text = f"meyniel: no\nwitness cycle: {cycle} ({w['chord_count']} chord(s))"
    _finish(body, fmt, output, text, EXIT_NEGATIVE)


@cli.command()
@_graph_options
@_common_options
def chi(graph, builtin, budget, fmt, output, server):
    """Exact chromatic number (desk scale)."""
    payload: dict = {"graph": _graph_payload(graph, builtin)}
    if budget is not None:
        payload["budget"] = budget
    body = _post(server, "/chi", payload)
    if body["status"] != "ok":
        _finish(body, fmt, output, f"budget exceeded: {body.get('detail', '')}",
                _STATUS_EXIT[body["status"]])
    _finish(body, fmt, output, f"chromatic number: {body['chromatic_number']}", EXIT_OK)


@cli.command()
@_graph_options
@_common_options
def cliques(graph, builtin, budget, fmt, output, server):
    """List all maximal cliques (desk scale)."""
    payload: dict = {"graph": _graph_payload(graph, builtin)}
    if budget is not None:
        payload["budget"] = budget
    body = _post(server, "/cliques", payload)
    if body["status"] != "ok":
        _finish(body, fmt, output, f"budget exceeded: {body.get('detail', '')}",
                _STATUS_EXIT[body["status"]])
    found = body["cliques"]
    n = 1 + max((max(c) for c in found if c), default=-1)
    names = _vertex_names(n, builtin)
    lines = [f"maximal cliques: {len(found)} (clique number {body['clique_number']})"]
    lines.extend("  " + " ".join(names[v] for v in c) for c in found)
    _finish(body, fmt, output, "\n".join(lines), EXIT_OK)


@cli.command("verify-counterexample")
@click.option(
    "--self-test",
    is_flag=True,
    help="drop one edge from the instance and require the verification to fail",
)
@_common_options
def verify_counterexample(self_test, budget, fmt, output, server):
    """Re-derive the bundled instance's facts: a valid 4-color greedy run
    on a 3-chromatic graph in the class."""
    payload: dict = {}
    if self_test:
        g = counterexample_graph()
        edges = [e for e in g.edges() if e != (0, 1)]
        payload["graph"] = {"dimacs": emit_dimacs(build_graph(g.n, edges))}
    if budget is not None:
        payload["budget"] = budget
    body = _post(server, "/verify-counterexample", payload)

    if body["status"] != "ok":
        _finish(body, fmt, output, f"budget exceeded: {body.get('detail', '')}",
                _STATUS_EXIT[body["status"]])

    lines = []
    for check in body["checks"]:
        mark = "pass" if check["passed"] else "FAIL"
        lines.append(f"check {check['name']}: {mark} ({check['detail']})")
    if body.get("colors") is not None:
        lines.append("colors: " + " ".join(str(c) for c in body["colors"]))
    failed = [c["name"] for c in body["checks"] if not c["passed"]]

    if self_test:
        if body["passed"]:
            lines.append("self-test: mutated instance was NOT rejected")
            _finish(body, fmt, output, "\n".join(lines), EXIT_NEGATIVE)
        lines.append(f"self-test: mutation detected (failed: {', '.join(failed)})")
        _finish(body, fmt, output, "\n".join(lines), EXIT_OK)

    if body["passed"]:
        lines.append("verdict: counterexample verified")
        _finish(body, fmt, output, "\n".join(lines), EXIT_OK)
    lines.append(f"verdict: verification FAILED (first failing check: {failed[0]})")
    _finish(body, fmt, output, "\n".join(lines), EXIT_NEGATIVE)


@cli.command()
@click.option("--seed", type=int, required=True, help="master seed")
@click.option("--instances", type=int, required=True, help="instances to generate")
@click.option("--n", "n_vertices", type=int, default=24, show_default=True,
              help="vertices per generated instance")
@click.option("--p", type=float, default=0.35, show_default=True,
              help="edge probability for the random instances")
@click.option("--policies-per-instance", type=int, default=4, show_default=True)
@click.option("--include-builtin", is_flag=True,
              help="also run the bundled instance under its alphabetical ranking")
@_common_options
def search(seed, instances, n_vertices, p, policies_per_instance, include_builtin,
           budget, fmt, output, server):
    """Hunt for greedy runs that beat the chromatic number."""
    payload: dict = {
        "seed": seed,
        "instances": instances,
        "n": n_vertices,
        "p": p,
        "policies_per_instance": policies_per_instance,
        "include_builtin": include_builtin,
    }
    if budget is not None:
        payload["budget"] = budget
    body = _post(server, "/search", payload)
    if body["status"] != "ok":
        _finish(body, fmt, output, f"budget exceeded: {body.get('detail', '')}",
                _STATUS_EXIT[body["status"]])
    lines = [
        f"instances examined: {body['instances_examined']}",
        f"qualifying instances: {body['meyniel_instances']}",
        f"greedy runs: {body['runs']}",
        f"findings: {len(body['findings'])}",
    ]
    if body.get("skipped"):
        lines.append(f"skipped (budget): {body['skipped']}")
        lines.extend(f"  {note}" for note in body.get("notes", []))
    for i, f in enumerate(body["findings"], start=1):
        lines.append(
            f"finding {i}: instance {f['instance_index']} policy {f['policy']}"
            f" used {f['colors_used']} colors, chromatic number"
            f" {f['chromatic_number']} (clique number {f['clique_number']})"
        )
    if body["findings"]:
        lines.append("use --format json for instances and traces")
    _finish(body, fmt, output, "\n".join(lines), EXIT_OK)


@cli.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("meyniel.service.app:app", host=host, port=port)


def main() -> None:
    cli()


if __name__ == "__main__":
    main()
