"""Command line behavior: rendering, exit codes, input plumbing."""

import json

from click.testing import CliRunner

from meyniel.cli import cli

C5_DIMACS = "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n"


def run(args, **kwargs):
    return CliRunner().invoke(cli, args, **kwargs)


def test_color_builtin_text():
    r = run(["color", "--builtin-counterexample"])
    assert r.exit_code == 0
    assert "colors used: 4" in r.output
    assert "coloring: a=1 b=2 c=3 d=1 e=2 f=1 g=2 h=3 i=1 j=4" in r.output
    assert "proper: yes" in r.output


def test_color_builtin_json():
    r = run(["color", "--builtin-counterexample", "--format", "json"])
    assert r.exit_code == 0
    body = json.loads(r.output)
    assert body["colors"] == [1, 2, 3, 1, 2, 1, 2, 3, 1, 4]


def test_color_trace_lines():
    r = run(["color", "--builtin-counterexample", "--trace"])
    assert r.exit_code == 0
    assert "trace:" in r.output
    assert "  step 1: a saturation 0 -> color 1" in r.output
    assert "  step 10: j saturation 3 -> color 4" in r.output


def test_color_output_file(tmp_path):
    out = tmp_path / "result.txt"
    r = run(["color", "--builtin-counterexample", "-o", str(out)])
    assert r.exit_code == 0
    assert r.output == ""
    assert "colors used: 4" in out.read_text()


def test_color_file_and_stdin(tmp_path):
    path = tmp_path / "c5.col"
    path.write_text(C5_DIMACS)
    r = run(["color", str(path)])
    assert r.exit_code == 0
    assert "colors used: 3" in r.output
    assert "coloring: 0=1" in r.output  # numeric names off the builtin
    r = run(["color", "-"], input=C5_DIMACS)
    assert r.exit_code == 0
    assert "colors used: 3" in r.output


def test_color_edgeless_graph_uses_one_color(tmp_path):
    path = tmp_path / "edgeless.col"
    path.write_text("p edge 4 0\n")
    r = run(["color", str(path)])
    assert r.exit_code == 0
    assert "colors used: 1" in r.output
    assert "coloring: 0=1 1=1 2=1 3=1" in r.output


def test_chi_k4(tmp_path):
    path = tmp_path / "k4.col"
    path.write_text("p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n")
    r = run(["chi", str(path)])
    assert r.exit_code == 0
    assert r.output.strip() == "chromatic number: 4"


def test_search_zero_instances():
    r = run(["search", "--seed", "1", "--instances", "0"])
    assert r.exit_code == 0
    assert "instances examined: 0" in r.output
    assert "findings: 0" in r.output


def test_color_missing_file():
    r = run(["color", "/nonexistent/g.col"])
    assert r.exit_code == 2
    assert "no such file" in r.output


def test_color_no_graph():
    r = run(["color"])
    assert r.exit_code == 2


def test_color_order_letters():
    r = run(["color", "--builtin-counterexample", "--order", "a,b,c,d,e,f,g,h,i,j"])
    assert r.exit_code == 0
    assert "colors used: 4" in r.output
    bad = run(["color", "--builtin-counterexample", "--order", "a,d,b,c,e,f,g,h,i,j"])
    assert bad.exit_code == 1
    assert "invalid order" in bad.output
    assert "saturation 0 < max 1" in bad.output


def test_color_order_bad_token():
    r = run(["color", "--builtin-counterexample", "--order", "a,zz,c"])
    assert r.exit_code == 2
    assert "bad vertex 'zz'" in r.output


def test_color_seeded_requires_seed():
    r = run(["color", "--builtin-counterexample", "--tie-break", "seeded"])
    assert r.exit_code == 2
    assert "--seed" in r.output
    ok = run(["color", "--builtin-counterexample", "--tie-break", "seeded", "--seed", "7"])
    assert ok.exit_code == 0
    assert "colors used: 3" in ok.output


def test_color_optimal_rounds():
    r = run(["color", "--builtin-counterexample", "--algo", "optimal"])
    assert r.exit_code == 0
    assert "colors used: 3" in r.output
    assert "round 1 [heuristic]:" in r.output
    assert "fallbacks: 0" in r.output


def test_color_optimal_c5(tmp_path):
    path = tmp_path / "c5.col"
    path.write_text(C5_DIMACS)
    r = run(["color", str(path), "--algo", "optimal"])
    assert r.exit_code == 1
    assert "not strongly colorable" in r.output
    assert "round 1" in r.output


def test_check_meyniel():
    ok = run(["check-meyniel", "--builtin-counterexample"])
    assert ok.exit_code == 0
    assert ok.output.strip() == "meyniel: yes"
    bad = run(["check-meyniel", "-"], input=C5_DIMACS)
    assert bad.exit_code == 1
    assert "meyniel: no" in bad.output
    assert "witness cycle: 0 1 2 3 4 (0 chord(s))" in bad.output


def test_chi_and_cliques():
    r = run(["chi", "--builtin-counterexample"])
    assert r.exit_code == 0
    assert r.output.strip() == "chromatic number: 3"
    r = run(["cliques", "--builtin-counterexample"])
    assert r.exit_code == 0
    assert "maximal cliques: 7 (clique number 3)" in r.output
    assert "  a b c" in r.output
    assert "  h i j" in r.output


def test_budget_flag_and_env():
    r = run(["check-meyniel", "--builtin-counterexample", "--budget", "3"])
    assert r.exit_code == 3
    assert "budget exceeded" in r.output
    assert "budget of 3" in r.output
    r = run(
        ["check-meyniel", "--builtin-counterexample"],
        env={"MEYNIEL_BUDGET": "3"},
    )
    assert r.exit_code == 3


def test_verify_counterexample():
    r = run(["verify-counterexample"])
    assert r.exit_code == 0
    for name in ("meyniel", "greedy-run", "colors-used", "chromatic", "strong-stable", "optimal"):
        assert f"check {name}: pass" in r.output
    assert "colors: 1 2 3 1 2 1 2 3 1 4" in r.output
    assert "verdict: counterexample verified" in r.output


def test_verify_counterexample_self_test():
    r = run(["verify-counterexample", "--self-test"])
    assert r.exit_code == 0
    assert "self-test: mutation detected" in r.output


def test_verify_counterexample_json():
    r = run(["verify-counterexample", "--format", "json"])
    assert r.exit_code == 0
    body = json.loads(r.output)
    assert body["passed"] is True
    assert len(body["checks"]) == 6


def test_search_text_and_json():
    args = ["search", "--seed", "3", "--instances", "0", "--include-builtin"]
    r = run(args)
    assert r.exit_code == 0
    assert "instances examined: 1" in r.output
    assert "findings: 1" in r.output
    assert "used 4 colors, chromatic number 3" in r.output
    assert "use --format json" in r.output
    j = run(args + ["--format", "json"])
    body = json.loads(j.output)
    assert body["findings"][0]["colors_used"] == 4
    assert "dimacs" in body["findings"][0]
    assert "trace" in body["findings"][0]


def test_search_skip_notes():
    r = run(
        ["search", "--seed", "4", "--instances", "4", "--n", "12",
         "--p", "0.4", "--budget", "50"]
    )
    assert r.exit_code == 0
    assert "skipped (budget):" in r.output


def test_bad_dimacs_is_usage_error():
    r = run(["chi", "-"], input="p edge 2 9\ne 1 2\n")
    assert r.exit_code == 2
    assert "header declares 9 edges, found 1" in r.output


def test_version_flag():
    r = run(["--version"])
    assert r.exit_code == 0
