import json

import networkx as nx
import pytest
from click.testing import CliRunner

from oddsum.cli import main
from oddsum.formats import from_graph6, parse_graph, to_graph6, to_json
from oddsum.graph import build_graph, complete_graph


@pytest.fixture
def runner():
    return CliRunner()


def run(runner, args, input=None, env=None):
    return runner.invoke(main, args, input=input, env=env or {}, catch_exceptions=False)


def construct(runner, *args):
    res = run(runner, ["construct", *args])
    assert res.exit_code == 0, res.output
    return res.output


def test_construct_J_roundtrip(runner):
    g = from_graph6(construct(runner, "J", "--delta", "4", "--k", "1").strip())
    assert g.n == 95 and g.max_degree() == 4


def test_construct_gabk_and_dot(runner):
    assert from_graph6(construct(runner, "gabk").strip()).n == 9
    dot = construct(runner, "thm4", "--format", "dot")
    assert dot.startswith("graph") and "z1" in dot


def test_construct_json_to_file(runner, tmp_path):
    out = tmp_path / "g.json"
    construct(runner, "bowtie", "--format", "json", "-o", str(out))
    assert json.loads(out.read_text())["n"] == 5


def test_construct_invalid_params(runner):
    res = run(runner, ["construct", "J", "--delta", "5"])
    assert res.exit_code == 1 and "Error" in res.output


def test_solve_chios_thm4(runner):
    g6 = construct(runner, "thm4")
    res = run(runner, ["solve", "chios"], input=g6)
    assert res.exit_code == 0 and res.output.strip() == "8"


def test_solve_ods_count(runner):
    g6 = construct(runner, "Gt", "--t", "3")
    res = run(runner, ["solve", "ods", "--count"], input=g6)
    assert res.output.strip() == "64"
    res = run(runner, ["solve", "ods", "--count", "--json"], input=g6)
    assert json.loads(res.output) == {"count": 64}


def test_solve_ods_list(runner):
    res = run(runner, ["solve", "ods", "--list", "--json"], input=to_graph6(complete_graph(2)))
    assert json.loads(res.output)["sets"] == [[0], [1]]


def test_solve_chi(runner):
    res = run(runner, ["solve", "chi"], input=to_graph6(complete_graph(4)))
    assert res.output.strip() == "4"


def test_solve_cap_exit(runner):
    g6 = construct(runner, "Gt", "--t", "2")
    res = run(runner, ["solve", "chios"], input=g6, env={"ODDSUM_CAP": "4"})
    assert res.exit_code == 2
    res = run(runner, ["solve", "ods", "--list", "--cap", "4"], input=g6)
    assert res.exit_code == 2


def test_solve_node_budget_exit(runner):
    # Groetzsch graph: clique bound 2, chi 4, so search is unavoidable
    g = nx.mycielski_graph(4)
    res = run(runner, ["solve", "chi", "--node-budget", "1"], input=to_graph6(build_graph(g.number_of_nodes(), g.edges())))
    assert res.exit_code == 2


def test_formats_agree(runner):
    g = parse_graph(construct(runner, "extbowtie"))
    out6 = run(runner, ["solve", "chios"], input=to_graph6(g)).output
    outj = run(runner, ["solve", "chios"], input=to_json(g)).output
    assert out6 == outj


def test_bad_graph_input(runner):
    res = run(runner, ["solve", "chi"], input="{not json")
    assert res.exit_code == 1


@pytest.mark.parametrize("args", [
    ["thm1"],
    ["thm1", "--delta", "6"],
    ["propA", "--max-n", "7", "--samples", "200"],
    ["thm8", "--g", "30"],
    ["thm4"],
    ["lemma2"],
    ["k2kn", "--n", "3"],
])
def test_verify_passes(runner, args):
    res = run(runner, ["verify", *args])
    assert res.exit_code == 0, res.output


def test_verify_json_and_unknown_option(runner):
    res = run(runner, ["verify", "thm4", "--json"])
    assert json.loads(res.output)["passed"] is True
    res = run(runner, ["verify", "thm4", "--samples", "3"])
    assert res.exit_code == 1


def test_validate_certificate_roundtrip(runner, tmp_path):
    gfile = tmp_path / "thm4.g6"
    gfile.write_text(construct(runner, "thm4"))
    res = run(runner, ["solve", "chios", str(gfile), "--certificate", "--json"])
    cert = json.loads(res.output)
    cfile = tmp_path / "c.json"
    cfile.write_text(json.dumps(cert))
    res = run(runner, ["validate", str(gfile), str(cfile)])
    assert res.exit_code == 0 and "8 colors" in res.output


@pytest.mark.parametrize("colors, kinds", [([1, 3], ["parity", "parity"]), ([1, 1], ["proper", "parity", "parity"])])
def test_validate_rejects(runner, tmp_path, colors, kinds):
    gfile = tmp_path / "k2.g6"
    gfile.write_text(to_graph6(complete_graph(2)))
    cfile = tmp_path / "c.json"
    cfile.write_text(json.dumps(colors))
    res = run(runner, ["validate", str(gfile), str(cfile), "--json"])
    assert res.exit_code == 1
    assert sorted(v["kind"] for v in json.loads(res.output)["violations"]) == sorted(kinds)


def test_validate_malformed_coloring(runner, tmp_path):
    gfile = tmp_path / "k2.g6"
    gfile.write_text(to_graph6(complete_graph(2)))
    cfile = tmp_path / "c.json"
    cfile.write_text("[1]")
    assert run(runner, ["validate", str(gfile), str(cfile)]).exit_code == 1


def test_surfaces_commands(runner):
    assert run(runner, ["surfaces", "heawood", "30"]).output.strip() == "22"
    out = json.loads(run(runner, ["surfaces", "bound", "30", "--json"]).output)
    assert out["lower_bound"] > out["heawood"] == 22
    table = run(runner, ["surfaces", "table", "--g-max", "120"]).output.splitlines()
    assert table[0] == "g,heawood,lower_bound,gap" and len(table) == 4
    assert run(runner, ["surfaces", "bound", "2"]).exit_code == 1


def test_oracle_commands(runner):
    k3 = to_graph6(complete_graph(3))
    prism = construct(runner, "product-k2kn", "--n", "3")
    assert run(runner, ["oracle", "chios"], input=prism).output.strip() == "6"
    assert run(runner, ["oracle", "chi"], input=k3).output.strip() == "3"
    out = run(runner, ["oracle", "ods"], input=to_graph6(complete_graph(2))).output.splitlines()
    assert out == ["2", "{0}", "{1}"]
