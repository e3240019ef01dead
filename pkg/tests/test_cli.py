"""Test the command-line interface."""

import yaml
from click.testing import CliRunner

from app.cli import cli
from app.core.graph_file import read_graph, read_ordering, serialize_graph
from app.core.multigraph import Orientation, from_edge_list
from app.core.partition import VertexPartition
from app.core.solver import ordering_cutwidth
from app.families import gen_lower_H, gen_lower_K, gen_nolow_Gn


def _report(output: str) -> dict[str, str]:
    """Parse "key value" lines; repeated keys keep the last value."""
    lines = [line.split(" ", 1) for line in output.splitlines() if " " in line]
    return {key: value for key, value in lines}


def _invoke(*args):
    return CliRunner().invoke(cli, list(args))


def test_help():
    result = _invoke("--help")
    assert result.exit_code == 0
    for command in ("cutwidth", "bound", "gen", "verify", "config", "init"):
        assert command in result.stdout


def test_cutwidth_command(graph_file, tmp_path):
    """Test the exact cutwidth of K(2, 3) and the ordering file."""
    k = gen_lower_K(2, 3)
    out = tmp_path / "witness.ordering"
    result = _invoke("cutwidth", str(graph_file(k)), "--ordering-out", str(out))
    assert result.exit_code == 0, result.stderr
    report = _report(result.stdout)
    assert report["cutwidth"] == "6"
    ordering = tuple(int(v) for v in report["ordering"].split())
    assert ordering_cutwidth(k, ordering) == 6
    assert read_ordering(out) == ordering


def test_cutwidth_single_vertex(graph_file):
    g = from_edge_list(Orientation.UNDIRECTED, 1, [])
    result = _invoke("cutwidth", str(graph_file(g)))
    assert result.exit_code == 0
    assert "cutwidth 0" in result.stdout.splitlines()


def test_cutwidth_directed_input(graph_file):
    """Test that directed input is solved on its underlying undirected graph."""
    result = _invoke("cutwidth", str(graph_file(gen_nolow_Gn(4))))
    assert result.exit_code == 0
    assert result.stdout.startswith("notice ")
    assert int(_report(result.stdout)["cutwidth"]) <= 5


def test_cutwidth_parse_error(tmp_path):
    path = tmp_path / "broken.graph"
    path.write_text("undirected\n3\ne 1 2\ne 2 2\n", encoding="ascii")
    result = _invoke("cutwidth", str(path))
    assert result.exit_code == 2
    assert "line 4" in result.stderr
    assert result.stdout == ""


def test_cutwidth_budget_exceeded(graph_file):
    result = _invoke("cutwidth", str(graph_file(gen_lower_H(2, 3))), "--budget", "10")
    assert result.exit_code == 3
    assert "budget" in result.stderr


def test_bound_theorem_on_lower_g(tmp_path):
    """Test the 1.5x + y certificate for G(2, 3) from generated files."""
    prefix = tmp_path / "g23"
    assert _invoke("gen", "lower-g", "--x", "2", "--y", "3", "--out", str(prefix)).exit_code == 0

    result = _invoke(
        "bound",
        f"{prefix}.graph",
        "--partition",
        f"{prefix}.partition",
        "--method",
        "theorem",
    )
    assert result.exit_code == 0, result.stderr
    report = _report(result.stdout)
    assert report["x"] == "2"
    assert report["y"] == "3"
    assert report["achieved"] == "6"
    assert report["bound"] == "6"
    assert report["lower"] == "3"
    assert report["bound_kind"] == "theorem_1_5x_plus_y"
    class_lines = [line for line in result.stdout.splitlines() if line.startswith("class ")]
    assert len(class_lines) == 3
    assert all(" n " in line for line in class_lines)

    g = read_graph(f"{prefix}.graph")
    ordering = tuple(int(v) for v in report["ordering"].split())
    assert ordering_cutwidth(g, ordering) == 6


def test_bound_singleton_partition(graph_file, tmp_path):
    """Test that singleton classes give y = 0 and achieved = x."""
    k = gen_lower_K(2, 3)
    path = graph_file(k, VertexPartition.singletons(4), name="k23")
    result = _invoke("bound", str(path), "--partition", str(tmp_path / "k23.partition"))
    assert result.exit_code == 0, result.stderr
    report = _report(result.stdout)
    assert report["y"] == "0"
    assert report["achieved"] == report["x"]


def test_bound_scc_simple_on_lower_h(graph_file):
    result = _invoke("bound", str(graph_file(gen_lower_H(2, 3))), "--scc", "--method", "simple")
    assert result.exit_code == 0, result.stderr
    report = _report(result.stdout)
    assert report["x"] == "2"
    assert report["y"] == "3"
    assert int(report["achieved"]) <= 7
    assert report["bound_kind"] == "simple_2x_plus_y"


def test_bound_scc_above_budget():
    """Test H(4, 6): 25 vertices, but only its SCC and condensation are solved."""
    runner = CliRunner()
    with runner.isolated_filesystem():
        with open("h46.graph", "w", encoding="ascii") as f:
            f.write(serialize_graph(gen_lower_H(4, 6)))
        result = runner.invoke(cli, ["bound", "h46.graph", "--scc"])
    assert result.exit_code == 0, result.stderr
    report = _report(result.stdout)
    assert (report["x"], report["y"], report["achieved"]) == ("4", "6", "12")


def test_bound_inconsistent_partition(graph_file, tmp_path):
    path = graph_file(gen_lower_K(2, 3), name="k")
    (tmp_path / "k.partition").write_text("1 2\n3\n", encoding="ascii")
    result = _invoke("bound", str(path), "--partition", str(tmp_path / "k.partition"))
    assert result.exit_code == 2
    assert "not covered" in result.stderr


def test_bound_needs_one_partition_source(graph_file):
    path = graph_file(gen_nolow_Gn(3))
    assert _invoke("bound", str(path)).exit_code == 2


def test_bound_scc_needs_directed(graph_file):
    result = _invoke("bound", str(graph_file(gen_lower_K(2, 3))), "--scc")
    assert result.exit_code == 2
    assert "directed" in result.stderr


def test_gen_matches_golden(tmp_path, golden_dir):
    """Test that generated files match the golden files."""
    prefix = tmp_path / "h23"
    result = _invoke("gen", "lower-h", "--y", "3", "--x", "2", "--out", str(prefix))
    assert result.exit_code == 0, result.stderr
    assert (tmp_path / "h23.graph").read_bytes() == (golden_dir / "lower_h_2_3.graph").read_bytes()
    assert not (tmp_path / "h23.partition").exists()

    prefix = tmp_path / "g23"
    assert _invoke("gen", "lower-g", "--x", "2", "--y", "3", "--out", str(prefix)).exit_code == 0
    assert (tmp_path / "g23.graph").read_bytes() == (golden_dir / "lower_g_2_3.graph").read_bytes()
    assert (tmp_path / "g23.partition").read_bytes() == (
        golden_dir / "lower_g_2_3.partition"
    ).read_bytes()


def test_gen_to_stdout(golden_dir):
    result = _invoke("gen", "nolow", "--n", "3")
    assert result.exit_code == 0
    assert result.stdout == (golden_dir / "nolow_3.graph").read_text(encoding="ascii")


def test_gen_random_is_reproducible(tmp_path):
    args = ["gen", "random", "--seed", "7", "--n", "9", "--classes", "3", "--max-multiplicity", "2"]
    first = _invoke(*args, "--out", str(tmp_path / "a"))
    second = _invoke(*args, "--out", str(tmp_path / "b"))
    assert first.exit_code == second.exit_code == 0
    for suffix in ("graph", "partition"):
        assert (tmp_path / f"a.{suffix}").read_bytes() == (tmp_path / f"b.{suffix}").read_bytes()


def test_gen_random_matches_golden(tmp_path, golden_dir):
    args = ["gen", "random", "--seed", "7", "--n", "9", "--classes", "1"]
    args += ["--max-multiplicity", "3", "--density", "0.5", "--out", str(tmp_path / "r")]
    result = _invoke(*args)
    assert result.exit_code == 0, result.stderr
    for suffix in ("graph", "partition"):
        expected = (golden_dir / f"random_7_9_1.{suffix}").read_bytes()
        assert (tmp_path / f"r.{suffix}").read_bytes() == expected


def test_gen_reads_logging_config(tmp_path):
    """Test that gen takes --config like the other commands."""
    config_path = tmp_path / "cwb.yaml"
    config_path.write_text(yaml.dump({"logging": {"level": "info", "format": "json"}}))
    result = _invoke("gen", "nolow", "--n", "3", "--config", str(config_path))
    assert result.exit_code == 0, result.stderr
    assert "Instance generated" in result.stderr
    assert "Instance generated" not in result.stdout


def test_gen_invalid_params():
    result = _invoke("gen", "lower-g", "--x", "3", "--y", "2")
    assert result.exit_code == 2
    assert "x must be even" in result.stderr


def test_verify_claim2():
    result = _invoke("verify", "claim2")
    assert result.exit_code == 0, result.stdout
    lines = result.stdout.splitlines()
    assert len(lines) == 27
    assert all(line.startswith("PASS claim2 ") for line in lines)
    assert "Verification" in result.stderr


def test_verify_with_config(temp_config_file):
    """Test that trial counts come from the config file and flags override them."""
    result = _invoke("verify", "thm1", "--config", temp_config_file)
    assert result.exit_code == 0, result.stdout
    assert len(result.stdout.splitlines()) == 5

    result = _invoke("verify", "oracle", "--config", temp_config_file, "--trials", "3")
    assert result.exit_code == 0, result.stdout
    assert len(result.stdout.splitlines()) == 3


def test_verify_claim1_default_trials(mocker):
    """Test that the class-direction suite runs on every default instance."""
    evaluate = mocker.patch(
        "app.verify.upper.ClassChoiceCheck.evaluate", return_value=(True, "classes=1")
    )
    result = _invoke("verify", "claim1")
    assert result.exit_code == 0, result.stderr
    lines = result.stdout.splitlines()
    assert len(lines) == 300
    assert all(line.startswith("PASS claim1 trial=") for line in lines)
    assert evaluate.call_count == 300


def test_verify_failure_exit_code(mocker):
    from app.verify import CheckResult

    mocker.patch(
        "app.cli.run_suites",
        return_value=[CheckResult("prop1", "trial=0", False, 7, "cutwidth 2 became 3")],
    )
    result = _invoke("verify", "prop1")
    assert result.exit_code == 1
    assert result.stdout == "FAIL prop1 trial=0 seed 7 (cutwidth 2 became 3)\n"


def test_config_show_and_validate(temp_config_file):
    result = _invoke("config", "show", "--config", temp_config_file)
    assert result.exit_code == 0
    assert yaml.safe_load(result.stdout)["solver"]["budget"] == 16

    result = _invoke("config", "validate", "--config", temp_config_file)
    assert result.exit_code == 0
    assert "Configuration is valid." in result.stdout


def test_init_creates_config(tmp_path):
    path = tmp_path / "cwb.yaml"
    result = _invoke("init", "--path", str(path))
    assert result.exit_code == 0
    assert yaml.safe_load(path.read_text())["solver"]["budget"] == 20

    result = _invoke("init", "--path", str(path))
    assert result.exit_code == 1
