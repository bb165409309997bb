import json
import shutil
import subprocess
import sys

import pytest


def run_cli(*argv, env=None):
    cmd = [sys.executable, "-m", "nichols.cli"] + list(argv)
    return subprocess.run(cmd, capture_output=True, text=True, env=env)


def test_classify_json_negative_outcome():
    result = run_cli("classify", "--k", "2", "--n", "3",
                     "--rep", "chi=(1,1,1);mu=trivial", "--format", "json")
    assert result.returncode == 0
    report = json.loads(result.stdout)
    assert report["schema"] == "nichols.report/1"
    assert report["command"] == "classify"
    assert (report["k"], report["n"]) == (2, 3)
    assert report["rep"] == "chi=(1,1,1);mu=trivial"
    assert report["degree"] == 1
    assert report["q_pi"] == "-1"
    assert report["outcome"] == "NegativeBraiding"
    assert report["rule"] == "negative-exhaustive"
    witness = report["witness"]
    assert witness["symmetry_reduced"] is True
    assert witness["pairs_checked"] == len(witness["partners"]) > 0
    assert "elapsed:" in result.stderr


def test_classify_text_infinite_outcome():
    result = run_cli("classify", "--k", "2", "--n", "3",
                     "--rep", "chi=(1,1,1);mu=standard")
    assert result.returncode == 0
    lines = result.stdout.splitlines()
    assert "outcome: InfiniteDim" in lines
    assert "rule: cartan-infinite" in lines
    assert "subrack: canonical-triple 1" in lines
    assert 'witness.label: "A5(1)"' in lines
    assert "witness.vertex_count: 6" in lines


def test_classify_dot_output():
    result = run_cli("classify", "--k", "2", "--n", "3",
                     "--rep", "chi=(1,1,1);mu=standard", "--format", "dot")
    assert result.returncode == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "// nichols.diagram/1"
    assert lines[1] == "graph diagram {"
    assert result.stdout.count("--") == 6


def test_classify_undecided_exit_code():
    result = run_cli("classify", "--k", "2", "--n", "5",
                     "--rep", "chi=(0,0,0,0,0);mu=catalog:3+2")
    assert result.returncode == 2
    assert "outcome: Undecided" in result.stdout.splitlines()
    assert "rule: catalog-gap" in result.stdout.splitlines()


def test_classify_scalar_gate_on_odd_order():
    result = run_cli("classify", "--k", "3", "--n", "1",
                     "--rep", "chi=(1);mu=trivial", "--format", "json")
    assert result.returncode == 0
    report = json.loads(result.stdout)
    assert report["outcome"] == "InfiniteDim"
    assert report["rule"] == "scalar-gate"


@pytest.mark.parametrize("argv", [
    ("classify", "--k", "1", "--n", "2", "--rep", "chi=(1,1);mu=trivial"),
    ("classify", "--k", "2", "--n", "0", "--rep", "chi=();mu=trivial"),
    ("classify", "--k", "2", "--n", "3", "--rep", "chi=bogus"),
    ("classify", "--k", "2", "--n", "3", "--rep",
     "chi=(1,1,1);mu=trivial", "--format", "yaml"),
    ("table", "--k", "2"),
    ("table", "--k", "2", "--n", "2", "--jobs", "0"),
    ("diagram", "--k", "2", "--n", "3", "--rep",
     "chi=(1,1,1);mu=standard", "--subrack", "hexagon"),
    ("bogus",),
])
def test_usage_errors_exit_64(argv):
    result = run_cli(*argv)
    assert result.returncode == 64
    assert "error" in result.stderr


def test_table_json_small_case():
    result = run_cli("table", "--k", "2", "--n", "3", "--format", "json")
    assert result.returncode == 0
    report = json.loads(result.stdout)
    assert report["schema"] == "nichols.report/1"
    assert report["command"] == "table"
    rows = report["rows"]
    assert len(rows) == 10
    assert all(row["agree"] == "yes" for row in rows)
    negatives = [row["rep"] for row in rows
                 if row["outcome"] == "NegativeBraiding"]
    assert negatives == ["chi=(1,1,1);mu=trivial", "chi=(1,1,1);mu=sign"]
    assert all(row["outcome"] == "InfiniteDim"
               for row in rows if row["rep"] not in negatives)


def test_table_text_format():
    result = run_cli("table", "--k", "4", "--n", "1")
    assert result.returncode == 0
    lines = result.stdout.splitlines()
    assert len(lines) == 5
    head = lines[0].split()
    assert head == ["rep", "degree", "q_pi", "outcome", "rule", "oracle", "agree"]
    assert all(" yes" in line or line is lines[0] for line in lines)


def test_table_parallel_output_is_identical():
    one = run_cli("table", "--k", "2", "--n", "3", "--format", "json",
                  "--jobs", "1")
    two = run_cli("table", "--k", "2", "--n", "3", "--format", "json",
                  "--jobs", "2")
    assert one.returncode == two.returncode == 0
    assert one.stdout == two.stdout


def test_diagram_default_shows_witness():
    result = run_cli("diagram", "--k", "2", "--n", "4",
                     "--rep", "chi=(1,0,0,0);mu=standard")
    assert result.returncode == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "// nichols.diagram/1"
    assert result.stdout.count("--") == 6


def test_diagram_negative_case_prints_raw_diagram():
    result = run_cli("diagram", "--k", "2", "--n", "3",
                     "--rep", "chi=(1,1,1);mu=trivial")
    assert result.returncode == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "// nichols.diagram/1"
    assert lines[1] == "graph diagram {"
    assert result.stdout.count("--") == 0


@pytest.mark.parametrize("k,n,rep,selector", [
    (2, 5, "chi=(1,1,1,1,1);mu=trivial", "canonical"),
    (2, 5, "chi=(1,1,1,1,1);mu=trivial", "triple:2"),
    (4, 2, "chi=(1,1);mu=trivial", "rotation"),
    (4, 2, "chi=(1,1);mu=trivial", "quadruple:1,2"),
    (6, 1, "chi=(1);mu=trivial", "powers"),
])
def test_diagram_subrack_selectors(k, n, rep, selector):
    result = run_cli("diagram", "--k", str(k), "--n", str(n),
                     "--rep", rep, "--subrack", selector)
    assert result.returncode == 0
    assert result.stdout.splitlines()[0] == "// nichols.diagram/1"


def test_repeat_runs_are_byte_identical():
    first = run_cli("classify", "--k", "2", "--n", "4",
                    "--rep", "chi=(1,1,1,0);mu=standard", "--format", "json")
    second = run_cli("classify", "--k", "2", "--n", "4",
                     "--rep", "chi=(1,1,1,0);mu=standard", "--format", "json")
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout


def test_console_script_is_installed():
    path = shutil.which("nichols")
    assert path is not None
    result = subprocess.run(
        [path, "classify", "--k", "2", "--n", "2",
         "--rep", "chi=(1,1);mu=trivial", "--format", "json"],
        capture_output=True, text=True)
    assert result.returncode == 0
    assert json.loads(result.stdout)["schema"] == "nichols.report/1"
