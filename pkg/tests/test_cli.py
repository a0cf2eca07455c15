import json
import subprocess
import sys

from spincrystal import cli, perfect_crystal as pc


def run_cli(args, stdin=None):
    proc = subprocess.run(
        [sys.executable, "-m", "spincrystal"] + args,
        input=stdin, capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def test_enumerate_json_count(capsys):
    assert cli.main(["enumerate", "--l", "1", "--format", "json"]) == 0
    records = json.loads(capsys.readouterr().out)
    assert len(records) == 16
    assert all(rec["regime"] == "finite" for rec in records)
    assert sum(1 for rec in records if rec["minimal"]) == 4


def test_enumerate_text_flags_spin_unit(capsys):
    assert cli.main(["enumerate", "--l", "1", "--format", "text"]) == 0
    out = capsys.readouterr().out
    b05 = pc.unit_minimal(5)
    row_text = " ".join(",".join(str(v) for v in row) for row in b05.rows)
    matching = [line for line in out.splitlines()
                if line.startswith(row_text)]
    assert matching and matching[0].endswith("minimal")


def test_enumerate_rejects_out_of_range():
    code, _, err = run_cli(["enumerate", "--l", "9"])
    assert code == 2
    assert "between 1 and 4" in err


def test_graph_dot_output(capsys):
    assert cli.main(["graph", "--l", "1", "--format", "dot"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("digraph")
    assert out.count("[label=\"") >= 16
    assert 'label="k=0"' in out and 'label="k=5"' in out


def test_graph_json_nodes_roundtrip(capsys):
    assert cli.main(["graph", "--l", "1", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data["nodes"]) == 16
    elems = set(pc.enumerate_level(1))
    for node in data["nodes"]:
        assert pc.element_from_dict(node) in elems
    for edge in data["edges"]:
        assert 0 <= edge["k"] <= 5


def test_tropicalize_contract(capsys):
    assert cli.main(["tropicalize", "x*y"]) == 0
    assert capsys.readouterr().out.strip() == "x + y"
    assert cli.main(["tropicalize", "x + y"]) == 0
    assert capsys.readouterr().out.strip() == "max(x, y)"
    code, _, err = run_cli(["tropicalize", "x -"])
    assert code == 2
    assert "parse" in err


def test_verify_geometric_exit_code(capsys):
    assert cli.main(["verify", "geometric", "--samples", "10",
                     "--seed", "42"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["ok"] and report["seed"] == 42


def test_verify_unknown_suite_usage_error():
    code, _, _ = run_cli(["verify", "nonsense"])
    assert code == 2


def test_preimage_stdin_pipeline():
    zero = {"regime": "limit", "rows": [[0] * 5 for _ in range(5)]}
    code, out, _ = run_cli(["preimage"], stdin=json.dumps(zero))
    assert code == 0
    data = json.loads(out)
    assert data["l"] == 1
    assert data["a"] == [1, 0, 0, 0, 0, 0]
    assert pc.element_from_dict(data["element"]) == pc.unit_minimal(0)


def test_preimage_rejects_bad_input():
    code, _, err = run_cli(["preimage"], stdin="not json")
    assert code == 2 and "JSON" in err
    finite = {"regime": "finite", "l": 1,
              "rows": [[0, 0, 0, 0, 1]] * 5}
    code, _, err = run_cli(["preimage"], stdin=json.dumps(finite))
    assert code == 2


def test_omega_both_directions():
    zero = {"regime": "limit", "rows": [[0] * 5 for _ in range(5)]}
    code, out, _ = run_cli(["omega"], stdin=json.dumps(zero))
    assert code == 0
    assert json.loads(out)["point"] == [0] * 10
    point = {"point": [0, 0, -1, 0, -1, -1, -1, -1, -1, -1]}
    code, out, _ = run_cli(["omega"], stdin=json.dumps(point))
    assert code == 0
    elem = pc.element_from_dict(json.loads(out))
    assert elem == pc.e_tilde(0, pc.zero_limit())


def test_missing_subcommand_is_usage_error():
    code, _, _ = run_cli([])
    assert code == 2
