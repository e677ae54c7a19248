import json

import pytest

from partition_posets import PosetKind, build_hasse
from partition_posets.cli import main, read_instance_file, render_dot
from partition_posets.errors import ParseError


def write(tmp_path, text, name="inst.txt"):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


# ---------------------------------------------------------------------------
# instance files


def test_read_instance_file(tmp_path):
    path = write(tmp_path, "# weights\n10 3\n2\n1\n")
    assert read_instance_file(path) == [10, 3, 2, 1]


def test_read_instance_rejects_garbage(tmp_path):
    with pytest.raises(ParseError):
        read_instance_file(write(tmp_path, "x y\n"))
    with pytest.raises(ParseError):
        read_instance_file(write(tmp_path, "3 -1\n"))
    with pytest.raises(ParseError):
        read_instance_file(str(tmp_path / "missing.txt"))


# ---------------------------------------------------------------------------
# solve


def test_solve_text_output(tmp_path, capsys):
    code = main(["solve", write(tmp_path, "10 3 2 1\n")])
    out = capsys.readouterr().out
    assert code == 0
    assert "algo: minfast" in out
    assert "abs_delta: 4" in out
    assert "subset: 1" in out


def test_solve_json_round_trip(tmp_path, capsys):
    raw = [3, 10, 2, 1]
    path = write(tmp_path, " ".join(map(str, raw)) + "\n")
    code = main(["solve", path, "--json"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert set(payload) >= {"n", "total", "algo", "abs_delta", "delta", "subset",
                            "nodes_visited"}
    assert payload["n"] == 4 and payload["total"] == 16
    total = sum(raw)
    s = sum(raw[i - 1] for i in payload["subset"])
    assert 2 * s - total == payload["delta"]
    assert abs(payload["delta"]) == payload["abs_delta"]


@pytest.mark.parametrize("algo", ["brute", "dp", "qenum", "pruned", "auto"])
def test_solve_algorithms_agree_via_cli(tmp_path, capsys, algo):
    path = write(tmp_path, "4 3 2 1\n")
    assert main(["solve", path, "--algo", algo, "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["abs_delta"] == 0


def test_solve_fast_path_without_certificate(tmp_path, capsys):
    path = write(tmp_path, "10 6 5 2\n")
    code = main(["solve", path, "--algo", "minfast", "--json"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["fired"] is False


def test_solve_parse_error_exits_2(tmp_path, capsys):
    assert main(["solve", write(tmp_path, "x y\n")]) == 2
    assert "error:" in capsys.readouterr().err


def test_solve_guard_violation_exits_2(tmp_path, capsys):
    path = write(tmp_path, " ".join(["1"] * 30) + "\n")
    assert main(["solve", path, "--algo", "brute"]) == 2
    assert "error:" in capsys.readouterr().err


def test_usage_error_exits_2(capsys):
    assert main(["solve"]) == 2
    assert main(["bogus-command"]) == 2


# ---------------------------------------------------------------------------
# profile


def test_profile_q5(capsys):
    assert main(["profile", "5", "--poset", "Q", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["size"] == 12
    assert payload["profile"] == [1, 2, 3, 3, 2, 1]
    assert payload["width"] == 3
    assert payload["height"] == 5
    assert payload["height_dag"] == 5
    assert payload["symmetric"] and payload["unimodal"]


def test_profile_q21_unimodal(capsys):
    assert main(["profile", "21", "--poset", "Q", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["unimodal"] is True


def test_profile_p_text(capsys):
    assert main(["profile", "3", "--poset", "P"]) == 0
    out = capsys.readouterr().out
    assert "profile: 1 1 1 2 1 1 1" in out
    assert "height: 7" in out


def test_profile_out_of_range_exits_2(capsys):
    assert main(["profile", "0"]) == 2
    assert main(["profile", "121"]) == 2


# ---------------------------------------------------------------------------
# hasse


def test_hasse_q3_stdout(capsys):
    assert main(["hasse", "3", "--poset", "Q"]) == 0
    out = capsys.readouterr().out
    assert '"+--"' in out and '"-++"' in out
    assert "->" not in out  # the two elements are incomparable


def test_hasse_q4_edges(tmp_path):
    out = tmp_path / "q4.dot"
    assert main(["hasse", "4", "--poset", "Q", "--out", str(out)]) == 0
    text = out.read_text()
    assert text.count("->") == 2
    assert '"+---" -> "+--+";' in text


def test_hasse_deterministic(tmp_path):
    a, b = tmp_path / "a.dot", tmp_path / "b.dot"
    assert main(["hasse", "5", "--poset", "P", "--out", str(a)]) == 0
    assert main(["hasse", "5", "--poset", "P", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert a.read_text().count("rank=same") == 16  # one layer per rank


def test_hasse_out_of_range_exits_2(capsys):
    assert main(["hasse", "0", "--poset", "Q"]) == 2


def test_hasse_guard_and_force(tmp_path, capsys):
    assert main(["hasse", "15", "--poset", "P"]) == 2
    capsys.readouterr()
    out = tmp_path / "p15.dot"
    assert main(["hasse", "15", "--poset", "P", "--out", str(out), "--force"]) == 0
    assert "warning" in capsys.readouterr().err
    assert out.read_text().count("\n") > (1 << 15)


def test_render_dot_matches_dag():
    dag = build_hasse(4, PosetKind.Q)
    text = render_dot(dag)
    assert text.startswith('digraph "Q4"')
    assert text.count("->") == len(dag.edges)


# ---------------------------------------------------------------------------
# verify


def test_verify_all_passes(capsys):
    assert main(["verify", "6", "--checks", "all"]) == 0
    out = capsys.readouterr().out
    for name in ("covers", "iso", "symmetry", "chains", "dominance", "graded",
                 "profiles", "solvers"):
        assert f"{name}: PASS" in out


def test_verify_selected_checks(capsys):
    assert main(["verify", "5", "--checks", "covers,iso"]) == 0
    out = capsys.readouterr().out
    assert "covers: PASS" in out and "iso: PASS" in out
    assert "symmetry" not in out


def test_verify_unknown_check_exits_2(capsys):
    assert main(["verify", "5", "--checks", "bogus"]) == 2


def test_verify_skip_reported(capsys):
    assert main(["verify", "3", "--checks", "all", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    by_name = {c["name"]: c for c in payload["checks"]}
    assert by_name["chains"]["status"] == "skip"


def test_verify_failure_exits_1(monkeypatch, capsys):
    from partition_posets import cli
    from partition_posets.poset import CheckResult

    def fake_verify(n, checks):
        return [CheckResult("covers", False, detail="injected failure")]

    monkeypatch.setattr(cli.poset, "verify_structure", fake_verify)
    assert main(["verify", "5", "--checks", "covers"]) == 1
    assert "covers: FAIL" in capsys.readouterr().out
