import io
import json

import pytest

from bicirc.cli import main
from bicirc.generators import petersen, theta
from bicirc.multigraph import format_graph_text, parse_graph_text


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_emits_parsable_graph_text(capsys):
    code, out, _ = run(capsys, "gen", "--gen", "petersen")
    assert code == 0
    assert parse_graph_text(out) == petersen()
    code, out, _ = run(capsys, "gen", "--gen", "theta:2,3,3")
    assert code == 0
    assert parse_graph_text(out) == theta(2, 3, 3)


def test_gen_requires_a_generator(capsys):
    code, out, err = run(capsys, "gen")
    assert code == 2
    assert out == ""
    assert json.loads(err)["error"] == "usage"


def test_gen_random_with_flags(capsys):
    code, out, _ = run(capsys, "gen", "--gen", "random", "-n", "5", "-m", "7", "--seed", "3")
    assert code == 0
    graph = parse_graph_text(out)
    assert graph.vertex_count == 5 and graph.edge_count == 7


def test_analyze_from_generator(capsys):
    code, out, err = run(capsys, "analyze", "--gen", "banana:4", "--quiet")
    assert code == 0
    report = json.loads(out)
    assert report["schema"] == 1
    assert report["census"]["total"] == 1
    assert report["verdicts"]["duality_check"]["status"] == "pass"
    assert err == ""


def test_analyze_progress_goes_to_stderr_unless_quiet(capsys):
    _, _, err = run(capsys, "analyze", "--gen", "banana:4")
    assert err != ""


def test_analyze_reads_files_and_stdin(tmp_path, capsys, monkeypatch):
    text = format_graph_text(theta(1, 1, 2))
    path = tmp_path / "graph.txt"
    path.write_text(text)
    code, out, _ = run(capsys, "analyze", str(path), "--quiet")
    assert code == 0
    assert json.loads(out)["graph"]["edges"] == 4
    monkeypatch.setattr("sys.stdin", io.StringIO(text))
    code, out, _ = run(capsys, "analyze", "-", "--quiet")
    assert code == 0
    assert json.loads(out)["graph"]["name"] == "stdin"


def test_analyze_rejects_malformed_input_with_line_number(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("p 2 1\ne 0 9\n")
    code, out, err = run(capsys, "analyze", str(path), "--quiet")
    assert code == 2
    assert out == ""
    error = json.loads(err)
    assert error["error"] == "graph-format"
    assert error["line"] == 2


def test_analyze_missing_file_is_an_input_error(capsys):
    code, _, err = run(capsys, "analyze", "/nonexistent/graph.txt", "--quiet")
    assert code == 2
    assert json.loads(err)["error"] == "graph-format"


def test_analyze_requires_exactly_one_source(capsys):
    code, _, err = run(capsys, "analyze", "--quiet")
    assert code == 2
    assert "no input" in json.loads(err)["message"]
    code, _, err = run(capsys, "analyze", "x.txt", "--gen", "petersen", "--quiet")
    assert code == 2
    assert "not both" in json.loads(err)["message"]


def test_analyze_check_set_validation(capsys):
    code, _, err = run(capsys, "analyze", "--gen", "banana:4", "--check-set", "1,x", "--quiet")
    assert code == 2
    assert json.loads(err)["error"] == "usage"
    code, out, _ = run(capsys, "analyze", "--gen", "banana:4", "--check-set", "0,1,2,3", "--quiet")
    assert code == 0
    assert json.loads(out)["check_set"]["is_double_circuit"] is True


def test_analyze_fixture_cycle(tmp_path, capsys):
    fixture = tmp_path / "counts.json"
    code, out, _ = run(capsys, "analyze", "--gen", "banana:4", "--fixture", str(fixture), "--quiet")
    assert code == 0 and json.loads(out)["fixture"]["status"] == "recorded"
    code, out, _ = run(capsys, "analyze", "--gen", "banana:4", "--fixture", str(fixture), "--quiet")
    assert code == 0 and json.loads(out)["fixture"]["status"] == "matched"
    data = json.loads(fixture.read_text())
    data["banana(4)|oracle"]["positive_count"] = 99
    fixture.write_text(json.dumps(data))
    code, out, _ = run(capsys, "analyze", "--gen", "banana:4", "--fixture", str(fixture), "--quiet")
    assert code == 1
    assert json.loads(out)["fixture"]["status"] == "mismatch"


def test_analyze_output_is_byte_stable(capsys):
    def one_run():
        _, out, _ = run(capsys, "analyze", "--gen", "complete:4", "--quiet")
        report = json.loads(out)
        report.pop("wall_time_s")
        return json.dumps(report, sort_keys=True)

    assert one_run() == one_run()


def test_verify_single_claim(capsys):
    code, out, _ = run(capsys, "verify", "--claims", "k4_tightness", "--quiet")
    assert code == 0
    report = json.loads(out)
    assert report["mode"] == "verify"
    assert report["all_pass"] is True
    assert report["claims"][0]["name"] == "k4_tightness"
    assert report["claims"][0]["statement"]


def test_verify_unknown_claim_is_usage_error(capsys):
    code, _, err = run(capsys, "verify", "--claims", "nope", "--quiet")
    assert code == 2
    assert json.loads(err)["error"] == "usage"


def test_verify_fault_injection_exits_nonzero_with_witness(capsys):
    code, out, _ = run(
        capsys, "verify", "--claims", "duality_small", "--inject-fault", "dual-rank", "--quiet"
    )
    assert code == 1
    report = json.loads(out)
    assert report["all_pass"] is False
    assert "witness" in report["claims"][0]


def test_search_exit_codes(capsys):
    code, out, _ = run(
        capsys, "search", "-n", "6", "-m", "9", "--min-girth", "3",
        "--count", "3", "--seed", "1", "--quiet",
    )
    assert code == 1
    assert json.loads(out)["positives_found"] >= 1
    code, out, _ = run(
        capsys, "search", "-n", "12", "-m", "14", "--min-girth", "5",
        "--count", "3", "--seed", "0", "--quiet",
    )
    assert code == 0
    assert json.loads(out)["status"] == "clean"


def test_search_generation_failure_is_reported(capsys):
    code, _, err = run(
        capsys, "search", "-n", "4", "-m", "50", "--count", "1", "--quiet"
    )
    assert code == 2
    assert json.loads(err)["error"] == "generation"


def test_unknown_subcommand_exits_2():
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2
