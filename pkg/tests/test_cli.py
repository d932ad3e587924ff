import json

import pytest

from isobound import chain, complete_graph, emit_edge_list, emit_graph6, prism_k4
from isobound.cli import main

TF_VECTOR = {"omega": "3/10", "beta1": "1/15", "beta2": "1/10",
             "beta3": "1/8", "beta4": "3/20"}


@pytest.fixture
def prism_file(tmp_path):
    p = tmp_path / "prism.g6"
    p.write_text(emit_graph6(prism_k4().F) + "\n")
    return str(p)


@pytest.fixture
def chain_file(tmp_path):
    p = tmp_path / "chain2.g6"
    p.write_text(emit_graph6(chain(prism_k4(), 2)) + "\n")
    return str(p)


def test_lp_weights_golden(tmp_path, capsys):
    out = tmp_path / "w.json"
    assert main(["lp-weights", "--delta", "4", "--out", str(out)]) == 0
    text = capsys.readouterr().out
    assert "omega = 13/41" in text
    report = json.loads(out.read_text())
    assert report["command"] == "lp-weights"
    assert report["version"]
    assert report["argv"][0] == "lp-weights"
    assert report["results"]["optimal_omega"] == "13/41"
    assert report["results"]["witness"]["omega"] == "13/41"
    assert report["results"]["tight_row_tags"]
    assert report["timing_seconds"] >= 0


def test_exact_prism(prism_file, capsys):
    assert main(["exact", "--in", prism_file]) == 0
    text = capsys.readouterr().out
    assert "iota = 2" in text
    assert "explored" in text


def test_exact_cap_miss_is_still_success(chain_file, tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["exact", "--in", chain_file, "--cap", "3", "--out", str(out)]) == 0
    assert "no isolating set of size <= 3" in capsys.readouterr().out
    report = json.loads(out.read_text())
    assert report["results"]["iota"] is None
    assert report["results"]["size_cap"] == 3


def test_greedy_below_precondition_still_isolates(tmp_path, capsys):
    p = tmp_path / "k2.el"
    p.write_text("2 1\n0 1\n")
    assert main(["greedy", "--in", str(p), "--delta", "4"]) == 0
    text = capsys.readouterr().out
    assert "|S| = 1" in text
    assert "isolating: true" in text
    assert "precondition (min degree >= 4, general): false" in text


def test_greedy_verify_roundtrip(chain_file, tmp_path, capsys):
    wfile = tmp_path / "w.json"
    run = tmp_path / "run.json"
    assert main(["lp-weights", "--delta", "4", "--out", str(wfile)]) == 0
    assert main(["greedy", "--in", chain_file, "--delta", "4",
                 "--weights", str(wfile), "--out", str(run)]) == 0
    text = capsys.readouterr().out
    assert "precondition (min degree >= 4, general): true" in text
    report = json.loads(run.read_text())
    assert report["results"]["isolating"] is True
    assert report["results"]["size"] <= report["results"]["bound"]

    # the run report doubles as the trace and the weights input
    assert main(["verify-bound", "--in", chain_file, "--trace", str(run),
                 "--weights", str(run)]) == 0
    assert "verified: true" in capsys.readouterr().out


def test_verify_rejects_tampered_trace(chain_file, tmp_path, capsys):
    wfile = tmp_path / "w.json"
    run = tmp_path / "run.json"
    main(["lp-weights", "--delta", "4", "--out", str(wfile)])
    main(["greedy", "--in", chain_file, "--delta", "4",
          "--weights", str(wfile), "--out", str(run)])
    report = json.loads(run.read_text())
    trace = report["results"]["trace"]
    spare = next(v for v in range(16) if v not in trace["final_set"])
    trace["final_set"].append(spare)
    bad = tmp_path / "tampered.json"
    bad.write_text(json.dumps(trace))
    capsys.readouterr()
    assert main(["verify-bound", "--in", chain_file, "--trace", str(bad),
                 "--weights", str(wfile)]) == 1
    assert "partition_ok: false" in capsys.readouterr().out


def test_check_weights_feasible_and_not(tmp_path, capsys):
    wfile = tmp_path / "tf.json"
    wfile.write_text(json.dumps(TF_VECTOR))
    assert main(["check-weights", "--delta", "4", "--variant", "triangle-free",
                 "--weights", str(wfile)]) == 0
    assert "feasible: true" in capsys.readouterr().out

    out = tmp_path / "report.json"
    assert main(["check-weights", "--delta", "4", "--weights", str(wfile),
                 "--out", str(out)]) == 1
    text = capsys.readouterr().out
    assert "feasible: false" in text
    assert "violated row 10 [r7-k2-min-beta2]" in text
    assert "violated row 13 [r7-c5-min-beta3]" in text
    report = json.loads(out.read_text())
    assert [v["index"] for v in report["results"]["violations"]] == [10, 13]
    assert report["results"]["violations"][0]["slack"] == "-1/10"


def test_gen_family(tmp_path, capsys):
    out = tmp_path / "f.g6"
    assert main(["gen", "--family", "prism-chain", "--s", "2",
                 "--out", str(out)]) == 0
    assert out.read_text() == emit_graph6(chain(prism_k4(), 2)) + "\n"
    assert "n = 16, m = 32" in capsys.readouterr().err


def test_gen_to_stdout(capsys):
    assert main(["gen", "--family", "meta-chain", "--s", "2"]) == 0
    captured = capsys.readouterr()
    assert captured.out.strip()
    assert "n = 28" in captured.err


def test_gen_random_is_deterministic(tmp_path):
    a, b = tmp_path / "a.g6", tmp_path / "b.g6"
    args = ["gen", "--random", "min-degree", "--n", "30", "--param", "4",
            "--seed", "7"]
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    assert a.read_text() == b.read_text()


def test_gen_flag_validation(tmp_path, capsys):
    assert main(["gen"]) == 2
    assert main(["gen", "--family", "prism-chain", "--s", "2",
                 "--random", "regular"]) == 2
    assert main(["gen", "--family", "prism-chain"]) == 2
    assert main(["gen", "--random", "regular", "--n", "10"]) == 2
    err = capsys.readouterr().err
    assert "--param" in err and "--seed" in err


def test_certify_edge(prism_file, tmp_path, capsys):
    assert main(["certify-edge", "--in", prism_file,
                 "--x", "0", "--y", "4", "--b", "2"]) == 0
    assert json.loads(capsys.readouterr().out)["valid"] is True

    k4 = tmp_path / "k4.g6"
    k4.write_text(emit_graph6(complete_graph(4)) + "\n")
    assert main(["certify-edge", "--in", str(k4),
                 "--x", "0", "--y", "1", "--b", "2"]) == 1
    assert json.loads(capsys.readouterr().out)["valid"] is False


def test_edgelist_format_flag(tmp_path, capsys):
    p = tmp_path / "prism.el"
    p.write_text(emit_edge_list(prism_k4().F))
    for fmt in ("edgelist", "auto"):
        assert main(["exact", "--in", str(p), "--format", fmt]) == 0
        assert "iota = 2" in capsys.readouterr().out


def test_missing_file_is_domain_error(capsys):
    assert main(["exact", "--in", "/nonexistent/g.g6"]) == 1
    assert "error:" in capsys.readouterr().err


def test_bad_graph6_is_domain_error(tmp_path, capsys):
    p = tmp_path / "bad.g6"
    p.write_text("@@@not graph6\n")
    assert main(["exact", "--in", str(p)]) == 1
    assert "error:" in capsys.readouterr().err


def test_weights_report_without_vector(tmp_path, capsys):
    p = tmp_path / "empty.json"
    p.write_text(json.dumps({"results": {}}))
    assert main(["check-weights", "--delta", "4", "--weights", str(p)]) == 1
    assert "no weight vector" in capsys.readouterr().err


def test_usage_errors_exit_2():
    for argv in (["frobnicate"], ["exact"], ["greedy", "--in", "x"],
                 ["lp-weights", "--delta", "4", "--bogus"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert capsys.readouterr().out.strip()
