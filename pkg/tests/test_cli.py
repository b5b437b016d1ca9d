import csv
import io
import json
import shutil
import subprocess
import sys

import pytest

from pathfactors.cli import main
from pathfactors.graphs import complete, emit_graph6, from_edges


def run_cli(argv, stdin_text="", monkeypatch=None, capsys=None):
    if monkeypatch is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin_text))
    rc = main(argv)
    out, err = capsys.readouterr()
    return rc, out, err


def big_delta2_graph6(n=31):
    # K_{n-1} plus one vertex attached twice: min degree 2
    k = n - 1
    edges = [(u, v) for u in range(k) for v in range(u + 1, k)]
    edges += [(0, k), (1, k)]
    return emit_graph6(from_edges(n, edges))


def test_verify_stream_and_fields(monkeypatch, capsys):
    rc, out, err = run_cli(["verify"], "Bw\nBg\n", monkeypatch, capsys)
    assert rc == 0
    lines = [json.loads(x) for x in out.splitlines()]
    assert [r["id"] for r in lines] == [1, 2]
    k3, p3 = lines
    assert k3["witness_status"] == "none"
    assert k3["guaranteed_by_theorem"] == ["1.1"]
    assert k3["factor_status"] == "found" and k3["factor_verified"] is True
    # the non-necessity regression: witness found yet a factor exists
    assert p3["witness_status"] == "found"
    assert p3["witness"] == {"size": 1, "isolated": 2, "vertices": [1]}
    assert p3["factor_status"] == "found"
    assert p3["guaranteed_by_theorem"] == []
    assert list(k3) == list(p3)  # stable field order
    assert "2 graphs" in err


def test_verify_thresholds_fire_on_dense_graph(monkeypatch, capsys):
    # n=31: only the size window is open for delta=2; n=32: both are
    stream = big_delta2_graph6(31) + "\n" + big_delta2_graph6(32) + "\n"
    rc, out, _ = run_cli(["verify"], stream, monkeypatch, capsys)
    assert rc == 0
    r31, r32 = (json.loads(x) for x in out.splitlines())
    assert r31["n"] == 31 and r31["delta"] == 2 and r31["connected"]
    # E(31,2) = ((31-3)(31-6) - 2(2-62+1) + 2) / 2 = (700 + 118 + 2) / 2
    assert r31["thresholds"]["size_threshold"] == 410
    assert r31["m"] == 437 > 410
    assert r31["theorem_12_applies"] is True
    assert r31["theorem_13_applies"] is None  # below the spectral window
    assert not r31["thresholds"]["spectral_applicable"]
    assert r31["witness_status"] == "skipped"  # n=31 above the witness cap
    assert r31["factor_status"] == "skipped"
    assert r31["guaranteed_by_theorem"] == ["1.2"]
    assert r32["theorem_12_applies"] is True
    assert r32["theorem_13_applies"] is True
    assert r32["rho_margin"] > 0.5
    assert r32["guaranteed_by_theorem"] == ["1.2", "1.3"]


def test_verify_bad_line_exit_code(monkeypatch, capsys):
    rc, out, _ = run_cli(["verify"], "Bw\n!!bad!!\n", monkeypatch, capsys)
    assert rc == 1
    rows = [json.loads(x) for x in out.splitlines()]
    assert "error" in rows[1] and rows[1]["id"] == 2
    assert rows[0]["factor_status"] == "found"


def test_verify_timeout_status(monkeypatch, capsys):
    rc, out, _ = run_cli(["verify", "--timeout", "0"], "F~~{?\n",
                         monkeypatch, capsys)
    assert rc == 0
    r = json.loads(out.splitlines()[0])
    assert r["witness_status"] == "timeout"
    assert r["factor_status"] == "timeout"
    assert r["guaranteed_by_theorem"] == []


def test_verify_csv_format(monkeypatch, capsys):
    rc, out, _ = run_cli(["verify", "--format", "csv"], "Bw\n",
                         monkeypatch, capsys)
    assert rc == 0
    rows = list(csv.reader(io.StringIO(out)))
    head = rows[0]
    assert head[:6] == ["id", "n", "m", "delta", "connected", "rho"]
    rec = dict(zip(head, rows[1]))
    assert rec["connected"] == "true"
    assert json.loads(rec["factor"]) == [[0, 1, 2]]


def test_verify_edge_list_file(tmp_path, monkeypatch, capsys):
    f = tmp_path / "p5.txt"
    f.write_text("5\n0 1\n1 2\n2 3\n3 4\n")
    rc, out, _ = run_cli(["verify", "--edge-list", str(f)], "",
                         monkeypatch, capsys)
    assert rc == 0
    r = json.loads(out.splitlines()[0])
    assert r["id"] == str(f)
    assert r["n"] == 5 and r["factor"] == [[0, 1, 2, 3, 4]]


def test_verify_parallel_jobs_preserve_order(monkeypatch, capsys):
    stream = "Bw\nBg\nF~~{?\nBw\n"
    rc1, out1, _ = run_cli(["verify"], stream, monkeypatch, capsys)
    rc2, out2, _ = run_cli(["verify", "--jobs", "2"], stream,
                           monkeypatch, capsys)
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_thresholds_subcommand(monkeypatch, capsys):
    rc, out, _ = run_cli(["thresholds", "--n", "26", "--delta", "1"],
                         "", monkeypatch, capsys)
    assert rc == 0
    d = json.loads(out)
    assert d["size_threshold"] == 301
    assert d["size_applicable"] and d["spectral_applicable"]
    rc, out, _ = run_cli(["thresholds", "--n", "24", "--delta", "1"],
                         "", monkeypatch, capsys)
    assert rc == 1
    d = json.loads(out)
    assert d["n_min_size"] == 25 and d["n_min_spectral"] == 26
    rc, out, _ = run_cli(["thresholds", "--n", "100", "--delta", "3"],
                         "", monkeypatch, capsys)
    assert rc == 1 and "error" in json.loads(out)


def test_extremal_roundtrip_through_verify(monkeypatch, capsys):
    rc, out, _ = run_cli(["extremal", "--n", "7", "--s", "2"], "",
                         monkeypatch, capsys)
    assert rc == 0
    d = json.loads(out)
    assert (d["q"], d["p"], d["edge_count"]) == (3, 2, 14)
    assert d["edge_count"] == d["edge_count_closed_form"]
    rc, out, _ = run_cli(["verify"], d["graph6"] + "\n", monkeypatch, capsys)
    assert rc == 0
    r = json.loads(out.splitlines()[0])
    assert r["n"] == 7 and r["m"] == 14 and r["delta"] == 2
    assert r["witness_status"] == "found"
    assert r["witness"]["size"] == 2 and r["witness"]["isolated"] == 2


def test_rho_subcommand(monkeypatch, capsys):
    rc, out, _ = run_cli(["rho"], "Bg\n", monkeypatch, capsys)
    assert rc == 0
    r = json.loads(out.splitlines()[0])
    assert abs(r["rho"] - 2 ** 0.5) < 1e-9
    assert r["hong_bound"] == pytest.approx(r["rho"])  # equality case
    assert r["connected"] is True and r["iterations"] >= 1


def test_witness_and_factor_subcommands(monkeypatch, capsys):
    rc, out, _ = run_cli(["witness"], "Bw\nBg\n", monkeypatch, capsys)
    assert rc == 0
    rows = [json.loads(x) for x in out.splitlines()]
    assert rows[0]["witness_status"] == "none"
    assert rows[1]["witness_status"] == "found"
    rc, out, _ = run_cli(["factor"], "Bw\n" + emit_graph6(complete(6)) + "\n",
                         monkeypatch, capsys)
    assert rc == 0
    rows = [json.loads(x) for x in out.splitlines()]
    assert all(r["factor_status"] == "found" and r["factor_verified"]
               for r in rows)


def test_audit_sweep_subcommand(monkeypatch, capsys):
    rc, out, _ = run_cli(["audit", "sweep", "--max-n", "40", "--max-delta", "2"],
                         "", monkeypatch, capsys)
    assert rc == 0
    summary = json.loads(out.splitlines()[-1])
    assert summary["counts"].keys() <= {"verified", "typo-resolved"}
    assert summary["exceptions"] == [["2.3", "difference_identity"],
                                     ["2.3", "factorization"]]


def test_audit_remark_and_contrapositive(monkeypatch, capsys):
    rc, out, _ = run_cli(["audit", "remark", "--n", "7", "--delta", "1"],
                         "", monkeypatch, capsys)
    assert rc == 0
    d = json.loads(out)
    assert d["witness_violates"] and d["factor_status"] == "found"
    rc, out, _ = run_cli(["audit", "contrapositive", "--n", "25",
                          "--delta", "1", "--trials", "5"],
                         "", monkeypatch, capsys)
    assert rc == 0
    d = json.loads(out)
    assert d["ok"] and d["trials"] == 5
    assert d["max_rho_seen"] <= d["rho_threshold"] + d["tol"]


def test_config_file_and_precedence(tmp_path, monkeypatch, capsys):
    cfg = tmp_path / "pf.toml"
    cfg.write_text('format = "csv"\nmax_exact_n = 2\n')
    # config switches the format and caps the factor search
    rc, out, _ = run_cli(["factor", "--config", str(cfg)], "Bw\n",
                         monkeypatch, capsys)
    assert rc == 0
    rows = list(csv.reader(io.StringIO(out)))
    rec = dict(zip(rows[0], rows[1]))
    assert rec["factor_status"] == "skipped"
    # CLI flag beats the config
    rc, out, _ = run_cli(["factor", "--config", str(cfg),
                          "--format", "jsonl", "--max-exact-n", "24"],
                         "Bw\n", monkeypatch, capsys)
    assert rc == 0
    r = json.loads(out.splitlines()[0])
    assert r["factor_status"] == "found"
    # environment variable route
    monkeypatch.setenv("PATHFACTORS_CONFIG", str(cfg))
    rc, out, _ = run_cli(["factor"], "Bw\n", monkeypatch, capsys)
    assert rc == 0
    assert out.startswith("id,")


def test_config_unknown_key_warns(tmp_path, monkeypatch, capsys):
    cfg = tmp_path / "pf.toml"
    cfg.write_text('nonsense = 1\n')
    rc, out, err = run_cli(["rho", "--config", str(cfg)], "Bw\n",
                           monkeypatch, capsys)
    assert rc == 0
    assert "nonsense" in err


def test_bad_option_values(monkeypatch, capsys):
    rc, _, err = run_cli(["verify", "--jobs", "0"], "Bw\n", monkeypatch, capsys)
    assert rc == 1 and "jobs" in err
    rc, _, err = run_cli(["verify", "--tol", "-1"], "Bw\n", monkeypatch, capsys)
    assert rc == 1 and "tol" in err


@pytest.mark.skipif(shutil.which("pathfactors") is None,
                    reason="console script not on PATH")
def test_console_script_smoke():
    proc = subprocess.run(["pathfactors", "thresholds", "--n", "26",
                           "--delta", "1"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["size_threshold"] == 301
