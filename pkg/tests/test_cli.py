#!/usr/bin/env python3
"""Tests for the vls-bench command line.

Run from the project root:

    poetry run pytest tests/test_cli.py
"""

import json
import sys
from pathlib import Path

# Add packages and the CLI app to path for development
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root / "packages"))
sys.path.insert(0, str(project_root / "apps" / "cli"))

import pytest

from core.database import get_session, reset_engine
from core.db_models import BenchRun
from data.results import read_labels, read_result
from vls_cli.main import main

TRAP_CSV = "0,0\n0,2\n10,0\n10,2\n"


@pytest.fixture
def trap_file(tmp_path: Path) -> Path:
    path = tmp_path / "trap4.csv"
    path.write_text(TRAP_CSV, encoding="utf-8")
    return path


def _cluster(data: Path, out: Path, *extra: str) -> int:
    return main(["cluster", "--data", str(data), "--clusters", "2", "--out", str(out), *extra])


# =============================================================================
# cluster
# =============================================================================


def test_cluster_trap_reaches_optimum(trap_file, tmp_path, capsys):
    out = tmp_path / "trap.json"
    code = _cluster(trap_file, out, "--sample-size", "4", "--iters", "20", "--workers", "4")
    assert code == 0
    assert "bigmeans: objective=4.0" in capsys.readouterr().out

    doc = read_result(out)
    assert doc.objective == 4.0
    assert doc.rows == 4 and doc.cols == 2
    assert sorted(doc.centroids) == [[0.0, 1.0], [10.0, 1.0]]
    assert len(doc.history) == 20
    labels = read_labels(out)
    assert labels[0] == labels[1] != labels[2] == labels[3]


def test_cluster_is_byte_identical_without_timings(trap_file, tmp_path):
    paths = []
    for name in ("one", "two"):
        out = tmp_path / name / "r.json"
        code = _cluster(
            trap_file, out, "--sample-size", "3", "--iters", "15", "--seed", "5", "--omit-timings"
        )
        assert code == 0
        paths.append(out)
    for suffix in (".json", ".history.csv", ".labels.txt"):
        first = paths[0].with_name("r" + suffix).read_bytes()
        second = paths[1].with_name("r" + suffix).read_bytes()
        assert first == second


def test_cluster_bigoptima_records_s_opt(trap_file, tmp_path):
    out = tmp_path / "opt.json"
    code = _cluster(
        trap_file, out, "--algo", "bigoptima", "--sample-range", "2:4", "--iters", "12", "--phase-iterations", "3"
    )
    assert code == 0
    doc = read_result(out)
    assert doc.algorithm == "bigoptima"
    assert doc.s_opt is not None and 2 <= doc.s_opt <= 4
    assert doc.config["sample_range"] == [2, 4]


def test_cluster_reevaluate_flag(trap_file, tmp_path):
    out = tmp_path / "re.json"
    code = _cluster(
        trap_file, out, "--sample-size", "4", "--iters", "20", "--workers", "4", "--reevaluate"
    )
    assert code == 0
    doc = read_result(out)
    assert doc.config["reevaluate_incumbent"] is True
    assert doc.objective == 4.0


def test_cluster_rejects_bad_flags(trap_file, tmp_path):
    with pytest.raises(SystemExit) as info:
        _cluster(trap_file, tmp_path / "r.json", "--sample-size", "0")
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        _cluster(trap_file, tmp_path / "r.json", "--sample-range", "2:3")
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        _cluster(trap_file, tmp_path / "r.json", "--sample-size", "5")
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        _cluster(trap_file, tmp_path / "r.json")
    assert info.value.code == 2


def test_cluster_reports_unreadable_data(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("1,2\n3\n", encoding="utf-8")
    assert _cluster(bad, tmp_path / "r.json", "--sample-size", "1") == 2
    assert "line 2" in capsys.readouterr().err
    assert _cluster(tmp_path / "missing.csv", tmp_path / "r.json", "--sample-size", "1") == 2
    assert not (tmp_path / "r.json").exists()


# =============================================================================
# bench
# =============================================================================


def test_bench_writes_table_and_ledger(tmp_path, capsys):
    url = f"sqlite:///{tmp_path / 'ledger.db'}"
    args = [
        "bench",
        "--clusters", "3",
        "--centers", "3",
        "--points-per-center", "50",
        "--sample-size", "60",
        "--iters", "5",
        "--seeds", "2",
        "--restarts", "2",
        "--out", str(tmp_path / "bench"),
        "--ledger", url,
    ]
    try:
        assert main(args) == 0
        with get_session() as session:
            count = session.query(BenchRun).count()
    finally:
        reset_engine()

    assert count == 4
    output = capsys.readouterr().out
    assert "Benchmark: bigmeans vs K-means++ x2" in output
    assert (tmp_path / "bench" / "bench_table.csv").exists()
    assert (tmp_path / "bench" / "history_bigmeans_seed1.csv").exists()


def test_bench_rejects_oversized_sample(tmp_path):
    with pytest.raises(SystemExit) as info:
        main(["bench", "--clusters", "2", "--centers", "2", "--points-per-center", "10", "--out", str(tmp_path)])
    assert info.value.code == 2


# =============================================================================
# verify
# =============================================================================


def test_verify_passes(capsys):
    assert main(["verify", "--instances", "6", "--iters", "10"]) == 0
    output = capsys.readouterr().out
    assert "6/6 instances passed" in output
    assert "FAIL" not in output


def test_verify_reports_corrupted_instance(capsys):
    assert main(["verify", "--instances", "6", "--iters", "10", "--corrupt", "tiny-03"]) == 1
    output = capsys.readouterr().out
    failing = [line for line in output.splitlines() if line.endswith("FAIL")]
    assert len(failing) == 1 and failing[0].startswith("tiny-03")
    assert "kmeans_dominance:" in output
    assert "5/6 instances passed" in output


def test_verify_rejects_unknown_instance():
    with pytest.raises(SystemExit) as info:
        main(["verify", "--instances", "3", "--corrupt", "tiny-99"])
    assert info.value.code == 2


def test_result_document_is_plain_json(trap_file, tmp_path):
    out = tmp_path / "r.json"
    _cluster(trap_file, out, "--sample-size", "4", "--iters", "3")
    raw = json.loads(out.read_text(encoding="utf-8"))
    assert raw["schema_version"] == 1
    assert raw["labels_path"] == "r.labels.txt"
    assert raw["config"]["clusters"] == 2
