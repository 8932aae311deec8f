import json
import subprocess
import sys
from pathlib import Path

import pytest

from baxcheck.cli import EXIT_FAIL, EXIT_PASS, EXIT_USAGE, JobError, run_job

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def invoke(tmp_path, job, extra=()):
    path = tmp_path / "job.json"
    path.write_text(json.dumps(job))
    proc = subprocess.run(
        [sys.executable, "-m", "baxcheck.cli", "--job", str(path), *extra],
        capture_output=True,
        text=True,
    )
    return proc.returncode, proc.stdout


def test_prop1_job_passes(tmp_path):
    code, out = invoke(tmp_path, {"command": "prop1"})
    assert code == EXIT_PASS
    payload = json.loads(out)
    assert payload["report"]["residuals"] == [["residual", 0]]


def test_prop1_mutation_with_expect_fail(tmp_path):
    code, _ = invoke(tmp_path, {"command": "prop1", "omit_term": "b_r1", "expect": "fail"})
    assert code == EXIT_PASS
    code, _ = invoke(tmp_path, {"command": "prop1", "omit_term": "b_r1"})
    assert code == EXIT_FAIL


def test_verify_ybe_job(tmp_path):
    job = {
        "command": "verify-ybe",
        "rep": {"builtin": "A3_2dim", "parameters": {"c": "1", "mu": None}},
        "fn": {"case": "i", "alpha1": "2", "alpha2": "1", "b": "0", "c": "1"},
        "mode": "symbolic",
    }
    code, _ = invoke(tmp_path, job)
    assert code == EXIT_PASS


def test_malformed_scalar_is_schema_error(tmp_path):
    job = {"command": "scalar-reps", "algebra": "A", "parameters": {"a": "1/0"}}
    code, out = invoke(tmp_path, job)
    assert code == EXIT_USAGE
    assert "1/0" in json.loads(out)["error"]


def test_unknown_field_rejected(tmp_path):
    job = {"command": "prop1", "surprise": 1}
    code, _ = invoke(tmp_path, job)
    assert code == EXIT_USAGE


def test_unknown_command_rejected(tmp_path):
    code, _ = invoke(tmp_path, {"command": "explode"})
    assert code == EXIT_USAGE


def test_missing_job_file():
    proc = subprocess.run(
        [sys.executable, "-m", "baxcheck.cli", "--job", "/nonexistent.json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == EXIT_USAGE


def test_report_written_to_file(tmp_path):
    job_path = tmp_path / "job.json"
    out_path = tmp_path / "report.json"
    job_path.write_text(json.dumps({"command": "prop1"}))
    proc = subprocess.run(
        [sys.executable, "-m", "baxcheck.cli", "--job", str(job_path), "--out", str(out_path)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == EXIT_PASS
    assert json.loads(out_path.read_text())["exit_code"] == 0


def test_randomized_reports_are_byte_identical(tmp_path):
    job = {
        "command": "verify-ybe",
        "rep": {"builtin": "B3_2dim"},
        "fn": {"case": "ii"},
        "mode": "random",
        "trials": 4,
        "seed": 7,
    }
    code1, out1 = invoke(tmp_path, job)
    code2, out2 = invoke(tmp_path, job)
    assert code1 == code2 == EXIT_PASS
    assert out1 == out2


def test_seed_override_changes_samples(tmp_path):
    job = {
        "command": "verify-ybe",
        "rep": {"builtin": "B3_2dim"},
        "fn": {"case": "ii"},
        "mode": "random",
        "trials": 2,
        "seed": 7,
    }
    _, base = invoke(tmp_path, job)
    _, other = invoke(tmp_path, job, extra=("--seed", "8"))
    assert base != other


def test_batch_job_aggregates(tmp_path):
    job = {
        "command": "batch",
        "jobs": [
            {"command": "prop1"},
            {"command": "prop1", "omit_term": "r3", "expect": "fail"},
        ],
    }
    code, out = invoke(tmp_path, job)
    assert code == EXIT_PASS
    payload = json.loads(out)
    assert [j["exit_code"] for j in payload["jobs"]] == [0, 0]


def test_run_job_api_errors():
    with pytest.raises(JobError):
        run_job({"command": "verify-ybe", "rep": {"builtin": "A3_2dim"}})  # missing fn
    with pytest.raises(JobError):
        run_job({"command": "verify-lemmas", "suite": "A", "rep": {"builtin": "A3_2dim"}})
    with pytest.raises(JobError):
        run_job([1, 2, 3])
    with pytest.raises(JobError):
        # deep usage error surfaces as a schema/usage failure, not internal
        run_job({
            "command": "verify-ybe",
            "rep": {"builtin": "scalar", "values": ["1"], "n": 2},
            "fn": {"case": "ii"},
        })


def test_report_payload_excludes_timing(tmp_path):
    code, out = invoke(tmp_path, {"command": "prop1"})
    record = json.loads(out)["report"]
    assert set(record) == {"name", "status", "residuals", "mode", "notes"}


def test_transfer_job(tmp_path):
    job = {
        "command": "transfer-commute",
        "rep": {"builtin": "Hecke3_std", "parameters": {"q": "2"}},
        "fn": {"case": "hecke"},
        "lengths": [2],
        "pairs": 2,
        "seed": 3,
    }
    code, out = invoke(tmp_path, job)
    assert code == EXIT_PASS
    labels = [label for label, _ in json.loads(out)["report"]["residuals"]]
    assert all(label.startswith("L=2") for label in labels)


def test_fixture_jobs_exist_and_validate():
    names = sorted(p.name for p in FIXTURES.glob("criterion*.json"))
    assert len(names) == 9
    for path in FIXTURES.glob("criterion*.json"):
        job = json.loads(path.read_text())
        assert job["command"] in ("batch",)
