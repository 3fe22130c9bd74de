import csv
import json

from ckwk import write_reports
from ckwk.oracle import Report
from ckwk.reporting import reports_to_json


def sample_reports():
    return [
        Report(name="alpha", instances=10, failures=[], elapsed=0.1),
        Report(name="beta", instances=5, failures=["p |- q"], elapsed=0.2),
    ]


def test_json_payload_shape():
    payload = json.loads(reports_to_json(sample_reports()))
    assert payload["passed"] is False
    assert [r["name"] for r in payload["properties"]] == ["alpha", "beta"]
    assert payload["properties"][1]["failures"] == ["p |- q"]


def test_write_reports_produces_three_artifacts(tmp_path):
    out = tmp_path / "reports"
    paths = write_reports(sample_reports(), out)
    assert [p.name for p in paths] == ["report.json", "report.csv", "report.png"]
    for p in paths:
        assert p.exists() and p.stat().st_size > 0

    with (out / "report.csv").open() as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["property", "instances", "failures", "passed", "elapsed"]
    assert rows[1][:4] == ["alpha", "10", "0", "True"]
    assert rows[2][:4] == ["beta", "5", "1", "False"]

    payload = json.loads((out / "report.json").read_text())
    assert payload["passed"] is False

    assert (out / "report.png").read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_write_reports_accepts_all_passing(tmp_path):
    reports = [Report(name="only", instances=1, failures=[], elapsed=0.0)]
    write_reports(reports, tmp_path / "r")
    payload = json.loads((tmp_path / "r" / "report.json").read_text())
    assert payload["passed"] is True
