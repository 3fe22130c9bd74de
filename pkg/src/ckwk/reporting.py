"""Report serialization for the oracle suites.

A report directory receives three artifacts per run: report.json with
the full structured results, report.csv with one delimited row per
property, and report.png with a bar chart of instance counts colored
by outcome.  Figures are rendered headless via the Agg backend.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

from .oracle import Report


def reports_to_json(reports: list[Report]) -> str:
    payload = {
        "passed": all(r.passed for r in reports),
        "properties": [r.to_json() for r in reports],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def write_reports(reports: list[Report], directory: str | Path) -> list[Path]:
    """Write report.json, report.csv and report.png into the directory
    (created if absent) and return the paths written."""
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)

    json_path = out / "report.json"
    json_path.write_text(reports_to_json(reports))

    csv_path = out / "report.csv"
    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["property", "instances", "failures", "passed", "elapsed"])
        for r in reports:
            writer.writerow(
                [r.name, r.instances, len(r.failures), r.passed, f"{r.elapsed:.3f}"]
            )

    png_path = out / "report.png"
    _render_chart(reports, png_path)
    return [json_path, csv_path, png_path]


def _render_chart(reports: list[Report], path: Path) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    names = [r.name for r in reports]
    counts = [r.instances for r in reports]
    colors = ["#2a9d8f" if r.passed else "#e76f51" for r in reports]

    fig, ax = plt.subplots(figsize=(max(6, 0.6 * len(reports) + 2), 4.5))
    ax.bar(range(len(reports)), counts, color=colors)
    ax.set_xticks(range(len(reports)))
    ax.set_xticklabels(names, rotation=45, ha="right", fontsize=8)
    ax.set_ylabel("instances checked")
    if counts and max(counts) > 0:
        ax.set_yscale("log")
    ax.set_title("property suite results (green pass, red fail)")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
