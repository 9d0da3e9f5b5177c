"""Verification-report rendering: JSON, delimited summary, and figures."""

from __future__ import annotations

import csv
import json
from pathlib import Path


def write_report(report_dir: str, suite: str, reports: list[dict]) -> list[str]:
    """Write report.json, summary.csv, and a summary.png bar chart.

    Returns the paths written.  The figure shows per-instance counterexample
    counts so a red bar is visible at a glance.
    """
    out = Path(report_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = []

    json_path = out / f"{suite}-report.json"
    json_path.write_text(
        json.dumps({"suite": suite, "reports": reports}, indent=2, sort_keys=True)
    )
    paths.append(str(json_path))

    csv_path = out / f"{suite}-summary.csv"
    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["instance", "check", "ok", "skipped", "counterexamples"])
        for rep in reports:
            writer.writerow(
                [
                    rep.get("instance", ""),
                    rep.get("name", ""),
                    rep.get("ok", ""),
                    rep.get("skipped") or "",
                    len(rep.get("counterexamples", [])),
                ]
            )
    paths.append(str(csv_path))

    paths.append(_plot_summary(out / f"{suite}-summary.png", suite, reports))
    return paths


def _plot_summary(path: Path, suite: str, reports: list[dict]) -> str:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    labels = [str(r.get("instance", i)) for i, r in enumerate(reports)]
    fails = [len(r.get("counterexamples", [])) for r in reports]
    colors = [
        "tab:gray" if r.get("skipped") else ("tab:red" if f else "tab:green")
        for r, f in zip(reports, fails)
    ]
    fig, ax = plt.subplots(figsize=(max(4.0, 0.35 * len(labels) + 1.5), 3.2))
    ax.bar(range(len(labels)), [max(f, 0.08) for f in fails], color=colors)
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=90, fontsize=6)
    ax.set_ylabel("counterexamples")
    ax.set_title(f"{suite}: {sum(1 for f in fails if f)} failing instance(s)")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return str(path)
