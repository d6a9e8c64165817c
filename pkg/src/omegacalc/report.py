"""File outputs for cross-check reports: two CSVs plus a rendered figure.

check_report.csv   one row per method comparison (verdict and any mismatch)
check_metrics.csv  metric/value rows: term counts, per-degree series sizes,
                   and wall-clock timings
check_report.png   bar charts of the timings and of the series profile
"""

from __future__ import annotations

import csv
from pathlib import Path

from .omega import CheckReport


def write_check_outputs(report: CheckReport, directory) -> list[Path]:
    """Write the three report files into directory (created if needed) and
    return their paths."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)

    report_csv = directory / "check_report.csv"
    with open(report_csv, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["pair", "verdict", "mismatch_monomial",
                         "left_coefficient", "right_coefficient"])
        for c in report.comparisons:
            writer.writerow([c.pair, "pass" if c.ok else "fail",
                             c.mismatch_monomial or "",
                             c.left_coefficient or "",
                             c.right_coefficient or ""])

    metrics_csv = directory / "check_metrics.csv"
    with open(metrics_csv, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["metric", "value"])
        writer.writerow(["problem", report.problem])
        writer.writerow(["truncation_degree", report.truncation])
        writer.writerow(["overall", "pass" if report.ok else "fail"])
        for method, count in report.numerator_terms.items():
            writer.writerow([f"numerator_terms_{method}", count])
        for degree, count in report.series_terms_by_degree:
            writer.writerow([f"series_terms_degree_{degree}", count])
        for method, seconds in report.timings.items():
            writer.writerow([f"seconds_{method}", f"{seconds:.6f}"])

    figure_png = directory / "check_report.png"
    _write_figure(report, figure_png)
    return [report_csv, metrics_csv, figure_png]


def _write_figure(report: CheckReport, path: Path) -> None:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, (ax_time, ax_series) = plt.subplots(1, 2, figsize=(9.0, 3.6))

    methods = list(report.timings)
    ax_time.bar(methods, [report.timings[m] for m in methods], color="#4878a8")
    ax_time.set_ylabel("seconds")
    ax_time.set_title("evaluation time by method")

    degrees = [d for d, _ in report.series_terms_by_degree]
    counts = [c for _, c in report.series_terms_by_degree]
    ax_series.bar(degrees, counts, color="#76b041")
    ax_series.set_xlabel("total degree")
    ax_series.set_ylabel("terms")
    ax_series.set_title(f"series oracle profile (degree <= {report.truncation})")

    verdict = "PASS" if report.ok else "FAIL"
    fig.suptitle(f"[{verdict}] {report.problem}", fontsize=10)
    fig.tight_layout(rect=(0, 0, 1, 0.93))
    fig.savefig(path, dpi=120)
    plt.close(fig)
