"""
Report writers: JSON for the full report, CSV for summary rows.
"""
import csv
import io
import json
import logging
from pathlib import Path
from typing import Union

from ..models.report import VerificationReport

CSV_COLUMNS = ("n", "c", "p", "rank", "bound", "tight")


def report_to_json(report: VerificationReport) -> str:
    return json.dumps(report.model_dump(mode="json"), indent=2, sort_keys=True) + "\n"


def report_to_csv(report: VerificationReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for record in report.records:
        writer.writerow([
            record.n, record.c, record.p, record.elimination_rank,
            "" if record.bound is None else record.bound,
            "" if record.tight is None else str(record.tight).lower(),
        ])
    return buffer.getvalue()


def write_report(report: VerificationReport, path: Union[str, Path], fmt: str = "json") -> None:
    """
    Write a report to disk.

    Args:
        fmt: "json" or "csv"

    Raises:
        ValueError: unknown format
    """
    if fmt == "json":
        text = report_to_json(report)
    elif fmt == "csv":
        text = report_to_csv(report)
    else:
        raise ValueError(f"Unknown report format: {fmt}")
    Path(path).write_text(text, encoding="utf-8")
    logging.info(f"Wrote {fmt} report with {len(report.records)} records to {path}")
