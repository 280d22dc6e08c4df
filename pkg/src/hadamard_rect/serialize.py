"""Report serialization: JSON and CSV with deterministic bytes.

CSV floats use 17 significant digits (exact double round-trip). JSON floats
rely on repr, which carries the same round-trip guarantee. The timestamp
field is populated from SOURCE_DATE_EPOCH when set and is null otherwise,
so identical runs produce identical bytes.
"""
from __future__ import annotations

import csv
import io
import json
import os
from datetime import datetime, timezone

TOOL_NAME = "hadamard-rect"


def fmt17(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def run_timestamp() -> str | None:
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    if epoch is None:
        return None
    return datetime.fromtimestamp(int(epoch), tz=timezone.utc).isoformat()


def build_report(version: str, command: str, config: dict, results: list,
                 summary: dict, notes: list[str]) -> dict:
    return {
        "tool": TOOL_NAME,
        "version": version,
        "timestamp": run_timestamp(),
        "command": command,
        "config": config,
        "results": results,
        "summary": summary,
        "notes": notes,
    }


def report_to_json(report: dict) -> str:
    return json.dumps(report, indent=2, allow_nan=True) + "\n"


def rows_to_csv(header: list[str], rows: list) -> str:
    """Comma separators, LF line endings, 17-significant-digit floats."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt17(cell) for cell in row])
    return buf.getvalue()
