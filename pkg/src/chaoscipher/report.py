"""Text renderings: analysis tables (csv/json/markdown) and orbit dumps."""

from __future__ import annotations

import csv
import enum
import io
import json

from .analysis import AnalysisRow
from .chaos import LogisticParams, orbit

COLUMNS = (
    "index",
    "plaintext",
    "key",
    "ciphertext_hex",
    "pt_sensitivity_pct",
    "key_sensitivity_pct",
    "domain",
    "identifiable",
    "kpa_robustness",
    "secret_key_ok",
)


class ReportFormat(str, enum.Enum):
    CSV = "csv"
    JSON = "json"
    MARKDOWN = "markdown"


def _text(data: bytes) -> str:
    return data.decode("utf-8", errors="backslashreplace")


def row_record(index: int, row: AnalysisRow) -> dict:
    """Typed column values for one row; the renderers only differ in layout."""
    singleton = row.kpa_singleton_len
    return {
        "index": index,
        "plaintext": _text(row.plaintext),
        "key": round(row.key.r, 4),
        "ciphertext_hex": row.ciphertext_hex,
        "pt_sensitivity_pct": round(row.pt_sensitivity_pct, 4),
        "key_sensitivity_pct": round(row.key_sensitivity_pct, 4),
        "domain": str(row.domain),
        "identifiable": row.identifiable,
        "kpa_robustness": "R" if singleton is None else singleton,
        "secret_key_ok": "YES" if row.secret_key_ok else "NO",
    }


def format_cell(value) -> str:
    if isinstance(value, float):
        return f"{value:.4f}"
    return str(value)


def render_table(rows, fmt=ReportFormat.CSV) -> str:
    fmt = ReportFormat(fmt)
    records = [row_record(i, row) for i, row in enumerate(rows, start=1)]
    if fmt is ReportFormat.JSON:
        return json.dumps(records, indent=2, ensure_ascii=False) + "\n"
    cells = [[format_cell(rec[c]) for c in COLUMNS] for rec in records]
    if fmt is ReportFormat.CSV:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(COLUMNS)
        writer.writerows(cells)
        return buf.getvalue()
    lines = ["| " + " | ".join(COLUMNS) + " |", "|" + "---|" * len(COLUMNS)]
    for line in cells:
        escaped = (c.replace("|", "\\|") for c in line)
        lines.append("| " + " | ".join(escaped) + " |")
    return "\n".join(lines) + "\n"


def orbit_dump(params: LogisticParams, n: int, burn_in: int = 0) -> str:
    """CSV of ``index,x`` for ``n`` iterates; 17 significant digits round-trip."""
    values = orbit(params, n, burn_in)
    out = ["index,x"]
    out.extend(f"{burn_in + k},{x:.17g}" for k, x in enumerate(values, start=1))
    return "\n".join(out) + "\n"
