"""
Rendering of command payloads as JSON, CSV or plain text
"""
import csv
import io
import json
from typing import Any, Dict, List

from errors import InvalidInputError


def to_json(payload: Any) -> str:
    """Indented JSON with sorted keys"""
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _cell(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    return "" if value is None else str(value)


def to_csv(rows: List[Dict[str, Any]]) -> str:
    """One line per row, columns in sorted order; nested values become compact JSON"""
    if not rows:
        return ""
    columns = sorted({key for row in rows for key in row})
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({key: _cell(row.get(key)) for key in columns})
    return out.getvalue()


def to_text(payload: Any, indent: int = 0) -> str:
    """Readable key: value listing"""
    pad = "  " * indent
    lines: List[str] = []
    if isinstance(payload, dict):
        for key in sorted(payload):
            value = payload[key]
            if isinstance(value, (dict, list)) and value:
                lines.append(f"{pad}{key}:")
                lines.append(to_text(value, indent + 1).rstrip("\n"))
            else:
                lines.append(f"{pad}{key}: {_cell(value)}")
    elif isinstance(payload, list):
        for item in payload:
            if isinstance(item, dict):
                lines.append(f"{pad}-")
                lines.append(to_text(item, indent + 1).rstrip("\n"))
            else:
                lines.append(f"{pad}- {_cell(item)}")
    else:
        lines.append(f"{pad}{_cell(payload)}")
    return "\n".join(lines) + "\n"


def render(payload: Any, fmt: str, rows_key: str = "rows") -> str:
    """Payload in the requested format; CSV takes the list stored under rows_key"""
    if fmt == "json":
        return to_json(payload)
    if fmt == "text":
        return to_text(payload)
    if fmt == "csv":
        rows = payload.get(rows_key) if isinstance(payload, dict) else payload
        if not isinstance(rows, list):
            raise InvalidInputError("this command has no tabular output for CSV")
        return to_csv(rows if all(isinstance(r, dict) for r in rows) else [{"value": r} for r in rows])
    raise InvalidInputError(f"format '{fmt}' is not available here")
