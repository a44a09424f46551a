"""json / markdown / csv emission for lists of pydantic records."""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Sequence

from pydantic import BaseModel

from app.schemas.common import OutputFormat


def _flatten(data: dict[str, Any], prefix: str = "") -> dict[str, Any]:
    flat: dict[str, Any] = {}
    for key, value in data.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(_flatten(value, f"{name}."))
        else:
            flat[name] = value
    return flat


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        if value and isinstance(value[0], list):
            return " ".join(_cell(v) for v in value)
        return "(" + ",".join(str(v) for v in value) + ")"
    return str(value)


def to_json(records: Sequence[BaseModel] | BaseModel) -> str:
    if isinstance(records, BaseModel):
        return records.model_dump_json(indent=2)
    return json.dumps([r.model_dump(mode="json") for r in records], indent=2)


def to_markdown(records: Sequence[BaseModel]) -> str:
    rows = [_flatten(r.model_dump(mode="json")) for r in records]
    if not rows:
        return ""
    headers = list(rows[0])
    lines = [
        "| " + " | ".join(headers) + " |",
        "|" + "|".join("---" for _ in headers) + "|",
    ]
    for row in rows:
        lines.append("| " + " | ".join(_cell(row.get(h)) for h in headers) + " |")
    return "\n".join(lines)


def to_csv(records: Sequence[BaseModel]) -> str:
    rows = [_flatten(r.model_dump(mode="json")) for r in records]
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    headers = list(rows[0])
    writer.writerow(headers)
    for row in rows:
        writer.writerow([_cell(row.get(h)) for h in headers])
    return buf.getvalue().rstrip("\n")


def render(records: Sequence[BaseModel] | BaseModel, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.json:
        return to_json(records)
    items = [records] if isinstance(records, BaseModel) else list(records)
    if fmt is OutputFormat.markdown:
        return to_markdown(items)
    return to_csv(items)
