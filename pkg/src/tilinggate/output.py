"""Structured output records and their table / json-lines / csv encodings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

KINDS = ("triple", "candidate", "table_row", "search_summary", "discrepancy")

# fixed csv column order per record kind
CSV_COLUMNS: dict[str, list[str]] = {
    "triple": ["a", "b", "c", "method"],
    "candidate": ["shape", "a", "b", "c", "swapped", "k", "n",
                  "x", "y", "z", "verdict", "reason"],
    "table_row": ["section", "key", "value", "extra"],
    "search_summary": ["shape", "a", "b", "c", "n", "status", "nodes",
                       "max_depth", "tilings"],
    "discrepancy": ["topic", "stated", "computed", "detail"],
}


@dataclass(frozen=True)
class OutputRecord:
    kind: str
    payload: dict

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown record kind {self.kind!r}")
        for key, value in self.payload.items():
            if not isinstance(key, str) or not isinstance(value, (int, str)):
                raise ValueError(f"payload must map str to int/str: {key!r}")

    def to_json_line(self) -> str:
        obj = {"kind": self.kind, **self.payload}
        return json.dumps(obj, sort_keys=True, separators=(",", ":"))

    def csv_row(self) -> list:
        return [self.payload.get(col, "") for col in CSV_COLUMNS[self.kind]]


def parse_json_line(line: str) -> OutputRecord:
    obj = json.loads(line)
    kind = obj.pop("kind")
    return OutputRecord(kind, obj)


def emit(records: list[OutputRecord], fmt: str, out) -> None:
    if fmt == "json-lines":
        for rec in records:
            out.write(rec.to_json_line() + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)  # RFC 4180 quoting and line endings
        kinds_seen = []
        for rec in records:
            if rec.kind not in kinds_seen:
                kinds_seen.append(rec.kind)
                writer.writerow(["kind"] + CSV_COLUMNS[rec.kind])
            writer.writerow([rec.kind] + rec.csv_row())
        out.write(buf.getvalue())
    elif fmt == "table":
        _emit_table(records, out)
    else:
        raise ValueError(f"unknown format {fmt!r}")


def _emit_table(records, out) -> None:
    groups: list[tuple[str, list[OutputRecord]]] = []
    for rec in records:
        if groups and groups[-1][0] == rec.kind:
            groups[-1][1].append(rec)
        else:
            groups.append((rec.kind, [rec]))
    for kind, group in groups:
        cols = CSV_COLUMNS[kind]
        rows = [[str(rec.payload.get(c, "")) for c in cols] for rec in group]
        widths = [
            max(len(cols[i]), max((len(r[i]) for r in rows), default=0))
            for i in range(len(cols))
        ]
        out.write("  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip())
        out.write("\n")
        for r in rows:
            out.write("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip())
            out.write("\n")
