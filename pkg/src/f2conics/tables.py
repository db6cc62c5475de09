"""Result tables and their CSV / JSON forms.

CSV carries the run configuration and checks as ``# key=value`` comment lines
(values JSON-encoded) above a normal header row; JSON is an object
``{"config", "rows", "checks"}``.  Both parse back to an equal :class:`Table`.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

__all__ = ["Table", "parse_csv", "parse_json", "parse_table"]


@dataclass
class Table:
    columns: list
    rows: list = field(default_factory=list)  # list of dicts keyed by column
    config: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)

    def add(self, **row):
        unknown = set(row) - set(self.columns)
        if unknown:
            raise KeyError(f"unknown columns {sorted(unknown)}")
        self.rows.append({c: row.get(c) for c in self.columns})

    def to_csv(self):
        buf = io.StringIO()
        for section, items in (("config", self.config), ("check", self.checks)):
            for key, value in items.items():
                buf.write(f"# {section}.{key}={json.dumps(value)}\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow(["" if row[c] is None else _cell(row[c]) for c in self.columns])
        return buf.getvalue()

    def to_json(self):
        return json.dumps({"config": self.config, "rows": self.rows, "checks": self.checks},
                          indent=2)

    def to_text(self):
        lines = [f"# {k}: {v}" for k, v in self.config.items()]
        cells = [[str(c) for c in self.columns]]
        cells += [["-" if r[c] is None else _cell(r[c]) for c in self.columns] for r in self.rows]
        widths = [max(len(row[i]) for row in cells) for i in range(len(self.columns))]
        lines += ["  ".join(v.rjust(w) for v, w in zip(row, widths)) for row in cells]
        lines += [f"check {k}: {v}" for k, v in self.checks.items()]
        return "\n".join(lines) + "\n"

    def render(self, fmt):
        if fmt == "csv":
            return self.to_csv()
        if fmt == "json":
            return self.to_json() + "\n"
        if fmt == "text":
            return self.to_text()
        raise ValueError(f"unknown format {fmt!r}")


def _cell(v):
    # repr keeps every float digit so CSV round-trips exactly
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _value(text):
    if text == "":
        return None
    if text in ("true", "false"):
        return text == "true"
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        return text


def parse_csv(text):
    config, checks, body = {}, {}, []
    for line in text.splitlines():
        if line.startswith("# "):
            key, _, raw = line[2:].partition("=")
            section, _, name = key.partition(".")
            (config if section == "config" else checks)[name] = json.loads(raw)
        elif line:
            body.append(line)
    reader = csv.reader(body)
    columns = next(reader)
    rows = [{c: _value(v) for c, v in zip(columns, r)} for r in reader]
    return Table(columns, rows, config, checks)


def parse_json(text):
    data = json.loads(text)
    rows = data["rows"]
    columns = list(rows[0]) if rows else []
    return Table(columns, rows, data.get("config", {}), data.get("checks", {}))


def parse_table(text):
    return parse_json(text) if text.lstrip().startswith("{") else parse_csv(text)
