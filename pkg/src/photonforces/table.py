"""Tabular result container with lossless CSV and JSON serialization.

CSV layout: header row, units row, then data rows in scientific notation
with 17 significant digits so doubles round-trip exactly.  JSON mirrors
the columns as arrays and carries the metadata object (constants version,
convention flags, and the resolved run configuration for reproducibility).
"""

import json
import math
from dataclasses import dataclass, field


@dataclass
class ResultTable:
    columns: list
    units: list
    rows: list = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        if len(self.columns) != len(self.units):
            raise ValueError("columns and units must have the same length")

    def append(self, row):
        if len(row) != len(self.columns):
            raise ValueError(
                f"row has {len(row)} values, expected {len(self.columns)}"
            )
        row = [float(v) for v in row]
        for name, v in zip(self.columns, row):
            if not math.isfinite(v):
                raise ValueError(f"non-finite value {v!r} in column {name!r}")
        self.rows.append(row)

    def column(self, name):
        i = self.columns.index(name)
        return [row[i] for row in self.rows]

    def to_csv(self):
        lines = [",".join(self.columns), ",".join(self.units)]
        for row in self.rows:
            lines.append(",".join(f"{v:.16e}" for v in row))
        return "\n".join(lines) + "\n"

    def to_json(self):
        payload = {
            "columns": self.columns,
            "units": self.units,
            "data": {
                name: [row[i] for row in self.rows]
                for i, name in enumerate(self.columns)
            },
            "metadata": self.metadata,
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text):
        payload = json.loads(text)
        columns = payload["columns"]
        data = payload["data"]
        n_rows = len(data[columns[0]]) if columns else 0
        rows = [[data[name][i] for name in columns] for i in range(n_rows)]
        return cls(
            columns=columns,
            units=payload["units"],
            rows=rows,
            metadata=payload.get("metadata", {}),
        )
