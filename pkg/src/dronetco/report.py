"""Deterministic tabular output: CSV and JSON with a provenance footer.

All numeric formatting happens here, at emission time only — euro amounts
render at two decimals with half-up rounding, continuous coordinates at six
decimals, booleans as 1/0 — and never uses the process locale, so identical
inputs always produce identical bytes.
"""

import csv
import io
import json
from dataclasses import dataclass
from decimal import Decimal, ROUND_HALF_UP

from .errors import ValidationError

__all__ = [
    "ReportTable",
    "format_euro",
    "format_coord",
    "format_flag",
]

_CENT = Decimal("0.01")


def format_euro(amount: float) -> str:
    """Euro amount at two decimals, ties rounded away from zero upward."""
    return str(Decimal(amount).quantize(_CENT, rounding=ROUND_HALF_UP))


def format_coord(value: float) -> str:
    """Design-space coordinate: integer when integral, else six decimals."""
    f = float(value)
    if f == int(f):
        return str(int(f))
    return f"{f:.6f}"


def format_flag(value: bool) -> str:
    return "1" if value else "0"


@dataclass(frozen=True)
class ReportTable:
    """A rectangular table of pre-formatted string cells plus provenance.

    provenance is an ordered tuple of (key, value) pairs emitted as trailing
    '#'-comment lines in CSV and as an object in JSON.
    """

    columns: tuple
    rows: tuple
    provenance: tuple = ()

    def __post_init__(self):
        columns = tuple(self.columns)
        if not columns:
            raise ValidationError("columns must be non-empty")
        if any(not isinstance(c, str) or not c for c in columns):
            raise ValidationError("column names must be non-empty strings")
        if len(set(columns)) != len(columns):
            raise ValidationError(f"column names must be unique (got {columns})")
        rows = tuple(tuple(row) for row in self.rows)
        for i, row in enumerate(rows):
            if len(row) != len(columns):
                raise ValidationError(
                    f"row {i} has {len(row)} cells, expected {len(columns)}")
            if any(not isinstance(cell, str) for cell in row):
                raise ValidationError(f"row {i} contains non-string cells")
        provenance = tuple((str(k), str(v)) for k, v in self.provenance)
        object.__setattr__(self, "columns", columns)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "provenance", provenance)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        writer.writerows(self.rows)
        for key, value in self.provenance:
            clean = value.replace("\n", " ").replace("\r", " ")
            buf.write(f"# {key}: {clean}\n")
        return buf.getvalue()

    def to_json(self) -> str:
        doc = {
            "columns": list(self.columns),
            "rows": [list(row) for row in self.rows],
            "provenance": {key: value for key, value in self.provenance},
        }
        return json.dumps(doc, indent=2) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "csv":
            return self.to_csv()
        if fmt == "json":
            return self.to_json()
        raise ValidationError(f"unknown output format {fmt!r}")

    def cell(self, row: int, column: str) -> str:
        """Cell by row index and column name (test/spot-check convenience)."""
        return self.rows[row][self.columns.index(column)]
