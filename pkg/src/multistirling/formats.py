"""CSV/JSON encoding of tables, series coefficients and reports.

Rationals are written as ``p/q`` (``p`` when ``q == 1``), never as decimals.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .families import Family, NumberTable
from .multilog import format_index, parse_index
from .series import TruncSeries


def format_rational(x) -> str:
    return str(Fraction(x))


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def table_to_csv(table: NumberTable) -> str:
    lines = ["n,value"] + [f"{n},{format_rational(v)}" for n, v in table.items()]
    return "\n".join(lines) + "\n"


def table_to_json(table: NumberTable) -> str:
    return _dump(
        {
            "family": table.family.value,
            "index": format_index(table.index),
            "values": [{"n": n, "value": format_rational(v)} for n, v in table.items()],
        }
    )


def table_from_json(text: str) -> NumberTable:
    doc = json.loads(text)
    rows = sorted((int(row["n"]), parse_rational(row["value"])) for row in doc["values"])
    if [n for n, _ in rows] != list(range(len(rows))):
        raise ValueError("table rows must cover 0..max_n")
    return NumberTable(
        Family(doc["family"]), parse_index(doc["index"]), len(rows) - 1, tuple(v for _, v in rows)
    )


def table_from_csv(text: str, family, index) -> NumberTable:
    """CSV carries only ``n,value``; family and index come from the caller."""
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames != ["n", "value"]:
        raise ValueError(f"unexpected CSV header {reader.fieldnames}")
    rows = sorted((int(row["n"]), parse_rational(row["value"])) for row in reader)
    index = parse_index(index) if isinstance(index, str) else tuple(index)
    return NumberTable(Family(family), index, len(rows) - 1, tuple(v for _, v in rows))


def series_rows(series: TruncSeries):
    egf = series.egf()
    return [(n, c, egf[n]) for n, c in enumerate(series)]


def series_to_csv(series: TruncSeries) -> str:
    lines = ["n,coefficient,nfact_coefficient"]
    lines += [f"{n},{format_rational(c)},{format_rational(a)}" for n, c, a in series_rows(series)]
    return "\n".join(lines) + "\n"


def series_to_json(name: str, index, series: TruncSeries) -> str:
    return _dump(
        {
            "series": name,
            "index": format_index(index),
            "order": series.order,
            "values": [
                {"n": n, "coefficient": format_rational(c), "nfact_coefficient": format_rational(a)}
                for n, c, a in series_rows(series)
            ],
        }
    )


def reports_to_json(reports) -> str:
    return _dump([r.to_dict() for r in reports])
