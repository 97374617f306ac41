"""Deterministic number formatting and CSV/JSON emission.

All numbers are written with 15 significant digits and lowercase exponents;
complex values become ``[re, im]`` pairs in JSON.
"""

from __future__ import annotations

import csv
import io
import json
import math

CSV_SCHEMA_VERSION = 1
CSV_COLUMNS = (
    "family",
    "family_params",
    "lambda",
    "gamma_re",
    "gamma_im",
    "mu_re",
    "mu_im",
    "theorem",
    "branch",
    "bound",
    "oracle_max",
    "slack",
    "ratio",
    "evaluated_points",
)
SWEEP_MU_COLUMNS = CSV_COLUMNS + ("branch_changed",)


def fmt(x) -> str:
    """15-significant-digit rendering used for every numeric cell."""
    if isinstance(x, bool):
        return "1" if x else "0"
    if isinstance(x, int):
        return str(x)
    x = float(x)
    if x == 0.0:
        return "0"
    return format(x, ".15g")


def _round15(x: float) -> float:
    x = float(x)
    if not math.isfinite(x) or x == 0.0:
        return 0.0 if x == 0.0 else x
    return float(format(x, ".15g"))


def jsonable(v):
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, int):
        return v
    if isinstance(v, complex):
        return [_round15(v.real), _round15(v.imag)]
    if isinstance(v, float):
        return _round15(v)
    if isinstance(v, dict):
        return {k: jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [jsonable(x) for x in v]
    try:
        return _round15(float(v))
    except (TypeError, ValueError):
        return str(v)


def dumps(obj) -> str:
    return json.dumps(jsonable(obj), indent=2, sort_keys=False) + "\n"


def csv_text(rows, columns=CSV_COLUMNS) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([fmt(x) if not isinstance(x, str) else x for x in row])
    return buf.getvalue()
