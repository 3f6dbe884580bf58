"""JSON documents for rational dual matrices.

A document looks like::

    {"rows": 2, "cols": 2, "real": [["1", "1/2"], ["0", "3"]], "dual": [...]}

Entries are ``"p/q"`` / ``"p"`` strings or JSON integers; ``dual`` may be
omitted. Output is canonical: keys in fixed order, every entry a reduced
string, one matrix row per line.
"""

from __future__ import annotations

import json
from typing import Any, TextIO

from .dual import DualMatrix
from .errors import ParseError, SchemaError
from .matrix import RealMatrix
from .scalar import format_rational, parse_rational

DOCUMENT_KEYS = ("rows", "cols", "real", "dual")


def _entry(value: Any, where: str):
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise SchemaError(f"{where}: entries must be strings or integers, got {value!r}")
    if isinstance(value, int):
        return value
    try:
        return parse_rational(value)
    except ParseError as exc:
        raise SchemaError(f"{where}: {exc}") from None


def _grid(doc: dict, key: str, m: int, n: int) -> RealMatrix:
    grid = doc[key]
    if not isinstance(grid, list) or len(grid) != m:
        raise SchemaError(f"'{key}' must be a list of {m} rows")
    rows = []
    for i, row in enumerate(grid):
        if not isinstance(row, list) or len(row) != n:
            raise SchemaError(f"'{key}' row {i} must have {n} entries")
        rows.append([_entry(x, f"{key}[{i}][{j}]") for j, x in enumerate(row)])
    return RealMatrix(rows)


def dual_matrix_from_dict(doc: Any) -> DualMatrix:
    if not isinstance(doc, dict):
        raise SchemaError("document must be a JSON object")
    extra = set(doc) - set(DOCUMENT_KEYS)
    if extra:
        raise SchemaError(f"unknown keys: {sorted(extra)}")
    for key in ("rows", "cols", "real"):
        if key not in doc:
            raise SchemaError(f"missing key '{key}'")
    m, n = doc["rows"], doc["cols"]
    for key, v in (("rows", m), ("cols", n)):
        if isinstance(v, bool) or not isinstance(v, int) or v < 1:
            raise SchemaError(f"'{key}' must be a positive integer")
    real = _grid(doc, "real", m, n)
    dual = _grid(doc, "dual", m, n) if "dual" in doc else None
    return DualMatrix(real, dual)


def parse_dual_matrix(text: str) -> DualMatrix:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return dual_matrix_from_dict(doc)


def load_dual_matrix(stream: TextIO) -> DualMatrix:
    return parse_dual_matrix(stream.read())


def grid(m: RealMatrix) -> list[list[str]]:
    return [[format_rational(x) for x in row] for row in m]


def dual_matrix_to_dict(a: DualMatrix | RealMatrix) -> dict:
    if isinstance(a, RealMatrix):
        a = DualMatrix(a)
    return {"rows": a.rows, "cols": a.cols, "real": grid(a.real), "dual": grid(a.dual)}


def dumps(obj: Any, indent: int = 0) -> str:
    """Deterministic JSON: dicts keep insertion order, flat lists stay on one line."""
    pad = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(k)}: {dumps(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * indent + "}"
    if isinstance(obj, (list, tuple)):
        if all(not isinstance(x, (dict, list, tuple)) for x in obj):
            return "[" + ", ".join(json.dumps(x) for x in obj) + "]"
        items = [pad + dumps(x, indent + 1) for x in obj]
        return "[\n" + ",\n".join(items) + "\n" + "  " * indent + "]"
    return json.dumps(obj)


def format_dual_matrix(a: DualMatrix | RealMatrix) -> str:
    return dumps(dual_matrix_to_dict(a)) + "\n"
