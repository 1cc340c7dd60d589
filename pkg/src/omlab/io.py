"""Matrix / block JSON formats, deterministic report serialisation and CSV export.

Matrix JSON::

    {"rows": 2, "cols": 2, "data": [[[re, im], [re, im]], [[re, im], [re, im]]]}

Entries may also be plain real numbers. Block JSON is either a Matrix JSON of
even dimension or ``{"t11": M, "t12": M, "t21": M, "t22": M}`` with four
square Matrix JSON blocks of one size. A pair is ``{"t1": M, "t2": M}``.
"""

from __future__ import annotations

import csv
import io as _io
import json
import math
import numbers
from pathlib import Path
from typing import Any, Union

import numpy as np

from .blocks import Block2x2
from .errors import BlockShapeError, InvalidMatrix, ParseError

BLOCK_KEYS = ("t11", "t12", "t21", "t22")


def matrix_to_json(m) -> dict:
    a = np.asarray(m, dtype=np.complex128)
    return {
        "rows": int(a.shape[0]),
        "cols": int(a.shape[1]),
        "data": [[[float(z.real), float(z.imag)] for z in row] for row in a],
    }


def _number(v, where: str) -> float:
    if isinstance(v, bool) or not isinstance(v, numbers.Real):
        raise ParseError(where, f"expected a number, got {type(v).__name__}")
    x = float(v)
    if not math.isfinite(x):
        raise ParseError(where, "entry is not finite")
    return x


def matrix_from_json(obj: Any, field: str = "matrix") -> np.ndarray:
    """Parse Matrix JSON; errors name the offending field, e.g. ``t12.data[1][0]``."""
    if not isinstance(obj, dict):
        raise ParseError(field, "expected an object with rows, cols and data")
    for key in ("rows", "cols", "data"):
        if key not in obj:
            raise ParseError(f"{field}.{key}", "missing")
    rows, cols = obj["rows"], obj["cols"]
    for key, v in (("rows", rows), ("cols", cols)):
        if isinstance(v, bool) or not isinstance(v, int) or v < 1:
            raise ParseError(f"{field}.{key}", f"expected a positive integer, got {v!r}")
    data = obj["data"]
    if not isinstance(data, list) or len(data) != rows:
        raise ParseError(f"{field}.data", f"expected a list of {rows} rows")
    out = np.empty((rows, cols), dtype=np.complex128)
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != cols:
            raise ParseError(f"{field}.data[{i}]", f"expected a list of {cols} entries")
        for j, z in enumerate(row):
            where = f"{field}.data[{i}][{j}]"
            if isinstance(z, list):
                if len(z) != 2:
                    raise ParseError(where, "complex entries are [re, im] pairs")
                out[i, j] = complex(_number(z[0], where + "[0]"), _number(z[1], where + "[1]"))
            else:
                out[i, j] = _number(z, where)
    return out


def block_from_json(obj: Any, field: str = "input") -> Block2x2:
    if not isinstance(obj, dict):
        raise ParseError(field, "expected a JSON object")
    if not any(k in obj for k in BLOCK_KEYS):
        raise ParseError(field, "not a block object; pass a full matrix with --block instead")
    parts = {}
    for k in BLOCK_KEYS:
        if k not in obj:
            raise ParseError(f"{field}.{k}", "missing block")
        m = matrix_from_json(obj[k], k)
        if m.shape[0] != m.shape[1]:
            raise ParseError(f"{k}", f"block must be square, got {m.shape[0]}x{m.shape[1]}")
        parts[k] = m
    try:
        return Block2x2(**parts)
    except (BlockShapeError, InvalidMatrix) as exc:
        raise ParseError(field, str(exc)) from None


def pair_from_json(obj: Any, field: str = "input") -> tuple[np.ndarray, np.ndarray]:
    if not isinstance(obj, dict) or "t1" not in obj or "t2" not in obj:
        raise ParseError(field, "expected an object with t1 and t2")
    return matrix_from_json(obj["t1"], "t1"), matrix_from_json(obj["t2"], "t2")


def read_json(path: Union[str, Path]) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError("input", f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("input", f"invalid JSON at line {exc.lineno} column {exc.colno}") from None


def load_operator(obj: Any) -> Union[np.ndarray, Block2x2]:
    """A Block2x2 for block objects, otherwise the parsed full matrix."""
    if isinstance(obj, dict) and any(k in obj for k in BLOCK_KEYS):
        return block_from_json(obj)
    return matrix_from_json(obj, "input")


# ---------------------------------------------------------------------------
# deterministic output


def _fmt_float(x: float) -> str:
    if not math.isfinite(x):
        return "null"
    s = "%.17g" % x
    if "." not in s and "e" not in s and "n" not in s:
        s += ".0"
    return s


def _encode(obj: Any, indent: int, level: int) -> str:
    pad = "\n" + " " * (indent * (level + 1))
    end = "\n" + " " * (indent * level)
    if obj is None or isinstance(obj, bool):
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(float(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{json.dumps(str(k))}: {_encode(v, indent, level + 1)}" for k, v in obj.items()]
        return "{" + pad + ("," + pad).join(items) + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        # leaf rows of numbers stay on one line so matrices remain readable
        if all(isinstance(v, (int, float, np.number)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(_encode(v, indent, level + 1) for v in obj) + "]"
        if all(isinstance(v, (list, tuple)) and len(v) == 2 for v in obj) and all(
            isinstance(u, (int, float, np.number)) for v in obj for u in v
        ):
            return "[" + ", ".join(_encode(v, indent, level + 1) for v in obj) + "]"
        items = [_encode(v, indent, level + 1) for v in obj]
        return "[" + pad + ("," + pad).join(items) + end + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(obj: Any, indent: int = 2) -> str:
    """JSON text with insertion-ordered keys and floats printed to 17 significant digits."""
    return _encode(obj, indent, 0) + "\n"


def write_json(obj: Any, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps(obj))


CSV_COLUMNS = ("id", "paper_location", "applicable", "lhs", "rhs", "slack", "holds", "params")


def _csv_cell(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return _fmt_float(v)
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=False, separators=(",", ":"))
    return str(v)


def records_to_csv(records: list[dict], columns=CSV_COLUMNS) -> str:
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in records:
        w.writerow([_csv_cell(r.get(c)) for c in columns])
    return buf.getvalue()


def write_csv(records: list[dict], path: Union[str, Path], columns=CSV_COLUMNS) -> None:
    Path(path).write_text(records_to_csv(records, columns))
