"""Report serialization.

Reports are JSON documents.  Floats are written with 17 significant digits
so they round-trip exactly; flat lists and flat objects stay on one line,
matrices get one row per line.
"""

from __future__ import annotations

import json
import math

import numpy as np

INDENT = "  "


def _scalar(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if v is None:
        return "null"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        v = float(v)
        if not math.isfinite(v):
            raise ValueError(f"cannot serialize non-finite value {v}")
        if v == 0.0:
            v = 0.0  # drop the sign of negative zero
        return format(v, ".17g")
    if isinstance(v, str):
        return json.dumps(v, ensure_ascii=False)
    raise TypeError(f"cannot serialize {type(v).__name__}")


def _is_flat(v) -> bool:
    if isinstance(v, dict):
        return all(not isinstance(x, (dict, list, tuple, np.ndarray)) for x in v.values())
    if isinstance(v, (list, tuple)):
        return all(not isinstance(x, (dict, list, tuple, np.ndarray)) for x in v)
    return True


def _emit(v, depth: int) -> str:
    if isinstance(v, np.ndarray):
        v = v.tolist()
    pad = INDENT * (depth + 1)
    end = INDENT * depth
    if isinstance(v, dict):
        if not v:
            return "{}"
        if _is_flat(v) and depth > 0:
            return "{" + ", ".join(f"{_scalar(k)}: {_scalar(x)}" for k, x in v.items()) + "}"
        body = ",\n".join(f"{pad}{_scalar(str(k))}: {_emit(x, depth + 1)}" for k, x in v.items())
        return "{\n" + body + "\n" + end + "}"
    if isinstance(v, (list, tuple)):
        if not v:
            return "[]"
        if _is_flat(v):
            return "[" + ", ".join(_scalar(x) for x in v) + "]"
        body = ",\n".join(pad + _emit(x, depth + 1) for x in v)
        return "[\n" + body + "\n" + end + "]"
    return _scalar(v)


def dumps(report: dict) -> str:
    return _emit(report, 0) + "\n"
