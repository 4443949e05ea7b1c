"""JSON state files.

Layout::

    {"dim_a": 2, "dim_b": 2, "matrix": [[[re, im], ...], ...]}

``matrix`` is row-major; every entry is a ``[re, im]`` pair. Floats are written
with 17 significant digits so doubles round-trip exactly.
"""
import json
import math

import numpy as np

from .state import DensityMatrix


class StateFileError(ValueError):
    """The file is not a well-formed state file (distinct from an invalid state)."""


def _int_field(obj, name):
    v = obj.get(name)
    if not isinstance(v, int) or isinstance(v, bool):
        raise StateFileError(f"field '{name}' must be an integer, got {v!r}")
    return v


def parse_state(obj):
    """Turn decoded JSON into an unvalidated complex matrix and dims."""
    if not isinstance(obj, dict):
        raise StateFileError("top level must be an object")
    dim_a = _int_field(obj, "dim_a")
    dim_b = _int_field(obj, "dim_b")
    rows = obj.get("matrix")
    n = dim_a * dim_b
    if not isinstance(rows, list) or len(rows) != n:
        raise StateFileError(f"field 'matrix' must be a list of {n} rows")
    m = np.empty((n, n), dtype=np.complex128)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise StateFileError(f"field 'matrix[{i}]' must be a list of {n} entries")
        for j, entry in enumerate(row):
            ok = (isinstance(entry, list) and len(entry) == 2
                  and all(isinstance(x, (int, float)) and not isinstance(x, bool)
                          and math.isfinite(x) for x in entry))
            if not ok:
                raise StateFileError(
                    f"field 'matrix[{i}][{j}]' must be a [re, im] pair of finite numbers, got {entry!r}")
            m[i, j] = complex(entry[0], entry[1])
    return m, dim_a, dim_b


def loads(text):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StateFileError(f"not valid JSON: {exc}") from exc
    m, dim_a, dim_b = parse_state(obj)
    return DensityMatrix(m, dim_a, dim_b)


def load(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def dumps(rho):
    def num(x):
        return float(f"{x:.17g}")
    rows = [[[num(z.real), num(z.imag)] for z in row] for row in rho.matrix]
    return json.dumps({"dim_a": rho.dim_a, "dim_b": rho.dim_b, "matrix": rows})


def dump(rho, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(rho))
        fh.write("\n")
