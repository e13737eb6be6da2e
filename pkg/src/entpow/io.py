"""Matrix file format: JSON with per-entry [re, im] pairs, row major.

Floats are written with Python's shortest round-trip repr, so emit/ingest is
lossless at 17 significant digits.
"""

from __future__ import annotations

import json
from math import prod
from typing import IO

import numpy as np

from .gates import Unitary


def matrix_document(u: Unitary) -> dict:
    entries = [[float(z.real), float(z.imag)] for z in u.matrix.ravel()]
    return {"dims": list(u.dims), "label": u.label, "entries": entries}


def dumps_matrix(u: Unitary) -> str:
    return json.dumps(matrix_document(u))


def save_matrix(u: Unitary, fp: IO[str] | str) -> None:
    if isinstance(fp, str):
        with open(fp, "w", encoding="utf-8") as f:
            f.write(dumps_matrix(u) + "\n")
    else:
        fp.write(dumps_matrix(u) + "\n")


def matrix_from_document(doc: dict) -> Unitary:
    dims = tuple(int(d) for d in doc["dims"])
    d = prod(dims)
    entries = doc["entries"]
    if len(entries) != d * d:
        raise ValueError(f"expected {d * d} entries for dims {dims}, "
                         f"got {len(entries)}")
    flat = np.array([complex(re, im) for re, im in entries])
    return Unitary(flat.reshape(d, d), dims, str(doc.get("label", "")))


def loads_matrix(text: str) -> Unitary:
    return matrix_from_document(json.loads(text))


def load_matrix(path: str) -> Unitary:
    with open(path, encoding="utf-8") as f:
        return loads_matrix(f.read())
