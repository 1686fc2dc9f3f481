"""Reading and writing modules as JSON documents.

The interchange document has exactly the fields ``name``, ``max_degree``,
``generation_bound``, ``dims``, ``transpositions`` (an object keyed by the
degree as a string, holding the k-1 adjacent-transposition matrices), and
``inclusions``.  A matrix is ``{"rows": r, "cols": c, "entries": [...]}``
with row-major entries, each either an integer or a lowest-terms ``"p/q"``
string.  Anything else is rejected with a message naming the offending field.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from math import gcd
from pathlib import Path

from ..exactla import SparseMatrix
from .core import FIModule, ModuleFormatError

_FRACTION_RE = re.compile(r"^(-?\d+)/(\d+)$")
_TOP_FIELDS = {
    "name",
    "max_degree",
    "generation_bound",
    "dims",
    "transpositions",
    "inclusions",
}
_MATRIX_FIELDS = {"rows", "cols", "entries"}


def _entry_out(value: Fraction):
    if value.denominator == 1:
        return int(value)
    return f"{value.numerator}/{value.denominator}"


def _matrix_out(m: SparseMatrix) -> dict:
    entries: list = [0] * (m.rows * m.cols)
    for c, column in enumerate(m.columns):
        for r, v in column.items():
            entries[r * m.cols + c] = _entry_out(v)
    return {"rows": m.rows, "cols": m.cols, "entries": entries}


def module_to_json(module: FIModule) -> dict:
    """The JSON-ready document for a module."""
    return {
        "name": module.name,
        "max_degree": module.max_degree,
        "generation_bound": module.generation_bound,
        "dims": list(module.dims),
        "transpositions": {
            str(k): [_matrix_out(g) for g in module.transpositions[k]]
            for k in range(2, module.max_degree + 1)
        },
        "inclusions": [_matrix_out(m) for m in module.inclusions],
    }


def save_module(module: FIModule, path) -> None:
    """Write the module to ``path``; identical modules produce identical bytes."""
    text = json.dumps(module_to_json(module), indent=2, sort_keys=True)
    Path(path).write_text(text + "\n")


def _expect_natural(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise ModuleFormatError(f"{what} must be a non-negative integer, got {value!r}")
    return value


def _entry_in(value, where: str) -> Fraction:
    if isinstance(value, bool):
        raise ModuleFormatError(f"{where}: boolean is not a matrix entry")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        match = _FRACTION_RE.match(value)
        if not match:
            raise ModuleFormatError(f"{where}: malformed entry {value!r}")
        p, q = int(match.group(1)), int(match.group(2))
        if q == 0:
            raise ModuleFormatError(f"{where}: zero denominator in {value!r}")
        if q == 1:
            raise ModuleFormatError(
                f"{where}: {value!r} must be written as the integer {p}"
            )
        if gcd(abs(p), q) != 1:
            raise ModuleFormatError(f"{where}: {value!r} is not in lowest terms")
        return Fraction(p, q)
    raise ModuleFormatError(f"{where}: entry {value!r} has unsupported type")


def _matrix_in(doc, where: str) -> SparseMatrix:
    if not isinstance(doc, dict):
        raise ModuleFormatError(f"{where}: matrix must be an object")
    extra = set(doc) - _MATRIX_FIELDS
    if extra:
        raise ModuleFormatError(f"{where}: unknown matrix fields {sorted(extra)}")
    missing = _MATRIX_FIELDS - set(doc)
    if missing:
        raise ModuleFormatError(f"{where}: missing matrix fields {sorted(missing)}")
    rows = _expect_natural(doc["rows"], f"{where}.rows")
    cols = _expect_natural(doc["cols"], f"{where}.cols")
    entries = doc["entries"]
    if not isinstance(entries, list) or len(entries) != rows * cols:
        raise ModuleFormatError(
            f"{where}: need a list of exactly rows*cols = {rows * cols} entries"
        )
    mat = SparseMatrix(rows, cols)
    for idx, raw in enumerate(entries):
        v = _entry_in(raw, f"{where}.entries[{idx}]")
        if v:
            mat.columns[idx % cols][idx // cols] = v
    return mat


def module_from_json(doc) -> FIModule:
    """Parse a document produced by :func:`module_to_json`, strictly."""
    if not isinstance(doc, dict):
        raise ModuleFormatError("module document must be a JSON object")
    extra = set(doc) - _TOP_FIELDS
    if extra:
        raise ModuleFormatError(f"unknown fields {sorted(extra)}")
    missing = _TOP_FIELDS - set(doc)
    if missing:
        raise ModuleFormatError(f"missing fields {sorted(missing)}")
    if not isinstance(doc["name"], str):
        raise ModuleFormatError("name must be a string")
    max_degree = _expect_natural(doc["max_degree"], "max_degree")
    bound = _expect_natural(doc["generation_bound"], "generation_bound")
    if bound > max_degree:
        raise ModuleFormatError("generation_bound must lie inside the window")
    dims_doc = doc["dims"]
    if not isinstance(dims_doc, list) or len(dims_doc) != max_degree + 1:
        raise ModuleFormatError(
            f"dims must list one dimension per degree 0..{max_degree}"
        )
    dims = tuple(_expect_natural(d, f"dims[{k}]") for k, d in enumerate(dims_doc))
    trans_doc = doc["transpositions"]
    if not isinstance(trans_doc, dict):
        raise ModuleFormatError("transpositions must be an object keyed by degree")
    expected = {str(k) for k in range(2, max_degree + 1)}
    if set(trans_doc) != expected:
        raise ModuleFormatError(
            f"transpositions must have exactly the keys {sorted(expected, key=int)}"
        )
    transpositions: list[list[SparseMatrix]] = [[] for _ in range(max_degree + 1)]
    for k in range(2, max_degree + 1):
        block = trans_doc[str(k)]
        if not isinstance(block, list) or len(block) != k - 1:
            raise ModuleFormatError(f"transpositions[{k}] must list {k - 1} matrices")
        for i, m in enumerate(block):
            mat = _matrix_in(m, f"transpositions[{k}][{i}]")
            if (mat.rows, mat.cols) != (dims[k], dims[k]):
                raise ModuleFormatError(
                    f"transpositions[{k}][{i}] must be {dims[k]}x{dims[k]}"
                )
            transpositions[k].append(mat)
    inc_doc = doc["inclusions"]
    if not isinstance(inc_doc, list) or len(inc_doc) != max_degree:
        raise ModuleFormatError(f"inclusions must list {max_degree} matrices")
    inclusions = []
    for k, m in enumerate(inc_doc):
        mat = _matrix_in(m, f"inclusions[{k}]")
        if (mat.rows, mat.cols) != (dims[k + 1], dims[k]):
            raise ModuleFormatError(f"inclusions[{k}] must be {dims[k + 1]}x{dims[k]}")
        inclusions.append(mat)
    try:
        return FIModule(doc["name"], max_degree, bound, dims, transpositions, inclusions)
    except ValueError as exc:
        raise ModuleFormatError(str(exc)) from exc


def load_module(path) -> FIModule:
    """Read a module document from ``path``.

    Missing files surface as the usual ``OSError``; malformed content raises
    :class:`ModuleFormatError`.
    """
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModuleFormatError(f"not valid JSON: {exc}") from exc
    return module_from_json(doc)
