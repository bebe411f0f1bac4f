"""File ingestion and JSON rendering.

Numbers are always exchanged as canonical scalar text (``-?digits`` or
``-?digits/digits``; residues for prime fields), never as JSON numbers.
"""

from __future__ import annotations

import csv
import io as _io
import json
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import DuplicateNodes, FieldMismatch, HankelInterpError, IoFailure, MalformedFile
from .exact_field import FieldSpec, Scalar, format_scalar
from .hankel_core import GeneratorSequence
from .poly_interp import InterpolationTable
from .polynomial import Polynomial

log = logging.getLogger("hankel_interp")


def read_text(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise IoFailure(f"cannot read {path}: {exc.strerror or exc}") from exc


def _load_json(text: str, path: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedFile(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def resolve_field(declared, override: Optional[FieldSpec]) -> FieldSpec:
    """Combine a file's ``field`` entry with a command-line choice."""
    if declared is None:
        return override or FieldSpec.rationals()
    spec = FieldSpec.from_json(declared)
    if override is not None and override != spec:
        raise FieldMismatch(f"file declares {spec} but {override} was requested")
    return spec


def _parse_cells(cells: Sequence, spec: FieldSpec, what: str) -> List[Scalar]:
    out = []
    for i, cell in enumerate(cells):
        if not isinstance(cell, str):
            raise MalformedFile(f"{what}[{i}] must be a string in scalar text format, got {cell!r}")
        value = spec.parse(cell)
        if spec.is_prime_field and format_scalar(value) != cell.strip():
            log.warning("%s[%d] = %s normalized to residue %s mod %d",
                        what, i, cell.strip(), value, spec.modulus)
        out.append(value)
    return out


def _check_distinct(nodes: Sequence[Scalar]):
    first: Dict[Scalar, int] = {}
    for i, x in enumerate(nodes):
        if x in first:
            j = first[x]
            raise DuplicateNodes(f"node {x} appears in rows {j + 1} and {i + 1}", rows=[j + 1, i + 1])
        first[x] = i


def _looks_like_json(text: str) -> bool:
    return text.lstrip().startswith("{")


def _read_pairs(path: str, spec: Optional[FieldSpec], value_keys=("values",)) -> Tuple[FieldSpec, list, list]:
    text = read_text(path)
    if _looks_like_json(text):
        obj = _load_json(text, path)
        if not isinstance(obj, dict) or "nodes" not in obj:
            raise MalformedFile(f"{path}: expected an object with 'nodes' and {value_keys[0]!r}")
        key = next((k for k in value_keys if k in obj), None)
        if key is None:
            raise MalformedFile(f"{path}: missing {value_keys[0]!r}")
        nodes, values = obj["nodes"], obj[key]
        if not isinstance(nodes, list) or not isinstance(values, list):
            raise MalformedFile(f"{path}: 'nodes' and {key!r} must be arrays")
        if len(nodes) != len(values):
            raise MalformedFile(f"{path}: {len(nodes)} nodes but {len(values)} {key}")
        field = resolve_field(obj.get("field"), spec)
        return field, _parse_cells(nodes, field, "nodes"), _parse_cells(values, field, key)
    field = spec or FieldSpec.rationals()
    rows = [r for r in csv.reader(_io.StringIO(text)) if r and any(c.strip() for c in r)]
    if rows and rows[0] and rows[0][0].strip().lower() == "x":
        rows = rows[1:]
    xs, ys = [], []
    for lineno, row in enumerate(rows, 1):
        if len(row) != 2:
            raise MalformedFile(f"{path}: row {lineno} has {len(row)} columns, expected 2")
        xs.append(row[0])
        ys.append(row[1])
    return field, _parse_cells(xs, field, "x"), _parse_cells(ys, field, "y")


def parse_table_file(path: str, spec: Optional[FieldSpec] = None) -> InterpolationTable:
    """Read a table from JSON (``nodes``/``values``) or two-column CSV."""
    field, xs, ys = _read_pairs(path, spec)
    _check_distinct(xs)
    return InterpolationTable(field, tuple(xs), tuple(ys))


def parse_ratio_file(path: str, spec: Optional[FieldSpec] = None):
    """Nodes and p/q ratios; the values may be keyed ``ratios`` or ``values``."""
    field, xs, rs = _read_pairs(path, spec, ("ratios", "values"))
    _check_distinct(xs)
    return field, xs, rs


def parse_sequence_file(path: str, spec: Optional[FieldSpec] = None) -> GeneratorSequence:
    obj = _load_json(read_text(path), path)
    if not isinstance(obj, dict) or not isinstance(obj.get("entries"), list):
        raise MalformedFile(f"{path}: expected an object with an 'entries' array")
    field = resolve_field(obj.get("field"), spec)
    return GeneratorSequence(field, tuple(_parse_cells(obj["entries"], field, "entries")))


def parse_polynomial_file(path: str, spec: Optional[FieldSpec] = None) -> Polynomial:
    """``{"field": ..., "coefficients": [ascending scalar text]}``."""
    obj = _load_json(read_text(path), path)
    if not isinstance(obj, dict) or not isinstance(obj.get("coefficients"), list):
        raise MalformedFile(f"{path}: expected an object with a 'coefficients' array")
    field = resolve_field(obj.get("field"), spec)
    return Polynomial(field, _parse_cells(obj["coefficients"], field, "coefficients"))


def poly_json(p: Polynomial, pretty: bool = False):
    return p.pretty() if pretty else p.to_strings()


def dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)


def error_json(exc: HankelInterpError) -> str:
    body = {"error": exc.code, "message": exc.message}
    if exc.details:
        body["details"] = exc.details
    return json.dumps(body, sort_keys=True)
