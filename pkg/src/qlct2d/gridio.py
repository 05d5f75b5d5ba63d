"""Reading and writing sampled grids as CSV or JSON files.

Two on-disk forms are supported:

* CSV with header ``x1,x2,qa,qb,qc,qd`` and one row per node in
  row-major order, plus a JSON sidecar ``<path>.json`` holding the grid
  bounds (and transform parameters for spectra).  The sidecar is
  optional on read; without it the grid is inferred from the
  coordinate columns.
* A single JSON file embedding the grid header, the values and any
  parameters.

Floats are written with :func:`repr`, whose shortest round-trip
representation (at most 17 significant digits) reproduces the exact
binary value on read.
"""

from __future__ import annotations

import csv
import json
import os

import numpy as np

from .field import GridSpec, SampledField
from .lct import TransformParams
from .transform import Spectrum

__all__ = [
    "ParseError",
    "read_field",
    "write_field",
    "read_spectrum",
    "write_spectrum",
]

_CSV_HEADER = ["x1", "x2", "qa", "qb", "qc", "qd"]


class ParseError(ValueError):
    """A grid file is missing, empty, or malformed."""


def _sidecar_path(path: str) -> str:
    return path + ".json"


def _format_from_path(path: str, fmt: str | None) -> str:
    if fmt is not None:
        if fmt not in ("csv", "json"):
            raise ValueError(f"unknown format {fmt!r} (expected csv or json)")
        return fmt
    ext = os.path.splitext(path)[1].lower()
    return "json" if ext == ".json" else "csv"


def _header_dict(spec: GridSpec, params: TransformParams | None) -> dict:
    d = spec.to_dict()
    if params is not None:
        d["params"] = params.to_dict()
    return d


def _write_csv(path: str, spec: GridSpec, values: np.ndarray,
               params: TransformParams | None):
    x1 = spec.x1_nodes()
    x2 = spec.x2_nodes()
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(_CSV_HEADER)
        for r in range(spec.n1):
            for c in range(spec.n2):
                q = values[r, c]
                w.writerow([repr(float(x1[r])), repr(float(x2[c])),
                            repr(float(q[0])), repr(float(q[1])),
                            repr(float(q[2])), repr(float(q[3]))])
    with open(_sidecar_path(path), "w") as fh:
        json.dump(_header_dict(spec, params), fh, indent=1)
        fh.write("\n")


def _infer_spec_from_columns(x1: np.ndarray, x2: np.ndarray) -> GridSpec:
    """Reconstruct the grid from row-major coordinate columns."""
    n2 = 1
    while n2 < x1.size and x1[n2] == x1[0]:
        n2 += 1
    if x1.size % n2 != 0:
        raise ParseError("row count is not a multiple of the inferred "
                         f"row length {n2}")
    n1 = x1.size // n2
    return GridSpec(float(x1[0]), float(x1[-1]),
                    float(x2[0]), float(x2[n2 - 1]), n1, n2)


def _read_csv(path: str) -> tuple[GridSpec, np.ndarray, TransformParams | None]:
    try:
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from e
    rows = [r for r in rows if r]
    if not rows:
        raise ParseError(f"{path}: no rows")
    if [h.strip() for h in rows[0]] != _CSV_HEADER:
        raise ParseError(f"{path}: expected header {','.join(_CSV_HEADER)}, "
                         f"got {','.join(rows[0])}")
    body = rows[1:]
    if not body:
        raise ParseError(f"{path}: no rows after header")
    try:
        data = np.array([[float(v) for v in r] for r in body])
    except ValueError as e:
        raise ParseError(f"{path}: non-numeric cell ({e})") from e
    if data.shape[1] != 6:
        raise ParseError(f"{path}: expected 6 columns, got {data.shape[1]}")

    params = None
    side = _sidecar_path(path)
    if os.path.exists(side):
        with open(side) as fh:
            try:
                header = json.load(fh)
            except json.JSONDecodeError as e:
                raise ParseError(f"{side}: invalid JSON ({e})") from e
        spec = GridSpec.from_dict(header)
        if "params" in header:
            params = TransformParams.from_dict(header["params"])
    else:
        spec = _infer_spec_from_columns(data[:, 0], data[:, 1])
    if data.shape[0] != spec.n1 * spec.n2:
        raise ParseError(f"{path}: {data.shape[0]} rows for a "
                         f"{spec.n1} x {spec.n2} grid")
    values = data[:, 2:].reshape(spec.n1, spec.n2, 4)
    return spec, values, params


def _write_json(path: str, spec: GridSpec, values: np.ndarray,
                params: TransformParams | None):
    doc = {"grid": _header_dict(spec, None), "values": values.tolist()}
    if params is not None:
        doc["params"] = params.to_dict()
    with open(path, "w") as fh:
        json.dump(doc, fh)
        fh.write("\n")


def _read_json(path: str) -> tuple[GridSpec, np.ndarray, TransformParams | None]:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: invalid JSON ({e})") from e
    if not isinstance(doc, dict) or "grid" not in doc or "values" not in doc:
        raise ParseError(f"{path}: expected an object with grid and values")
    spec = GridSpec.from_dict(doc["grid"])
    values = np.asarray(doc["values"], dtype=float)
    if values.shape != (spec.n1, spec.n2, 4):
        raise ParseError(f"{path}: values shape {values.shape} does not "
                         f"match grid ({spec.n1}, {spec.n2}, 4)")
    params = None
    if "params" in doc:
        params = TransformParams.from_dict(doc["params"])
    return spec, values, params


def write_field(f: SampledField, path: str, fmt: str | None = None):
    """Write a field as CSV (with JSON sidecar) or single-file JSON."""
    if _format_from_path(path, fmt) == "json":
        _write_json(path, f.spec, f.values, None)
    else:
        _write_csv(path, f.spec, f.values, None)


def read_field(path: str, fmt: str | None = None) -> SampledField:
    """Read a field; format is taken from the extension unless given."""
    if _format_from_path(path, fmt) == "json":
        spec, values, _ = _read_json(path)
    else:
        spec, values, _ = _read_csv(path)
    return SampledField(spec, values)


def write_spectrum(s: Spectrum, path: str, fmt: str | None = None):
    """Write a spectrum; its transform parameters go in the header."""
    if _format_from_path(path, fmt) == "json":
        _write_json(path, s.spec, s.values, s.params)
    else:
        _write_csv(path, s.spec, s.values, s.params)


def read_spectrum(path: str, fmt: str | None = None) -> Spectrum:
    """Read a spectrum, restoring embedded transform parameters."""
    if _format_from_path(path, fmt) == "json":
        spec, values, params = _read_json(path)
    else:
        spec, values, params = _read_csv(path)
    return Spectrum(spec, values, params)
