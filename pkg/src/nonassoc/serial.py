"""JSON file formats and content hashing.

All scalars are serialized as canonical strings: ``"p"`` for integers and
``"p/q"`` in lowest terms with positive q otherwise.  Decimals never appear.

Formats (all UTF-8 JSON):

- algebra:   {"dim": n, "labels": ["e1", ...], "sc": [[i, j, k, "p/q"], ...]}
             indices 0-based; omitted (i, j, k) triples are zero.
- operator:  {"dim": n, "matrix": [["p/q", ...], ...]}
             column-major: matrix[j] is the image of basis vector e_j.
- element:   {"dim": n, "coords": ["p/q", ...]}
- embedding: {"ambient": <algebra object or file path>, "basis": [[...], ...]}
- grid:      {"points": [["p/q", ...], ...]}
- expectations: {"fixture": name, "rows": [{"check": label, "expect": "pass"}, ...]}
"""
from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Any

from .algebra import Algebra, Element, Embedding, make_algebra
from .errors import FileFormatError
from .operators import LinearOperator, make_operator
from .scalars import as_scalar, format_scalar


def _scalar_out(x) -> str:
    return format_scalar(x)


def _scalar_in(v):
    if isinstance(v, bool) or isinstance(v, float):
        raise FileFormatError(f"scalars must be strings or integers, got {v!r}")
    try:
        return as_scalar(v)
    except (TypeError, ValueError) as exc:
        raise FileFormatError(str(exc)) from exc


def algebra_to_dict(a: Algebra) -> dict:
    sc = []
    for i in range(a.dim):
        for j in range(a.dim):
            for k, v in enumerate(a.sc[i][j]):
                if v != 0:
                    sc.append([i, j, k, _scalar_out(v)])
    return {"dim": a.dim, "labels": list(a.basis_labels), "sc": sc}


def algebra_from_dict(d: dict) -> Algebra:
    try:
        dim = int(d["dim"])
        raw = d["sc"]
    except (KeyError, TypeError, ValueError) as exc:
        raise FileFormatError(f"malformed algebra object: {exc}") from exc
    labels = d.get("labels") or ()
    entries = []
    for item in raw:
        if len(item) != 4:
            raise FileFormatError(f"structure constant entry {item!r} must be [i,j,k,scalar]")
        i, j, k, v = item
        entries.append((int(i), int(j), int(k), _scalar_in(v)))
    try:
        return make_algebra(dim, entries, tuple(labels))
    except Exception as exc:
        raise FileFormatError(f"invalid algebra: {exc}") from exc


def operator_to_dict(r: LinearOperator) -> dict:
    return {
        "dim": r.dim,
        "matrix": [[_scalar_out(v) for v in col.coords] for col in r.columns],
    }


def operator_from_dict(d: dict, algebra: Algebra) -> LinearOperator:
    try:
        dim = int(d["dim"])
        matrix = d["matrix"]
    except (KeyError, TypeError, ValueError) as exc:
        raise FileFormatError(f"malformed operator object: {exc}") from exc
    if dim != algebra.dim:
        raise FileFormatError(
            f"operator dimension {dim} differs from algebra dimension {algebra.dim}"
        )
    cols = [[_scalar_in(v) for v in col] for col in matrix]
    try:
        return make_operator(algebra, cols)
    except Exception as exc:
        raise FileFormatError(f"invalid operator: {exc}") from exc


def element_to_dict(e: Element) -> dict:
    return {"dim": len(e.coords), "coords": [_scalar_out(v) for v in e.coords]}


def element_from_dict(d: dict) -> Element:
    try:
        coords = d["coords"]
    except (KeyError, TypeError) as exc:
        raise FileFormatError(f"malformed element object: {exc}") from exc
    e = Element(tuple(_scalar_in(v) for v in coords))
    if "dim" in d and int(d["dim"]) != len(e.coords):
        raise FileFormatError("element dim field disagrees with coordinate count")
    return e


def embedding_to_dict(emb: Embedding, ambient_path: str | None = None) -> dict:
    ambient: Any = ambient_path if ambient_path else algebra_to_dict(emb.ambient)
    return {
        "ambient": ambient,
        "basis": [[_scalar_out(v) for v in b.coords] for b in emb.basis],
    }


def embedding_from_dict(d: dict, base_dir: Path | None = None) -> Embedding:
    try:
        ambient_spec = d["ambient"]
        basis_raw = d["basis"]
    except (KeyError, TypeError) as exc:
        raise FileFormatError(f"malformed embedding object: {exc}") from exc
    if isinstance(ambient_spec, str):
        path = Path(ambient_spec)
        if base_dir is not None and not path.is_absolute():
            path = base_dir / path
        ambient = load_algebra(path)
    else:
        ambient = algebra_from_dict(ambient_spec)
    basis = [Element(tuple(_scalar_in(v) for v in row)) for row in basis_raw]
    try:
        return Embedding.build(ambient, basis)
    except Exception as exc:
        raise FileFormatError(f"invalid embedding: {exc}") from exc


def grid_from_dict(d: dict) -> list[tuple]:
    try:
        points = d["points"]
    except (KeyError, TypeError) as exc:
        raise FileFormatError(f"malformed grid object: {exc}") from exc
    return [tuple(_scalar_in(v) for v in p) for p in points]


def _load_json(path) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except OSError as exc:
        raise FileFormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{path} is not valid JSON: {exc}") from exc


def _dump_json(obj: dict, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(obj, f, indent=2)
        f.write("\n")


def load_algebra(path) -> Algebra:
    return algebra_from_dict(_load_json(path))


def save_algebra(a: Algebra, path) -> None:
    _dump_json(algebra_to_dict(a), path)


def load_operator(path, algebra: Algebra) -> LinearOperator:
    return operator_from_dict(_load_json(path), algebra)


def save_operator(r: LinearOperator, path) -> None:
    _dump_json(operator_to_dict(r), path)


def load_element(path) -> Element:
    return element_from_dict(_load_json(path))


def save_element(e: Element, path) -> None:
    _dump_json(element_to_dict(e), path)


def load_embedding(path) -> Embedding:
    p = Path(path)
    return embedding_from_dict(_load_json(p), p.parent)


def save_embedding(emb: Embedding, path, ambient_path: str | None = None) -> None:
    _dump_json(embedding_to_dict(emb, ambient_path), path)


def load_grid(path) -> list[tuple]:
    return grid_from_dict(_load_json(path))


def algebra_content_hash(a: Algebra) -> str:
    """Stable hash of the mathematical content (dim + structure constants)."""
    payload = json.dumps(
        {"dim": a.dim, "sc": algebra_to_dict(a)["sc"]},
        sort_keys=True,
        separators=(",", ":"),
    )
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


def operator_content_hash(r: LinearOperator) -> str:
    payload = json.dumps(operator_to_dict(r), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()[:16]
