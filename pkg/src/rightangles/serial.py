"""JSON encodings for the package's value types.

Field elements serialize as a bare integer for prime fields (k = 1) and as a
length-k little-endian integer array for extensions.  Matrices and tensors
carry explicit dimensions with row-major value arrays; slice decompositions
list each slice as {"axis", "uni", "bi"} so certificates can be re-checked by
an independent reader.  Parsers validate and raise ValueError (or the
package's error types) on malformed input.
"""

from __future__ import annotations

import json
from typing import Any

from . import errors
from .geometry import Point, PointSet, TripleWitness, point_set
from .gf import Element, FieldSpec, make_field, validate_element
from .rank import MatrixFq, Slice, SliceDecomposition, Tensor3
from .search import CHECKPOINT_VERSION, SearchCheckpoint, SearchResult


def element_to_json(a: Element, F: FieldSpec) -> int | list[int]:
    return a[0] if F.k == 1 else list(a)


def element_from_json(v: Any, F: FieldSpec) -> Element:
    if F.k == 1:
        if not isinstance(v, int):
            raise ValueError(f"expected a bare integer element, got {v!r}")
        a: Element = (v,)
    else:
        if not isinstance(v, list):
            raise ValueError(f"expected a length-{F.k} coefficient array, got {v!r}")
        a = tuple(v)
    validate_element(a, F)
    return a


def field_to_json(F: FieldSpec) -> dict:
    return {"p": F.p, "k": F.k, "modulus": list(F.modulus)}


def field_from_json(d: Any) -> FieldSpec:
    if not isinstance(d, dict):
        raise ValueError(f"expected a field object, got {d!r}")
    try:
        return make_field(int(d["p"]), int(d["k"]), d["modulus"])
    except KeyError as e:
        raise ValueError(f"field object missing key {e}") from e


def point_to_json(pt: Point, F: FieldSpec) -> list:
    return [element_to_json(c, F) for c in pt]


def point_from_json(row: Any, F: FieldSpec) -> Point:
    if not isinstance(row, list):
        raise ValueError(f"expected a coordinate array, got {row!r}")
    return tuple(element_from_json(v, F) for v in row)


def point_set_to_json(A: PointSet) -> dict:
    return {
        "field": field_to_json(A.field),
        "n": A.n,
        "points": [point_to_json(pt, A.field) for pt in A.points],
    }


def point_set_from_json(d: Any) -> PointSet:
    if not isinstance(d, dict):
        raise ValueError(f"expected a point-set object, got {d!r}")
    try:
        F = field_from_json(d["field"])
        n = int(d["n"])
        rows = d["points"]
    except KeyError as e:
        raise ValueError(f"point-set object missing key {e}") from e
    if not isinstance(rows, list):
        raise ValueError("\"points\" must be an array of coordinate arrays")
    return point_set(F, n, (point_from_json(row, F) for row in rows))


def load_point_set(path: str) -> PointSet:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as e:
            raise ValueError(f"{path}: not valid JSON ({e})") from e
    return point_set_from_json(data)


def witness_to_json(w: TripleWitness, A: PointSet) -> dict:
    F = A.field
    return {
        "vertex_index": w.vertex_index,
        "arm1_index": w.arm1_index,
        "arm2_index": w.arm2_index,
        "value": element_to_json(w.value, F),
        "vertex": point_to_json(A.points[w.vertex_index], F),
        "arm1": point_to_json(A.points[w.arm1_index], F),
        "arm2": point_to_json(A.points[w.arm2_index], F),
    }


def matrix_to_json(M: MatrixFq) -> dict:
    F = M.field
    return {
        "field": field_to_json(F),
        "rows": M.rows,
        "cols": M.cols,
        "entries": [element_to_json(e, F) for row in M.entries for e in row],
    }


def tensor_to_json(T: Tensor3) -> dict:
    F = T.index_set.field
    m = T.size
    return {
        "index_set": point_set_to_json(T.index_set),
        "size": m,
        "values": [
            element_to_json(T.values[i][j][k], F)
            for i in range(m) for j in range(m) for k in range(m)
        ],
    }


def decomposition_to_json(D: SliceDecomposition, F: FieldSpec) -> dict:
    return {
        "target_size": D.target_size,
        "slices": [
            {
                "axis": s.axis,
                "uni": [element_to_json(v, F) for v in s.uni],
                "bi": [[element_to_json(v, F) for v in row] for row in s.bi],
            }
            for s in D.slices
        ],
    }


def decomposition_from_json(d: Any, F: FieldSpec) -> SliceDecomposition:
    if not isinstance(d, dict):
        raise ValueError(f"expected a decomposition object, got {d!r}")
    try:
        m = int(d["target_size"])
        raw = d["slices"]
    except KeyError as e:
        raise ValueError(f"decomposition object missing key {e}") from e
    slices = []
    for s in raw:
        axis = s["axis"]
        if axis not in ("X", "Y", "Z"):
            raise ValueError(f"unknown slice axis {axis!r}")
        uni = tuple(element_from_json(v, F) for v in s["uni"])
        bi = tuple(tuple(element_from_json(v, F) for v in row) for row in s["bi"])
        if len(uni) != m or len(bi) != m or any(len(r) != m for r in bi):
            raise errors.IndexSetMismatch("slice tables do not match target_size")
        slices.append(Slice(axis=axis, uni=uni, bi=bi))
    return SliceDecomposition(slices=tuple(slices), target_size=m)


def checkpoint_to_json(c: SearchCheckpoint) -> dict:
    return {
        "version": c.version,
        "n": c.n,
        "q": c.q,
        "completed_prefixes": [list(p) for p in c.completed_prefixes],
        "best_indices": list(c.best_indices),
        "best_size": c.best_size,
        "nodes": c.nodes,
    }


def checkpoint_from_json(d: Any) -> SearchCheckpoint:
    if not isinstance(d, dict):
        raise ValueError(f"expected a checkpoint object, got {d!r}")
    version = int(d.get("version", -1))
    if version != CHECKPOINT_VERSION:
        raise ValueError(f"unsupported checkpoint version {version}")
    try:
        return SearchCheckpoint(
            version=version,
            n=int(d["n"]),
            q=int(d["q"]),
            completed_prefixes=tuple(tuple(int(i) for i in p)
                                     for p in d["completed_prefixes"]),
            best_indices=tuple(int(i) for i in d["best_indices"]),
            best_size=int(d["best_size"]),
            nodes=int(d["nodes"]),
        )
    except KeyError as e:
        raise ValueError(f"checkpoint object missing key {e}") from e


def search_result_to_json(r: SearchResult, include_elapsed: bool = True) -> dict:
    out = {
        "n": r.n,
        "q": r.q,
        "size": r.size,
        "status": r.status,
        "nodes": r.nodes,
        "config": r.config,
        "best": point_set_to_json(r.best),
    }
    if include_elapsed:
        out["elapsed"] = r.elapsed
    if r.checkpoint is not None:
        out["checkpoint"] = checkpoint_to_json(r.checkpoint)
    return out
