"""JSON wire formats for every table kind, with canonical byte output.

Canonical form: entry lists sorted by index tuple, scalars rendered "p/q" or
"p", keys sorted, two-space indent, trailing newline.  Serializing the same
object twice (or after a round trip) yields identical bytes.

All readers validate: unknown kinds, missing fields, out-of-range indices,
malformed scalars, and duplicate entries raise InputFormatError.
"""

from __future__ import annotations

import json
from typing import Any

from .algebra import AlgebraTable
from .bialgebra import BialgebraCandidate
from .bimodule import Bimodule
from .coalgebra import CoalgebraTable
from .matched_pair import MatchedPair
from .tensors import Matrix, Tensor3, format_scalar, parse_scalar


class InputFormatError(ValueError):
    pass


def _require(cond: bool, message: str):
    if not cond:
        raise InputFormatError(message)


def _as_dim(obj: Any, field: str) -> int:
    _require(isinstance(obj, int) and not isinstance(obj, bool) and obj >= 0,
             f"{field} must be a nonnegative integer")
    return obj


def _as_index(obj: Any, bound: int, field: str) -> int:
    _require(isinstance(obj, int) and not isinstance(obj, bool), f"{field} must be an integer")
    _require(0 <= obj < bound, f"{field} {obj} out of range [0,{bound})")
    return obj


def _as_scalar(obj: Any, field: str):
    _require(isinstance(obj, str), f"{field} must be a scalar string like \"p/q\"")
    try:
        return parse_scalar(obj)
    except ValueError as exc:
        raise InputFormatError(f"{field}: {exc}") from None


def _entry_rows(obj: Any, field: str, width: int):
    _require(isinstance(obj, list), f"{field} must be a list")
    for row in obj:
        _require(isinstance(row, list) and len(row) == width,
                 f"{field} rows must be {width}-element lists")
        yield row


def algebra_jsonable(a: AlgebraTable) -> dict:
    return {
        "kind": "algebra",
        "dim": a.dim,
        "basis": list(a.basis_labels),
        "structure": [
            [i, j, k, format_scalar(v)] for (i, j, k), v in sorted(a.c.entries.items())
        ],
    }


def algebra_from_jsonable(obj: Any) -> AlgebraTable:
    _require(isinstance(obj, dict), "algebra payload must be an object")
    _require(obj.get("kind") == "algebra", "expected kind \"algebra\"")
    dim = _as_dim(obj.get("dim"), "dim")
    basis = obj.get("basis")
    _require(isinstance(basis, list) and len(basis) == dim, "basis must list dim labels")
    _require(all(isinstance(b, str) for b in basis), "basis labels must be strings")
    entries = {}
    for row in _entry_rows(obj.get("structure"), "structure", 4):
        i = _as_index(row[0], dim, "structure index")
        j = _as_index(row[1], dim, "structure index")
        k = _as_index(row[2], dim, "structure index")
        v = _as_scalar(row[3], "structure value")
        _require((i, j, k) not in entries, f"duplicate structure entry ({i},{j},{k})")
        if v:
            entries[(i, j, k)] = v
    return AlgebraTable(dim, tuple(basis), Tensor3(dim, dim, dim, entries))


def coalgebra_jsonable(c: CoalgebraTable) -> dict:
    return {
        "kind": "coalgebra",
        "dim": c.dim,
        "coproduct": [
            [k, i, j, format_scalar(v)] for (k, i, j), v in sorted(c.d.entries.items())
        ],
    }


def coalgebra_from_jsonable(obj: Any) -> CoalgebraTable:
    _require(isinstance(obj, dict), "coalgebra payload must be an object")
    _require(obj.get("kind") == "coalgebra", "expected kind \"coalgebra\"")
    dim = _as_dim(obj.get("dim"), "dim")
    entries = {}
    for row in _entry_rows(obj.get("coproduct"), "coproduct", 4):
        k = _as_index(row[0], dim, "coproduct index")
        i = _as_index(row[1], dim, "coproduct index")
        j = _as_index(row[2], dim, "coproduct index")
        v = _as_scalar(row[3], "coproduct value")
        _require((k, i, j) not in entries, f"duplicate coproduct entry ({k},{i},{j})")
        if v:
            entries[(k, i, j)] = v
    return CoalgebraTable(dim, Tensor3(dim, dim, dim, entries))


def _maps_jsonable(maps: tuple[Matrix, ...]) -> list:
    out = []
    for idx, m in enumerate(maps):
        for (row, col), v in m.items():
            out.append([idx, row, col, format_scalar(v)])
    return out


def _maps_from_jsonable(obj: Any, count: int, rows: int, field: str) -> tuple[Matrix, ...]:
    acc: list[dict] = [{} for _ in range(count)]
    seen = set()
    for row in _entry_rows(obj, field, 4):
        idx = _as_index(row[0], count, f"{field} family index")
        r = _as_index(row[1], rows, f"{field} row")
        c = _as_index(row[2], rows, f"{field} column")
        v = _as_scalar(row[3], f"{field} value")
        _require((idx, r, c) not in seen, f"duplicate {field} entry ({idx},{r},{c})")
        seen.add((idx, r, c))
        if v:
            acc[idx][(r, c)] = v
    return tuple(Matrix(rows, rows, entries) for entries in acc)


def bimodule_jsonable(b: Bimodule) -> dict:
    return {
        "kind": "bimodule",
        "algebra": algebra_jsonable(b.base),
        "v_dim": b.v_dim,
        "l": _maps_jsonable(b.left_maps),
        "r": _maps_jsonable(b.right_maps),
    }


def bimodule_from_jsonable(obj: Any) -> Bimodule:
    _require(isinstance(obj, dict), "bimodule payload must be an object")
    _require(obj.get("kind") == "bimodule", "expected kind \"bimodule\"")
    base = algebra_from_jsonable(obj.get("algebra"))
    v_dim = _as_dim(obj.get("v_dim"), "v_dim")
    left = _maps_from_jsonable(obj.get("l"), base.dim, v_dim, "l")
    right = _maps_from_jsonable(obj.get("r"), base.dim, v_dim, "r")
    return Bimodule(base, v_dim, left, right)


def matched_pair_jsonable(mp: MatchedPair) -> dict:
    return {
        "kind": "matched_pair",
        "A": algebra_jsonable(mp.a),
        "B": algebra_jsonable(mp.b),
        "lA": _maps_jsonable(mp.la),
        "rA": _maps_jsonable(mp.ra),
        "lB": _maps_jsonable(mp.lb),
        "rB": _maps_jsonable(mp.rb),
    }


def matched_pair_from_jsonable(obj: Any) -> MatchedPair:
    _require(isinstance(obj, dict), "matched_pair payload must be an object")
    _require(obj.get("kind") == "matched_pair", "expected kind \"matched_pair\"")
    a = algebra_from_jsonable(obj.get("A"))
    b = algebra_from_jsonable(obj.get("B"))
    la = _maps_from_jsonable(obj.get("lA"), a.dim, b.dim, "lA")
    ra = _maps_from_jsonable(obj.get("rA"), a.dim, b.dim, "rA")
    lb = _maps_from_jsonable(obj.get("lB"), b.dim, a.dim, "lB")
    rb = _maps_from_jsonable(obj.get("rB"), b.dim, a.dim, "rB")
    return MatchedPair(a, b, la, ra, lb, rb)


def bialgebra_candidate_jsonable(bc: BialgebraCandidate) -> dict:
    return {
        "kind": "bialgebra_candidate",
        "A": algebra_jsonable(bc.a),
        "Astar": algebra_jsonable(bc.astar),
    }


def bialgebra_candidate_from_jsonable(obj: Any) -> BialgebraCandidate:
    _require(isinstance(obj, dict), "bialgebra_candidate payload must be an object")
    _require(obj.get("kind") == "bialgebra_candidate", "expected kind \"bialgebra_candidate\"")
    return BialgebraCandidate(
        algebra_from_jsonable(obj.get("A")), algebra_from_jsonable(obj.get("Astar"))
    )


_WRITERS = {
    AlgebraTable: algebra_jsonable,
    CoalgebraTable: coalgebra_jsonable,
    Bimodule: bimodule_jsonable,
    MatchedPair: matched_pair_jsonable,
    BialgebraCandidate: bialgebra_candidate_jsonable,
}

_READERS = {
    "algebra": algebra_from_jsonable,
    "coalgebra": coalgebra_from_jsonable,
    "bimodule": bimodule_from_jsonable,
    "matched_pair": matched_pair_from_jsonable,
    "bialgebra_candidate": bialgebra_candidate_from_jsonable,
}


def to_jsonable(obj) -> dict:
    writer = _WRITERS.get(type(obj))
    if writer is None:
        raise TypeError(f"no JSON form for {type(obj).__name__}")
    return writer(obj)


def from_jsonable(obj: Any):
    _require(isinstance(obj, dict), "payload must be a JSON object")
    kind = obj.get("kind")
    reader = _READERS.get(kind)
    _require(reader is not None, f"unknown kind {kind!r}")
    return reader(obj)


def dumps(obj) -> str:
    return json.dumps(to_jsonable(obj), indent=2, sort_keys=True) + "\n"


def loads(text: str):
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"not valid JSON: {exc}") from None
    return from_jsonable(payload)


def load_path(path) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return loads(fh.read())
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from None


def dump_path(path, obj):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))
