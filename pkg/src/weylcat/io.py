"""JSON module files.

Schema::

    {"n": 2, "frac": ["0", "1/2"],
     "vertices": {"0": 1, "1": 1},
     "edges": {"1,t,1": [["1"]], "1,d,0": [["0"]]}}

Vertex bitstrings run over the integral coordinates in increasing order
(``1`` means the corner value ``-1``).  Edge keys are ``coordinate,dir,source``
with the coordinate 1-based in the module's numbering.  Rationals are exact
strings; floats are rejected.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .blocks import BlockId, WeightModule
from .errors import DomainError
from .exactla import Mat, q_str, to_q
from .quiver import BoundQuiver, Rep, vertex_bits


def _reject_float(text):
    raise DomainError(f"float literal {text} not allowed; use exact rationals such as \"1/2\"")


def module_to_json(m: WeightModule) -> dict:
    block = m.block
    integral = block.integral_set
    edges = {}
    for (kind, p, s), mat in m.rep.maps.items():
        key = f"{integral[p] + 1},{kind},{vertex_bits(s)}"
        edges[key] = [[q_str(x) for x in row] for row in mat.rows]
    return {
        "n": block.n,
        "frac": [q_str(f) for f in block.frac],
        "vertices": {vertex_bits(v): d for v, d in m.rep.dims.items()},
        "edges": edges,
    }


def dumps(m: WeightModule) -> str:
    return json.dumps(module_to_json(m), sort_keys=True, indent=2) + "\n"


def _field(path: str, cond: bool, msg: str):
    if not cond:
        raise DomainError(f"{path}: {msg}")


def _rational(x, path: str) -> Fraction:
    _field(path, isinstance(x, (str, int)) and not isinstance(x, bool), "expected a rational string")
    try:
        return to_q(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"{path}: {exc}") from None


def module_from_json(data) -> WeightModule:
    _field("$", isinstance(data, dict), "expected an object")
    for key in ("n", "frac", "vertices", "edges"):
        _field(f"$.{key}", key in data, "missing field")
    extra = set(data) - {"n", "frac", "vertices", "edges"}
    _field("$", not extra, f"unknown fields {sorted(extra)}")
    n = data["n"]
    _field("$.n", isinstance(n, int) and not isinstance(n, bool) and n >= 0, "expected a non-negative integer")
    _field("$.frac", isinstance(data["frac"], list) and len(data["frac"]) == n, f"expected a list of {n} rationals")
    frac = tuple(_rational(x, f"$.frac[{i}]") for i, x in enumerate(data["frac"]))
    for i, f in enumerate(frac):
        _field(f"$.frac[{i}]", 0 <= f < 1, "fractional part must lie in [0, 1)")
    block = BlockId(n, frac)
    q = BoundQuiver(block.k)
    verts = data["vertices"]
    _field("$.vertices", isinstance(verts, dict), "expected an object")
    dims = {}
    for v in q.vertices:
        key = vertex_bits(v)
        _field("$.vertices", key in verts, f"missing vertex {key!r}")
        d = verts[key]
        _field(f"$.vertices.{key}", isinstance(d, int) and not isinstance(d, bool) and d >= 0, "expected a dimension")
        dims[v] = d
    _field("$.vertices", len(verts) == len(q.vertices), f"expected exactly {len(q.vertices)} vertices")
    edges = data["edges"]
    _field("$.edges", isinstance(edges, dict), "expected an object")
    integral = block.integral_set
    maps = {}
    seen = set()
    for kind, p, s in q.arrows:
        key = f"{integral[p] + 1},{kind},{vertex_bits(s)}"
        path = f"$.edges[{key!r}]"
        _field(path, key in edges, "missing edge entry")
        seen.add(key)
        rows = edges[key]
        tgt = list(s)
        tgt[p] = 0 if kind == "t" else -1
        r, c = dims[tuple(tgt)], dims[s]
        _field(path, isinstance(rows, list) and len(rows) == r, f"expected {r} rows")
        mat = []
        for i, row in enumerate(rows):
            _field(f"{path}[{i}]", isinstance(row, list) and len(row) == c, f"expected {c} entries")
            mat.append([_rational(x, f"{path}[{i}][{j}]") for j, x in enumerate(row)])
        maps[(kind, p, s)] = Mat(mat, c) if r else Mat.zeros(0, c)
    unknown = set(edges) - seen
    _field("$.edges", not unknown, f"unknown edge keys {sorted(unknown)}")
    rep = Rep(q, dims, maps)
    rep.check()  # RelationError names the violated path
    return WeightModule(block, rep)


def loads(text: str) -> WeightModule:
    try:
        data = json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as exc:
        raise DomainError(f"JSON parse error at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return module_from_json(data)


def read_module(path) -> WeightModule:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)


def write_module(m: WeightModule, path) -> None:
    Path(path).write_text(dumps(m))
