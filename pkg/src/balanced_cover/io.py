"""JSON instance and result files.

Rationals travel as strings (``"3/10"``, ``"1"``, or a decimal such as
``"0.15"``, read exactly). Bare JSON numbers are read from their decimal
text, never through binary floating point. Every document carries
``"schema": 1``.
"""

from __future__ import annotations

import json
from decimal import Decimal
from fractions import Fraction

from .core import BlockedBipartiteGraph, Chain, InstanceFamily, WeightedHypergraph
from .errors import FormatError, ValidationError
from .steinitz import VectorFamily

SCHEMA = 1
KINDS = ("family", "graph", "vectors")


def frac_str(x) -> str:
    return str(Fraction(x))


def read_rational(x, where: str = "value") -> Fraction:
    if isinstance(x, bool) or x is None:
        raise FormatError(f"{where}: expected a rational, got {x!r}")
    if isinstance(x, (int, Decimal)):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(Decimal(repr(x)))
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            raise FormatError(f"{where}: cannot read {x!r} as a rational") from None
    raise FormatError(f"{where}: expected a rational, got {type(x).__name__}")


def loads(text: str):
    try:
        return json.loads(text, parse_float=Decimal)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None


def _require(doc: dict, key: str, kind: str):
    if key not in doc:
        raise FormatError(f"{kind} document is missing {key!r}")
    return doc[key]


def _int(x, where):
    if isinstance(x, bool) or not isinstance(x, int):
        raise FormatError(f"{where}: expected an integer, got {x!r}")
    return x


def _check_schema(doc):
    if not isinstance(doc, dict):
        raise FormatError("top-level JSON value must be an object")
    schema = doc.get("schema", SCHEMA)
    if schema != SCHEMA:
        raise FormatError(f"unsupported schema version {schema!r}")


def instance_from_doc(doc):
    _check_schema(doc)
    kind = doc.get("kind")
    if kind == "family":
        return _family_from_doc(doc)
    if kind == "graph":
        return _graph_from_doc(doc)
    if kind == "vectors":
        return _vectors_from_doc(doc)
    raise FormatError(f"unknown instance kind {kind!r}; expected one of {', '.join(KINDS)}")


def parse_instance(text: str):
    return instance_from_doc(loads(text))


def _family_from_doc(doc):
    n = _int(_require(doc, "n", "family"), "n")
    hyps = _require(doc, "hypergraphs", "family")
    if not isinstance(hyps, list):
        raise FormatError("'hypergraphs' must be a list")
    built = []
    for idx, h in enumerate(hyps, 1):
        edges = []
        for e in _require(h, "edges", f"hypergraph {idx}"):
            verts = _require(e, "vertices", f"hypergraph {idx} edge")
            if not isinstance(verts, list) or not verts:
                raise FormatError(f"hypergraph {idx}: empty edge (the empty set carries no weight)")
            verts = [_int(v, f"hypergraph {idx} vertex") for v in verts]
            edges.append((verts, read_rational(_require(e, "weight", "edge"), f"hypergraph {idx} weight")))
        try:
            built.append(WeightedHypergraph(n, edges))
        except ValidationError as exc:
            raise ValidationError(f"hypergraph {idx}: {exc}") from None
    F = InstanceFamily(built)
    if "k" in doc and doc["k"] != F.k:
        raise ValidationError(f"k = {doc['k']} but {F.k} hypergraphs were given")
    if doc.get("r") is not None and doc["r"] != F.r:
        raise ValidationError(f"declared r = {doc['r']} but the family has r = {F.r}")
    return F


def _graph_from_doc(doc):
    fields = {key: _int(_require(doc, key, "graph"), key) for key in ("n", "k", "m", "r")}
    right = []
    for idx, rv in enumerate(_require(doc, "right_vertices", "graph")):
        block = _int(_require(rv, "block", f"right vertex {idx}"), "block")
        nbrs = [_int(v, "neighbour") for v in _require(rv, "neighbors", f"right vertex {idx}")]
        right.append((block, nbrs))
    return BlockedBipartiteGraph(fields["n"], fields["k"], fields["m"], fields["r"], right)


def _vectors_from_doc(doc):
    d = _int(_require(doc, "d", "vectors"), "d")
    rows = _require(doc, "vectors", "vectors")
    vecs = tuple(tuple(read_rational(x, f"vector {i}") for x in row) for i, row in enumerate(rows))
    return VectorFamily(d, vecs)


def instance_to_doc(obj) -> dict:
    if isinstance(obj, InstanceFamily):
        return {
            "schema": SCHEMA,
            "kind": "family",
            "n": obj.n,
            "k": obj.k,
            "r": obj.r,
            "hypergraphs": [
                {"edges": [{"vertices": list(e), "weight": frac_str(w)} for e, w in h.edges.items()]}
                for h in obj
            ],
        }
    if isinstance(obj, BlockedBipartiteGraph):
        return {
            "schema": SCHEMA,
            "kind": "graph",
            "n": obj.n,
            "k": obj.k,
            "m": obj.m,
            "r": obj.r,
            "right_vertices": [{"block": b, "neighbors": list(nb)} for b, nb in obj.right_vertices],
        }
    if isinstance(obj, VectorFamily):
        return {
            "schema": SCHEMA,
            "kind": "vectors",
            "d": obj.d,
            "vectors": [[frac_str(x) for x in v] for v in obj.vectors],
        }
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def serialize(obj) -> str:
    return dumps(instance_to_doc(obj))


def chain_from_doc(doc) -> Chain:
    _check_schema(doc)
    order = _require(doc, "order", "chain")
    if not isinstance(order, list):
        raise FormatError("'order' must be a list")
    return Chain(tuple(_int(v, "order entry") for v in order))
