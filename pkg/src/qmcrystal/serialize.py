"""JSON and DOT serialization of crystals and verification reports.

Graph documents (schema version ``"1"``) have the key order::

    {"schema_version", "cartan_type", "highest_weight", "nodes", "edges"}

with nodes ``{"id", "weight", "eps", "phi"}`` in id order and edges
``{"src", "label", "dst"}`` sorted by ``(src, label)``.  All weights are integer
vectors in fundamental coordinates.  Output is UTF-8 with one node or edge per
line and a trailing newline, so equal graphs always give equal bytes.
"""
from __future__ import annotations

import dataclasses
import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Optional

from .axioms import crystal_axiom_violations
from .cartan import CartanError, CartanType, Weight
from .paths import CrystalGraph, CrystalInvariantError, CrystalNode
from .tensor import ComponentResult, TensorNode

__all__ = [
    "SCHEMA_VERSION",
    "SchemaError",
    "DotOptions",
    "DOT_PALETTE",
    "emit_graph_json",
    "parse_graph_json",
    "emit_graph_dot",
    "emit_component_dot",
    "report_document",
    "emit_report_json",
    "to_jsonable",
    "validate_graph",
]

SCHEMA_VERSION = "1"
REPORT_KINDS = ("lemma", "fusion", "quasiminuscule", "paperdata", "sweep", "component")
DOT_PALETTE = ("blue", "red", "darkgreen", "orange", "purple", "brown", "magenta", "cyan")


class SchemaError(ValueError):
    """The document does not follow the graph schema."""


def _dumps(obj) -> bytes:
    return (json.dumps(obj, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def _ints(w: Weight) -> list[int]:
    return list(w.to_ints())


def graph_document(g: CrystalGraph) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "cartan_type": str(g.cartan_type),
        "highest_weight": _ints(g.highest_weight),
        "nodes": [{"id": b.id, "weight": _ints(b.weight), "eps": list(b.eps), "phi": list(b.phi)}
                  for b in g.nodes],
        "edges": [{"src": s, "label": i, "dst": d} for s, i, d in g.sorted_edges()],
    }


def emit_graph_json(g: CrystalGraph) -> bytes:
    doc = graph_document(g)
    compact = lambda v: json.dumps(v, ensure_ascii=False)  # noqa: E731
    lines = ["{"]
    for key in ("schema_version", "cartan_type", "highest_weight"):
        lines.append(f'  "{key}": {compact(doc[key])},')
    for key in ("nodes", "edges"):
        recs = doc[key]
        tail = "," if key == "nodes" else ""
        if not recs:
            lines.append(f'  "{key}": []{tail}')
            continue
        lines.append(f'  "{key}": [')
        lines.extend(f"    {compact(r)}" + ("," if k < len(recs) - 1 else "")
                     for k, r in enumerate(recs))
        lines.append(f"  ]{tail}")
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def _require(cond: bool, msg: str):
    if not cond:
        raise SchemaError(msg)


def _int_list(value, length: int, what: str) -> tuple[int, ...]:
    _require(isinstance(value, list) and len(value) == length
             and all(isinstance(x, int) and not isinstance(x, bool) for x in value),
             f"{what} must be a list of {length} integers")
    return tuple(value)


def parse_graph_json(data: bytes | str) -> CrystalGraph:
    """Rebuild a :class:`CrystalGraph`; schema problems raise :class:`SchemaError`,
    crystal-axiom violations raise :class:`CrystalInvariantError`."""
    try:
        doc = json.loads(data)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise SchemaError(f"not valid JSON: {exc}") from exc
    _require(isinstance(doc, dict), "document must be an object")
    keys = ["schema_version", "cartan_type", "highest_weight", "nodes", "edges"]
    _require(list(doc) == keys, f"document keys must be {keys}")
    _require(doc["schema_version"] == SCHEMA_VERSION,
             f"unsupported schema_version {doc['schema_version']!r}")
    try:
        ct = CartanType.parse(doc["cartan_type"])
    except (CartanError, TypeError) as exc:
        raise SchemaError(str(exc)) from exc
    n = ct.rank
    hw = Weight(_int_list(doc["highest_weight"], n, "highest_weight"))
    _require(isinstance(doc["nodes"], list) and doc["nodes"], "nodes must be a non-empty list")
    nodes = []
    for k, rec in enumerate(doc["nodes"]):
        _require(isinstance(rec, dict) and list(rec) == ["id", "weight", "eps", "phi"],
                 f"node {k} must have keys id, weight, eps, phi")
        _require(rec["id"] == k, f"node ids must be dense and ordered (got {rec['id']} at {k})")
        nodes.append(CrystalNode(k, Weight(_int_list(rec["weight"], n, "weight")),
                                 _int_list(rec["eps"], n, "eps"), _int_list(rec["phi"], n, "phi")))
    _require(isinstance(doc["edges"], list), "edges must be a list")
    f_edges = {}
    for rec in doc["edges"]:
        _require(isinstance(rec, dict) and list(rec) == ["src", "label", "dst"],
                 "edges must have keys src, label, dst")
        s, i, d = rec["src"], rec["label"], rec["dst"]
        _require(all(isinstance(v, int) for v in (s, i, d)), "edge fields must be integers")
        _require(0 <= s < len(nodes) and 0 <= d < len(nodes) and 1 <= i <= n,
                 f"edge {s}-{i}->{d} out of range")
        _require((s, i) not in f_edges, f"duplicate edge from {s} with label {i}")
        f_edges[(s, i)] = d
    order = [(r["src"], r["label"]) for r in doc["edges"]]
    _require(order == sorted(order), "edges must be sorted by (src, label)")
    g = CrystalGraph(ct, hw, nodes, f_edges, 0)
    validate_graph(g)
    return g


def validate_graph(g: CrystalGraph):
    """Raise :class:`CrystalInvariantError` unless ``g`` satisfies the crystal axioms."""
    problems = crystal_axiom_violations(g, weyl=False)
    if problems:
        raise CrystalInvariantError("; ".join(problems[:5]))


@dataclass
class DotOptions:
    name: Optional[str] = None
    labels: Optional[list[str]] = None
    show_weights: bool = True
    highlight: Iterable[int] = field(default_factory=tuple)
    highlight_zero_weight: bool = False


def _quote(s: str) -> str:
    # backslash escapes such as \n are kept for the renderer
    return '"' + s.replace('"', '\\"') + '"'


def emit_graph_dot(g: CrystalGraph, options: Optional[DotOptions] = None) -> bytes:
    """DOT digraph; node ``k`` is labelled ``b{k+1}`` and edge colour cycles
    :data:`DOT_PALETTE` by operator index (``f_1`` blue, ``f_2`` red, ...)."""
    opts = options or DotOptions()
    name = opts.name or f"B({','.join(map(str, g.highest_weight.to_ints()))}) {g.cartan_type}"
    flagged = set(opts.highlight)
    if opts.highlight_zero_weight:
        flagged |= {b.id for b in g.nodes if b.weight.is_zero()}
    lines = [f"digraph {_quote(name)} {{", "  node [shape=box];"]
    for b in g.nodes:
        label = opts.labels[b.id] if opts.labels else f"b{b.id + 1}"
        if opts.show_weights:
            label += "\\n(" + ",".join(str(x) for x in b.weight.to_ints()) + ")"
        attrs = f"label={_quote(label)}"
        if b.id in flagged:
            attrs += ", style=filled, fillcolor=yellow"
        lines.append(f"  n{b.id} [{attrs}];")
    for s, i, d in g.sorted_edges():
        color = DOT_PALETTE[(i - 1) % len(DOT_PALETTE)]
        lines.append(f'  n{s} -> n{d} [label="{i}", color={color}, fontcolor={color}];')
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def emit_component_dot(comp: ComponentResult, cartan_type, options: Optional[DotOptions] = None) -> bytes:
    """DOT for a tensor component, nodes labelled by their factor pair ``b_j (x) b_k``."""
    opts = options or DotOptions(highlight_zero_weight=True)
    if opts.labels is None:
        opts = dataclasses.replace(
            opts, labels=[f"b{x.left + 1} ⊗ b{x.right + 1}" for x in comp.members])
    if opts.name is None:
        opts = dataclasses.replace(opts, name=f"component of b{comp.seed.left + 1} ⊗ b{comp.seed.right + 1}")
    return emit_graph_dot(comp.as_graph(CartanType.parse(cartan_type)), opts)


def to_jsonable(obj) -> Any:
    """Convert reports (dataclasses, weights, enums, fractions) to plain JSON values."""
    if isinstance(obj, Weight):
        return [int(x) if x.denominator == 1 else str(x) for x in obj]
    if isinstance(obj, TensorNode):
        return [obj.left, obj.right]
    if isinstance(obj, Fraction):
        return int(obj) if obj.denominator == 1 else str(obj)
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, CartanType):
        return str(obj)
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        out = {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)
               if f.repr}
        for prop in ("passed", "hypothesis_holds"):
            if isinstance(getattr(type(obj), prop, None), property):
                out[prop] = getattr(obj, prop)
        return out
    if isinstance(obj, dict):
        return {str(k) if not isinstance(k, str) else k: to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        return [to_jsonable(v) for v in obj]
    return obj


def report_document(kind: str, payload, passed: bool, failures: Optional[list] = None) -> dict:
    if kind not in REPORT_KINDS:
        raise ValueError(f"unknown report kind {kind!r}")
    failures = list(failures or [])
    if not passed and not failures:
        raise ValueError("a failing report must itemize at least one failure")
    return {"schema_version": SCHEMA_VERSION, "kind": kind, "pass": passed,
            "failures": to_jsonable(failures), "payload": to_jsonable(payload)}


def emit_report_json(kind: str, payload, passed: bool, failures: Optional[list] = None) -> bytes:
    return _dumps(report_document(kind, payload, passed, failures))
