"""Graph file formats: DIMACS ``.col`` (1-based) and JSON adjacency lists (0-based).

JSON document schemas for everything the library emits live in ``SCHEMAS``.
"""

from __future__ import annotations

import json

from .graph import Graph


class ParseError(ValueError):
    pass


def read_dimacs(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        parts = line.split()
        try:
            if parts[0] == "p":
                if n is not None or len(parts) != 4 or parts[1] not in ("edge", "col"):
                    raise ParseError(f"line {lineno}: bad problem line")
                n = int(parts[2])
                int(parts[3])
            elif parts[0] == "e":
                if n is None or len(parts) != 3:
                    raise ParseError(f"line {lineno}: bad edge line")
                u, v = int(parts[1]) - 1, int(parts[2]) - 1
                if not (0 <= u < n and 0 <= v < n) or u == v:
                    raise ParseError(f"line {lineno}: edge ({u + 1}, {v + 1}) invalid for n={n}")
                edges.append((u, v))
            else:
                raise ParseError(f"line {lineno}: unknown record {parts[0]!r}")
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"line {lineno}: {exc}") from None
    if n is None:
        raise ParseError("missing 'p edge n m' line")
    return Graph.from_edges(n, edges)


def write_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "adjacency": g.adjacency_lists()}


def graph_from_json(d) -> Graph:
    if isinstance(d, list):
        d = {"n": len(d), "adjacency": d}
    try:
        adjacency = d["adjacency"]
        if d["n"] != len(adjacency):
            raise ParseError("n disagrees with the adjacency list count")
        return Graph.from_adjacency_lists(adjacency)
    except (KeyError, TypeError) as exc:
        raise ParseError(f"not a graph document: {exc}") from None
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc)) from None


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True) + "\n"


def load_graph_text(text: str, name: str = "") -> Graph:
    """Parse DIMACS or JSON, chosen by file suffix or, failing that, by content."""
    if name.endswith(".json") or text.lstrip().startswith(("{", "[")):
        try:
            return graph_from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
    return read_dimacs(text)


_INTS = {"type": "array", "items": {"type": "integer", "minimum": 0}}
_ADJ = {"type": "array", "items": _INTS}

SCHEMAS = {
    "graph": {
        "type": "object",
        "required": ["n", "adjacency"],
        "properties": {"n": {"type": "integer", "minimum": 0}, "adjacency": _ADJ},
        "additionalProperties": False,
    },
    "blowup_map": {
        "type": "object",
        "required": ["skeleton", "multiplicity", "assignment"],
        "properties": {"skeleton": _ADJ, "multiplicity": _INTS, "assignment": _INTS},
        "additionalProperties": False,
    },
    "certificate": {
        "type": "object",
        "required": ["colors", "palette", "used", "omega", "p", "q", "bound", "trace"],
        "properties": {
            "colors": {"type": "array", "items": {"type": "integer", "minimum": 1}},
            "palette": {"type": "integer", "minimum": 0},
            "used": {"type": "integer", "minimum": 0},
            "omega": {"type": "integer", "minimum": 0},
            "p": {"type": "integer", "minimum": 1},
            "q": {"type": "integer", "minimum": 1},
            "bound": {"type": "integer", "minimum": 0},
            "base_bound_exceeded": {"type": "boolean"},
            "trace": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["depth", "kind", "omega", "n", "budget"],
                    "properties": {"kind": {"enum": ["base", "split", "perfect"]}},
                },
            },
        },
    },
    "ear_step": {
        "type": "object",
        "required": ["hole", "x", "y", "z", "ear_internal_count", "y_neighbor_positions"],
        "properties": {
            "hole": _INTS,
            "x": {"type": "integer"},
            "y": {"type": "integer"},
            "z": {"type": "integer"},
            "ear_internal_count": {"type": "integer", "minimum": 1},
            "y_neighbor_positions": _INTS,
        },
    },
    "corpus": {
        "type": "array",
        "items": {
            "type": "object",
            "required": ["initial_hole", "steps", "graph"],
            "properties": {
                "initial_hole": {"type": "integer", "minimum": 4},
                "steps": {"type": "array", "items": {"$ref": "#/$defs/ear_step"}},
                "graph": _ADJ,
            },
        },
    },
    "class_report": {
        "type": "object",
        "required": ["triangle_free", "cap_free", "even_hole_free", "five_hole_free", "is_cube", "witnesses"],
        "properties": {k: {"type": "boolean"} for k in
                       ["triangle_free", "cap_free", "even_hole_free", "five_hole_free", "is_cube"]},
    },
    "verification_report": {
        "type": "object",
        "required": ["proper", "within_bound", "omega_confirmed", "structural_omega", "details"],
    },
    "oracle": {
        "type": "object",
        "required": ["omega", "alpha", "chi"],
        "properties": {
            k: {
                "type": "object",
                "required": ["value", "witness"],
                "properties": {"value": {"type": "integer"}, "witness": _INTS},
            }
            for k in ["omega", "alpha", "chi"]
        },
    },
    "tightness_table": {
        "type": "object",
        "required": ["rows", "truncated"],
        "properties": {
            "rows": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["q", "k", "n", "omega", "exact_chi", "bound", "tight"],
                },
            },
            "truncated": {"type": "boolean"},
        },
    },
}
SCHEMAS["corpus"]["$defs"] = {"ear_step": SCHEMAS["ear_step"]}
