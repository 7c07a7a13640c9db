"""Hypergraphs with an input/output vertex split, adjacency queries and the graph file format.

The file format is a small JSON document::

    {"modulus": 2, "inputs": [0], "outputs": [1, 2, 3],
     "edges": [[1, 2], [1, 2, 3]], "implicit_input_adjacency": true}

Serialization is canonical (fixed key order, ascending vertex lists, edges
sorted lexicographically), so two graphs are equal exactly when their
serialized forms are byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping


class GraphError(ValueError):
    """A graph document or query violates a structural invariant."""


@dataclass(frozen=True)
class Hypergraph:
    inputs: tuple[int, ...]
    outputs: tuple[int, ...]
    edges: tuple[tuple[int, ...], ...]
    implicit_input_adjacency: bool = False
    modulus: int = 2

    def __post_init__(self):
        inputs = _vertex_list(self.inputs, "inputs")
        outputs = _vertex_list(self.outputs, "outputs")
        overlap = set(inputs) & set(outputs)
        if overlap:
            raise GraphError(f"inputs and outputs overlap at {sorted(overlap)}")
        known = set(inputs) | set(outputs)
        edges = []
        seen = set()
        for raw in self.edges:
            edge = tuple(raw)
            if not edge:
                raise GraphError("edge must contain at least one vertex")
            for v in edge:
                if isinstance(v, bool) or not isinstance(v, int):
                    raise GraphError(f"edge {list(edge)} has non-integer vertex {v!r}")
                if v not in known:
                    raise GraphError(f"edge {list(edge)} uses undeclared vertex {v}")
            if len(set(edge)) != len(edge):
                raise GraphError(f"edge {list(edge)} repeats a vertex")
            key = frozenset(edge)
            if key in seen:
                raise GraphError(f"duplicate edge {sorted(edge)}")
            seen.add(key)
            edges.append(tuple(sorted(edge)))
        if isinstance(self.modulus, bool) or not isinstance(self.modulus, int) or self.modulus < 2:
            raise GraphError(f"modulus must be an integer >= 2, got {self.modulus!r}")
        object.__setattr__(self, "inputs", inputs)
        object.__setattr__(self, "outputs", outputs)
        object.__setattr__(self, "edges", tuple(sorted(edges)))
        object.__setattr__(self, "implicit_input_adjacency", bool(self.implicit_input_adjacency))

    @property
    def vertices(self) -> tuple[int, ...]:
        """Inputs followed by outputs; this is also the site order used for states."""
        return self.inputs + self.outputs

    def require(self, *vertices: int):
        known = set(self.vertices)
        for v in vertices:
            if v not in known:
                raise GraphError(f"unknown vertex {v}")

    def state_edges(self) -> tuple[tuple[int, ...], ...]:
        """Edges used to build quantum states: the declared edges plus, when the
        implicit flag is set, a 2-edge for every input/output pair not already
        joined by a declared 2-edge."""
        if not self.implicit_input_adjacency:
            return self.edges
        present = set(self.edges)
        extra = [
            tuple(sorted((x, y)))
            for x in self.inputs
            for y in self.outputs
            if tuple(sorted((x, y))) not in present
        ]
        return tuple(sorted(self.edges + tuple(extra)))

    def to_dict(self) -> dict:
        return {
            "modulus": self.modulus,
            "inputs": list(self.inputs),
            "outputs": list(self.outputs),
            "edges": [list(e) for e in self.edges],
            "implicit_input_adjacency": self.implicit_input_adjacency,
        }


def _vertex_list(values, name) -> tuple[int, ...]:
    out = []
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise GraphError(f"{name} must be non-negative integers, got {v!r}")
        out.append(v)
    if len(set(out)) != len(out):
        raise GraphError(f"{name} contain a repeated vertex")
    return tuple(sorted(out))


@dataclass(frozen=True)
class ErrorConfiguration:
    """Set of output vertices exposed to arbitrary errors."""

    vertices: frozenset[int]

    def __init__(self, vertices: Iterable[int] = ()):
        object.__setattr__(self, "vertices", frozenset(vertices))

    def checked(self, g: Hypergraph) -> "ErrorConfiguration":
        stray = self.vertices - set(g.outputs)
        if stray:
            raise GraphError(f"error vertices {sorted(stray)} are not outputs")
        return self

    def clean(self, g: Hypergraph) -> tuple[int, ...]:
        """The output vertices outside the configuration, ascending."""
        return tuple(y for y in g.outputs if y not in self.vertices)

    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.vertices))

    def __len__(self):
        return len(self.vertices)


_KEYS = ("modulus", "inputs", "outputs", "edges", "implicit_input_adjacency")


def from_dict(doc: Mapping) -> Hypergraph:
    if not isinstance(doc, Mapping):
        raise GraphError("graph document must be a JSON object")
    missing = [k for k in ("inputs", "outputs", "edges") if k not in doc]
    if missing:
        raise GraphError(f"graph document lacks {', '.join(missing)}")
    unknown = sorted(set(doc) - set(_KEYS))
    if unknown:
        raise GraphError(f"graph document has unknown keys {unknown}")
    for key in ("inputs", "outputs", "edges"):
        if not isinstance(doc[key], list):
            raise GraphError(f"{key} must be a list")
    for edge in doc["edges"]:
        if not isinstance(edge, list):
            raise GraphError("each edge must be a list of vertices")
    flag = doc.get("implicit_input_adjacency", False)
    if not isinstance(flag, bool):
        raise GraphError("implicit_input_adjacency must be true or false")
    return Hypergraph(
        inputs=tuple(doc["inputs"]),
        outputs=tuple(doc["outputs"]),
        edges=tuple(tuple(e) for e in doc["edges"]),
        implicit_input_adjacency=flag,
        modulus=doc.get("modulus", 2),
    )


def parse_graph(text: str) -> Hypergraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"graph file is not valid JSON: {exc.msg} at line {exc.lineno}") from None
    return from_dict(doc)


def serialize_graph(g: Hypergraph) -> str:
    return json.dumps(g.to_dict()) + "\n"


def load_graph(path) -> Hypergraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def edge_indicator(vertices: Iterable[int], g: Hypergraph) -> int:
    """1 if the vertex set is a declared edge of ``g``, else 0.

    Implicit input adjacency is not consulted here.
    """
    vs = tuple(vertices)
    if not vs:
        raise GraphError("edges have at least one vertex")
    g.require(*vs)
    return int(tuple(sorted(set(vs))) in set(g.edges) and len(set(vs)) == len(vs))


def neighbors(v: int, g: Hypergraph) -> frozenset[int]:
    g.require(v)
    out: set[int] = set()
    for e in g.edges:
        if v in e:
            out.update(e)
    out.discard(v)
    if g.implicit_input_adjacency:
        if v in g.inputs:
            out.update(g.outputs)
        elif v in g.outputs:
            out.update(g.inputs)
    return frozenset(out)


def neighbor_indicator(x: int, y: int, g: Hypergraph) -> int:
    """1 if ``x`` and ``y`` share an edge (or the implicit input link), else 0."""
    g.require(x, y)
    return int(x in neighbors(y, g))


def neighbor_map(g: Hypergraph) -> dict[int, frozenset[int]]:
    return {v: neighbors(v, g) for v in g.vertices}


def relabel(g: Hypergraph, mapping: Mapping[int, int]) -> Hypergraph:
    """Rename vertices through an injective ``mapping`` defined on every vertex."""
    if len(set(mapping[v] for v in g.vertices)) != len(g.vertices):
        raise GraphError("relabeling must be injective")
    return Hypergraph(
        inputs=tuple(mapping[v] for v in g.inputs),
        outputs=tuple(mapping[v] for v in g.outputs),
        edges=tuple(tuple(mapping[v] for v in e) for e in g.edges),
        implicit_input_adjacency=g.implicit_input_adjacency,
        modulus=g.modulus,
    )


RING_EDGES = (
    (1, 2, 3, 4, 5, 6),
    (4, 5, 6, 7, 8, 9),
    (7, 8, 9, 10, 11, 12),
    (10, 11, 12, 13, 14, 15),
    (1, 2, 3, 13, 14, 15),
)

# Error configurations worked by hand for the ring code, each detected.
RING_CONFIGURATIONS = (
    (1, 2, 3, 4),
    (1, 3, 5, 7),
    (1, 2, 10, 11),
    (1, 2, 9, 10),
    (1, 7, 8, 9),
    (2, 5, 8, 11),
)


def ring_code() -> Hypergraph:
    """15 outputs on a ring of five overlapping 6-edges, one input linked to every output."""
    return Hypergraph(
        inputs=(0,),
        outputs=tuple(range(1, 16)),
        edges=RING_EDGES,
        implicit_input_adjacency=True,
        modulus=2,
    )
