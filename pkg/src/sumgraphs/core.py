"""Graph data model, sum-graph construction, the interval families and I/O.

Vertices are identified by their integer label. Edges are stored as sorted
``(min, max)`` pairs so every output is deterministic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

from .errors import ParseError, ValidationError

FAMILY_KINDS = ("Gn", "G0n", "Gmn", "GnComplement", "G0nComplement", "GmnComplement")

Edge = tuple[int, int]


def label_set(labels: Iterable[int]) -> tuple[int, ...]:
    """Validate and sort a collection of labels; duplicates are rejected."""
    seq = list(labels)
    for x in seq:
        if isinstance(x, bool) or not isinstance(x, int):
            raise ValidationError(f"label {x!r} is not an integer")
    out = tuple(sorted(seq))
    for a, b in zip(out, out[1:]):
        if a == b:
            raise ValidationError(f"duplicate label {a}")
    return out


def _edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class LabeledGraph:
    labels: tuple[int, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        labels = label_set(self.labels)
        present = set(labels)
        norm = set()
        for e in self.edges:
            a, b = e
            if a == b:
                raise ValidationError(f"self-loop at {a}")
            if a not in present or b not in present:
                raise ValidationError(f"edge {e} has an endpoint outside the label set")
            norm.add(_edge(a, b))
        if len(norm) != len(self.edges):
            raise ValidationError("duplicate edge")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @classmethod
    def from_edges(cls, labels: Iterable[int], edges: Iterable[Edge]) -> "LabeledGraph":
        return cls(tuple(labels), tuple({_edge(a, b) for a, b in edges}))

    @property
    def order(self) -> int:
        return len(self.labels)

    @property
    def size(self) -> int:
        return len(self.edges)

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def has_edge(self, a: int, b: int) -> bool:
        return _edge(a, b) in self.edge_set()

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.labels}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def degrees(self) -> dict[int, int]:
        return {v: len(nb) for v, nb in self.adjacency().items()}

    def max_degree(self) -> int:
        return max(self.degrees().values(), default=0)

    def induced(self, keep: Iterable[int]) -> "LabeledGraph":
        ks = set(keep)
        return LabeledGraph(
            tuple(v for v in self.labels if v in ks),
            tuple(e for e in self.edges if e[0] in ks and e[1] in ks),
        )

    def remove_vertices(self, drop: Iterable[int]) -> "LabeledGraph":
        ds = set(drop)
        return self.induced(v for v in self.labels if v not in ds)

    def remove_edges(self, drop: Iterable[Edge]) -> "LabeledGraph":
        ds = {_edge(a, b) for a, b in drop}
        return LabeledGraph(self.labels, tuple(e for e in self.edges if e not in ds))

    def relabel(self, mapping: Mapping[int, int]) -> "LabeledGraph":
        return LabeledGraph.from_edges(
            (mapping[v] for v in self.labels),
            ((mapping[a], mapping[b]) for a, b in self.edges),
        )

    def is_connected(self) -> bool:
        if not self.labels:
            return True
        adj = self.adjacency()
        seen = {self.labels[0]}
        stack = [self.labels[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.order


def build_sum_graph(labels: Iterable[int]) -> LabeledGraph:
    """G+(S): ``{a, b}`` is an edge iff ``a != b`` and ``a + b`` is in S."""
    S = label_set(labels)
    present = set(S)
    edges = tuple((a, b) for a, b in combinations(S, 2) if a + b in present)
    return LabeledGraph(S, edges)


def complement(G: LabeledGraph) -> LabeledGraph:
    have = G.edge_set()
    return LabeledGraph(G.labels, tuple(e for e in combinations(G.labels, 2) if e not in have))


def complete_graph(labels: Iterable[int]) -> LabeledGraph:
    S = label_set(labels)
    return LabeledGraph(S, tuple(combinations(S, 2)))


def graph_join(A: LabeledGraph, B: LabeledGraph) -> LabeledGraph:
    overlap = set(A.labels) & set(B.labels)
    if overlap:
        raise ValidationError(f"join operands share labels {sorted(overlap)}")
    cross = ((a, b) for a in A.labels for b in B.labels)
    return LabeledGraph.from_edges(A.labels + B.labels, [*A.edges, *B.edges, *cross])


def graph_union(A: LabeledGraph, B: LabeledGraph) -> LabeledGraph:
    """Disjoint union; labels must not overlap."""
    overlap = set(A.labels) & set(B.labels)
    if overlap:
        raise ValidationError(f"union operands share labels {sorted(overlap)}")
    return LabeledGraph(A.labels + B.labels, A.edges + B.edges)


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int
    m: int = 0

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValidationError(f"unknown family kind {self.kind!r}")
        for name in ("n", "m"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise ValidationError(f"{name} must be a non-negative integer")
        if self.n < 1:
            raise ValidationError("n must be at least 1")
        if self.base == "Gmn" and self.m < 1:
            raise ValidationError("m must be at least 1 for Gmn")

    @property
    def base(self) -> str:
        return self.kind.removesuffix("Complement")

    @property
    def is_complement(self) -> bool:
        return self.kind.endswith("Complement")

    def label_range(self) -> tuple[int, int]:
        lo = {"Gn": 1, "G0n": 0, "Gmn": -self.m}[self.base]
        return lo, self.n

    @property
    def order(self) -> int:
        lo, hi = self.label_range()
        return hi - lo + 1

    def primal(self) -> "FamilySpec":
        return FamilySpec(self.base, self.n, self.m)

    def name(self) -> str:
        body = {"Gn": f"G_{self.n}", "G0n": f"G_0,{self.n}", "Gmn": f"G_-{self.m},{self.n}"}[self.base]
        return body + ("^c" if self.is_complement else "")


def Gn(n: int) -> FamilySpec:
    return FamilySpec("Gn", n)


def G0n(n: int) -> FamilySpec:
    return FamilySpec("G0n", n)


def Gmn(m: int, n: int) -> FamilySpec:
    return FamilySpec("Gmn", n, m)


def generate(spec: FamilySpec) -> LabeledGraph:
    lo, hi = spec.label_range()
    G = build_sum_graph(range(lo, hi + 1))
    return complement(G) if spec.is_complement else G


# --- serialization -----------------------------------------------------------


def to_json(G: LabeledGraph) -> str:
    return json.dumps({"labels": list(G.labels), "edges": [list(e) for e in G.edges]}, separators=(",", ":"))


def to_dot(G: LabeledGraph, name: str = "G") -> str:
    def node(v: int) -> str:
        return f'"{v}"' if v < 0 else str(v)

    lines = [f"graph {name} {{"]
    lines += [f"  {node(v)};" for v in G.labels]
    lines += [f"  {node(a)} -- {node(b)};" for a, b in G.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def serialize(G: LabeledGraph, fmt: str = "json") -> bytes:
    fmt = fmt.lower()
    if fmt == "json":
        return to_json(G).encode()
    if fmt == "dot":
        return to_dot(G).encode()
    raise ValidationError(f"unknown format {fmt!r}")


def _expect_int(x, where: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ParseError(f"expected integer, got {x!r}", where)
    return x


def parse(data: bytes | str, fmt: str = "json") -> LabeledGraph:
    if fmt.lower() != "json":
        raise ValidationError("only JSON can be parsed; DOT is export-only")
    text = data.decode() if isinstance(data, (bytes, bytearray)) else data
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno} column {exc.colno} (char {exc.pos})") from None
    if not isinstance(obj, dict):
        raise ParseError("top level must be an object", "$")
    extra = set(obj) - {"labels", "edges"}
    if extra:
        raise ParseError(f"unexpected keys {sorted(extra)}", "$")
    if not isinstance(obj.get("labels"), list):
        raise ParseError("'labels' must be an array", "$.labels")
    if not isinstance(obj.get("edges"), list):
        raise ParseError("'edges' must be an array", "$.edges")
    labels = [_expect_int(x, f"$.labels[{i}]") for i, x in enumerate(obj["labels"])]
    edges = []
    for i, e in enumerate(obj["edges"]):
        if not isinstance(e, list) or len(e) != 2:
            raise ParseError("edge must be a two-element array", f"$.edges[{i}]")
        edges.append((_expect_int(e[0], f"$.edges[{i}][0]"), _expect_int(e[1], f"$.edges[{i}][1]")))
    try:
        return LabeledGraph(tuple(labels), tuple(edges))
    except ValidationError as exc:
        raise ParseError(str(exc), "$") from None
