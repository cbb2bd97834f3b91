"""Unlabelled reference shapes on vertices 0..k-1, used as isomorphism targets."""

from __future__ import annotations

from typing import Sequence

from .core import LabeledGraph
from .errors import ValidationError


def path(n: int) -> LabeledGraph:
    return LabeledGraph.from_edges(range(n), [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> LabeledGraph:
    if n < 3:
        raise ValidationError("a cycle needs at least three vertices")
    return LabeledGraph.from_edges(range(n), [(i, (i + 1) % n) for i in range(n)])


def fan(n: int) -> LabeledGraph:
    """P_n joined to an apex; the apex is vertex n."""
    return LabeledGraph.from_edges(range(n + 1), [*path(n).edges, *((i, n) for i in range(n))])


def fan_with_handle(n: int) -> LabeledGraph:
    """Fan on P_n with a pendant edge at the apex (n) to vertex n+1."""
    f = fan(n)
    return LabeledGraph.from_edges(range(n + 2), [*f.edges, (n, n + 1)])


def windmill(m: int) -> LabeledGraph:
    """m triangles sharing vertex 0."""
    edges = []
    for i in range(m):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (0, b), (a, b)]
    return LabeledGraph.from_edges(range(2 * m + 1), edges)


def stars_with_apex(sizes: Sequence[int]) -> LabeledGraph:
    """Disjoint stars K_{1,n_i} joined to one apex (vertex 0)."""
    edges, nxt, verts = [], 1, [0]
    for n in sizes:
        center = nxt
        leaves = list(range(nxt + 1, nxt + 1 + n))
        nxt += n + 1
        verts += [center, *leaves]
        edges += [(center, x) for x in leaves]
    edges += [(0, v) for v in verts[1:]]
    return LabeledGraph.from_edges(verts, edges)


def banana_tree(sizes: Sequence[int]) -> LabeledGraph:
    """Stars K_{1,n_i} plus a root (vertex 0) joined to one leaf of each."""
    edges, nxt, verts = [], 1, [0]
    for n in sizes:
        center = nxt
        leaves = list(range(nxt + 1, nxt + 1 + n))
        nxt += n + 1
        verts += [center, *leaves]
        edges += [(center, x) for x in leaves]
        edges.append((0, leaves[0]))
    return LabeledGraph.from_edges(verts, edges)


def triangular_book(pages: int) -> LabeledGraph:
    """Spine 0-1 with ``pages`` triangles on it."""
    edges = [(0, 1)] + [(s, 2 + p) for p in range(pages) for s in (0, 1)]
    return LabeledGraph.from_edges(range(pages + 2), edges)


def triangular_book_bookmark(pages: int) -> LabeledGraph:
    """Triangular book plus a pendant edge at spine vertex 0."""
    b = triangular_book(pages)
    return LabeledGraph.from_edges(range(pages + 3), [*b.edges, (0, pages + 2)])


def star(k: int) -> LabeledGraph:
    return LabeledGraph.from_edges(range(k + 1), [(0, i) for i in range(1, k + 1)])
