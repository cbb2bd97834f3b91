"""Constructive colourings of the interval sum graphs and edge-sum classes.

Colour indices are 1-based so that class ``k`` corresponds to colour c_k in
the published tables.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Mapping

from .core import Edge, FamilySpec, LabeledGraph, generate
from .errors import ValidationError
from .oracle import chromatic_index_bf, verify_sum_labeling


def _ceil_half(x: int) -> int:
    return (x + 1) // 2


@dataclass(frozen=True)
class ColoringAssignment:
    """A total colouring of vertices (keys are labels) or edges (keys are pairs)."""

    target: str
    colors: Mapping
    scheme: str

    def __post_init__(self):
        if self.target not in ("vertex", "edge"):
            raise ValidationError("target must be 'vertex' or 'edge'")
        used = sorted(set(self.colors.values()))
        if used != list(range(1, len(used) + 1)):
            raise ValidationError("colour indices must be contiguous from 1")

    @property
    def num_colors(self) -> int:
        return len(set(self.colors.values()))

    def classes(self) -> dict[int, list]:
        out: dict[int, list] = defaultdict(list)
        for key, c in self.colors.items():
            out[c].append(key)
        return {c: sorted(v) for c, v in sorted(out.items())}

    def as_dict(self) -> dict:
        if self.target == "vertex":
            colors = {str(v): c for v, c in sorted(self.colors.items())}
        else:
            colors = [[a, b, c] for (a, b), c in sorted(self.colors.items())]
        return {"target": self.target, "scheme": self.scheme, "num_colors": self.num_colors, "colors": colors}


def _primal_only(family: FamilySpec) -> None:
    if not isinstance(family, FamilySpec):
        raise ValidationError("expected a FamilySpec")
    if family.is_complement:
        raise ValidationError("colour constructions exist only for Gn, G0n and Gmn")


# --- vertex colouring --------------------------------------------------------


def _side_colors(n: int, sign: int, offset: int) -> dict[int, int]:
    # vertex j <= ceil(n/2) is a clique member; j beyond reuses the colour of n+1-j
    h = _ceil_half(n)
    out = {}
    for j in range(1, n + 1):
        base = j if j <= h else n + 1 - j
        out[sign * j] = offset + base
    return out


def vertex_color(family: FamilySpec) -> ColoringAssignment:
    """Proper colouring with exactly omega colours (the families are perfect)."""
    _primal_only(family)
    n = family.n
    colors = _side_colors(n, 1, 0)
    if family.base in ("G0n", "Gmn"):
        zero = _ceil_half(n) + 1
        colors[0] = zero
        if family.base == "Gmn":
            colors.update(_side_colors(family.m, -1, zero))
    return ColoringAssignment("vertex", colors, f"clique-reuse:{family.name()}")


# --- edge colouring ----------------------------------------------------------


def gmn_edge_color_index(r: int, n: int, a: int, b: int) -> int:
    """Colour of edge {a, b} in G_{-r,n} under the seven-branch assignment."""
    a, b = min(a, b), max(a, b)
    if not (-r <= a < b <= n) or not (-r <= a + b <= n):
        raise ValidationError(f"({a}, {b}) is not an edge of G_-{r},{n}")
    h = r // 2
    if a == 0:
        return b
    if b == 0:
        return -a + n
    if a > 0:
        return a + b + r
    if b < 0:
        return -a - b + n
    i, j = -a, b
    if j < n:
        return i + j
    if i <= h:
        return 2 * i + n
    if n > _ceil_half(r):
        return i - h
    if i <= h + n - 1:
        return i - h
    return 2 * (i - h) - n + 1


def _check_distinct_at_vertices(G: LabeledGraph, colors: Mapping[Edge, int]) -> None:
    seen = set()
    for (a, b), c in colors.items():
        for v in (a, b):
            assert (v, c) not in seen, f"colour {c} repeats at vertex {v}"
            seen.add((v, c))


def edge_color(family: FamilySpec) -> ColoringAssignment:
    """Class-1 edge colouring with Delta colours.

    G_{-1,1} is a triangle and needs three colours; it gets its three
    edge-sum classes. For G_{-r,1} with odd r >= 3 the branch table is not
    proper, so the colouring of the isomorphic G_{-1,r} is pulled back
    through x -> -x.
    """
    _primal_only(family)
    G = generate(family)
    n = family.n
    if family.base == "Gn":
        colors = {e: e[0] + e[1] - 2 for e in G.edges}
        scheme = "sum-2"
    elif family.base == "G0n":
        colors = {e: e[0] + e[1] for e in G.edges}
        scheme = "sum"
    elif family.m == 1 and n == 1:
        colors = {(-1, 0): 1, (0, 1): 2, (-1, 1): 3}
        scheme = "triangle"
    elif n == 1 and family.m % 2 == 1:
        # the printed table clashes at v_{-r} here (v0v_{-r} and v_{-r}v_1 share
        # c_{r+1}); colour the mirror image G_{-1,r} instead
        r = family.m
        colors = {e: gmn_edge_color_index(1, r, -e[1], -e[0]) for e in G.edges}
        scheme = "seven-branch-mirror"
    else:
        r = family.m
        colors = {e: gmn_edge_color_index(r, n, *e) for e in G.edges}
        scheme = "seven-branch"
    if __debug__:
        _check_distinct_at_vertices(G, colors)
    return ColoringAssignment("edge", colors, f"{scheme}:{family.name()}")


# --- edge-sum classes --------------------------------------------------------


@dataclass(frozen=True)
class EdgeSumPartition:
    """Edges grouped by endpoint sum; keys cover every label, classes may be empty."""

    classes: Mapping[int, frozenset] = field(default_factory=dict)

    @property
    def nonempty(self) -> dict[int, frozenset]:
        return {k: v for k, v in self.classes.items() if v}

    @property
    def chi_double_prime(self) -> int:
        return len(self.nonempty)

    def as_dict(self) -> dict:
        return {
            "chi_double_prime": self.chi_double_prime,
            "classes": {str(k): sorted(map(list, v)) for k, v in sorted(self.nonempty.items())},
        }


def edge_sum_partition(G: LabeledGraph) -> EdgeSumPartition:
    if not verify_sum_labeling(G):
        raise ValidationError("graph is not the integral sum graph of its labels")
    classes: dict[int, set] = {v: set() for v in G.labels}
    for a, b in G.edges:
        classes[a + b].add((a, b))
    return EdgeSumPartition({k: frozenset(v) for k, v in classes.items()})


def is_edge_sum_perfect(G: LabeledGraph) -> bool:
    """True iff the number of nonempty edge-sum classes equals the exact chromatic index."""
    part = edge_sum_partition(G)
    return part.chi_double_prime == chromatic_index_bf(G)


# --- published tables --------------------------------------------------------


def _v(*pairs: tuple[int, int]) -> list[Edge]:
    return [(min(a, b), max(a, b)) for a, b in pairs]


FIXTURES: dict[str, dict[int, list[Edge]]] = {
    "G13": {
        1: _v((1, 2)),
        2: _v((1, 3)),
        3: _v((1, 4), (2, 3)),
        4: _v((1, 5), (2, 4)),
        5: _v((1, 6), (2, 5), (3, 4)),
        6: _v((1, 7), (2, 6), (3, 5)),
        7: _v((1, 8), (2, 7), (3, 6), (4, 5)),
        8: _v((1, 9), (2, 8), (3, 7), (4, 6)),
        9: _v((1, 10), (2, 9), (3, 8), (4, 7), (5, 6)),
        10: _v((1, 11), (2, 10), (3, 9), (4, 8), (5, 7)),
        11: _v((1, 12), (2, 11), (3, 10), (4, 9), (5, 8), (6, 7)),
    },
    "G-8,3": {
        1: _v((0, 1), (-5, 3)),
        2: _v((0, 2), (-1, 1), (-6, 3)),
        3: _v((0, 3), (-1, 2), (-2, 1)),
        4: _v((0, -1), (-2, 2), (-3, 1), (-7, 3)),
        5: _v((0, -2), (-1, 3), (-3, 2), (-4, 1)),
        6: _v((0, -3), (-1, -2), (-4, 2), (-5, 1), (-8, 3)),
        7: _v((0, -4), (-1, -3), (-2, 3), (-5, 2), (-6, 1)),
        8: _v((0, -5), (-1, -4), (-2, -3), (-6, 2), (-7, 1)),
        9: _v((0, -6), (-1, -5), (-2, -4), (-3, 3), (-7, 2), (-8, 1)),
        10: _v((0, -7), (-1, -6), (-2, -5), (-3, -4), (-8, 2)),
        11: _v((0, -8), (-1, -7), (-2, -6), (-3, -5), (-4, 3), (1, 2)),
    },
}

FIXTURE_FAMILIES = {"G13": FamilySpec("Gn", 13), "G-8,3": FamilySpec("Gmn", 3, 8)}


def compare_fixture(name: str) -> dict:
    """Compare edge_color on the fixture's family against the stored table."""
    if name not in FIXTURES:
        raise ValidationError(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}")
    got = edge_color(FIXTURE_FAMILIES[name]).classes()
    want = {k: sorted(v) for k, v in FIXTURES[name].items()}
    diff = sorted(k for k in set(got) | set(want) if got.get(k) != want.get(k))
    return {"fixture": name, "match": not diff, "differing_classes": diff}


__all__ = [
    "ColoringAssignment", "EdgeSumPartition", "vertex_color", "edge_color", "gmn_edge_color_index",
    "edge_sum_partition", "is_edge_sum_perfect", "FIXTURES", "compare_fixture",
]
