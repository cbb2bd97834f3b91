"""Integral sum labelings for special graph families.

Each labeler produces a label set, builds G+(S) from it and then checks that
the result is exactly the intended graph under the construction's own
vertex-to-label map. An accidental extra sum is reported as a
:class:`ConstructionError` instead of being silently returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import Edge, LabeledGraph, build_sum_graph, label_set
from .errors import ConstructionError, UnsupportedParameterError, ValidationError
from .oracle import verify_sum_labeling


def _realize(labels: Iterable[int], intended: Iterable[Edge], what: str) -> LabeledGraph:
    G = build_sum_graph(labels)
    want = {(min(a, b), max(a, b)) for a, b in intended}
    have = G.edge_set()
    if have != want:
        extra = sorted(have - want)
        missing = sorted(want - have)
        raise ConstructionError(f"{what}: extra edges {extra[:6]}, missing edges {missing[:6]}")
    return G


# --- fan and windmill --------------------------------------------------------


def fan_path_labels(n: int) -> list[int]:
    f = [1, -1]
    while len(f) < n:
        f.append(f[-2] - f[-1])
    return f[:n]


def label_fan(n: int) -> LabeledGraph:
    """P_n * K_1 with apex 0 and path labels 1, -1, 2, -3, 5, ..."""
    if n < 5:
        raise UnsupportedParameterError("the fan labeling needs n >= 5")
    p = fan_path_labels(n)
    edges = [(p[i], p[i + 1]) for i in range(n - 1)] + [(0, x) for x in p]
    return _realize([0, *p], edges, f"fan({n})")


def windmill_pairs(m: int) -> list[tuple[int, int]]:
    """Blade labels: (1,3), (4,8), (-11,12), then v doubles and u = u_prev - v."""
    pairs = [(1, 3), (4, 8), (-11, 12)]
    while len(pairs) < m:
        u, v = pairs[-1]
        v2 = 2 * v
        pairs.append((u - v2, v2))
    return pairs[:m]


def label_windmill(m: int) -> LabeledGraph:
    """m triangles sharing the vertex labelled 0.

    The seed pairs only close up from three blades on (1+3 and 4+8 need
    labels from later blades), so m = 1 and m = 2 use K3 = {-1, 0, 1} and
    its amalgamation with a scaled copy.
    """
    if m < 1:
        raise ValidationError("m must be at least 1")
    if m <= 2:
        k3 = _realize([-1, 0, 1], [(-1, 0), (0, 1), (-1, 1)], "K3")
        return amalgamate([k3] * m)
    pairs = windmill_pairs(m)
    labels = [0] + [x for pr in pairs for x in pr]
    edges = [e for u, v in pairs for e in ((0, u), (0, v), (u, v))]
    return _realize(labels, edges, f"windmill({m})")


# --- stars with an apex ------------------------------------------------------


@dataclass(frozen=True)
class TreeShape:
    star_sizes: tuple[int, ...]
    variant: str = "union_stars_apex"

    def __post_init__(self):
        sizes = tuple(self.star_sizes)
        if not sizes:
            raise ValidationError("a tree shape needs at least one star")
        if any(isinstance(k, bool) or not isinstance(k, int) or k < 1 for k in sizes):
            raise ValidationError("star sizes must be positive integers")
        if list(sizes) != sorted(sizes):
            raise ValidationError("star sizes must be ascending")
        if self.variant not in ("union_stars_apex", "banana"):
            raise ValidationError(f"unknown variant {self.variant!r}")
        object.__setattr__(self, "star_sizes", sizes)


def _stars_labels(sizes: Sequence[int]) -> list[tuple[int, list[int]]]:
    """(center, leaves) per star following the multiplier recurrence."""
    t = len(sizes)
    out = [(2, [2 * j - 1 for j in range(1, sizes[0] + 1)])]
    first_leaf = 2 * sizes[0] + 1
    for i in range(1, t):
        n = sizes[i]
        if i < t - 1:
            center = 2 * first_leaf
            leaves = [(2 * j - 1) * first_leaf for j in range(1, n + 1)]
            nxt = (2 * n + 1) * first_leaf
        else:
            center = 1 - first_leaf
            leaves = [first_leaf - (j - 1) * center for j in range(1, n + 1)]
            nxt = None
        out.append((center, leaves))
        first_leaf = nxt
    return out


def label_union_stars_apex(shape: TreeShape | Sequence[int]) -> LabeledGraph:
    """(K_{1,n_1} u ... u K_{1,n_t}) * K_1 with the apex labelled 0.

    The recurrence starts from a star with at least two leaves; when the
    smallest star is a single edge, the largest star is moved to the front.
    All-singleton shapes are windmills.
    A single star with three or more leaves has two dominating vertices and
    is not an integral sum graph, so it is rejected.
    """
    if not isinstance(shape, TreeShape):
        shape = TreeShape(tuple(sorted(shape)))
    sizes = list(shape.star_sizes)
    if len(sizes) == 1:
        n = sizes[0]
        if n > 2:
            raise UnsupportedParameterError(
                "K_{1,n} * K_1 with n >= 3 has two full-degree vertices and no integral sum labeling"
            )
        # G+([-1, n]): -1 is the centre, 0 the apex
        leaves = list(range(1, n + 1))
        edges = [(-1, 0)] + [(-1, x) for x in leaves] + [(0, x) for x in leaves]
        return _realize([-1, 0, *leaves], edges, f"stars{tuple(sizes)}")
    if max(sizes) == 1:
        return label_windmill(len(sizes))
    order = sizes if sizes[0] >= 2 else [sizes[-1], *sizes[:-1]]
    stars = _stars_labels(order)
    labels = [0]
    edges: list[Edge] = []
    for center, leaves in stars:
        labels += [center, *leaves]
        edges += [(center, x) for x in leaves]
    edges += [(0, x) for x in labels[1:]]
    return _realize(labels, edges, f"stars{tuple(sizes)}")


# --- banana tree -------------------------------------------------------------


def _banana_labels(sizes: Sequence[int], x: int, y: int) -> tuple[int, list[tuple[int, list[int]]]]:
    t = len(sizes)
    stars: list[tuple[int, list[int]]] = []
    v = x + y
    stars.append((v, [y + j * v for j in range(sizes[0])]))
    for i in range(1, t):
        prev_center, prev_leaves = stars[-1]
        u1 = prev_center + prev_leaves[-1]
        n = sizes[i]
        if i < t - 1:
            v = x + u1
            stars.append((v, [u1 + j * v for j in range(n)]))
        else:
            v = y - u1
            leaves = [u1]
            if n >= 2:
                leaves.append(x + u1)
            while len(leaves) < n:
                leaves.append(leaves[-1] - v)
            stars.append((v, leaves))
    return x, stars


def _banana_fallback(sizes: Sequence[int]) -> tuple[int, list[tuple[int, list[int]]]] | None:
    """Fixed labelings for the shapes the recurrence cannot reach.

    Returns (root, [(center, leaves), ...]) with the root joined to leaves[0]
    of every star, or None when the recurrence applies.
    """
    t = len(sizes)
    if t == 1:
        n = sizes[0]
        if n == 1:
            return 2, [(-1, [0])]
        return n - 1, [(-1, list(range(n, 2 * n)))]
    if max(sizes) == 1:
        # root C = 3 * 2^(t-2); every witness lands in the next star or on C
        c = 3 * 2 ** (t - 2)
        stars = [(c + 2 ** i, [2 ** i]) for i in range(t - 2)]
        stars += [(2 ** (t - 1), [2 ** (t - 2)]), (2 ** t, [-(2 ** (t - 1))])]
        return c, stars
    if t == 2 and sizes[0] == 1 and sizes[1] >= 3:
        # the recurrence forces v_2 = -v_1 here, which adds edges
        n = sizes[1]
        leaves = list(range(n + 3, 2 * n + 2)) + [2 * n + 3]
        return n, [(n + 2, [n + 1]), (-3, leaves)]
    return None


def label_banana_tree(shape: TreeShape | Sequence[int], x: int, y: int) -> LabeledGraph:
    """Banana tree with root label x and first leaf y (requires y > x > 0).

    The recurrence needs t >= 2 and a last star with at least two leaves,
    and it degenerates for sizes (1, n) with n >= 3. Those shapes, together
    with single stars and all-singleton families (generalized stars), get
    fixed labelings that ignore x and y. Every output still has exactly one
    negative label.
    """
    if not isinstance(shape, TreeShape):
        shape = TreeShape(tuple(shape), "banana")
    if not (0 < x < y):
        raise ValidationError("banana labeling needs 0 < x < y")
    sizes = shape.star_sizes
    fixed = _banana_fallback(sizes)
    root, stars = fixed if fixed is not None else _banana_labels(sizes, x, y)
    labels = [root]
    edges: list[Edge] = []
    for center, leaves in stars:
        labels += [center, *leaves]
        edges += [(center, leaf) for leaf in leaves]
        edges.append((root, leaves[0]))
    return _realize(labels, edges, f"banana{tuple(sizes)}")


# --- books and fans with extra edges -----------------------------------------


def label_triangular_book_bookmark(n: int, m: int) -> LabeledGraph:
    """TB_n with a bookmark: spine (0, 2m), pages 2mi+1, pendant 2m(n+1)+1 at 0."""
    if n < 1 or m < 1:
        raise ValidationError("n and m must be at least 1")
    spine = (0, 2 * m)
    pages = [2 * m * i + 1 for i in range(1, n + 1)]
    mark = 2 * m * (n + 1) + 1
    edges = [spine, (0, mark)] + [(s, p) for p in pages for s in spine]
    return _realize([*spine, *pages, mark], edges, f"tbbm({n},{m})")


def fibonacci(k: int) -> int:
    a, b = 1, 1
    for _ in range(k - 1):
        a, b = b, a + b
    return a


def label_fan_handle(n: int, m: int) -> LabeledGraph:
    """F*_n: apex 0, path p_m..p_{m+n-1} (Fibonacci, p_1 = p_2 = 1), handle p_{m+n}."""
    if n < 3:
        raise ValidationError("n must be at least 3")
    if m < 2:
        raise ValidationError("Fibonacci offset m must be at least 2")
    p = [fibonacci(k) for k in range(m, m + n)]
    handle = fibonacci(m + n)
    edges = [(p[i], p[i + 1]) for i in range(n - 1)] + [(0, q) for q in p] + [(0, handle)]
    return _realize([0, *p, handle], edges, f"fan_handle({n},{m})")


# --- generic constructions ---------------------------------------------------


def _dominating_zero(G: LabeledGraph) -> bool:
    return 0 in G.labels and G.degree(0) == G.order - 1


def amalgamate(parts: Sequence[LabeledGraph]) -> LabeledGraph:
    """Glue integral sum graphs at their dominating 0-vertices.

    Part i is scaled by M + 1, where M is twice the largest absolute label in
    part i-1 after that part's own scaling.
    """
    if not parts:
        raise ValidationError("nothing to amalgamate")
    for k, P in enumerate(parts):
        if not verify_sum_labeling(P):
            raise ValidationError(f"part {k} is not an integral sum labeling")
        if not _dominating_zero(P):
            raise ValidationError(f"part {k} has no dominating vertex labelled 0")
    labels = {0}
    edges: set[Edge] = set()
    scale = 1
    prev_max = None
    for P in parts:
        if prev_max is not None:
            scale = prev_max + 1
        scaled = {v: scale * v for v in P.labels}
        labels |= set(scaled.values())
        edges |= {(scaled[a], scaled[b]) for a, b in P.edges}
        prev_max = max(2 * abs(v) for v in scaled.values())
    return _realize(labels, edges, "amalgamation")


def apex_join(G: LabeledGraph) -> LabeledGraph:
    """G * v with v labelled 0, under the sufficient condition."""
    problems = []
    if not verify_sum_labeling(G):
        problems.append("input is not an integral sum labeling")
    if G.order and G.max_degree() >= G.order - 1:
        problems.append("max degree is not below |V|-1")
    present = set(G.labels)
    pairs = sorted({(min(x, -x), max(x, -x)) for x in present if x != 0 and -x in present})
    if pairs:
        problems.append(f"labels {pairs[0][1]} and {pairs[0][0]} are negatives of each other")
    if 0 in present:
        problems.append("0 is already a label")
    if problems:
        raise ValidationError("; ".join(problems))
    edges = [*G.edges, *((0, v) for v in G.labels)]
    return _realize([0, *G.labels], edges, "apex join")


__all__ = [
    "TreeShape", "label_fan", "label_windmill", "label_union_stars_apex", "label_banana_tree",
    "label_triangular_book_bookmark", "label_fan_handle", "amalgamate", "apex_join",
    "fan_path_labels", "windmill_pairs", "fibonacci", "label_set",
]
