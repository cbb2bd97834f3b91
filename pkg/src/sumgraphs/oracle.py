"""Brute-force ground truth.

Nothing here depends on the formulas or constructions elsewhere in the
package. Each routine has an order cap, which the environment variable
``SUMGRAPH_MAX_ORDER`` overrides for every routine at once.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Mapping, Optional

from .core import Edge, LabeledGraph
from .errors import CapacityError, ValidationError

CAPS = {
    "count": 64,
    "isomorphism": 12,
    "hamiltonian": 14,
    "invariants": 16,
    "perfect": 10,
}


def cap(kind: str) -> int:
    override = os.environ.get("SUMGRAPH_MAX_ORDER")
    if override:
        try:
            return int(override)
        except ValueError:
            raise ValidationError("SUMGRAPH_MAX_ORDER must be an integer") from None
    return CAPS[kind]


def _check_cap(G: LabeledGraph, kind: str) -> None:
    limit = cap(kind)
    if G.order > limit:
        raise CapacityError(f"order {G.order} exceeds the {kind} cap of {limit}")


def _masks(G: LabeledGraph) -> list[int]:
    """Adjacency bitsets indexed by position in ``G.labels``."""
    pos = {v: i for i, v in enumerate(G.labels)}
    adj = [0] * G.order
    for a, b in G.edges:
        i, j = pos[a], pos[b]
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return adj


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


# --- labeling checks ---------------------------------------------------------


def verify_sum_labeling(G: LabeledGraph, positive_only: bool = False) -> bool:
    if positive_only and any(v < 1 for v in G.labels):
        return False
    present = set(G.labels)
    have = G.edge_set()
    return all(((a + b) in present) == ((a, b) in have) for a, b in combinations(G.labels, 2))


def verify_anti_sum_labeling(G: LabeledGraph) -> bool:
    present = set(G.labels)
    have = G.edge_set()
    return all(((a + b) not in present) == ((a, b) in have) for a, b in combinations(G.labels, 2))


# --- subgraph counters -------------------------------------------------------


def count_triangles_bf(G: LabeledGraph) -> int:
    _check_cap(G, "count")
    adj = _masks(G)
    total = 0
    for i in range(G.order):
        higher_i = adj[i] >> (i + 1) << (i + 1)
        for j in _bits(higher_i):
            total += bin(adj[i] & adj[j] & (-1 << (j + 1))).count("1")
    return total


def count_c4_bf(G: LabeledGraph) -> int:
    """Each 4-cycle has two diagonals; summing common-neighbour pairs over
    vertex pairs counts it exactly twice."""
    _check_cap(G, "count")
    adj = _masks(G)
    twice = 0
    for i, j in combinations(range(G.order), 2):
        c = bin(adj[i] & adj[j]).count("1")
        twice += c * (c - 1) // 2
    assert twice % 2 == 0
    return twice // 2


def count_open_p3_bf(G: LabeledGraph) -> int:
    """Paths u-v-w with uw not an edge, counted once per (v, {u, w})."""
    _check_cap(G, "count")
    adj = _masks(G)
    total = 0
    for v in range(G.order):
        nb = list(_bits(adj[v]))
        for u, w in combinations(nb, 2):
            if not adj[u] >> w & 1:
                total += 1
    return total


# --- isomorphism -------------------------------------------------------------


@dataclass(frozen=True)
class IsoCertificate:
    mapping: Optional[dict]
    valid: bool

    def __bool__(self) -> bool:
        return self.valid


def check_isomorphism_mapping(G: LabeledGraph, H: LabeledGraph, mapping: Mapping[int, int]) -> bool:
    if sorted(mapping) != list(G.labels) or sorted(mapping.values()) != list(H.labels):
        return False
    he = H.edge_set()
    for a, b in combinations(G.labels, 2):
        x, y = mapping[a], mapping[b]
        if (G.has_edge(a, b)) != ((min(x, y), max(x, y)) in he):
            return False
    return True


def is_isomorphic(G: LabeledGraph, H: LabeledGraph) -> IsoCertificate:
    _check_cap(G, "isomorphism")
    _check_cap(H, "isomorphism")
    no = IsoCertificate(None, False)
    if G.order != H.order or G.size != H.size:
        return no
    ga, ha = _masks(G), _masks(H)
    gdeg = [bin(x).count("1") for x in ga]
    hdeg = [bin(x).count("1") for x in ha]
    if sorted(gdeg) != sorted(hdeg):
        return no
    n = G.order
    # refine by (degree, sorted neighbour degrees)
    gsig = [(gdeg[i], tuple(sorted(gdeg[j] for j in _bits(ga[i])))) for i in range(n)]
    hsig = [(hdeg[i], tuple(sorted(hdeg[j] for j in _bits(ha[i])))) for i in range(n)]
    if sorted(gsig) != sorted(hsig):
        return no
    order = sorted(range(n), key=lambda i: (-gdeg[i], i))
    candidates = {i: [j for j in range(n) if hsig[j] == gsig[i]] for i in range(n)}
    image = [-1] * n
    used = 0

    def extend(k: int) -> bool:
        nonlocal used
        if k == n:
            return True
        i = order[k]
        for j in candidates[i]:
            if used >> j & 1:
                continue
            ok = True
            for p in order[:k]:
                if (ga[i] >> p & 1) != (ha[j] >> image[p] & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[i] = j
            used |= 1 << j
            if extend(k + 1):
                return True
            used &= ~(1 << j)
            image[i] = -1
        return False

    if not extend(0):
        return no
    mapping = {G.labels[i]: H.labels[image[i]] for i in range(n)}
    return IsoCertificate(mapping, True)


# --- Hamiltonicity -----------------------------------------------------------


def is_hamiltonian_cycle(G: LabeledGraph, cycle) -> bool:
    """Independent adjacency walk check."""
    if cycle is None or len(cycle) != G.order or len(cycle) < 3:
        return False
    if sorted(cycle) != list(G.labels):
        return False
    return all(G.has_edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle)))


def hamiltonian_cycle_bf(G: LabeledGraph) -> Optional[tuple[int, ...]]:
    """Lexicographically least Hamiltonian cycle starting at the least label."""
    _check_cap(G, "hamiltonian")
    n = G.order
    if n < 3:
        return None
    adj = _masks(G)
    full = (1 << n) - 1
    dead: set[tuple[int, int]] = set()
    path = [0]

    def dfs(v: int, seen: int) -> bool:
        if seen == full:
            return bool(adj[v] & 1)
        if (v, seen) in dead:
            return False
        for w in _bits(adj[v] & ~seen):
            path.append(w)
            if dfs(w, seen | 1 << w):
                return True
            path.pop()
        dead.add((v, seen))
        return False

    if not dfs(0, 1):
        return None
    return tuple(G.labels[i] for i in path)


# --- exact invariants --------------------------------------------------------


def _max_clique(adj: list[int], cand: int) -> int:
    best = 0

    def grow(size: int, cand: int) -> None:
        nonlocal best
        if cand == 0:
            best = max(best, size)
            return
        if size + bin(cand).count("1") <= best:
            return
        while cand:
            if size + bin(cand).count("1") <= best:
                return
            v = cand.bit_length() - 1
            cand &= ~(1 << v)
            grow(size + 1, cand & adj[v])

    grow(0, cand)
    return best


def _colorable(adj: list[int], verts: list[int], k: int) -> bool:
    """Backtracking k-colouring restricted to ``verts``, most-saturated first."""
    color = {v: -1 for v in verts}
    vs = set(verts)

    def pick():
        best, key = None, None
        for v in verts:
            if color[v] >= 0:
                continue
            sat = {color[w] for w in _bits(adj[v]) if w in vs and color[w] >= 0}
            deg = sum(1 for w in _bits(adj[v]) if w in vs)
            kk = (len(sat), deg)
            if key is None or kk > key:
                best, key = v, kk
        return best

    def go(filled: int, used: int) -> bool:
        if filled == len(verts):
            return True
        v = pick()
        banned = {color[w] for w in _bits(adj[v]) if w in vs and color[w] >= 0}
        for c in range(min(k, used + 1)):
            if c in banned:
                continue
            color[v] = c
            if go(filled + 1, max(used, c + 1)):
                return True
        color[v] = -1
        return False

    return go(0, 0)


def _chromatic(adj: list[int], mask: int) -> int:
    verts = list(_bits(mask))
    if not verts:
        return 0
    k = max(1, _max_clique(adj, mask))
    while not _colorable(adj, verts, k):
        k += 1
    return k


def _edge_colorable(n: int, edges: list[Edge], k: int) -> bool:
    if not edges:
        return True
    if len(edges) > k * (n // 2):  # each colour class is a matching
        return False
    incident: list[list[int]] = [[] for _ in range(n)]
    for idx, (a, b) in enumerate(edges):
        incident[a].append(idx)
        incident[b].append(idx)
    busy = [0] * n  # colours present at each vertex
    color = [-1] * len(edges)

    def pick() -> int:
        best, key = -1, None
        for idx, (a, b) in enumerate(edges):
            if color[idx] >= 0:
                continue
            kk = bin(busy[a] | busy[b]).count("1")
            if key is None or kk > key:
                best, key = idx, kk
        return best

    def go(filled: int, used: int) -> bool:
        if filled == len(edges):
            return True
        idx = pick()
        a, b = edges[idx]
        blocked = busy[a] | busy[b]
        for c in range(min(k, used + 1)):
            if blocked >> c & 1:
                continue
            color[idx] = c
            busy[a] |= 1 << c
            busy[b] |= 1 << c
            if go(filled + 1, max(used, c + 1)):
                return True
            busy[a] &= ~(1 << c)
            busy[b] &= ~(1 << c)
        color[idx] = -1
        return False

    return go(0, 0)


def _max_matching(n: int, adj: list[int]) -> int:
    @lru_cache(maxsize=None)
    def best(free: int) -> int:
        if free == 0:
            return 0
        v = (free & -free).bit_length() - 1
        rest = free & ~(1 << v)
        out = best(rest)
        for w in _bits(adj[v] & rest):
            out = max(out, 1 + best(rest & ~(1 << w)))
        return out

    return best((1 << n) - 1)


def _min_edge_cover(n: int, adj: list[int]) -> int:
    full = (1 << n) - 1

    @lru_cache(maxsize=None)
    def need(covered: int) -> int:
        if covered == full:
            return 0
        missing = full & ~covered
        v = (missing & -missing).bit_length() - 1
        return 1 + min(need(covered | 1 << v | 1 << w) for w in _bits(adj[v]))

    return need(0)


def _min_vertex_cover(adj: list[int], edges: list[Edge]) -> int:
    best = len(adj)

    def go(chosen: int, size: int) -> None:
        nonlocal best
        if size >= best:
            return
        for a, b in edges:
            if not (chosen >> a & 1 or chosen >> b & 1):
                go(chosen | 1 << a, size + 1)
                go(chosen | 1 << b, size + 1)
                return
        best = size

    go(0, 0)
    return best


@dataclass(frozen=True)
class Invariants:
    omega: int
    chi: int
    chi_prime: int
    alpha0: int
    beta0: int
    alpha1: Optional[int]
    beta1: int

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def chromatic_index_bf(G: LabeledGraph) -> int:
    _check_cap(G, "invariants")
    pos = {v: i for i, v in enumerate(G.labels)}
    edges = [(pos[a], pos[b]) for a, b in G.edges]
    delta = G.max_degree()
    return delta if _edge_colorable(G.order, edges, delta) else delta + 1


def clique_number_bf(G: LabeledGraph) -> int:
    _check_cap(G, "invariants")
    return _max_clique(_masks(G), (1 << G.order) - 1)


def chromatic_number_bf(G: LabeledGraph) -> int:
    _check_cap(G, "invariants")
    return _chromatic(_masks(G), (1 << G.order) - 1)


def exact_invariants_bf(G: LabeledGraph) -> Invariants:
    _check_cap(G, "invariants")
    n = G.order
    adj = _masks(G)
    full = (1 << n) - 1
    pos = {v: i for i, v in enumerate(G.labels)}
    edges = [(pos[a], pos[b]) for a, b in G.edges]
    co_adj = [full & ~adj[i] & ~(1 << i) for i in range(n)]
    isolated = any(a == 0 for a in adj)
    return Invariants(
        omega=_max_clique(adj, full),
        chi=_chromatic(adj, full),
        chi_prime=chromatic_index_bf(G),
        alpha0=_min_vertex_cover(adj, edges),
        beta0=_max_clique(co_adj, full),
        alpha1=None if isolated else _min_edge_cover(n, adj),
        beta1=_max_matching(n, adj),
    )


def is_perfect_bf(G: LabeledGraph) -> bool:
    _check_cap(G, "perfect")
    adj = _masks(G)
    for mask in range(1, 1 << G.order):
        sub = [a & mask for a in adj]
        if _max_clique(sub, mask) != _chromatic(sub, mask):
            return False
    return True


# --- colouring checks --------------------------------------------------------


@dataclass(frozen=True)
class ColoringCheck:
    proper: bool
    num_colors: int

    def __bool__(self) -> bool:
        return self.proper


def is_proper_vertex_coloring(G: LabeledGraph, assignment: Mapping[int, int]) -> ColoringCheck:
    missing = [v for v in G.labels if v not in assignment]
    if missing:
        raise ValidationError(f"vertex colouring is partial; missing {missing[:5]}")
    extra = set(assignment) - set(G.labels)
    if extra:
        raise ValidationError(f"colouring mentions non-vertices {sorted(extra)[:5]}")
    proper = all(assignment[a] != assignment[b] for a, b in G.edges)
    return ColoringCheck(proper, len(set(assignment.values())))


def is_proper_edge_coloring(G: LabeledGraph, assignment: Mapping[Edge, int]) -> ColoringCheck:
    norm = {(min(a, b), max(a, b)): c for (a, b), c in assignment.items()}
    if len(norm) != len(assignment):
        raise ValidationError("edge colouring lists an edge twice")
    missing = [e for e in G.edges if e not in norm]
    if missing:
        raise ValidationError(f"edge colouring is partial; missing {missing[:5]}")
    extra = set(norm) - G.edge_set()
    if extra:
        raise ValidationError(f"colouring mentions non-edges {sorted(extra)[:5]}")
    seen: dict[tuple[int, int], Edge] = {}
    proper = True
    for e, c in norm.items():
        for v in e:
            if (v, c) in seen:
                proper = False
            seen[(v, c)] = e
    return ColoringCheck(proper, len(set(norm.values())))
