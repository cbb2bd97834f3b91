"""Continuous monotonic subgraph decompositions (CMSD).

A decomposition splits the edges of a host graph into connected parts whose
sizes form an arithmetic progression a, a+d, a+2d, ... and where each part
embeds in the next. Parts are always stored in ascending order of size.

Host labels: K_n uses vertices 0..n-1, G_{0,n} uses 0..n.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Optional, Sequence

from .core import Edge, G0n, LabeledGraph, complete_graph, generate
from .errors import CapacityError, ValidationError
from .structure import VerificationReport

SEARCH_MAX_N = 9

# part shapes; a "+x" suffix marks one trailing extra part of shape x
SHAPES = ("tb", "star", "tb-bookmark", "tb-bookmark+tb0", "fan-handle", "fan-handle+p2")


@dataclass(frozen=True)
class Scheme:
    """Size progression; ``a`` and ``d`` are None for a non-AP decomposition."""

    a: Optional[int]
    d: Optional[int]
    shape: str

    @property
    def is_ap(self) -> bool:
        return self.a is not None

    def as_dict(self) -> dict:
        return {"a": self.a, "d": self.d, "shape": self.shape, "ap": self.is_ap}


@dataclass(frozen=True)
class Decomposition:
    host: LabeledGraph
    parts: tuple[LabeledGraph, ...]
    scheme: Scheme

    @property
    def sizes(self) -> list[int]:
        return [p.size for p in self.parts]

    def as_dict(self) -> dict:
        return {
            "scheme": self.scheme.as_dict(),
            "sizes": self.sizes,
            "parts": [[list(e) for e in p.edges] for p in self.parts],
        }


def _part(edges: Sequence[Edge]) -> LabeledGraph:
    verts = sorted({v for e in edges for v in e})
    return LabeledGraph.from_edges(verts, edges)


def _book(u: int, v: int, leaves, mark: Optional[int] = None) -> list[Edge]:
    edges = [(u, v)] + [(x, s) for x in leaves for s in (u, v)]
    if mark is not None:
        edges.append((u, mark))
    return edges


def _make(host: LabeledGraph, parts: list[list[Edge]], scheme: Scheme) -> Decomposition:
    dec = Decomposition(host, tuple(sorted((_part(p) for p in parts), key=lambda g: (g.size, g.edges))), scheme)
    rep = validate(dec)
    if not rep.ok:  # pragma: no cover - constructions are proved; this guards regressions
        raise AssertionError(f"construction failed validation: {[c.claim_id for c in rep.failures()]}")
    return dec


def _need(n: int, lo: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < lo:
        raise ValidationError(f"n must be an integer >= {lo}")


# --- K_n ---------------------------------------------------------------------


def cmsd_kn_books(n: int) -> Decomposition:
    """K_n into triangular books: (1,4) for even n, (3,4) for odd n.

    Book j has spine (2j-2, 2j-1) and pages on every higher vertex.
    """
    _need(n, 3)
    m = n // 2
    parts = [_book(2 * j - 2, 2 * j - 1, range(2 * j, n)) for j in range(1, m + 1)]
    a = 1 if n % 2 == 0 else 3
    return _make(complete_graph(range(n)), parts, Scheme(a, 4, "tb"))


def cmd_kn_stars(n: int) -> Decomposition:
    """K_n into stars K_{1,1}, ..., K_{1,n-1}; star j is centred at j."""
    _need(n, 3)
    parts = [[(i, j) for i in range(j)] for j in range(1, n)]
    return _make(complete_graph(range(n)), parts, Scheme(1, 1, "star"))


# --- G_{0,n} books -------------------------------------------------------------


def _g0n_books_22(n: int) -> tuple[list[list[Edge]], Scheme]:
    m = n // 2
    parts = [_book(j, 2 * m - j - 1, range(j), 2 * m - j) for j in range(m)]
    return parts, Scheme(2, 2, "tb-bookmark")


def _g0n_books_mod4(n: int) -> tuple[list[list[Edge]], Scheme]:
    m, r = divmod(n, 4)
    if r == 0:
        parts = [_book(2 * j, 2 * j + 1, range(2 * j + 2, 4 * m - 2 * j), 4 * m - 2 * j) for j in range(m)]
        return parts, Scheme(6, 8, "tb-bookmark")
    if r == 1:
        parts = [_book(2 * j, 2 * j + 1, range(2 * j + 2, 4 * m - 2 * j + 1), 4 * m + 1 - 2 * j) for j in range(m)]
        parts.append(_book(2 * m, 2 * m + 1, ()))
        return parts, Scheme(None, None, "tb-bookmark+tb0")
    if r == 2:
        parts = [_book(2 * j, 2 * j + 1, range(2 * j + 2, 4 * m - 2 * j + 2), 4 * m - 2 * j + 2) for j in range(m)]
        parts.append(_book(2 * m, 2 * m + 1, (), 2 * m + 2))
        return parts, Scheme(2, 8, "tb-bookmark")
    parts = [_book(2 * j, 2 * j + 1, range(2 * j + 2, 4 * m - 2 * j + 3), 4 * m - 2 * j + 3) for j in range(m + 1)]
    return parts, Scheme(4, 8, "tb-bookmark")


def cmsd_g0n_books(n: int, scheme: str = "auto") -> Decomposition:
    """G_{0,n} into triangular books with a bookmark.

    ``scheme`` is ``"step2"`` (the (2,2) scheme, even n), ``"step8"`` (the
    residue-class scheme: (6,8), (2,8), (4,8), or non-AP for n = 1 mod 4) or
    ``"auto"``: step2 for n = 2 mod 4, step8 otherwise.
    """
    _need(n, 4)
    if scheme == "auto":
        scheme = "step2" if n % 4 == 2 else "step8"
    if scheme == "step2":
        if n % 2:
            raise ValidationError("the (2,2) book scheme needs even n")
        parts, sch = _g0n_books_22(n)
    elif scheme == "step8":
        parts, sch = _g0n_books_mod4(n)
    else:
        raise ValidationError(f"unknown scheme {scheme!r}; choose auto, step2 or step8")
    return _make(generate(G0n(n)), parts, sch)


# --- G_{0,n} fans ----------------------------------------------------------------


def _fan_part(k: int, o: int) -> list[Edge]:
    # in G_{0,k} shifted by o: edges with sum k or k-1, plus apex 0 to 1..k-2
    edges = [(i, s - i) for s in (k - 1, k) for i in range(0, (s + 1) // 2) if i < s - i]
    edges += [(0, i) for i in range(1, k - 1)]
    return [(a + o, b + o) for a, b in edges]


def cmsd_g0n_fans(n: int) -> Decomposition:
    """G_{0,n} into fans with a handle.

    Peel the fan on sums n and n-1 off G_{0,k}; what is left is a shifted
    G_{0,k-4}. Ends with F*_3, F*_2, P_3 or P_2 according to n mod 4.
    """
    _need(n, 4)
    parts, k, o = [], n, 0
    while k >= 3:
        parts.append(_fan_part(k, o))
        k, o = k - 4, o + 1
    if k == 2:
        parts.append([(o, o + 1), (o, o + 2)])
    elif k == 1:
        parts.append([(o, o + 1)])
    r = n % 4
    scheme = {
        0: Scheme(6, 8, "fan-handle"),
        1: Scheme(None, None, "fan-handle+p2"),
        2: Scheme(2, 8, "fan-handle"),
        3: Scheme(4, 8, "fan-handle"),
    }[r]
    return _make(generate(G0n(n)), parts, scheme)


# --- feasibility -----------------------------------------------------------------


@dataclass(frozen=True)
class Feasibility:
    feasible: bool
    reason: str

    def __bool__(self) -> bool:
        return self.feasible

    def as_dict(self) -> dict:
        return {"feasible": self.feasible, "reason": self.reason}


_EVEN_SHAPES = {"tb-bookmark": "2k+2", "fan-handle": "2k"}


def feasibility(target: str, shape: str, n: int) -> Feasibility:
    """Necessary parity condition for an all-same-shape decomposition.

    Bookmarked books and handled fans always have an even edge count, so a
    host with an odd edge total cannot be split into them. A True result
    only means this test passes.
    """
    if target not in ("Kn", "G0n"):
        raise ValidationError("target must be 'Kn' or 'G0n'")
    if shape not in SHAPES:
        raise ValidationError(f"unknown shape {shape!r}; choose from {list(SHAPES)}")
    _need(n, 1)
    total = n * (n - 1) // 2 if target == "Kn" else generate(G0n(n)).size
    if shape in _EVEN_SHAPES and total % 2:
        if target == "G0n":
            k = (n - 1) // 4
            formula = f"(2m+1)^2 with m={k}"
        else:
            formula = "n(n-1)/2"
        return Feasibility(False, f"edge total {formula} = {total} is odd, but every part has "
                                  f"{_EVEN_SHAPES[shape]} edges")
    return Feasibility(True, "parity condition passes")


# --- validation --------------------------------------------------------------------


def _book_pages(P: LabeledGraph, bookmark: bool) -> Optional[int]:
    adj = P.adjacency()
    want = P.size - (2 if bookmark else 1)
    if want < 0 or want % 2:
        return None
    k = want // 2
    for u, v in P.edges:
        leaves = adj[u] & adj[v]
        if len(leaves) != k or any(len(adj[x]) != 2 for x in leaves):
            continue
        rest = set(P.labels) - leaves - {u, v}
        if not bookmark:
            if not rest:
                return k
            continue
        if len(rest) == 1:
            (w,) = rest
            if len(adj[w]) == 1 and adj[w] <= {u, v}:
                return k
    return None


def _fan_blades(P: LabeledGraph) -> Optional[int]:
    if P.size % 2:
        return None
    k = P.size // 2
    adj = P.adjacency()
    for apex in P.labels:
        if len(adj[apex]) != k + 1 or P.order != k + 2:
            continue
        for h in sorted(adj[apex]):
            if len(adj[h]) != 1:
                continue
            body = P.induced(adj[apex] - {h})
            if body.size == k - 1 and body.max_degree() <= 2 and body.is_connected():
                return k
    return None


def _shape_count(P: LabeledGraph, shape: str) -> Optional[int]:
    if shape == "tb":
        return _book_pages(P, False)
    if shape == "tb-bookmark":
        return _book_pages(P, True)
    if shape == "star":
        deg = P.degrees()
        centers = [v for v, d in deg.items() if d == P.size]
        return P.size if centers and P.order == P.size + 1 else None
    if shape == "fan-handle":
        return _fan_blades(P)
    raise ValidationError(f"unknown part shape {shape!r}")


def validate(dec: Decomposition) -> VerificationReport:
    """Check cover, disjointness, part shape, AP sizes and nesting."""
    rep = VerificationReport()
    host = dec.host.edge_set()
    used = Counter(e for p in dec.parts for e in p.edges)
    dup = sorted(e for e, c in used.items() if c > 1)
    rep.add("edge-disjoint", [], [list(e) for e in dup])
    missing = sorted(host - set(used))
    extra = sorted(set(used) - host)
    rep.add("exact-cover", {"missing": [], "extra": []},
            {"missing": [list(e) for e in missing], "extra": [list(e) for e in extra]})
    deg = [p.degrees() for p in dec.parts]
    rep.add("no-isolated-vertices", True, all(all(d > 0 for d in dg.values()) and dg for dg in deg))
    rep.add("parts-connected", True, all(p.size > 0 and p.is_connected() for p in dec.parts))
    sizes = dec.sizes
    rep.add("ascending-sizes", sorted(sizes), sizes)

    main, _, extra_shape = dec.scheme.shape.partition("+")
    parts = list(dec.parts)
    if extra_shape:
        # the extra part is a single edge or P3; it is the smallest and embeds in every other
        head = parts[0] if parts else None
        ok = head is not None and head.size <= 2 and head.is_connected() and head.max_degree() <= 2
        rep.add(f"extra-part:{extra_shape}", True, ok)
        parts = parts[1:]
    counts = []
    for p in parts:
        try:
            counts.append(_shape_count(p, main))
        except ValidationError:
            counts.append(None)
    rep.add(f"shape:{main}", True, all(c is not None for c in counts))
    rep.add("nesting", True, all(c is not None for c in counts) and all(a < b for a, b in zip(counts, counts[1:])))
    if dec.scheme.is_ap:
        a, d = dec.scheme.a, dec.scheme.d
        rep.add("ap-sizes", [a + i * d for i in range(len(sizes))], sizes)
    return rep


# --- bounded search for K_n fan decompositions -----------------------------------


def _fan_masks(n: int, k: int, index: dict[Edge, int]) -> list[tuple[tuple[Edge, ...], int]]:
    seen: dict[int, tuple[Edge, ...]] = {}
    verts = range(n)
    for apex in verts:
        others = [v for v in verts if v != apex]
        for h in others:
            pool = [v for v in others if v != h]
            for path in permutations(pool, k):
                if k > 1 and path[0] > path[-1]:
                    continue
                edges = [(apex, h)] + [(apex, v) for v in path] + list(zip(path, path[1:]))
                es = tuple(sorted((min(a, b), max(a, b)) for a, b in edges))
                mask = 0
                for e in es:
                    mask |= 1 << index[e]
                seen.setdefault(mask, es)
    return sorted(((es, mask) for mask, es in seen.items()), key=lambda t: t[0])


def search_fan_cmsd(n: int, a: int, d: int) -> Optional[Decomposition]:
    """Backtracking search for an (a,d)-CMSD of K_n into fans with a handle.

    Parts are placed largest first, trying candidates in lexicographic order of
    their sorted edge lists, so the answer is the least solution compared from
    the largest part down. Returns None when no decomposition exists.
    """
    _need(n, 2)
    if n > SEARCH_MAX_N:
        raise CapacityError(f"search_fan_cmsd is capped at n={SEARCH_MAX_N}")
    for name, v in (("a", a), ("d", d)):
        if isinstance(v, bool) or not isinstance(v, int):
            raise ValidationError(f"{name} must be an integer")
    if a < 1 or d < 1:
        raise ValidationError("a and d must be positive")
    total = n * (n - 1) // 2
    sizes, s = [], a
    while sum(sizes) < total:
        sizes.append(s)
        s += d
    if sum(sizes) != total or any(x % 2 for x in sizes):
        return None
    blades = [x // 2 for x in sizes]
    if blades[-1] > n - 2:
        return None
    edges = list(combinations(range(n), 2))
    index = {e: i for i, e in enumerate(edges)}
    full = (1 << len(edges)) - 1
    cands = {k: _fan_masks(n, k, index) for k in set(blades)}
    last = {mask: es for es, mask in cands[blades[0]]}
    order = blades[::-1]
    chosen: list[tuple[Edge, ...]] = []

    def rec(level: int, free: int) -> bool:
        if level == len(order) - 1:
            es = last.get(free)
            if es is None:
                return False
            chosen.append(es)
            return True
        for es, mask in cands[order[level]]:
            if mask & free == mask:
                chosen.append(es)
                if rec(level + 1, free & ~mask):
                    return True
                chosen.pop()
        return False

    if not rec(0, full):
        return None
    return _make(complete_graph(range(n)), [list(es) for es in chosen], Scheme(a, d, "fan-handle"))


__all__ = [
    "Scheme", "Decomposition", "Feasibility", "SHAPES", "cmsd_kn_books", "cmd_kn_stars", "cmsd_g0n_books",
    "cmsd_g0n_fans", "feasibility", "validate", "search_fan_cmsd",
]
