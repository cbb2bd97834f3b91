"""Structural results as executable constructions with explicit certificates."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Optional, Sequence

from .core import Edge, FamilySpec, LabeledGraph, build_sum_graph, complement, complete_graph, generate
from .errors import ValidationError
from .oracle import (
    cap,
    check_isomorphism_mapping,
    hamiltonian_cycle_bf,
    is_hamiltonian_cycle,
    is_isomorphic,
    verify_sum_labeling,
)


# --- reports -----------------------------------------------------------------


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    formula_value: Any
    oracle_value: Any
    passed: bool

    def as_dict(self) -> dict:
        return {
            "claim": self.claim_id,
            "formula": self.formula_value,
            "oracle": self.oracle_value,
            "pass": self.passed,
        }


@dataclass
class VerificationReport:
    claims: list[ClaimResult] = field(default_factory=list)

    def add(self, claim_id: str, formula_value: Any, oracle_value: Any, passed: Optional[bool] = None) -> None:
        ok = formula_value == oracle_value if passed is None else passed
        self.claims.append(ClaimResult(claim_id, formula_value, oracle_value, bool(ok)))

    def extend(self, other: "VerificationReport") -> None:
        self.claims.extend(other.claims)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.claims)

    def failures(self) -> list[ClaimResult]:
        return [c for c in self.claims if not c.passed]

    def as_dict(self) -> dict:
        return {"ok": self.ok, "claims": [c.as_dict() for c in self.claims]}


def _iso_claim(report: VerificationReport, claim: str, G: LabeledGraph, H: LabeledGraph,
               mapping: Optional[dict] = None) -> None:
    """Record an isomorphism claim, by explicit map when given, else by the oracle."""
    if mapping is not None:
        report.add(claim, True, check_isomorphism_mapping(G, H, mapping))
    else:
        report.add(claim, True, bool(is_isomorphic(G, H)))


# --- supplementary vertices and growth ---------------------------------------


def supplementary_map(n: int, j: int) -> dict[int, int]:
    """Vertex map from G_n - {j, n+1-j} onto G_{n-2}."""
    out = {}
    for i in range(1, n + 1):
        if i < j:
            out[i] = i
        elif j < i < n + 1 - j:
            out[i] = i - 1
        elif i > n + 1 - j:
            out[i] = i - 2
    return out


def remove_supplementary(n: int, j: int) -> LabeledGraph:
    """G_n with the supplementary pair {j, n+1-j} deleted (labels kept)."""
    if n < 2 or not 1 <= j <= n // 2:
        raise ValidationError(f"need 1 <= j <= floor(n/2); got n={n}, j={j}")
    G = generate(FamilySpec("Gn", n)).remove_vertices({j, n + 1 - j})
    if n > 2 and not check_isomorphism_mapping(G, generate(FamilySpec("Gn", n - 2)), supplementary_map(n, j)):
        raise AssertionError("supplementary-pair map failed")
    return G


def _is_canonical_gn(G: LabeledGraph) -> int:
    n = G.order
    if n < 1 or G.labels != tuple(range(1, n + 1)) or G.edge_set() != generate(FamilySpec("Gn", n)).edge_set():
        raise ValidationError("input is not the canonical labeled G_n")
    return n


def grow_gn(G: LabeledGraph) -> LabeledGraph:
    """G_n -> G_{n+2}: shift labels up by one, add 1 and n+2, join 1 to 2..n+1."""
    n = _is_canonical_gn(G)
    shifted = [(a + 1, b + 1) for a, b in G.edges]
    new = [(1, j) for j in range(2, n + 2)]
    return LabeledGraph.from_edges(range(1, n + 3), shifted + new)


# --- Hamiltonian cycles ------------------------------------------------------


def hamiltonian_gdelta(n: int) -> tuple[int, ...]:
    """Hamiltonian cycle of the order-n graph with two full-degree vertices, G_{-1,n-2}.

    Starts at -1, then alternates high and low labels n-2, 0, n-3, 1, ...
    """
    if n < 3:
        raise ValidationError("n must be at least 3")
    lo, hi = 0, n - 2
    seq = [-1]
    take_hi = True
    while lo <= hi:
        if take_hi:
            seq.append(hi)
            hi -= 1
        else:
            seq.append(lo)
            lo += 1
        take_hi = not take_hi
    cycle = tuple(seq)
    if not is_hamiltonian_cycle(generate(FamilySpec("Gmn", n - 2, 1)), cycle):
        raise AssertionError("interleaved sequence is not a Hamiltonian cycle")
    return cycle


def hamiltonian_gmn(m: int, n: int) -> tuple[int, ...]:
    """Lexicographically least Hamiltonian cycle of G_{-m,n} by backtracking."""
    if m < 1 or n < 1:
        raise ValidationError("m and n must be positive")
    G = generate(FamilySpec("Gmn", n, m))
    cycle = hamiltonian_cycle_bf(G)
    if cycle is None:
        raise AssertionError(f"no Hamiltonian cycle found in G_-{m},{n}")
    return cycle


# --- complement identities ---------------------------------------------------


def supplementary_diagonal(n: int) -> list[Edge]:
    return [(i, n + 1 - i) for i in range(1, n // 2 + 1)]


def check_complement_identities(n: int) -> VerificationReport:
    """G_n vs G_n^c minus the diagonal, G_{0,n} vs G_{n+1}^c, and K_n = G_n + G_n^c."""
    if n < 1:
        raise ValidationError("n must be positive")
    rep = VerificationReport()
    Gn_ = generate(FamilySpec("Gn", n))
    Gc = generate(FamilySpec("GnComplement", n))
    H = Gc.remove_edges(supplementary_diagonal(n)) if n >= 2 else Gc
    _iso_claim(rep, f"G_{n} ~ G_{n}^c - diagonal (map i -> n+1-i)", Gn_, H, {i: n + 1 - i for i in range(1, n + 1)})

    G0 = generate(FamilySpec("G0n", n))
    Gc1 = generate(FamilySpec("GnComplement", n + 1))
    phi = {0: n + 1, **{i: n + 1 - i for i in range(1, n + 1)}}
    _iso_claim(rep, f"G_0,{n} ~ G_{n + 1}^c (explicit map)", G0, Gc1, phi)
    if G0.order <= cap("isomorphism"):
        _iso_claim(rep, f"G_0,{n} ~ G_{n + 1}^c (oracle)", G0, Gc1)

    K = complete_graph(range(1, n + 1))
    disjoint = not (Gn_.edge_set() & Gc.edge_set())
    rep.add(f"E(K_{n}) = E(G_{n}) + E(G_{n}^c) disjointly", True,
            disjoint and (Gn_.edge_set() | Gc.edge_set()) == K.edge_set())
    return rep


def check_vertex_deletion(n: int) -> VerificationReport:
    """G_n - {floor(n/2)} ~ G_{n-1} and G_{0,n} - {floor(n/2)} ~ G_n^c."""
    rep = VerificationReport()
    h = n // 2
    if n >= 2:
        A = generate(FamilySpec("Gn", n)).remove_vertices({h})
        _iso_claim(rep, f"G_{n} - {h} ~ G_{n - 1}", A, generate(FamilySpec("Gn", n - 1)))
    B = generate(FamilySpec("G0n", n)).remove_vertices({h})
    _iso_claim(rep, f"G_0,{n} - {h} ~ G_{n}^c", B, generate(FamilySpec("GnComplement", n)))
    return rep


def full_degree_vertices(G: LabeledGraph) -> list[int]:
    return [v for v in G.labels if G.degree(v) == G.order - 1]


# --- extensions of [-m, m] ---------------------------------------------------


def _F(m: int, k: int) -> int:
    return 3 * (m - k + 1) // 2


def _single_case(m: int, x: int) -> tuple[str, int]:
    x = abs(x)
    if x == 2 * m:
        return "x=2m", 2
    if x > 2 * m:
        return "x>2m", 1
    return "m<x<2m", 1 + _F(m, x - m)


def _pair_case(m: int, x: int, y: int) -> Optional[tuple[str, int]]:
    """Case for x > m and y < -m, or None."""
    p, q = x - m, -y - m
    if p == q and 1 <= p <= m - 1:
        return "m+k,-m-k", 3 + 2 * _F(m, p)
    if 1 <= p <= m - 1 and 1 <= q <= m - 1:
        return "m+k,-m-h", 3 + _F(m, p) + _F(m, q)
    if p == m and 1 <= q <= m - 1:
        return "2m,-m-k", 4 + _F(m, q)
    if p == m and q == m:
        return "2m,-2m", 5
    if 1 <= p <= m - 1 and q > m:
        k, h = p, q - m
        if h == k:
            return "m+k,-2m-k", 3 + _F(m, k)
        if k < h:
            return "m+k,-2m-h;k<h", 2 + _F(m, k)
        return "m+k,-2m-h;h<k", 3 + _F(m, k)
    if p == m and q == 2 * m:
        return "2m,-3m", 4
    if p == m and m < q < 2 * m:
        return "2m,-2m-k;k<m", 4
    if p == m and q > 2 * m:
        return "2m,-2m-k;k>m", 3
    if p > m and q > m:
        d = (p - m) - (q - m)
        return ("2m+k,-2m-h;|k-h|<=m", 3) if -m <= d <= m else ("2m+k,-2m-h;|k-h|>m", 2)
    return None


def interval_extension_size(m: int, added: Iterable[int]) -> int:
    return build_sum_graph([*range(-m, m + 1), *added]).size


@dataclass(frozen=True)
class ExtensionDelta:
    base_m: int
    added: tuple[int, ...]
    edge_count: int
    base_count: int
    case: Optional[str] = None
    formula_delta: Optional[int] = None

    def __post_init__(self):
        if len(set(self.added)) != len(self.added):
            raise ValidationError("added labels must be distinct")
        if any(-self.base_m <= a <= self.base_m for a in self.added):
            raise ValidationError("added labels must lie outside [-m, m]")

    @property
    def delta(self) -> int:
        return self.edge_count - self.base_count

    def as_dict(self) -> dict:
        return {
            "m": self.base_m, "added": list(self.added), "edge_count": self.edge_count,
            "base_count": self.base_count, "delta": self.delta, "case": self.case,
            "formula_delta": self.formula_delta,
        }


def extension_edge_count(m: int, added: Sequence[int]) -> ExtensionDelta:
    """||G+([-m,m] + added)||, cross-checked against the closed-form case when one applies."""
    if m < 2:
        raise ValidationError("m must be at least 2")
    added = tuple(added)
    if not 1 <= len(added) <= 2:
        raise ValidationError("add one or two labels")
    if len(set(added)) != len(added) or any(-m <= a <= m for a in added):
        raise ValidationError("added labels must be distinct and outside [-m, m]")
    base = interval_extension_size(m, ())
    count = interval_extension_size(m, added)
    case = None
    if len(added) == 1:
        case = _single_case(m, added[0])
    else:
        x, y = max(added), min(added)
        if x > 0 > y:
            case = _pair_case(m, x, y) or _pair_case(m, -y, -x)
    out = ExtensionDelta(m, added, count, base, *(case or (None, None)))
    if case is not None and out.delta != case[1]:
        raise AssertionError(f"case {case[0]} predicts +{case[1]}, direct count gives +{out.delta}")
    return out


def best_pair_extensions(m: int, opposite_signs: bool = False) -> tuple[int, set[frozenset[int]]]:
    """Maximum ||G+([-m,m] + {x,y})|| over the window [-3m-2, 3m+2] and its argmax set.

    With ``opposite_signs`` only pairs x > m, y < -m are considered, which is
    the range the case analysis covers. For odd m the same-sign pairs
    {m+1, m+2} and {-m-1, -m-2} tie with {m+1, -m-1}.
    """
    window = [v for v in range(-3 * m - 2, 3 * m + 3) if not -m <= v <= m]
    best, arg = -1, set()
    for i, x in enumerate(window):
        for y in window[i + 1:]:
            if opposite_signs and (x > 0) == (y > 0):
                continue
            s = interval_extension_size(m, (x, y))
            if s > best:
                best, arg = s, {frozenset((x, y))}
            elif s == best:
                arg.add(frozenset((x, y)))
    return best, arg


# --- maximal integral sum graphs ---------------------------------------------


def maximal_isg(order: int) -> list[FamilySpec]:
    """Maximal interval integral sum graphs of the given order (case table on order mod 4)."""
    if isinstance(order, bool) or not isinstance(order, int) or order < 3:
        raise ValidationError("order must be an integer >= 3")
    if order % 4 == 1:
        m = (order - 1) // 4
        return [FamilySpec("Gmn", 2 * m, 2 * m), FamilySpec("Gmn", 2 * m + 1, 2 * m - 1)]
    if order % 4 == 3:
        m = (order - 3) // 4
        return [FamilySpec("Gmn", 2 * m + 1, 2 * m + 1)]
    m = order // 2
    return [FamilySpec("Gmn", m, m - 1)]


def interval_sizes(order: int) -> dict[tuple[int, int], int]:
    """||G+([a, a+order-1])|| for every start a from -(order-1) to 1."""
    return {(a, a + order - 1): build_sum_graph(range(a, a + order)).size for a in range(-(order - 1), 2)}


def maximal_report(order: int) -> VerificationReport:
    rep = VerificationReport()
    specs = maximal_isg(order)
    sizes = interval_sizes(order)
    top = max(sizes.values())
    for s in specs:
        got = generate(s).size
        rep.add(f"{s.name()} has the largest size among order-{order} intervals", top, got)
    # [a, b] and [-b, -a] give isomorphic graphs; compare representatives with |a| <= b
    def rep_of(iv: tuple[int, int]) -> tuple[int, int]:
        a, b = iv
        return (a, b) if -a <= b else (-b, -a)

    winners = sorted({rep_of(k) for k, v in sizes.items() if v == top})
    rep.add(f"order-{order} interval maximizers", sorted(rep_of(s.label_range()) for s in specs), winners)
    return rep


def extension_argmax_report(m: int) -> VerificationReport:
    rep = VerificationReport()
    best, _ = best_pair_extensions(m)
    rep.add(f"{{{m + 1},{-m - 1}}} attains the maximum pair extension of [-{m},{m}]",
            best, interval_extension_size(m, (m + 1, -m - 1)))
    _, arg = best_pair_extensions(m, opposite_signs=True)
    rep.add(f"unique opposite-sign maximizer for [-{m},{m}]", [[-m - 1, m + 1]], sorted(sorted(a) for a in arg))
    return rep


# --- H-subgraphs -------------------------------------------------------------


def h_graph(m: int, n: int, X: Iterable[int] = (), Y: Iterable[int] = ()) -> LabeledGraph:
    """G_{-m,n} minus vertices -X and Y and every edge whose sum lies in -X or Y."""
    X, Y = set(X), set(Y)
    if m < 0 or n < 0:
        raise ValidationError("m and n must be non-negative")
    if any(not 1 <= i <= m for i in X) or any(not 1 <= j <= n for j in Y):
        raise ValidationError("X must lie in [1, m] and Y in [1, n]")
    gone = {-i for i in X} | Y
    G = build_sum_graph(range(-m, n + 1))
    H = G.remove_vertices(gone).remove_edges([e for e in G.edges if e[0] + e[1] in gone])
    if not verify_sum_labeling(H):
        raise AssertionError("H-subgraph is not closed under the sum rule")
    return H


def best_h_pair(m: int, n: int) -> tuple[int, list[tuple[int, int]]]:
    """Largest ||H_{-i,j}|| over 1 <= i <= m, 1 <= j <= n and its maximizers."""
    best, arg = -1, []
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            s = h_graph(m, n, {i}, {j}).size
            if s > best:
                best, arg = s, [(i, j)]
            elif s == best:
                arg.append((i, j))
    return best, arg


__all__ = [
    "ClaimResult", "VerificationReport", "supplementary_map", "remove_supplementary", "grow_gn",
    "hamiltonian_gdelta", "hamiltonian_gmn", "supplementary_diagonal", "check_complement_identities",
    "check_vertex_deletion", "full_degree_vertices", "ExtensionDelta", "extension_edge_count",
    "best_pair_extensions", "maximal_isg", "interval_sizes", "maximal_report", "extension_argmax_report",
    "h_graph", "best_h_pair", "interval_extension_size",
]
