"""Batch verification: every construction and formula against the oracles.

``build_report(max_n)`` runs a fixed matrix of checks whose size grows with
``max_n`` and returns entries in a stable order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Optional, Sequence

from . import coloring, decomposition as dec, formulas, labelings, shapes, structure
from .core import FamilySpec, G0n, Gmn, Gn, LabeledGraph, generate
from .errors import ValidationError
from .oracle import (cap, count_c4_bf, count_open_p3_bf, count_triangles_bf, exact_invariants_bf,
                     hamiltonian_cycle_bf, is_hamiltonian_cycle, is_isomorphic, is_perfect_bf,
                     is_proper_edge_coloring, is_proper_vertex_coloring, verify_sum_labeling)

MAX_REPORT_N = 16


def _plain(x: Any) -> Any:
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (set, frozenset)):
        return sorted(_plain(v) for v in x)
    return x


@dataclass(frozen=True)
class Entry:
    claim_id: str
    expected: Any
    actual: Any
    passed: bool

    def as_dict(self) -> dict:
        return {"claim_id": self.claim_id, "expected": _plain(self.expected), "actual": _plain(self.actual),
                "pass": self.passed}


@dataclass
class Report:
    entries: list[Entry] = field(default_factory=list)

    def add(self, claim_id: str, expected: Any, actual: Any, passed: Optional[bool] = None) -> None:
        ok = expected == actual if passed is None else passed
        self.entries.append(Entry(claim_id, expected, actual, bool(ok)))

    def absorb(self, prefix: str, rep: structure.VerificationReport) -> None:
        for c in rep.claims:
            self.entries.append(Entry(f"{prefix}: {c.claim_id}", c.formula_value, c.oracle_value, c.passed))

    @property
    def ok(self) -> bool:
        return all(e.passed for e in self.entries)

    def summary(self) -> dict:
        passed = sum(e.passed for e in self.entries)
        return {"total": len(self.entries), "passed": passed, "failed": len(self.entries) - passed}

    def as_dict(self) -> dict:
        return {"entries": [e.as_dict() for e in self.entries], "summary": self.summary()}


# --- labelers by CLI shape name ------------------------------------------------


@dataclass(frozen=True)
class Labeler:
    arity: str
    build: Callable[..., LabeledGraph]
    reference: Callable[..., LabeledGraph]


def _sizes(*xs: int) -> tuple[int, ...]:
    return tuple(sorted(xs))


LABELERS: dict[str, Labeler] = {
    "fan": Labeler("n", lambda n: labelings.label_fan(n), lambda n: shapes.fan(n)),
    "windmill": Labeler("m", lambda m: labelings.label_windmill(m), lambda m: shapes.windmill(m)),
    "stars": Labeler("n1 ... nt", lambda *s: labelings.label_union_stars_apex(_sizes(*s)),
                     lambda *s: shapes.stars_with_apex(_sizes(*s))),
    "banana": Labeler("n1 ... nt (with --x, --y)",
                      lambda *s, x=1, y=2: labelings.label_banana_tree(_sizes(*s), x, y),
                      lambda *s: shapes.banana_tree(_sizes(*s))),
    "tbbm": Labeler("n m", lambda n, m: labelings.label_triangular_book_bookmark(n, m),
                    lambda n, m: shapes.triangular_book_bookmark(n)),
    "fanhandle": Labeler("n m", lambda n, m: labelings.label_fan_handle(n, m),
                         lambda n, m: shapes.fan_with_handle(n)),
}


def shape_check(G: LabeledGraph, ref: LabeledGraph) -> Optional[bool]:
    """Oracle isomorphism to the reference shape, or None above the cap."""
    if max(G.order, ref.order) > cap("isomorphism"):
        return None
    return bool(is_isomorphic(G, ref))


# reference labelings: (shape, params, kwargs, exact label set)
LABEL_FIXTURES = {
    "union-of-stars (3,5,6)": ("stars", (3, 5, 6), {},
                               (-76, 0, 1, 2, 3, 5, 7, 14, 21, 35, 49, 63, 77, 153, 229, 305, 381, 457)),
    "banana (3,5,6) x=1 y=2": ("banana", (3, 5, 6), {"x": 1, "y": 2},
                               (-69, 1, 2, 3, 5, 8, 11, 12, 23, 35, 47, 59, 71, 72, 141, 210, 279, 348)),
    "book with bookmark (6,6)": ("tbbm", (6, 6), {}, (0, 12, 13, 25, 37, 49, 61, 73, 85)),
    "fan with handle (6,3)": ("fanhandle", (6, 3), {}, (0, 2, 3, 5, 8, 13, 21, 34)),
}


# --- sections ----------------------------------------------------------------


def _families(N: int, cap_mn: int) -> list[FamilySpec]:
    out = [Gn(n) for n in range(1, N + 1)] + [G0n(n) for n in range(1, N + 1)]
    out += [Gmn(m, n) for m in range(1, min(N, cap_mn) + 1) for n in range(1, min(N, cap_mn) + 1)]
    return out


def _counts(rep: Report, N: int) -> None:
    for f in _families(N, 10):
        G = generate(f)
        rep.add(f"edge_count({f.name()})", formulas.edge_count(f), G.size)
        rep.add(f"degrees({f.name()})", [formulas.degree(f, v) for v in G.labels], [G.degree(v) for v in G.labels])
    for n in range(1, N + 1):
        rep.add(f"open_p3({Gn(n).name()})", formulas.open_p3_count(n), count_open_p3_bf(generate(Gn(n))))
    for f in _families(N, 6):
        if f.order > 13:
            continue
        for kind in (f.kind, f.kind + "Complement"):
            g = FamilySpec(kind, f.n, f.m)
            G = generate(g)
            rep.add(f"c3({g.name()})", formulas.c3_family(g), count_triangles_bf(G))
            rep.add(f"c4({g.name()})", formulas.c4_count(g), count_c4_bf(G))
    for n in range(3, N + 1):
        rep.add(f"c3 recurrence at G_{n}", formulas.c3_gn(n - 2) + formulas.edge_count(Gn(n - 2)),
                formulas.c3_gn(n))


def _invariants(rep: Report, N: int) -> None:
    for f in _families(N, 10):
        if f.order > 10:
            continue
        want = formulas.family_invariants(f).as_dict()
        got = exact_invariants_bf(generate(f))
        rep.add(f"invariants({f.name()})", want, {k: getattr(got, k) for k in want})


def _perfect(rep: Report, N: int) -> None:
    for f in _families(N, 8):
        if f.order > 9:
            continue
        rep.add(f"perfect({f.name()})", True, is_perfect_bf(generate(f)))
    if N >= 5:
        rep.add("perfect(C_5) control", False, is_perfect_bf(shapes.cycle(5)))


def _colorings(rep: Report, N: int) -> None:
    for f in _families(N, 10):
        G = generate(f)
        inv = formulas.family_invariants(f)
        vc = coloring.vertex_color(f)
        chk = is_proper_vertex_coloring(G, vc.colors)
        rep.add(f"vertex colouring of {f.name()}: proper, omega colours", [True, inv.omega], [chk.proper, chk.num_colors])
        if G.size:
            ec = coloring.edge_color(f)
            chk = is_proper_edge_coloring(G, ec.colors)
            rep.add(f"chi_prime({f.name()}): proper edge colouring with the formula count",
                    [True, inv.chi_prime], [chk.proper, chk.num_colors])
            rep.add(f"chi_prime({f.name()}) lower bound by max degree", True,
                    inv.chi_prime >= G.max_degree())
    for name in sorted(coloring.FIXTURES):
        fam = coloring.FIXTURE_FAMILIES[name]
        if max(fam.n, fam.m) <= N:
            rep.add(f"edge colouring table {name}", True, coloring.compare_fixture(name)["match"])


def _edge_sums(rep: Report, N: int) -> None:
    for f in _families(N, 10):
        if f.base != "Gmn":
            continue
        G = generate(f)
        part = coloring.edge_sum_partition(G)
        cls = part.nonempty.values()
        matchings = all(len({v for e in c for v in e}) == 2 * len(c) for c in cls)
        cover = sorted(e for c in cls for e in c) == list(G.edges)
        rep.add(f"edge-sum classes of {f.name()}", [f.m + f.n + 1, True, True],
                [part.chi_double_prime, matchings, cover])
    for n in range(1, min(N, 10) + 1):
        rep.add(f"edge-sum perfect {G0n(n).name()}", True, coloring.is_edge_sum_perfect(generate(G0n(n))))
        if n >= 2:
            rep.add(f"edge-sum perfect {Gmn(1, n).name()}", False, coloring.is_edge_sum_perfect(generate(Gmn(1, n))))


def _label_entry(rep: Report, shape: str, params: Sequence[int], kwargs: dict, labels=None) -> None:
    lab = LABELERS[shape]
    G = lab.build(*params, **kwargs)
    iso = shape_check(G, lab.reference(*params))
    tag = f"label {shape}{tuple(params)}"
    rep.add(f"{tag} is a sum labeling", True, verify_sum_labeling(G))
    if iso is not None:
        rep.add(f"{tag} has the intended shape", True, iso)
    if labels is not None:
        rep.add(f"{tag} printed labels", list(labels), list(G.labels))


def _labelings(rep: Report, N: int) -> None:
    for n in range(5, N + 1):
        _label_entry(rep, "fan", (n,), {})
    for m in range(1, min(6, N // 2) + 1):
        _label_entry(rep, "windmill", (m,), {})
    for n in range(3, N + 1):
        _label_entry(rep, "fanhandle", (n, 2), {})
    for n in range(1, N + 1):
        _label_entry(rep, "tbbm", (n, 1), {})
    for name, (shape, params, kwargs, labels) in LABEL_FIXTURES.items():
        if max(params) > N:
            continue
        _label_entry(rep, shape, params, kwargs, labels)


def _hamiltonian(rep: Report, N: int) -> None:
    for n in range(3, N + 1):
        cyc = structure.hamiltonian_gdelta(n)
        rep.add(f"Hamiltonian cycle of G_Delta{n}", True, is_hamiltonian_cycle(generate(Gmn(1, n - 2)), cyc))
    for m in range(1, min(N, 6) + 1):
        for n in range(1, min(N, 6) + 1):
            if m + n + 1 < 3:
                continue
            cyc = structure.hamiltonian_gmn(m, n)
            rep.add(f"Hamiltonian cycle of {Gmn(m, n).name()}", True, is_hamiltonian_cycle(generate(Gmn(m, n)), cyc))
    for n in range(2, min(N, 10) + 1):
        rep.add(f"{G0n(n).name()} is not Hamiltonian", None, hamiltonian_cycle_bf(generate(G0n(n))))


def _structure(rep: Report, N: int) -> None:
    for n in range(1, N + 1):
        rep.absorb("complement", structure.check_complement_identities(n))
    for n in range(1, min(N, 11) + 1):
        rep.absorb("vertex deletion", structure.check_vertex_deletion(n))
    for n in range(3, N + 1):
        for j in range(1, n // 2 + 1):
            H = structure.remove_supplementary(n, j)
            rep.add(f"G_{n} minus pair {{{j},{n + 1 - j}}} has the size of G_{n - 2}",
                    formulas.edge_count(Gn(n - 2)), H.size)
        grown = structure.grow_gn(generate(Gn(n - 2)))
        rep.add(f"growth G_{n - 2} -> G_{n}", list(generate(Gn(n)).edges), list(grown.edges))
    for order in range(3, min(N, 9) + 1):
        rep.absorb("maximal", structure.maximal_report(order))
    for m in range(2, min(5, N // 2) + 1):
        rep.absorb("extension", structure.extension_argmax_report(m))
    for m in range(1, min(6, (N - 1) // 2) + 1):
        rep.add(f"M_{2 * m + 1} = ||G_-{m},{m}||", formulas.max_size_Mn(2 * m + 1), generate(Gmn(m, m)).size)
    for n in range(3, N + 1):
        rep.add(f"largest interval integral sum graph of order {n}", formulas.max_interval_size(n),
                max(structure.interval_sizes(n).values()))


def _dec_entry(rep: Report, name: str, D: dec.Decomposition, target: str) -> None:
    rep.absorb(name, dec.validate(D))
    n = D.host.order - (1 if target == "G0n" else 0)
    rep.add(f"{name}: parity condition agrees with the construction", True,
            dec.feasibility(target, D.scheme.shape, n).feasible)


def _decompositions(rep: Report, N: int) -> None:
    for n in range(3, N + 1):
        _dec_entry(rep, f"K_{n} books", dec.cmsd_kn_books(n), "Kn")
        _dec_entry(rep, f"K_{n} stars", dec.cmd_kn_stars(n), "Kn")
    for n in range(4, N + 1):
        _dec_entry(rep, f"G_0,{n} books", dec.cmsd_g0n_books(n, "step8"), "G0n")
        if n % 2 == 0:
            _dec_entry(rep, f"G_0,{n} books (2,2)", dec.cmsd_g0n_books(n, "step2"), "G0n")
        _dec_entry(rep, f"G_0,{n} fans", dec.cmsd_g0n_fans(n), "G0n")
        if n % 4 == 1:
            for shape in ("tb-bookmark", "fan-handle"):
                rep.add(f"G_0,{n} {shape} parity obstruction", False, dec.feasibility("G0n", shape, n).feasible)
    for n, a, d in ((4, 2, 2), (5, 4, 2), (8, 4, 2), (9, 6, 2)):
        if n <= N:
            D = dec.search_fan_cmsd(n, a, d)
            rep.add(f"fan search K_{n} ({a},{d}) finds a decomposition", True, D is not None)
            if D is not None:
                rep.absorb(f"fan search K_{n}", dec.validate(D))
    for n in (6, 7):
        if n <= N:
            found = [(a, d) for a in range(2, n * (n - 1) // 2 + 1, 2) for d in range(1, n * (n - 1) // 2)
                     if dec.search_fan_cmsd(n, a, d) is not None]
            rep.add(f"fan search K_{n}: no (a,d) succeeds", [], found)


SECTIONS = (_counts, _invariants, _perfect, _colorings, _edge_sums, _labelings, _hamiltonian, _structure,
            _decompositions)


def build_report(max_n: int) -> Report:
    if isinstance(max_n, bool) or not isinstance(max_n, int) or not 1 <= max_n <= MAX_REPORT_N:
        raise ValidationError(f"max_n must be an integer in [1, {MAX_REPORT_N}]")
    rep = Report()
    for section in SECTIONS:
        section(rep, max_n)
    return rep


__all__ = ["Entry", "Report", "LABELERS", "LABEL_FIXTURES", "build_report", "shape_check",
           "MAX_REPORT_N"]
