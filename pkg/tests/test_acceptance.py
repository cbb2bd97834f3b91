"""Acceptance criteria 1-10, exact tolerance.

Each test prints one ``PASS``/``FAIL`` line. Run ``python tests/test_acceptance.py``
for the bare summary or ``pytest tests/test_acceptance.py -s``.
"""

import sys
import time
from math import comb

import networkx as nx
import pytest

from sumgraphs import FamilySpec, G0n, Gmn, Gn, build_sum_graph, complement, generate
from sumgraphs import coloring, decomposition, formulas, shapes, structure
from sumgraphs.oracle import (chromatic_number_bf, clique_number_bf, count_c4_bf, count_triangles_bf,
                              hamiltonian_cycle_bf, is_hamiltonian_cycle, is_perfect_bf, is_proper_edge_coloring,
                              is_proper_vertex_coloring, verify_sum_labeling)
from sumgraphs.report import LABELERS

RESULTS: dict[int, bool] = {}


def _nx(G):
    H = nx.Graph()
    H.add_nodes_from(G.labels)
    H.add_edges_from(G.edges)
    return H


def _report(capsys, n: int, title: str, failures: list[str]) -> None:
    ok = not failures
    RESULTS[n] = ok
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {title}"
    if failures:
        line += " | " + "; ".join(failures[:5])
    with capsys.disabled():
        print("\n" + line, flush=True)
    assert ok, line


def _timed(limit: float, fails: list[str], start: float) -> None:
    took = time.perf_counter() - start
    if took >= limit:
        fails.append(f"runtime {took:.1f}s >= {limit:.0f}s")


def test_criterion_1_edge_counts(capsys):
    t0, fails = time.perf_counter(), []
    for n in range(2, 25):
        want, got = formulas.edge_count(Gn(n)), build_sum_graph(range(1, n + 1)).size
        if want != got:
            fails.append(f"G_{n}: {want} != {got}")
    for m in range(1, 11):
        for n in range(1, 11):
            want, got = formulas.edge_count(Gmn(m, n)), build_sum_graph(range(-m, n + 1)).size
            if want != got:
                fails.append(f"G_-{m},{n}: {want} != {got}")
    _timed(1, fails, t0)
    _report(capsys, 1, "edge-count formulas equal brute counts", fails)


G7_EDGES = [(1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (2, 3), (2, 4), (2, 5), (3, 4)]


def test_criterion_2_reference_graphs(capsys):
    fails = []
    if list(generate(Gn(7)).edges) != G7_EDGES:
        fails.append("G_7 edge list")
    if generate(Gmn(2, 2)).size != 8:
        fails.append("||G_-2,2|| != 8")
    if generate(Gmn(3, 3)).size != 17:
        fails.append("||G_-3,3|| != 17")
    _report(capsys, 2, "reference graphs G_7, G_-2,2, G_-3,3", fails)


def test_criterion_3_cycle_counts(capsys):
    t0, fails = time.perf_counter(), []
    for m in range(1, 7):
        for n in range(1, 7):
            G = generate(Gmn(m, n))
            Gc = complement(G)
            checks = [
                ("c3", formulas.c3_count(m, n), count_triangles_bf(G)),
                ("c3^c", formulas.c3_count(m, n, "complement"), count_triangles_bf(Gc)),
                ("c4", formulas.c4_count(Gmn(m, n)), count_c4_bf(G)),
                ("c4^c", formulas.c4_count(FamilySpec("GmnComplement", n, m)), count_c4_bf(Gc)),
            ]
            fails += [f"{k}(G_-{m},{n}): {a} != {b}" for k, a, b in checks if a != b]
    for n in range(3, 21):
        lhs = count_triangles_bf(generate(Gn(n)))
        rhs = count_triangles_bf(generate(Gn(n - 2))) + generate(Gn(n - 2)).size
        if lhs != rhs or formulas.c3_gn(n) != lhs:
            fails.append(f"triangle recurrence at n={n}")
    _timed(30, fails, t0)
    _report(capsys, 3, "triangle and 4-cycle counts equal enumeration", fails)


def test_criterion_4_chromatic(capsys):
    fails = []
    cases = [(Gn(13), 7, 11), (Gmn(5, 7), 8, 12), (Gmn(8, 3), None, 11)]
    for spec, chi, chi_p in cases:
        G = generate(spec)
        if chi is not None:
            vc = coloring.vertex_color(spec)
            chk = is_proper_vertex_coloring(G, vc.colors)
            if not chk.proper or chk.num_colors != chi:
                fails.append(f"chi({spec.name()}) coloring {chk}")
        ec = coloring.edge_color(spec)
        chk = is_proper_edge_coloring(G, ec.colors)
        if not chk.proper or chk.num_colors != chi_p:
            fails.append(f"chi'({spec.name()}) coloring {chk}")
    inv = formulas.family_invariants(Gn(13))
    if (inv.chi, inv.omega, inv.chi_prime) != (7, 7, 11):
        fails.append(f"G_13 formulas {inv}")
    specs = [Gn(n) for n in range(1, 11)] + [G0n(n) for n in range(1, 10)]
    specs += [Gmn(m, n) for m in range(1, 10) for n in range(1, 10) if m + n + 1 <= 10]
    for spec in specs:
        G = generate(spec)
        inv = formulas.family_invariants(spec)
        if (inv.chi, inv.omega) != (chromatic_number_bf(G), clique_number_bf(G)):
            fails.append(f"chi/omega({spec.name()})")
    _report(capsys, 4, "chromatic claims for G_13, G_-5,7, G_-8,3 and exact oracles to order 10", fails)


def test_criterion_5_perfectness(capsys):
    fails = []
    specs = [Gn(n) for n in range(1, 10)] + [G0n(n) for n in range(1, 9)]
    specs += [Gmn(r, n) for r in range(1, 9) for n in range(1, 9) if r + n + 1 <= 9]
    fails += [s.name() for s in specs if not is_perfect_bf(generate(s))]
    if is_perfect_bf(shapes.cycle(5)):
        fails.append("C_5 reported perfect")
    _report(capsys, 5, "perfectness at desk scale with a C_5 control", fails)


def test_criterion_6_edge_sum_classes(capsys):
    fails = []
    for m in range(1, 11):
        for n in range(1, 11):
            G = generate(Gmn(m, n))
            part = coloring.edge_sum_partition(G).nonempty
            if len(part) != m + n + 1:
                fails.append(f"chi''(G_-{m},{n}) = {len(part)}")
            if sorted(e for c in part.values() for e in c) != sorted(G.edges):
                fails.append(f"classes of G_-{m},{n} do not partition E")
            if any(len({v for e in c for v in e}) != 2 * len(c) for c in part.values()):
                fails.append(f"non-matching class in G_-{m},{n}")
    fails += [f"G_0,{n} not edge-sum perfect" for n in range(1, 11)
              if not coloring.is_edge_sum_perfect(generate(G0n(n)))]
    fails += [f"G_-1,{n} edge-sum perfect" for n in range(2, 11)
              if coloring.is_edge_sum_perfect(generate(Gmn(1, n)))]
    _report(capsys, 6, "edge-sum classes and edge-sum perfectness", fails)


REFERENCE_LABELS = [
    ("stars", (3, 5, 6), {}, [-76, 0, 1, 2, 3, 5, 7, 14, 21, 35, 49, 63, 77, 153, 229, 305, 381, 457]),
    ("banana", (3, 5, 6), {"x": 1, "y": 2},
     [-69, 1, 2, 3, 5, 8, 11, 12, 23, 35, 47, 59, 71, 72, 141, 210, 279, 348]),
    ("tbbm", (6, 6), {}, [0, 12, 13, 25, 37, 49, 61, 73, 85]),
    ("fanhandle", (6, 3), {}, [0, 2, 3, 5, 8, 13, 21, 34]),
]


def test_criterion_7_labelings(capsys):
    fails = []
    cases = [("fan", (n,), {}, None) for n in range(5, 13)]
    cases += [("windmill", (m,), {}, None) for m in range(1, 7)]
    cases += REFERENCE_LABELS
    for shape, params, kwargs, labels in cases:
        lab = LABELERS[shape]
        G = lab.build(*params, **kwargs)
        tag = f"{shape}{params}"
        if not verify_sum_labeling(G):
            fails.append(f"{tag} not a sum labeling")
        if not nx.is_isomorphic(_nx(G), _nx(lab.reference(*params))):
            fails.append(f"{tag} wrong shape")
        if labels is not None and list(G.labels) != labels:
            fails.append(f"{tag} labels {list(G.labels)}")
    _report(capsys, 7, "labelings verify, have the intended shape, and match the reference labels", fails)


def test_criterion_8_hamiltonicity(capsys):
    t0, fails = time.perf_counter(), []
    for n in range(3, 13):
        if not is_hamiltonian_cycle(generate(Gmn(1, n - 2)), structure.hamiltonian_gdelta(n)):
            fails.append(f"G_Delta{n}")
    for m in range(1, 7):
        for n in range(1, 7):
            if not is_hamiltonian_cycle(generate(Gmn(m, n)), structure.hamiltonian_gmn(m, n)):
                fails.append(f"G_-{m},{n}")
    fails += [f"G_0,{n} Hamiltonian" for n in range(2, 11) if hamiltonian_cycle_bf(generate(G0n(n))) is not None]
    _timed(10, fails, t0)
    _report(capsys, 8, "Hamiltonian cycles and G_0,n non-Hamiltonicity", fails)


MAXIMAL_TABLE = {
    3: {(1, 1)}, 4: {(1, 2)}, 5: {(2, 2), (1, 3)}, 6: {(2, 3)}, 7: {(3, 3)}, 8: {(3, 4)}, 9: {(4, 4), (3, 5)},
}


def test_criterion_9_maximality(capsys):
    fails = []
    for order, want in MAXIMAL_TABLE.items():
        got = {(s.m, s.n) for s in structure.maximal_isg(order)}
        if got != want:
            fails.append(f"maximal_isg({order}) = {sorted(got)}")
        top = max(structure.interval_sizes(order).values())
        fails += [f"G_-{m},{n} below the order-{order} maximum" for m, n in want
                  if generate(Gmn(m, n)).size != top]
    for m in range(2, 6):
        target = structure.interval_extension_size(m, (m + 1, -m - 1))
        best, _ = structure.best_pair_extensions(m)
        if best != target:
            fails.append(f"m={m}: window maximum {best} != {target}")
        _, arg = structure.best_pair_extensions(m, opposite_signs=True)
        if arg != {frozenset({m + 1, -m - 1})}:
            fails.append(f"m={m}: opposite-sign argmax {sorted(map(sorted, arg))}")
    for m in range(1, 7):
        if formulas.max_size_Mn(2 * m + 1) != generate(Gmn(m, m)).size:
            fails.append(f"M(2*{m}+1)")
    _report(capsys, 9, "maximal interval graphs and best two-label extension", fails)


def test_criterion_10_decompositions(capsys):
    t0, fails = time.perf_counter(), []
    built = [
        (decomposition.cmsd_kn_books(8), [1, 5, 9, 13]),
        (decomposition.cmsd_kn_books(7), [3, 7, 11]),
        (decomposition.cmsd_g0n_books(12), [6, 14, 22]),
        (decomposition.cmsd_g0n_fans(10), [2, 10, 18]),
    ]
    for D, sizes in built:
        if D.sizes != sizes:
            fails.append(f"sizes {D.sizes} != {sizes}")
        rep = decomposition.validate(D)
        if not rep.ok:
            fails.append(f"invalid: {[c.claim_id for c in rep.failures()]}")
    for n, a, d in [(4, 2, 2), (5, 4, 2), (8, 4, 2), (9, 6, 2)]:
        D = decomposition.search_fan_cmsd(n, a, d)
        if D is None or not decomposition.validate(D).ok or sum(D.sizes) != comb(n, 2):
            fails.append(f"search K_{n} ({a},{d})")
    for n in (6, 7):
        total = comb(n, 2)
        for a in range(1, total + 1):
            for d in range(1, total + 1):
                if decomposition.search_fan_cmsd(n, a, d) is not None:
                    fails.append(f"K_{n} ({a},{d}) found")
    _timed(120, fails, t0)
    _report(capsys, 10, "CMSD constructions and fan search", fails)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
