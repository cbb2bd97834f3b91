import pytest

from sumgraphs import CapacityError, ValidationError, G0n, Gmn, Gn, LabeledGraph, build_sum_graph, complement, generate
from sumgraphs import oracle
from sumgraphs.oracle import (count_c4_bf, count_open_p3_bf, count_triangles_bf, exact_invariants_bf,
                              hamiltonian_cycle_bf, is_hamiltonian_cycle, is_isomorphic, is_perfect_bf,
                              is_proper_edge_coloring, is_proper_vertex_coloring, verify_anti_sum_labeling,
                              verify_sum_labeling)
from sumgraphs.shapes import cycle

K3 = LabeledGraph.from_edges((1, 2, 3), [(1, 2), (1, 3), (2, 3)])


def test_verify_sum_labeling_examples():
    G7 = generate(Gn(7))
    assert verify_sum_labeling(G7)
    assert not verify_sum_labeling(LabeledGraph(G7.labels, G7.edges + ((6, 7),)))
    labels = [0, 1, 3, 4, 8, -11, 12, -35, 24, -83, 48]
    pairs = [(1, 3), (4, 8), (-11, 12), (-35, 24), (-83, 48)]
    edges = [e for u, v in pairs for e in ((0, u), (0, v), (u, v))]
    assert len(edges) == 15
    assert verify_sum_labeling(LabeledGraph.from_edges(labels, edges))


def test_positive_only_mode():
    assert verify_sum_labeling(generate(Gn(5)), positive_only=True)
    assert not verify_sum_labeling(generate(G0n(5)), positive_only=True)


def test_verify_anti_sum_labeling_examples():
    G7 = generate(Gn(7))
    assert verify_anti_sum_labeling(complement(G7))
    assert not verify_anti_sum_labeling(G7)
    assert verify_anti_sum_labeling(LabeledGraph((5,), ()))


def test_counts_examples():
    G = generate(Gmn(2, 2))
    assert count_triangles_bf(G) == 4
    assert count_c4_bf(G) == 5
    assert (count_triangles_bf(K3), count_c4_bf(K3), count_open_p3_bf(K3)) == (1, 0, 0)
    assert count_c4_bf(cycle(4)) == 1
    assert count_open_p3_bf(generate(Gn(4))) == 1


def test_isomorphism_examples():
    cert = is_isomorphic(generate(G0n(6)), complement(generate(Gn(7))))
    assert cert.valid and oracle.check_isomorphism_mapping(generate(G0n(6)), complement(generate(Gn(7))),
                                                           cert.mapping)
    assert not is_isomorphic(generate(Gn(5)), generate(Gn(6)))
    G7c = complement(generate(Gn(7))).remove_edges([(1, 7), (2, 6), (3, 5)])
    assert is_isomorphic(generate(Gn(7)), G7c)


def test_isomorphism_cap():
    with pytest.raises(CapacityError):
        is_isomorphic(generate(Gn(13)), generate(Gn(13)))


def test_cap_override(monkeypatch):
    monkeypatch.setenv("SUMGRAPH_MAX_ORDER", "3")
    with pytest.raises(CapacityError):
        is_isomorphic(generate(Gn(4)), generate(Gn(4)))


def test_hamiltonian_examples():
    assert hamiltonian_cycle_bf(generate(G0n(5))) is None
    G = generate(Gmn(2, 3))
    cyc = hamiltonian_cycle_bf(G)
    assert cyc is not None and len(cyc) == 6 and is_hamiltonian_cycle(G, cyc)
    assert sorted(hamiltonian_cycle_bf(K3)) == [1, 2, 3]
    assert not is_hamiltonian_cycle(K3, (1, 2))


def test_invariants_examples():
    inv = exact_invariants_bf(generate(Gn(13)))
    assert (inv.omega, inv.chi, inv.chi_prime) == (7, 7, 11)
    empty = exact_invariants_bf(LabeledGraph((1, 2, 3, 4), ()))
    assert (empty.omega, empty.chi, empty.alpha0, empty.beta0, empty.alpha1) == (1, 1, 0, 4, None)


def test_perfect_examples():
    assert is_perfect_bf(generate(Gn(9)))
    assert not is_perfect_bf(cycle(5))
    assert is_perfect_bf(generate(Gmn(2, 3)))


def test_coloring_checks():
    K2 = LabeledGraph.from_edges((1, 2), [(1, 2)])
    assert not is_proper_vertex_coloring(K2, {1: 1, 2: 1})
    chk = is_proper_vertex_coloring(K3, {1: 1, 2: 2, 3: 3})
    assert chk.proper and chk.num_colors == 3
    assert not is_proper_edge_coloring(K3, {(1, 2): 1, (1, 3): 1, (2, 3): 2})
    with pytest.raises(ValidationError):
        is_proper_edge_coloring(K3, {(1, 2): 1, (1, 3): 2})
