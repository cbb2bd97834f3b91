"""Randomized invariants across modules."""

from hypothesis import assume, given
from hypothesis import strategies as st

from sumgraphs import (FamilySpec, LabeledGraph, build_sum_graph, complement, generate, graph_join, parse,
                       serialize)
from sumgraphs.coloring import edge_color, edge_sum_partition, vertex_color
from sumgraphs.decomposition import cmd_kn_stars, cmsd_g0n_books, cmsd_g0n_fans, cmsd_kn_books, validate
from sumgraphs.formulas import edge_count
from sumgraphs.labelings import (label_banana_tree, label_fan, label_fan_handle, label_triangular_book_bookmark,
                                 label_union_stars_apex, label_windmill)
from sumgraphs.oracle import (check_isomorphism_mapping, exact_invariants_bf, hamiltonian_cycle_bf, is_isomorphic,
                              is_proper_edge_coloring, is_proper_vertex_coloring, verify_sum_labeling)
from sumgraphs.structure import h_graph

label_sets = st.sets(st.integers(-20, 20), min_size=1, max_size=12)
small_graphs = st.integers(1, 7).flatmap(
    lambda n: st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
                      .filter(lambda e: e[0] != e[1]), max_size=15)
    .map(lambda es: LabeledGraph.from_edges(range(n), es)))
families = st.one_of(
    st.integers(1, 30).map(lambda n: FamilySpec("Gn", n)),
    st.integers(1, 30).map(lambda n: FamilySpec("G0n", n)),
    st.tuples(st.integers(1, 15), st.integers(1, 15)).map(lambda p: FamilySpec("Gmn", p[1], p[0])),
)


# --- core --------------------------------------------------------------------


@given(label_sets)
def test_build_then_verify(S):
    assert verify_sum_labeling(build_sum_graph(S))


@given(label_sets)
def test_negation_preserves_edges(S):
    G, H = build_sum_graph(S), build_sum_graph({-x for x in S})
    assert G.relabel({x: -x for x in S}).edge_set() == H.edge_set()


@given(label_sets, st.integers(-5, 5).filter(bool))
def test_scaling_preserves_edges(S, k):
    G, H = build_sum_graph(S), build_sum_graph({k * x for x in S})
    assert G.relabel({x: k * x for x in S}).edge_set() == H.edge_set()


@given(st.sets(st.integers(1, 40), min_size=1, max_size=12))
def test_max_positive_label_isolated(S):
    assert build_sum_graph(S).degree(max(S)) == 0


@given(st.integers(1, 12), st.integers(1, 12))
def test_gmn_is_join(m, n):
    neg, pos = build_sum_graph(range(-m, 0)), build_sum_graph(range(1, n + 1))
    joined = graph_join(graph_join(build_sum_graph([0]), neg), pos)
    assert generate(FamilySpec("Gmn", n, m)).edge_set() == joined.edge_set()


@given(st.integers(1, 30))
def test_gn_edge_count(n):
    assert generate(FamilySpec("Gn", n)).size == (n - 1) ** 2 // 4 == edge_count(FamilySpec("Gn", n))


@given(label_sets)
def test_complement_involution(S):
    G = build_sum_graph(S)
    assert complement(complement(G)) == G
    assert complement(G).size + G.size == G.order * (G.order - 1) // 2


@given(label_sets)
def test_serialize_round_trip(S):
    G = build_sum_graph(S)
    assert parse(serialize(G)) == G


@given(families)
def test_families_verify(spec):
    assert verify_sum_labeling(generate(spec))


# --- oracle ------------------------------------------------------------------


@given(small_graphs)
def test_isomorphism_reflexive_symmetric(G):
    perm = {v: (v * 3 + 1) % 7 + 10 for v in G.labels}
    H = G.relabel(perm)
    for A, B in ((G, G), (G, H), (H, G)):
        cert = is_isomorphic(A, B)
        assert cert.valid and check_isomorphism_mapping(A, B, cert.mapping)


@given(small_graphs)
def test_gallai_identities(G):
    assume(G.is_connected() and G.order >= 2)
    inv = exact_invariants_bf(G)
    assert inv.alpha0 + inv.beta0 == G.order == inv.alpha1 + inv.beta1


@given(small_graphs)
def test_hamiltonian_walk(G):
    cyc = hamiltonian_cycle_bf(G)
    if cyc is not None:
        assert sorted(cyc) == sorted(G.labels)
        assert all(G.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))


# --- colourings --------------------------------------------------------------


@given(label_sets)
def test_edge_sum_classes(S):
    G = build_sum_graph(S)
    part = edge_sum_partition(G).nonempty
    edges = [e for c in part.values() for e in c]
    assert sorted(edges) == sorted(G.edges)
    for s, c in part.items():
        assert s in S and all(a + b == s for a, b in c)
        assert len({v for e in c for v in e}) == 2 * len(c)


def test_k3_is_class_two():
    ec = edge_color(FamilySpec("Gmn", 1, 1))
    assert ec.num_colors == 3 == generate(FamilySpec("Gmn", 1, 1)).max_degree() + 1


@given(st.tuples(st.integers(1, 13), st.integers(1, 13)).filter(lambda p: 3 <= p[0] + p[1] <= 14))
def test_gmn_colourings(p):
    r, n = p
    spec = FamilySpec("Gmn", n, r)
    G = generate(spec)
    ec = edge_color(spec)
    chk = is_proper_edge_coloring(G, ec.colors)
    assert chk.proper and chk.num_colors == G.max_degree()
    vc = vertex_color(spec)
    assert is_proper_vertex_coloring(G, vc.colors).proper


# --- labelings ---------------------------------------------------------------


ascending = st.lists(st.integers(1, 4), min_size=1, max_size=4).map(sorted)


@given(st.integers(5, 14))
def test_fan_outputs(n):
    G = label_fan(n)
    assert verify_sum_labeling(G)
    assert sum(1 for d in G.degrees().values() if d == n) == 1


@given(st.integers(1, 6))
def test_windmill_outputs(m):
    G = label_windmill(m)
    assert verify_sum_labeling(G) and G.order == 2 * m + 1 and G.size == 3 * m


@given(ascending, st.integers(1, 4), st.integers(1, 4))
def test_banana_outputs(sizes, x, dy):
    G = label_banana_tree(sizes, x, x + dy)
    assert verify_sum_labeling(G)
    assert sum(1 for v in G.labels if v < 0) == 1
    assert G.order == 1 + len(sizes) + sum(sizes) and G.size == G.order - 1


@given(st.lists(st.integers(1, 4), min_size=2, max_size=4).map(sorted))
def test_union_of_stars_outputs(sizes):
    G = label_union_stars_apex(sizes)
    assert verify_sum_labeling(G)


@given(st.integers(3, 9), st.integers(2, 9))
def test_book_and_handle_outputs(n, m):
    assert verify_sum_labeling(label_triangular_book_bookmark(n, m))
    assert verify_sum_labeling(label_fan_handle(n, m))


# --- structure and decompositions -------------------------------------------


@given(st.integers(0, 6), st.integers(0, 6), st.data())
def test_h_graph_closure(m, n, data):
    X = data.draw(st.sets(st.integers(1, m), max_size=m)) if m else set()
    Y = data.draw(st.sets(st.integers(1, n), max_size=n)) if n else set()
    H = h_graph(m, n, X, Y)
    labels = set(H.labels)
    for a in H.labels:
        for b in H.labels:
            if a < b:
                assert H.has_edge(a, b) == (a + b in labels and (a + b) not in {-i for i in X} | Y)


@given(st.integers(3, 16))
def test_kn_decompositions_cover(n):
    for D in (cmsd_kn_books(n), cmd_kn_stars(n)):
        assert validate(D).ok and sum(D.sizes) == n * (n - 1) // 2


@given(st.integers(4, 16))
def test_g0n_decompositions_cover(n):
    for D in (cmsd_g0n_books(n), cmsd_g0n_fans(n)):
        assert validate(D).ok and sum(D.sizes) == edge_count(FamilySpec("G0n", n))
