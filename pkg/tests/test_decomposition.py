from math import comb

import pytest

from sumgraphs import CapacityError, LabeledGraph, ValidationError, complete_graph, generate, G0n
from sumgraphs.decomposition import (Decomposition, Scheme, cmd_kn_stars, cmsd_g0n_books, cmsd_g0n_fans,
                                     cmsd_kn_books, feasibility, search_fan_cmsd, validate)


def edges_of(D):
    return [[tuple(e) for e in p.edges] for p in D.parts]


def test_kn_books_examples():
    assert cmsd_kn_books(6).sizes == [1, 5, 9]
    assert cmsd_kn_books(7).sizes == [3, 7, 11]
    D = cmsd_kn_books(3)
    assert D.sizes == [3] and D.parts[0].edges == ((0, 1), (0, 2), (1, 2))
    with pytest.raises(ValidationError):
        cmsd_kn_books(2)


def test_kn_books_spines():
    D = cmsd_kn_books(6)
    # TB_0(4,5), TB_2(2,3), TB_4(0,1) in ascending order
    assert edges_of(D)[0] == [(4, 5)]
    assert edges_of(D)[2][0] == (0, 1)


def test_kn_stars_examples():
    assert cmd_kn_stars(4).sizes == [1, 2, 3]
    assert cmd_kn_stars(3).sizes == [1, 2]
    D = cmd_kn_stars(7)
    assert D.sizes == list(range(1, 7)) and sum(D.sizes) == 21
    assert edges_of(D)[2] == [(0, 3), (1, 3), (2, 3)]
    with pytest.raises(ValidationError):
        cmd_kn_stars(2)


@pytest.mark.parametrize("n", range(3, 17))
def test_kn_families(n):
    books, stars = cmsd_kn_books(n), cmd_kn_stars(n)
    assert validate(books).ok and validate(stars).ok
    m = n // 2
    want = [4 * j + 1 for j in range(m)] if n % 2 == 0 else [4 * j + 3 for j in range(m)]
    assert books.sizes == want
    assert sum(books.sizes) == sum(stars.sizes) == comb(n, 2)


def test_g0n_books_examples():
    D = cmsd_g0n_books(6)
    assert D.scheme == Scheme(2, 2, "tb-bookmark")
    assert edges_of(D) == [
        [(0, 5), (0, 6)],
        [(0, 1), (0, 4), (1, 4), (1, 5)],
        [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (2, 4)],
    ]
    D = cmsd_g0n_books(12)
    assert D.sizes == [6, 14, 22] and D.scheme == Scheme(6, 8, "tb-bookmark")
    assert (0, 12) in D.parts[-1].edges and (0, 1) in D.parts[-1].edges
    D = cmsd_g0n_books(13)
    assert D.sizes == [1, 8, 16, 24] and not D.scheme.is_ap
    assert D.parts[0].edges == ((6, 7),)
    with pytest.raises(ValidationError):
        cmsd_g0n_books(3)


def test_g0n_book_scheme_choice():
    assert cmsd_g0n_books(6, "step8").sizes == [2, 10]
    assert cmsd_g0n_books(12, "step2").sizes == [2, 4, 6, 8, 10, 12]
    with pytest.raises(ValidationError):
        cmsd_g0n_books(7, "step2")
    with pytest.raises(ValidationError):
        cmsd_g0n_books(8, "step3")


def test_g0n_fans_examples():
    assert cmsd_g0n_fans(10).sizes == [2, 10, 18]
    assert cmsd_g0n_fans(12).sizes == [6, 14, 22]
    D = cmsd_g0n_fans(13)
    assert D.sizes == [1, 8, 16, 24] and D.scheme.shape == "fan-handle+p2"
    D = cmsd_g0n_fans(14)
    assert D.sizes == [2, 10, 18, 26] and sum(D.sizes) == generate(G0n(14)).size == 56
    assert validate(D).ok
    with pytest.raises(ValidationError):
        cmsd_g0n_fans(3)


def test_fan_part_structure():
    # the first fan of G_{0,n} collects sums n and n-1 plus the apex 0
    D = cmsd_g0n_fans(10)
    big = D.parts[-1]
    assert all(a + b in (9, 10) or a == 0 for a, b in big.edges)
    assert big.degree(0) == 10 and big.degree(10) == 1


@pytest.mark.parametrize("n", range(4, 17))
def test_g0n_families(n):
    total = generate(G0n(n)).size
    schemes = ["step8"] + (["step2"] if n % 2 == 0 else [])
    for D in [cmsd_g0n_books(n, s) for s in schemes] + [cmsd_g0n_fans(n)]:
        assert validate(D).ok
        assert sum(D.sizes) == total
        if D.scheme.is_ap:
            a, d = D.scheme.a, D.scheme.d
            assert D.sizes == [a + i * d for i in range(len(D.sizes))]
    step8 = cmsd_g0n_books(n, "step8")
    assert {0: (6, 8), 1: (None, None), 2: (2, 8), 3: (4, 8)}[n % 4] == (step8.scheme.a, step8.scheme.d)


def test_feasibility_examples():
    f = feasibility("G0n", "tb-bookmark", 9)
    assert not f and "edge total" in f.reason and "odd" in f.reason
    assert not feasibility("Kn", "fan-handle", 6)
    assert feasibility("Kn", "fan-handle", 8)
    assert not feasibility("G0n", "fan-handle", 13)
    with pytest.raises(ValidationError):
        feasibility("K33", "tb", 4)
    with pytest.raises(ValidationError):
        feasibility("Kn", "wheel", 4)


def test_feasibility_consistent_with_constructions():
    for n in range(4, 17):
        for D in (cmsd_g0n_books(n), cmsd_g0n_fans(n)):
            assert feasibility("G0n", D.scheme.shape, n)
    for n in range(3, 17):
        for D in (cmsd_kn_books(n), cmd_kn_stars(n)):
            assert feasibility("Kn", D.scheme.shape, n)
        assert bool(feasibility("Kn", "fan-handle", n)) == (n % 4 in (0, 1))


def test_validate_detects_duplicate_edge():
    D = cmd_kn_stars(4)
    parts = (D.parts[0], D.parts[1], LabeledGraph.from_edges((0, 1, 3), [(0, 1), (0, 3), (1, 3)]))
    bad = Decomposition(D.host, parts, D.scheme)
    rep = validate(bad)
    fails = {c.claim_id for c in rep.failures()}
    assert "edge-disjoint" in fails and "exact-cover" in fails


def test_validate_detects_wrong_progression_and_shape():
    D = cmsd_kn_books(8)
    wrong = Decomposition(D.host, D.parts, Scheme(1, 3, "tb"))
    assert {c.claim_id for c in validate(wrong).failures()} == {"ap-sizes"}
    as_stars = Decomposition(D.host, D.parts, Scheme(1, 4, "star"))
    assert "shape:star" in {c.claim_id for c in validate(as_stars).failures()}


def test_validate_detects_disconnected_part():
    host = complete_graph(range(4))
    parts = (LabeledGraph.from_edges((0, 1, 2, 3), [(0, 1), (2, 3)]),
             LabeledGraph.from_edges((0, 1, 2, 3), [(0, 2), (0, 3), (1, 2), (1, 3)]))
    rep = validate(Decomposition(host, parts, Scheme(2, 2, "fan-handle")))
    assert "parts-connected" in {c.claim_id for c in rep.failures()}


def test_search_examples():
    assert search_fan_cmsd(4, 2, 2).sizes == [2, 4]
    assert search_fan_cmsd(5, 4, 2).sizes == [4, 6]
    for n in (6, 7):
        for a in range(1, 22):
            for d in range(1, 22):
                assert search_fan_cmsd(n, a, d) is None


def test_search_k8_k9():
    D8 = search_fan_cmsd(8, 4, 2)
    assert D8.sizes == [4, 6, 8, 10] and validate(D8).ok
    D9 = search_fan_cmsd(9, 6, 2)
    assert D9.sizes == [6, 8, 10, 12] and validate(D9).ok


def test_search_is_deterministic():
    assert search_fan_cmsd(5, 4, 2) == search_fan_cmsd(5, 4, 2)
    assert edges_of(search_fan_cmsd(4, 2, 2)) == [[(1, 3), (2, 3)], [(0, 1), (0, 2), (0, 3), (1, 2)]]


def test_search_limits():
    with pytest.raises(CapacityError):
        search_fan_cmsd(10, 2, 2)
    with pytest.raises(ValidationError):
        search_fan_cmsd(5, 0, 2)
    assert search_fan_cmsd(5, 3, 2) is None
