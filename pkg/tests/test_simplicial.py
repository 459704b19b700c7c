import random

import pytest

from hyperhom import Hypergraph, SimplicialComplex, dual, nerve, toplexes, upper_closure
from hyperhom.core.hypergraph import complement, is_isomorphic, same_hyperblock
from hyperhom.engine.chain import simplicial_betti
from hyperhom.guards import ResourceGuardError
from hyperhom.repro import betti_equal, load_fixtures
from hyperhom.simplicial.barycentric import (
    barycentric_subdivision,
    fence_components,
    induced_on_edges,
    missing_subcomplex,
    rbs_betti,
    relbs_betti,
    restricted_barycentric_complex,
)
from hyperhom.simplicial.closure import closure_betti
from hyperhom.simplicial.polar import BAR, all_subsets, polar_betti, polar_complex, swap_bars
from hyperhom.simplicial.wnerve import (
    NotAWeightedNerveError,
    WeightedSimplicialComplex,
    mobius_multiplicities,
    reconstruct_from_weighted_nerve,
    weighted_nerve,
    wnerve_barcode,
)

from oracles import all_faces, betti_dense, random_hypergraph

FIX = load_fixtures()
RUN = FIX["2"]


def H(*edges, **named):
    named.update({e: list(e) for e in edges})
    return Hypergraph.from_edges(named)


# closure

def test_closure_examples():
    assert closure_betti(RUN) == [1, 0, 0]
    assert closure_betti(FIX["9"]) == [1, 0, 1]
    # the peeled complex {a, b, c, ab} has two components
    assert closure_betti(RUN, "lower") == [2, 0]
    assert closure_betti(RUN, "upper", reduced=True) == [0, 0, 0]


def test_closure_hyperblock_families():
    for family in (range(3, 9), range(9, 19)):
        vals = {tuple(closure_betti(FIX[str(r)])) for r in family}
        assert len(vals) == 1


def test_dowker_duality_and_nerve_identity():
    rng = random.Random(21)
    for _ in range(80):
        G = random_hypergraph(rng)
        assert betti_equal(closure_betti(G), closure_betti(dual(G)))
        N = nerve(G)
        K = upper_closure(dual(G))
        assert N.simplices == K.simplices


# barycentric subdivision

def test_subdivision_of_triangle():
    B = barycentric_subdivision(SimplicialComplex.from_facets(["abc"]))
    assert B.skeleton_sizes() == [7, 12, 6]
    assert B.euler_characteristic() == 1


def test_subdivision_of_edge():
    B = barycentric_subdivision(SimplicialComplex.from_facets(["ab"]))
    assert B.skeleton_sizes() == [3, 2]
    assert set(B.facets()) == {(("a",), ("a", "b")), (("a", "b"), ("b",))}


def test_subdivision_preserves_homology_on_fixtures():
    for r in ("1", "2", "9", "11", "20"):
        K = upper_closure(FIX[r])
        assert simplicial_betti(barycentric_subdivision(K)) == simplicial_betti(K)


# restricted barycentric

def test_rbs_running_example():
    K = restricted_barycentric_complex(RUN)
    assert set(K.facets()) == {("A", "D", "F"), ("B", "D", "F"), ("C", "F")}
    assert rbs_betti(RUN) == [1, 0, 0]


def test_rbs_simple_and_tetrahedron_with_points():
    G = H("ab", "bc", "cd")
    assert rbs_betti(G) == [3]
    assert rbs_betti(FIX["11"])[:2] == [1, 1]


def test_rbs_equals_brute_force_on_small_hypergraphs():
    rng = random.Random(4)
    for _ in range(120):
        G = random_hypergraph(rng, max_vertices=4, max_edges=6, min_edges=1)
        assert restricted_barycentric_complex(G).simplices == induced_on_edges(G).simplices


def test_fence_components():
    assert len(fence_components(FIX["9"])) == 4
    assert len(fence_components(RUN)) == 1
    assert len(fence_components(H("ab", "cd"))) == 2


def test_rbs0_is_fence_count_and_toplex_bound():
    rng = random.Random(8)
    for _ in range(150):
        G = random_hypergraph(rng)
        b = rbs_betti(G)
        b0 = b[0] if b else 0
        assert b0 == len(fence_components(G))
        assert b0 <= len(toplexes(G))


# relative barycentric

def test_missing_subcomplex_examples():
    M = missing_subcomplex(RUN)
    assert M.simplices == {(("a", "c"),), (("b", "c"),)}
    boundary = missing_subcomplex(H("abc"))
    assert set(boundary.vertices) == {("a",), ("b",), ("c",), ("a", "b"), ("a", "c"), ("b", "c")}
    assert simplicial_betti(boundary) == [1, 1]
    assert missing_subcomplex(Hypergraph.from_edges({"".join(f): f for f in all_faces(["abc", "cd"])})) \
        == SimplicialComplex.empty()


def test_relbs_examples():
    assert relbs_betti(RUN) == [0, 1, 0]
    assert relbs_betti(H("ab", "bc")) == [0, 2]
    assert relbs_betti(H("abc")) == [0, 0, 1]
    with pytest.raises(ValueError):
        relbs_betti(Hypergraph.from_edges({"e": []}, vertices=["a"]))


def test_relbs_counts_edges_of_simple_hypergraph_by_size():
    G = H("ab", "cd", "bce")
    assert relbs_betti(G) == [0, 2, 1]


def test_relbs_edge_size_guard():
    with pytest.raises(ResourceGuardError):
        relbs_betti(H("abcdefghi"))


# polar

def test_polar_running_example():
    K = polar_complex(RUN)
    assert all(len(f) == 3 for f in K.facets())
    assert polar_betti(RUN) == [1, 2, 0]


def test_polar_square_and_single_edge():
    assert polar_betti(all_subsets(2)) == [1, 1]
    assert polar_betti(H("abcd")) == [1, 0, 0, 0]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_polar_of_all_subsets_is_a_sphere(n):
    assert polar_betti(all_subsets(n)) == [1] + [0] * (n - 2) + [1]


def test_polar_monotone_and_bar_swap():
    rng = random.Random(17)
    for _ in range(60):
        G = random_hypergraph(rng, min_edges=1)
        K = polar_complex(G)
        extra = G.add_edges({"extra": rng.sample(list(G.vertices), rng.randint(0, len(G.vertices)))})
        assert K.is_subcomplex_of(polar_complex(extra))
        assert swap_bars(K) == polar_complex(complement(G))
        assert all(v.startswith(BAR) or v in G.vertices for v in K.vertices)


# weighted nerve

def test_weighted_nerve_running_example():
    N = weighted_nerve(RUN)
    w = N.weights
    assert w[("F",)] == 3 and w[("D",)] == 2 and w[("D", "F")] == 2
    for s in N.complex.simplices:
        if set(s) & {"A", "B", "C"}:
            assert w[s] == 1


def test_weighted_nerve_disjoint_edges():
    N = weighted_nerve(H("ab", "cde"))
    assert N.complex.simplices == {("ab",), ("cde",)}
    assert N.weights[("cde",)] == 3


def test_weights_are_checked():
    K = SimplicialComplex.from_facets(["xy"])
    with pytest.raises(ValueError):
        WeightedSimplicialComplex(K, {("x",): 1, ("y",): 1, ("x", "y"): 2})
    with pytest.raises(ValueError):
        WeightedSimplicialComplex(K, {("x",): 1, ("y",): 1})


def test_wnerve_barcodes():
    assert wnerve_barcode(RUN).bars == {0: ((3, None),)}
    bc = wnerve_barcode(FIX["9"])
    assert sorted(bc[0], key=str) == sorted([(3, None), (3, 2), (3, 2), (3, 2)], key=str)
    assert list(bc[1]) == [(2, 1)] * 3
    assert list(bc[2]) == [(1, None)]


def test_wnerve_bar_counts_match_thresholds():
    rng = random.Random(2)
    for _ in range(40):
        G = random_hypergraph(rng, min_edges=1)
        N = weighted_nerve(G)
        bc = wnerve_barcode(G)
        for a in sorted(set(N.weights.values())):
            b = betti_dense(N.threshold(a))
            for p, rank in enumerate(b):
                assert bc.alive(p, a) == rank


def test_mobius_on_running_example():
    f = mobius_multiplicities(weighted_nerve(RUN))
    assert {s: c for s, c in f.items() if c} == {("A", "D", "F"): 1, ("B", "D", "F"): 1, ("C", "F"): 1}
    G = reconstruct_from_weighted_nerve(weighted_nerve(RUN))
    assert is_isomorphic(G, RUN, match_edge_labels=True)


def test_reconstruct_small_cases():
    G = reconstruct_from_weighted_nerve(weighted_nerve(H("ab", "cd")))
    assert sorted(len(m) for m in G.member_sets()) == [2, 2]
    assert not G.members("ab") & G.members("cd")
    N = WeightedSimplicialComplex(SimplicialComplex.from_facets(["x", "y"]), {("x",): 1, ("y",): 1})
    G = reconstruct_from_weighted_nerve(N)
    assert sorted(len(m) for m in G.member_sets()) == [1, 1] and len(G.vertices) == 2


def test_reconstruct_accepts_nested_and_rejects_overlap_excess():
    K = SimplicialComplex.from_facets(["xy"])
    G = reconstruct_from_weighted_nerve(WeightedSimplicialComplex(K, {("x",): 1, ("y",): 2, ("x", "y"): 1}))
    assert G.members("x") < G.members("y")
    # pairwise overlaps of 1 with no common point would need f(xyz) = -1
    T = SimplicialComplex.from_facets(["xy", "xz", "yz"])
    w = {("x",): 1, ("y",): 1, ("z",): 1, ("x", "y"): 1, ("x", "z"): 1, ("y", "z"): 1}
    with pytest.raises(NotAWeightedNerveError):
        reconstruct_from_weighted_nerve(WeightedSimplicialComplex(T, w))


def _covered_nonempty(G):
    return Hypergraph.from_edges({lab: m for lab, m in G.edges if m}, vertices=G.covered_vertices())


def test_reconstruction_round_trip():
    rng = random.Random(12)
    for _ in range(100):
        G = random_hypergraph(rng, allow_empty=False, min_edges=1)
        N = weighted_nerve(G)
        R = reconstruct_from_weighted_nerve(N)
        assert weighted_nerve(R) == N
        assert is_isomorphic(R, _covered_nonempty(G), match_edge_labels=True)


def test_hyperblock_invariant_theories_agree_on_families():
    for a, b in [("3", "8"), ("9", "18")]:
        assert same_hyperblock(FIX[a], FIX[b])
        assert closure_betti(FIX[a]) == closure_betti(FIX[b])
