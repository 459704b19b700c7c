import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hyperhom import Field, SimplicialComplex
from hyperhom.engine import linalg
from hyperhom.engine.chain import (
    ChainComplex,
    ChainComplexError,
    build_chain_complex,
    homology_ranks,
    infimum_subcomplex,
    relative_betti,
    simplicial_betti,
)
from hyperhom.engine.persistence import Barcode, FilteredComplex, FiltrationError, persistent_homology
from hyperhom.simplicial.polar import all_subsets, polar_complex

from oracles import betti_dense, cone_relative_betti, rank_gf2, rank_q

TRIANGLE = SimplicialComplex.from_facets(["ab", "ac", "bc"])
DISK = SimplicialComplex.from_facets(["abc"])


def _columns(M):
    return [{i: M[i][j] for i in range(len(M)) if M[i][j]} for j in range(len(M[0]))] if M else []


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 7), st.integers(1, 7), st.data())
def test_rank_matches_dense_oracles(nr, nc, data):
    M = [[data.draw(st.integers(-2, 2)) for _ in range(nc)] for _ in range(nr)]
    cols = _columns(M)
    assert linalg.rank(cols, Field.RATIONAL) == rank_q(M)
    assert linalg.rank(cols, Field.GF2) == rank_gf2([[x % 2 for x in row] for row in M])


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6), st.data(), st.sampled_from(list(Field)))
def test_kernel_is_a_kernel_of_right_size(nr, nc, data, field):
    M = [[data.draw(st.integers(-1, 1)) for _ in range(nc)] for _ in range(nr)]
    cols = _columns(M)
    ker = linalg.kernel(cols, field)
    assert len(ker) == nc - linalg.rank(cols, field)
    for v in ker:
        assert not linalg.apply(cols, v, field)


def test_field_arithmetic():
    assert Field.GF2.coerce(1) + Field.GF2.coerce(1) == 2  # ints; reduced by vector()
    assert Field.GF2.vector([(0, 1), (0, 1)]) == {}
    assert Field.RATIONAL.vector([(0, Fraction(1, 3)), (0, Fraction(2, 3))]) == {0: 1}
    assert Field.parse("Z2") is Field.GF2 and Field.parse("rational") is Field.RATIONAL
    with pytest.raises(ValueError):
        Field.parse("r")


def test_triangle_boundary():
    C = build_chain_complex(TRIANGLE)
    assert C.dims() == [3, 3]
    assert C.boundary_rank(1) == 2
    assert homology_ranks(C) == [1, 1]


def test_full_simplex_and_octahedron():
    assert simplicial_betti(DISK) == [1, 0, 0]
    octa = polar_complex(all_subsets(3))
    assert simplicial_betti(octa) == [1, 0, 1]
    assert simplicial_betti(octa, Field.RATIONAL) == [1, 0, 1]


def test_empty_and_reduced():
    assert simplicial_betti(SimplicialComplex.empty()) == []
    assert simplicial_betti(SimplicialComplex.empty(), reduced=True) == []
    two_points = SimplicialComplex.from_facets(["a", "b"])
    assert simplicial_betti(two_points, reduced=True) == [1]


def test_signs_follow_face_index():
    C = build_chain_complex(DISK, Field.RATIONAL)
    (abc_col,) = C.boundaries[2]
    labels = {C.bases[1][i]: c for i, c in abc_col.items()}
    assert labels == {("b", "c"): 1, ("a", "c"): -1, ("a", "b"): 1}


def test_chain_complex_rejects_bad_data():
    with pytest.raises(ChainComplexError):
        ChainComplex(Field.GF2, (("a",),), ())
    with pytest.raises(ChainComplexError):
        ChainComplex(Field.GF2, (("a",), ("x",)), (({},), ({5: 1},)))
    # d1 d2 != 0: a 2-cell glued along a single edge twice over Q
    with pytest.raises(ChainComplexError):
        ChainComplex(Field.RATIONAL, (("a", "b"), ("e",), ("f",)),
                     (({}, {}), ({0: -1, 1: 1},), ({0: 1},)))


def _random_complex(rng, n=5, k=5):
    verts = "abcdefg"[:n]
    facets = ["".join(rng.sample(verts, rng.randint(1, min(4, n)))) for _ in range(rng.randint(1, k))]
    return SimplicialComplex.from_facets(facets)


def test_betti_matches_dense_oracle_and_euler():
    rng = random.Random(3)
    for _ in range(60):
        K = _random_complex(rng)
        for field in ("gf2", "q"):
            b = simplicial_betti(K, field)
            assert b == betti_dense(K, field)
            assert sum((-1) ** p * x for p, x in enumerate(b)) == K.euler_characteristic()


def test_relative_examples():
    assert relative_betti(TRIANGLE, TRIANGLE.induced("a")) == [0, 1]
    assert relative_betti(TRIANGLE, SimplicialComplex.empty()) == [1, 1]
    assert relative_betti(DISK, DISK) == [0, 0, 0]
    with pytest.raises(ChainComplexError):
        relative_betti(TRIANGLE, SimplicialComplex.from_facets(["ad"]))


def test_relative_matches_cone_oracle():
    rng = random.Random(11)
    for _ in range(40):
        K = _random_complex(rng)
        K0 = K.induced(rng.sample(list(K.vertices), rng.randint(0, len(K.vertices))))
        assert relative_betti(K, K0) == cone_relative_betti(K, K0)


def test_infimum_running_example():
    C = build_chain_complex(DISK)
    inf = infimum_subcomplex(C, [[("a",), ("b",), ("c",)], [("a", "b")], [("a", "b", "c")]])
    assert inf.bases == (("a", "b", "c"), ("ab",), ())
    assert homology_ranks(inf) == [2, 0, 0]


def test_infimum_everything_is_identity():
    C = build_chain_complex(DISK, Field.RATIONAL)
    inf = infimum_subcomplex(C, C.bases)
    assert inf.dims() == C.dims()
    assert homology_ranks(inf) == homology_ranks(C)


def test_infimum_drops_edges_with_outside_boundary():
    C = build_chain_complex(DISK)
    inf = infimum_subcomplex(C, [[("a",)], [("a", "b")]])
    assert inf.dims() == [1, 0, 0]


def test_infimum_combination_generator():
    # in the hollow triangle with no vertices allowed, only the cycle survives in degree 1
    C = build_chain_complex(TRIANGLE, Field.RATIONAL)
    inf = infimum_subcomplex(C, [[], C.bases[1]])
    assert inf.dims() == [0, 1]
    (g,) = inf.generators[1]
    assert g == {("a", "b"): 1, ("a", "c"): -1, ("b", "c"): 1}
    assert inf.bases[1] == ("ab-ac+bc",)
    with pytest.raises(ChainComplexError):
        infimum_subcomplex(C, [[("z",)]])


def test_persistence_two_points_and_edge():
    K = SimplicialComplex.from_facets(["ab"])
    F = FilteredComplex(K, {("a",): 0, ("b",): 0, ("a", "b"): 1})
    bc = persistent_homology(F)
    assert sorted(bc[0], key=str) == sorted([(0, None), (0, 1)], key=str)
    with pytest.raises(FiltrationError):
        FilteredComplex(K, {("a",): 2, ("b",): 0, ("a", "b"): 1})


def test_constant_filtration_gives_homology():
    rng = random.Random(5)
    for _ in range(20):
        K = _random_complex(rng)
        bc = persistent_homology(FilteredComplex(K, {s: 0 for s in K.simplices}), Field.RATIONAL)
        b = simplicial_betti(K)
        assert all(bc.essential(p) == b[p] for p in range(len(b)))
        assert all(d is None for bars in bc.bars.values() for _, d in bars)


def test_barcode_counts_match_sublevel_homology():
    rng = random.Random(9)
    for _ in range(40):
        K = _random_complex(rng, 6, 6)
        times = {}
        for s in sorted(K.simplices, key=len):
            base = max((times[s[:j] + s[j + 1:]] for j in range(len(s))), default=0) if len(s) > 1 else 0
            times[s] = base + rng.randint(0, 2)
        F = FilteredComplex(K, times)
        for field in (Field.GF2, Field.RATIONAL):
            bc = persistent_homology(F, field)
            for t in sorted(set(times.values())):
                b = simplicial_betti(F.sublevel(t), field)
                for p in range(K.dimension + 1):
                    assert bc.alive(p, t) == (b[p] if p < len(b) else 0)


def test_descending_barcode_alive():
    bc = Barcode({0: ((3, None), (3, 2))}, descending=True)
    assert bc.alive(0, 3) == 2 and bc.alive(0, 2) == 1 and bc.alive(0, 0) == 1
    assert bc.to_json() == {"0": [[3, None], [3, 2]]}
