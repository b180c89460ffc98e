import pytest
from hypothesis import given, settings, strategies as st

from oidal_engine.colim import (
    Cocone, NoFactorization, NotFound, ReflexivePair, canonical_comparison, cocones,
    coequalizer, factor_through, is_split_coequalizer, is_universal,
)
from oidal_engine.em import em
from oidal_engine.fincat import BoundaryMismatch, FinCat, leq, poset
from oidal_engine.fixtures import chain, chain3_closure, finset2

SWAP, ID2 = "2→2:10", "2→2:01"


def oracle_coequalizers(C, f, g):
    """All universal cocones, by enumerating every cocone and every candidate
    factorization."""
    y = C.dst(f)
    cones = [(z, q) for z in C.objects for q in C.hom(y, z)
             if C.compose(q, f) == C.compose(q, g)]
    out = []
    for z, q in cones:
        if all(sum(1 for u in C.hom(z, w) if C.compose(u, q) == m) == 1 for w, m in cones):
            out.append((z, q))
    return out


def test_identity_pair_coequalizer_is_the_identity():
    C = finset2()
    for x in ("0", "1"):
        i = C.identity(x)
        assert coequalizer(C, i, i) == Cocone(x, i)
    for x in chain(3).objects:
        i = chain(3).identity(x)
        assert coequalizer(chain(3), i, i) == Cocone(x, i)


def test_identity_pair_on_two_picks_the_swap_first():
    # hom(2, 2) is stored swap-first, so the first universal cocone is (2, swap);
    # it is canonically isomorphic to (2, id)
    C = finset2()
    e = coequalizer(C, ID2, ID2)
    assert e == Cocone("2", SWAP)
    assert canonical_comparison(C, e, Cocone("2", ID2)) == SWAP


def test_thin_pair_coequalizer_is_the_codomain():
    C = chain(3)
    f = leq(C, "0", "2")
    assert coequalizer(C, f, f) == Cocone("2", "2≤2")


def test_identity_and_swap_coequalize_to_the_point():
    C = finset2()
    e = coequalizer(C, ID2, SWAP)
    assert e == Cocone("1", "2→1:00")
    assert oracle_coequalizers(C, ID2, SWAP) == [("1", "2→1:00")]


def test_factor_through_leg_is_identity():
    C = finset2()
    e = coequalizer(C, ID2, SWAP)
    assert factor_through(C, e, e.leg) == C.identity(e.apex)


def test_constant_maps_factor_uniquely_through_the_point():
    C = finset2()
    e = coequalizer(C, ID2, SWAP)
    for m in ("2→2:00", "2→2:11", "2→1:00"):
        u = factor_through(C, e, m)
        assert C.compose(u, e.leg) == m
        assert [v for v in C.hom("1", C.dst(m)) if C.compose(v, e.leg) == m] == [u]


def test_non_coequalizing_map_does_not_factor():
    C = finset2()
    e = coequalizer(C, ID2, SWAP)
    with pytest.raises(NoFactorization):
        factor_through(C, e, ID2)


def test_factor_through_in_a_thin_category():
    C = chain(3)
    e = Cocone("1", "1≤1")
    assert factor_through(C, e, "1≤2") == "1≤2"


def test_canonical_comparison_of_equal_cocones_is_identity():
    C = finset2()
    e = coequalizer(C, ID2, SWAP)
    assert canonical_comparison(C, e, e) == C.identity("1")


def test_canonical_comparison_between_duplicated_tops():
    P = poset(["a", "t1", "t2"], [("a", "t1"), ("t1", "t2"), ("t2", "t1")])
    f = "t1≤t1"
    e1, e2 = Cocone("t1", "t1≤t1"), Cocone("t2", "t1≤t2")
    assert is_universal(P, f, f, e1) and is_universal(P, f, f, e2)
    u = canonical_comparison(P, e1, e2)
    v = canonical_comparison(P, e2, e1)
    assert u == "t1≤t2" and v == "t2≤t1"
    assert P.compose(v, u) == "t1≤t1" and P.compose(u, v) == "t2≤t2"


def test_split_coequalizer_identities():
    C = finset2()
    i = C.identity("2")
    assert is_split_coequalizer(C, i, i, i, i, i)
    args = (ID2, "2→2:00", "2→1:00", "1→2:0", ID2)
    assert is_split_coequalizer(C, *args)
    bad = args[:4] + (SWAP,)
    assert not is_split_coequalizer(C, *bad)


def test_split_implies_coequalizer_up_to_comparison():
    C = finset2()
    f, g, e = ID2, "2→2:00", "2→1:00"
    assert is_split_coequalizer(C, f, g, e, "1→2:0", ID2)
    found = coequalizer(C, f, g)
    canonical_comparison(C, Cocone("1", e), found)


def test_unit_coequalizer_of_the_chain_closure_is_split():
    M = chain3_closure()
    B = em(M)
    A = M.base
    for p in B.algebras:
        x, a = B.carrier(p), B.action(p)
        assert is_split_coequalizer(A, M.mult[x], M.endo.mor(a), a, M.unit[x],
                                    M.unit[M.endo.obj(x)])


def test_split_data_of_the_wrong_shape_is_rejected():
    C = finset2()
    with pytest.raises(BoundaryMismatch):
        is_split_coequalizer(C, ID2, SWAP, "2→1:00", ID2, ID2)


def test_missing_coequalizer_raises():
    # two parallel arrows with no cocone: the free parallel pair
    C = FinCat(["x", "y"], {"1x": ("x", "x"), "1y": ("y", "y"), "f": ("x", "y"),
                            "g": ("x", "y")},
               {"x": "1x", "y": "1y"},
               {("1x", "1x"): "1x", ("1y", "1y"): "1y", ("f", "1x"): "f", ("g", "1x"): "g",
                ("1y", "f"): "f", ("1y", "g"): "g"})
    assert cocones(C, "f", "g") == []
    with pytest.raises(NotFound):
        coequalizer(C, "f", "g")


def test_reflexive_pair_section():
    C = finset2()
    r = ReflexivePair(ID2, ID2, ID2)
    assert r.holds(C)
    assert not ReflexivePair(ID2, SWAP, ID2).holds(C)


def parallel_pairs(C):
    return [(f, g) for f in C.morphisms for g in C.morphisms
            if C.src(f) == C.src(g) and C.dst(f) == C.dst(g)]


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(parallel_pairs(finset2())))
def test_coequalizer_agrees_with_the_oracle(pair):
    C = finset2()
    f, g = pair
    found = oracle_coequalizers(C, f, g)
    if not found:
        with pytest.raises(NotFound):
            coequalizer(C, f, g)
        return
    e = coequalizer(C, f, g)
    assert (e.apex, e.leg) == found[0]
    assert is_universal(C, f, g, e)
    assert coequalizer(C, f, g) == e
    for z, q in found:
        u = canonical_comparison(C, e, Cocone(z, q))
        assert C.compose(u, e.leg) == q
