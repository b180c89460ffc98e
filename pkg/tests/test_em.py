import itertools

from oidal_engine.dblcat import mnd_id_h, mnd_id_v, unit_functor
from oidal_engine.em import (
    H1, H2, K2, V1, V2, alg_name, em, em_lift_square, eq_K_composite, lemma_V_check,
    lemma_V_outcome, linton, unit_coeq_check, v_identity_comparison, validate_em_bundle,
    verify_monoidal_em,
)
from oidal_engine.fincat import (
    Nat, compose_fun, compose_funs, identity_fun, identity_nat, leq, validate_functor,
    validate_nat, vcomp_nat,
)
from oidal_engine.fixtures import (
    BOT, DIAMOND, TOP, chain, chain2_identity, chain2_top, chain3_closure,
    diamond_monoidal, diamond_opmonoidal, finset2, finset2_identity_monad,
    finset2_point_v, finset2_suite, finset2_terminal_monad, powerset_suite, union_e,
    _diamond_join,
)
from oidal_engine.mnd import (
    MonadMorV, MonadTrans, closure_monad, compose_h, compose_v, identity_h, identity_v,
    thin_morphism, trivial_monad,
)

C3 = chain(3)
IDMAP = {"0": "0", "1": "1", "2": "2"}


def oracle_algebras(M):
    """(x, a) pairs satisfying the algebra laws, found by scanning every
    morphism of the base."""
    A, t = M.base, M.endo
    out = []
    for a in A.morphisms:
        x = A.dst(a)
        if A.src(a) != t.obj(x):
            continue
        if A.compose(a, M.unit.at(x)) != A.identity(x):
            continue
        if A.compose(a, M.mult.at(x)) != A.compose(a, t.mor(a)):
            continue
        out.append((x, a))
    return sorted(out)


def all_monads():
    C = finset2()
    return [chain3_closure(), chain2_top(), chain2_identity(), union_e(),
            diamond_opmonoidal().monad, diamond_monoidal().monad,
            finset2_identity_monad(C), finset2_terminal_monad(C)]


def test_chain_closure_algebras_are_the_fixed_points():
    M = chain3_closure()
    B = em(M)
    carriers = sorted(B.carrier(p) for p in B.algebras)
    assert carriers == ["1", "2"]
    assert [x for x, _ in oracle_algebras(M)] == ["1", "2"]
    assert sorted(B.algebras) == sorted(alg_name(x, a) for x, a in oracle_algebras(M))
    assert [B.free.obj(x) for x in C3.objects] == [alg_name("1", "1≤1")] * 2 + \
        [alg_name("2", "2≤2")]
    assert [B.forgetful.obj(B.free.obj(x)) for x in C3.objects] == ["1", "1", "2"]
    assert B.em_cat.num_morphisms == 3


def test_algebra_enumeration_matches_the_oracle():
    for M in all_monads():
        B = em(M)
        got = sorted((B.carrier(p), B.action(p)) for p in B.algebras)
        assert got == oracle_algebras(M), M.name


def test_em_morphisms_are_the_action_compatible_maps():
    for M in all_monads():
        B = em(M)
        A, t = M.base, M.endo
        count = 0
        for p, q in itertools.product(B.algebras, repeat=2):
            x, y = B.carrier(p), B.carrier(q)
            for f in A.hom(x, y):
                if A.compose(B.action(q), t.mor(f)) == A.compose(f, B.action(p)):
                    count += 1
        assert B.em_cat.num_morphisms == count


def test_em_bundles_satisfy_the_generated_monad_equalities():
    for M in all_monads():
        assert validate_em_bundle(em(M)).ok, M.name


def test_identity_monad_em_is_a_renaming():
    C = finset2()
    B = em(finset2_identity_monad(C))
    assert len(B.algebras) == 3 and B.em_cat.num_morphisms == 11
    u = unit_functor(C)
    assert validate_functor(u).ok
    assert {u.obj(x) for x in C.objects} == set(B.algebras)
    assert compose_fun(B.forgetful, u) == identity_fun(C)


def test_terminal_monad_has_one_algebra():
    B = em(finset2_terminal_monad())
    assert [B.carrier(p) for p in B.algebras] == ["1"]


def test_monoidal_em_on_two_pairs():
    C = finset2()
    pairs = [(chain3_closure(), chain2_top()),
             (finset2_identity_monad(C), finset2_terminal_monad(C)),
             (union_e(), chain2_identity())]
    for M, N in pairs:
        assert verify_monoidal_em(M, N).ok


def test_h_of_identity_is_identity():
    for M in all_monads():
        assert H1(identity_h(M)) == identity_fun(em(M).em_cat)


def chain_to_diamond():
    t = diamond_opmonoidal().monad
    return thin_morphism("H", chain3_closure(), t, {"0": BOT, "1": "a", "2": TOP}, "h")


def test_h_lifts_a_chain_to_diamond_morphism():
    h = chain_to_diamond()
    F = H1(h)
    Es, Ed = em(h.src), em(h.dst)
    assert validate_functor(F).ok
    assert em_lift_square(h).ok
    assert compose_fun(Ed.forgetful, F) == compose_fun(h.f, Es.forgetful)
    assert sorted(Ed.carrier(F.obj(p)) for p in Es.algebras) == ["a", TOP]


def test_h_preserves_composites():
    cl = chain3_closure()
    top3 = closure_monad(C3, {"0": "2", "1": "2", "2": "2"}, name="top3")
    f = thin_morphism("H", top3, cl, IDMAP, "f")
    g = chain_to_diamond()
    assert H1(compose_h(g, f)) == compose_fun(H1(g), H1(f))


def cl_h_trans():
    cl = chain3_closure()
    one = identity_h(cl)
    h = thin_morphism("H", cl, cl, {"0": "1", "1": "1", "2": "2"}, "cl")
    om = Nat(one.f, h.f, lambda x: leq(C3, x, h.f.obj(x)), name="w")
    return MonadTrans(one, h, om, name="w")


def test_h2_components_are_algebra_morphisms():
    w = cl_h_trans()
    a = H2(w)
    assert validate_nat(a).ok
    B = em(w.src.src)
    for p in B.algebras:
        x = B.carrier(p)
        assert B.forgetful.mor(a.at(p)) == leq(C3, x, w.dst.f.obj(x))


def test_v_of_identity_on_thin_fixtures_is_identity():
    for M in all_monads()[:6]:
        assert V1(identity_v(M)) == identity_fun(em(M).em_cat)


def test_v_of_identity_on_finset_is_identity_up_to_the_swap():
    I = finset2_identity_monad()
    c = v_identity_comparison(I)
    B = em(I)
    two = B.free.obj("2")
    assert V1(identity_v(I)).obj(two) == two
    assert B.forgetful.mor(c.at(two)) == "2→2:10"
    assert all(B.em_cat.inverse(c.at(p)) is not None for p in B.algebras)


def test_v_of_diamond_join_is_closure_of_join():
    OM = diamond_monoidal()
    mV, _ = OM.mon_morphisms()
    F = V1(mV)
    Es, Ed = em(mV.src), em(mV.dst)
    t = {x: _diamond_join(x, "a") for x in DIAMOND}
    fixed = [x for x in DIAMOND if t[x] == x]
    assert fixed == ["a", TOP]
    for p in Es.algebras:
        x, y = Es.carrier(p)
        assert Ed.carrier(F.obj(p)) == t[_diamond_join(x, y)]
    assert len(Es.algebras) == 4


def test_v_on_thin_fixtures_is_free_after_h_after_forgetful():
    for OM in (diamond_monoidal(),):
        for n in OM.mon_morphisms():
            Es, Ed = em(n.src), em(n.dst)
            assert V1(n) == compose_funs(Ed.free, n.f, Es.forgetful)
    for n in powerset_suite().vmors:
        Es, Ed = em(n.src), em(n.dst)
        assert V1(n) == compose_funs(Ed.free, n.f, Es.forgetful)


def cl_v_morphisms():
    cl = chain3_closure()
    one = identity_v(cl)
    h = thin_morphism("V", cl, cl, {"0": "1", "1": "1", "2": "2"}, "cl")
    k = thin_morphism("V", cl, cl, {"0": "2", "1": "2", "2": "2"}, "top")
    return one, h, k


def ineq(a, b):
    return Nat(a.f, b.f, lambda x: leq(C3, a.f.obj(x), b.f.obj(x)), name=f"{a.name}<={b.name}")


def test_v2_of_identity_is_identity():
    one, h, _ = cl_v_morphisms()
    w = MonadTrans(h, h, identity_nat(h.f), name="1")
    assert V2(w) == identity_nat(V1(h))


def test_v2_of_inequalities_and_vertical_composites():
    one, h, k = cl_v_morphisms()
    w1 = MonadTrans(one, h, ineq(one, h), name="w1")
    w2 = MonadTrans(h, k, ineq(h, k), name="w2")
    w21 = MonadTrans(one, k, vcomp_nat(w2.omega, w1.omega), name="w21")
    a1, a2, a21 = V2(w1), V2(w2), V2(w21)
    assert validate_nat(a1).ok and validate_nat(a2).ok
    E = em(one.dst).em_cat
    for p in em(one.src).algebras:
        f = a1.at(p)
        assert (E.src(f), E.dst(f)) == (V1(one).obj(p), V1(h).obj(p))
        assert E.hom(E.src(f), E.dst(f)) == (f,)
    assert a21 == vcomp_nat(a2, a1)


def test_v_of_composites_on_thin_fixtures_is_exact():
    one, h, k = cl_v_morphisms()
    assert V1(compose_v(k, h)) == compose_fun(V1(k), V1(h))


def corrupted_point():
    I = finset2_identity_monad()
    p = finset2_point_v(I, "2")
    chi = Nat(p.chi.src, p.chi.dst, {(): "2→2:10"}, name="swap")
    return MonadMorV(p.src, p.dst, p.f, chi, name="bad", validate=False)


def test_lemma_v_holds_on_identities_and_joins():
    for M in all_monads():
        assert lemma_V_check(identity_v(M))
    mV, uV = diamond_monoidal().mon_morphisms()
    assert lemma_V_outcome(mV) == ("exact", ())
    assert lemma_V_check(uV)


def test_lemma_v_holds_on_bundled_vertical_morphisms():
    for n in finset2_suite().vmors + powerset_suite().vmors:
        assert lemma_V_check(n), n.name


def test_lemma_v_fails_on_a_corrupted_chi():
    bad = corrupted_point()
    assert not bad.validate().ok
    status, witness = lemma_V_outcome(bad)
    assert status == "fail" and witness
    assert not lemma_V_check(bad)


def test_unit_coequalizer_on_every_monad():
    for M in all_monads():
        assert unit_coeq_check(M).ok, M.name


def test_k2_of_identity_squares_is_identity():
    for M in all_monads()[:6]:
        sq = mnd_id_h(identity_v(M))
        assert K2(sq) == identity_nat(H1(identity_h(M)))
        sq = mnd_id_v(identity_h(M))
        assert validate_nat(K2(sq)).ok


def test_k2_factors_the_defining_composite():
    for sq in powerset_suite().squares + finset2_suite().squares:
        k = K2(sq)
        path = eq_K_composite(sq)
        L = linton(sq.right)
        E = em(sq.right.dst).em_cat
        Hh = H1(sq.top)
        for p in em(sq.top.src).algebras:
            assert E.compose(k.at(p), L.cocones[Hh.obj(p)].leg) == path.at(p)


def test_trivial_monad_em_is_terminal():
    B = em(trivial_monad())
    assert len(B.algebras) == 1 and B.em_cat.num_morphisms == 1


def test_forgetful_and_free_are_functors():
    for M in all_monads():
        B = em(M)
        assert validate_functor(B.free).ok and validate_functor(B.forgetful).ok
        assert validate_nat(B.unit).ok and validate_nat(B.counit).ok
