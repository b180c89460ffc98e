import itertools

import pytest
from hypothesis import given, settings, strategies as st

from oidal_engine.fincat import (
    BoundaryMismatch, Nat, compose_fun, hcomp_nat, identity_fun, leq, product,
    validate_nat, vcomp_nat, whisker_left, whisker_right,
)
from oidal_engine.fixtures import (
    chain, chain3_closure, finset2, finset2_collapse_h, finset2_collapse_v,
    finset2_identity_monad, finset2_point_h, finset2_point_v, finset2_terminal_monad,
)
from oidal_engine.mnd import (
    MonadMorH, MonadTrans, closure_monad, compose_h, compose_v, identity_h, identity_v,
    identity_trans, monoidal_product_monads, product_mor, symmetry_monad_cell,
    symmetry_monad_cell_v, thin_morphism, trivial_monad, validate_monad,
    validate_monad_trans,
)

C3 = chain(3)
CL = chain3_closure()
TOP3 = closure_monad(C3, {"0": "2", "1": "2", "2": "2"}, name="top3")
ID3 = closure_monad(C3, {"0": "0", "1": "1", "2": "2"}, name="id3")
IDMAP = {"0": "0", "1": "1", "2": "2"}


def same_mor(a, b):
    return type(a) is type(b) and a.src == b.src and a.dst == b.dst and a.f == b.f \
        and a.chi == b.chi


def brute_h_laws(m):
    """Multiplicativity and unitality of a horizontal morphism, recomputed
    from the raw components."""
    A, B = m.src.base, m.dst.base
    t, s = m.src.endo, m.dst.endo
    for x in A.objects:
        left = B.compose(m.f.mor(m.src.mult.at(x)),
                         B.compose(m.chi.at(t.obj(x)), s.mor(m.chi.at(x))))
        if left != B.compose(m.chi.at(x), m.dst.mult.at(m.f.obj(x))):
            return False
        if m.f.mor(m.src.unit.at(x)) != B.compose(m.chi.at(x), m.dst.unit.at(m.f.obj(x))):
            return False
    return True


def brute_v_laws(m):
    A, B = m.src.base, m.dst.base
    t, s = m.src.endo, m.dst.endo
    for x in A.objects:
        right = B.compose(m.dst.mult.at(m.f.obj(x)),
                          B.compose(s.mor(m.chi.at(x)), m.chi.at(t.obj(x))))
        if B.compose(m.chi.at(x), m.f.mor(m.src.mult.at(x))) != right:
            return False
        if B.compose(m.chi.at(x), m.f.mor(m.src.unit.at(x))) != m.dst.unit.at(m.f.obj(x)):
            return False
    return True


def test_closure_monads_validate():
    for M in (CL, TOP3, ID3):
        assert validate_monad(M).ok


def test_broken_closure_is_rejected():
    # not idempotent: 0 -> 1 -> 2
    from oidal_engine.fincat import LawViolation
    with pytest.raises(LawViolation):
        closure_monad(C3, {"0": "1", "1": "2", "2": "2"})


def test_compose_h_with_identities_is_unchanged():
    f = thin_morphism("H", TOP3, CL, IDMAP, "f")
    assert same_mor(compose_h(identity_h(CL), f), f)
    assert same_mor(compose_h(f, identity_h(TOP3)), f)


def test_compose_v_with_identities_is_unchanged():
    f = thin_morphism("V", ID3, CL, IDMAP, "f")
    assert same_mor(compose_v(identity_v(CL), f), f)
    assert same_mor(compose_v(f, identity_v(ID3)), f)


def test_compose_h_chi_is_the_whiskered_composite():
    I, T = finset2_identity_monad(), finset2_terminal_monad()
    f = finset2_point_h(T, "1")
    g = finset2_collapse_h(T, I)
    gf = compose_h(g, f)
    expected = vcomp_nat(whisker_left(g.f, f.chi), whisker_right(g.chi, f.f))
    assert gf.f == compose_fun(g.f, f.f)
    assert all(gf.chi.at(x) == expected.at(x) for x in gf.src.base.objects)
    assert brute_h_laws(gf)


def test_compose_v_chi_is_the_whiskered_composite():
    C = finset2()
    I, T = finset2_identity_monad(C), finset2_terminal_monad(C)
    f = finset2_point_v(I, "2")
    g = finset2_collapse_v(I, T)
    gf = compose_v(g, f)
    expected = vcomp_nat(whisker_right(g.chi, f.f), whisker_left(g.f, f.chi))
    assert all(gf.chi.at(x) == expected.at(x) for x in gf.src.base.objects)
    assert gf.f.obj(()) == "2"
    assert brute_v_laws(gf)


def test_closure_morphisms_compose_on_three_chains():
    f = thin_morphism("H", TOP3, CL, IDMAP, "f")
    g = thin_morphism("H", CL, ID3, IDMAP, "g")
    gf = compose_h(g, f)
    assert gf.validate().ok and brute_h_laws(gf)
    p = thin_morphism("V", ID3, CL, IDMAP, "p")
    q = thin_morphism("V", CL, TOP3, IDMAP, "q")
    qp = compose_v(q, p)
    assert qp.validate().ok and brute_v_laws(qp)
    # a non-identity underlying functor
    c = thin_morphism("H", ID3, TOP3, {"0": "2", "1": "2", "2": "2"}, "c")
    assert brute_h_laws(compose_h(c, g))


def test_composition_boundary_mismatch():
    f = thin_morphism("H", TOP3, CL, IDMAP, "f")
    with pytest.raises(BoundaryMismatch):
        compose_h(f, f)


def test_product_with_trivial_monad_is_strict():
    assert monoidal_product_monads(CL, trivial_monad()) is CL
    assert monoidal_product_monads(trivial_monad(), CL) is CL
    assert monoidal_product_monads(trivial_monad(), trivial_monad()) is trivial_monad()


def test_product_of_two_chain_closures():
    C2 = chain(2)
    top = closure_monad(C2, {"0": "1", "1": "1"}, name="top")
    ident = closure_monad(C2, {"0": "0", "1": "1"}, name="id")
    M = monoidal_product_monads(top, ident)
    assert validate_monad(M).ok
    assert len(M.base.objects) == 4 and M.base.num_morphisms == 9
    cmap = {"0": "1", "1": "1"}
    for x, y in itertools.product("01", repeat=2):
        assert M.endo.obj((x, y)) == (cmap[x], y)
        assert M.unit.at((x, y)) == (leq(C2, x, cmap[x]), leq(C2, y, y))
        assert M.mult.at((x, y)) == (top.mult.at(x), ident.mult.at(y))


def test_product_of_finset_monads_matches_the_formula():
    C = finset2()
    I, T = finset2_identity_monad(C), finset2_terminal_monad(C)
    M = monoidal_product_monads(I, T)
    assert M.base == product(C, C)
    for x in M.base.objects:
        a, b = x
        assert M.endo.obj(x) == (a, "1")
        assert M.mult.at(x) == (I.mult.at(a), T.mult.at(b))
        assert M.unit.at(x) == (I.unit.at(a), T.unit.at(b))
    assert validate_monad(M).ok


def test_symmetry_with_trivial_is_identity_shaped():
    s = symmetry_monad_cell(CL, trivial_monad())
    assert s.src is CL and s.dst is CL
    assert all(s.f.obj(x) == x for x in C3.objects)
    assert all(s.f.mor(f) == f for f in C3.morphisms)


def test_symmetry_of_two_closures_is_a_monad_morphism():
    C2 = chain(2)
    top = closure_monad(C2, {"0": "1", "1": "1"}, name="top")
    s = symmetry_monad_cell(CL, top)
    assert s.validate().ok and brute_h_laws(s)
    assert s.f.obj(("0", "1")) == ("1", "0")
    v = symmetry_monad_cell_v(CL, top)
    assert v.validate().ok and brute_v_laws(v)


def test_symmetry_is_an_involution():
    C2 = chain(2)
    top = closure_monad(C2, {"0": "1", "1": "1"}, name="top")
    there, back = symmetry_monad_cell(CL, top), symmetry_monad_cell(top, CL)
    loop = compose_h(back, there)
    one = identity_h(there.src)
    assert loop.f == one.f and loop.chi == one.chi


def test_product_of_morphisms_interchanges_with_composition():
    f = thin_morphism("H", TOP3, CL, IDMAP, "f")
    g = thin_morphism("H", CL, ID3, IDMAP, "g")
    C2 = chain(2)
    top = closure_monad(C2, {"0": "1", "1": "1"}, name="top")
    ident = closure_monad(C2, {"0": "0", "1": "1"}, name="id")
    f2 = thin_morphism("H", top, ident, {"0": "0", "1": "1"}, "f2")
    g2 = identity_h(ident)
    a = product_mor(compose_h(g, f), compose_h(g2, f2))
    b = compose_h(product_mor(g, g2), product_mor(f, f2))
    assert a.validate().ok and b.validate().ok
    assert a.f == b.f and a.chi == b.chi


def thin_h_morphisms(src, dst):
    out = []
    objs = src.base.objects
    for vals in itertools.product(dst.base.objects, repeat=len(objs)):
        fmap = dict(zip(objs, vals))
        if any(int(fmap[a]) > int(fmap[b]) for a, b in zip(objs, objs[1:])):
            continue
        try:
            out.append(thin_morphism("H", src, dst, fmap, "h" + "".join(vals)))
        except Exception:
            continue
    return out


MONADS = [TOP3, CL, ID3]
ARROWS = {(i, j): thin_h_morphisms(MONADS[i], MONADS[j]) for i in range(3) for j in range(3)}


def test_thin_morphism_enumeration_matches_brute_force():
    for (i, j), ms in ARROWS.items():
        assert all(brute_h_laws(m) for m in ms)
        assert ms, (i, j)


@settings(max_examples=60, deadline=None)
@given(st.tuples(*(st.integers(0, 2) for _ in range(4))), st.data())
def test_compose_h_is_associative(idx, data):
    a, b, c, d = idx
    f = data.draw(st.sampled_from(ARROWS[(a, b)]))
    g = data.draw(st.sampled_from(ARROWS[(b, c)]))
    h = data.draw(st.sampled_from(ARROWS[(c, d)]))
    left = compose_h(h, compose_h(g, f))
    right = compose_h(compose_h(h, g), f)
    assert left.f == right.f and left.chi == right.chi
    assert brute_h_laws(left)


def cl_trans():
    h = thin_morphism("H", CL, CL, {"0": "1", "1": "1", "2": "2"}, "cl")
    one = identity_h(CL)
    om = Nat(one.f, h.f, lambda x: leq(C3, x, h.f.obj(x)), name="eta")
    return one, h, MonadTrans(one, h, om, name="w")


def test_monad_transformation_validates():
    _, _, w = cl_trans()
    assert validate_monad_trans(w).ok
    assert validate_monad_trans(identity_trans(w.src)).ok


def test_monad_transformation_boundaries_are_checked():
    one, h, w = cl_trans()
    f = thin_morphism("H", TOP3, CL, IDMAP, "f")
    rep = validate_monad_trans(MonadTrans(f, h, w.omega, validate=False))
    assert rep.axioms() == {"monad-transformation.boundary"}
    back = Nat(one.f, one.f, lambda x: C3.identity(x))
    rep = validate_monad_trans(MonadTrans(one, h, back, validate=False))
    assert rep.axioms() == {"monad-transformation.omega.boundary"}


def test_composites_of_a_transformation_validate():
    one, h, w = cl_trans()
    vert = vcomp_nat(identity_trans(h).omega, w.omega)
    assert validate_monad_trans(MonadTrans(one, h, vert, validate=False)).ok
    horiz = hcomp_nat(w.omega, w.omega)
    assert validate_nat(horiz).ok
    src, dst = compose_h(one, one), compose_h(h, h)
    om = Nat(src.f, dst.f, horiz.at, name="ww")
    assert validate_monad_trans(MonadTrans(src, dst, om, validate=False)).ok


def test_transformations_between_points_of_the_identity_monad():
    # chi is an identity, so every endomorphism of 2 is compatible
    f = finset2_point_h(finset2_identity_monad(), "2")
    for m in f.dst.base.hom("2", "2"):
        om = Nat(f.f, f.f, {(): m}, name=m)
        assert validate_monad_trans(MonadTrans(f, f, om, validate=False)).ok


def test_point_morphisms_validate():
    I = finset2_identity_monad()
    assert isinstance(finset2_point_h(I), MonadMorH)
    assert brute_h_laws(finset2_point_h(I)) and brute_v_laws(finset2_point_v(I))


def test_identity_fun_of_closure_base():
    assert identity_h(CL).f == identity_fun(C3)
