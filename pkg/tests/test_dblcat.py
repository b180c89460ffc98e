import itertools

import pytest

from oidal_engine.dblcat import (
    K, KSuite, SqrCell, adjunction_report, counit_cell, counit_h, counit_naturality,
    em_in_M10_check, inclusion_I, mnd_hcomp, mnd_id_h, mnd_id_v, mnd_laws, mnd_vcomp,
    sqr_hcomp, sqr_id_h, sqr_id_v, sqr_laws, sqr_vcomp, triangle_identities,
)
from oidal_engine.fincat import (
    BoundaryMismatch, Fun, Nat, TERMINAL, compose_fun, identity_fun, identity_nat,
    validate_functor, vcomp_nat, whisker_left, whisker_right,
)
from oidal_engine.fixture_io import load
from oidal_engine.fixtures import (
    chain3_closure, diamond, diamond_join, diamond_monoidal, diamond_suite, finset2,
    finset2_identity_monad, finset2_suite, powerset_oidal, powerset_suite,
)
from oidal_engine.mnd import (
    MndSquare, MonadMorV, closure_monad, identity_h, identity_v, thin_morphism,
    trivial_monad, validate_mnd_square,
)
from oidal_engine.oidal import OidalMonad, interchange_squares, thin_oidal_monad


def chain_cells():
    return list(load("chain3").cells.values())


def point_cell(C, x, body, name):
    p = Fun(TERMINAL, C, {(): x}, {(): C.identity(x)}, name=x)
    one = identity_fun(TERMINAL)
    cid = identity_fun(C)
    nat = Nat(compose_fun(cid, p), compose_fun(p, one), {(): body}, name=name)
    return SqrCell(p, p, one, cid, nat, name=name)


def test_composites_with_identity_squares_are_unchanged():
    for c in chain_cells():
        assert sqr_hcomp(sqr_id_h(c.right), c) == c
        assert sqr_hcomp(c, sqr_id_h(c.left)) == c
        assert sqr_vcomp(sqr_id_v(c.bottom), c) == c
        assert sqr_vcomp(c, sqr_id_v(c.top)) == c


def test_vertical_composite_matches_the_whiskered_formula():
    C = finset2()
    a = point_cell(C, "2", "2→2:10", "swap")
    b = point_cell(C, "2", "2→2:00", "const")
    ab = sqr_vcomp(b, a)
    expected = vcomp_nat(whisker_right(b.body, a.left), whisker_left(b.right, a.body))
    # the lower body acts after the upper one: const . swap, then swap . const
    assert ab.body.at(()) == expected.at(()) == "2→2:00"
    ba = sqr_vcomp(a, b)
    assert ba.body.at(()) == "2→2:11"


def test_horizontal_composite_matches_the_whiskered_formula():
    cells = chain_cells()
    for c1, c2 in itertools.product(cells, repeat=2):
        if c1.right != c2.left:
            continue
        h = sqr_hcomp(c2, c1)
        expected = vcomp_nat(whisker_left(c2.bottom, c1.body), whisker_right(c2.body, c1.top))
        assert all(h.body.at(x) == expected.at(x) for x in h.body.base.objects)


def test_square_laws_on_the_chain_cells():
    rep = sqr_laws(chain_cells())
    assert rep.ok


def test_interchange_on_a_two_by_two_grid():
    cells = chain_cells()
    grids = 0
    for a, b, c, d in itertools.product(cells, repeat=4):
        if a.right == b.left and c.right == d.left and a.bottom == c.top and b.bottom == d.top:
            one = sqr_vcomp(sqr_hcomp(d, c), sqr_hcomp(b, a))
            two = sqr_hcomp(sqr_vcomp(d, b), sqr_vcomp(c, a))
            assert one == two
            grids += 1
    assert grids > 0


def test_mismatched_squares_do_not_compose():
    C = finset2()
    a = point_cell(C, "2", "2→2:10", "swap")
    b = point_cell(C, "1", "1→1:0", "one")
    with pytest.raises(BoundaryMismatch):
        sqr_vcomp(b, a)


def test_identity_monad_squares_are_valid():
    M = chain3_closure()
    assert validate_mnd_square(mnd_id_h(identity_v(M))).ok
    assert validate_mnd_square(mnd_id_v(identity_h(M))).ok


def test_powerset_interchange_squares_are_valid():
    for sq in interchange_squares(powerset_oidal()).values():
        assert validate_mnd_square(sq).ok, sq.name


def corrupt_right(sq, x, value):
    g = sq.right
    chi = Nat(g.chi.src, g.chi.dst, lambda y: value if y == x else g.chi.at(y), name="bad")
    bad = MonadMorV(g.src, g.dst, g.f, chi, name="bad", validate=False)
    return MndSquare(sq.top, sq.bottom, sq.left, bad, sq.body, name="bad", validate=False)


def test_corrupted_gamma_is_reported():
    sq = finset2_suite().squares[0]
    assert validate_mnd_square(sq).ok
    rep = validate_mnd_square(corrupt_right(sq, "2", "2→2:10"))
    assert not rep.ok
    assert all(a.startswith("right.") for a in rep.axioms())
    assert "right.chi.nat.naturality" in rep.axioms()


def test_mnd_laws_on_bundled_squares():
    assert mnd_laws(finset2_suite().squares).ok
    assert mnd_laws(powerset_suite().squares).ok


def test_mnd_composites_stay_valid():
    sqs = finset2_suite().squares
    for a, b in itertools.product(sqs, repeat=2):
        if a.right == b.left:
            assert validate_mnd_square(mnd_hcomp(b, a)).ok
        if a.bottom == b.top:
            assert validate_mnd_square(mnd_vcomp(b, a)).ok


def identity_suite():
    M = chain3_closure()
    return KSuite("identities", [M], [identity_h(M)], [identity_v(M)],
                  [mnd_id_h(identity_v(M)), mnd_id_v(identity_h(M))])


def test_k_on_identity_cells_is_exact():
    res = K(identity_suite())
    assert res.law_report
    assert {e.status for e in res.law_report} == {"exact"}


@pytest.mark.parametrize("build", [powerset_suite, diamond_suite])
def test_k_on_thin_suites_is_exact(build):
    res = K(build())
    assert res.ok(strict_iso=True), [e for e in res.law_report if e.status != "exact"]


def test_k_on_chain_suite_is_exact():
    suite = load("chain3").suites["chain"]
    assert K(suite).ok(strict_iso=True)


def test_k_on_finset_suite_holds_up_to_iso():
    res = K(finset2_suite())
    statuses = res.statuses()
    assert res.ok() and not res.ok(strict_iso=True)
    assert set(statuses.values()) == {"exact", "upto-iso"}
    upto = sorted(c for c, s in statuses.items() if s == "upto-iso")
    assert "K.identity.v.I" in upto
    assert any(c.startswith("K.cocycle.") for c in statuses)
    assert all(statuses[c] != "fail" for c in statuses)


def test_k_maps_are_the_em_data():
    suite = powerset_suite()
    res = K(suite)
    assert set(res.object_map) == set(suite.monads)
    assert set(res.h_map) == set(suite.hmors) and set(res.v_map) == set(suite.vmors)
    assert set(res.cell_map) == set(suite.squares)


def test_adjunction_reports_pass_on_every_suite():
    for suite in (finset2_suite(), powerset_suite(), diamond_suite()):
        rep = adjunction_report(suite.monads, suite.vmors, suite.squares)
        assert rep.ok, suite.name


def test_unit_cells_on_functors():
    C = finset2()
    f = Fun(TERMINAL, C, {(): "2"}, {(): C.identity("2")}, name="p")
    assert adjunction_report([], [], functors=[f, identity_fun(C)]).ok


def test_triangle_identities_on_the_chain_closure():
    assert triangle_identities(chain3_closure()).ok
    assert triangle_identities(finset2_identity_monad()).ok


def test_counit_of_trivial_monad_is_identity_shaped():
    c = counit_h(trivial_monad())
    assert c.f.src.num_morphisms == 1 and c.f.dst == TERMINAL
    assert validate_functor(c.f).ok


def test_counit_naturality_on_squares():
    for sq in finset2_suite().squares + powerset_suite().squares:
        assert counit_naturality(sq), sq.name


def test_counit_cells_are_valid_squares():
    for n in finset2_suite().vmors:
        assert validate_mnd_square(counit_cell(n)).ok


def test_inclusion_of_a_square_of_functors():
    for c in chain_cells():
        s = inclusion_I(c)
        assert validate_mnd_square(s).ok
        assert s.body.components == c.body.components


def test_em_in_m10_on_the_diamond():
    assert em_in_M10_check(diamond_monoidal()).ok
    D = diamond()
    ident = closure_monad(D, {x: x for x in D.objects}, name="1")
    OM = thin_oidal_monad(ident, (1, 0), pm_mon=diamond_join(D))
    assert em_in_M10_check(OM).ok


def test_em_in_m10_with_corrupted_tau_fails():
    OM = diamond_monoidal()
    t2, t0 = OM.mon
    bad = Nat(t2.src, t2.dst, lambda x: "⊥≤⊥" if x == ("a", "b") else t2.at(x), name="bad")
    X = OidalMonad(OM.monad, (1, 0), pm_mon=OM.pm_mon, mon=(bad, t0), validate=False)
    rep = em_in_M10_check(X)
    assert not rep.ok
    assert rep.violations[0].witness == (("a", "b"),)
    assert any("tau" in a or "chi" in a for a in rep.axioms())


def test_identity_nat_used_for_identity_squares():
    M = chain3_closure()
    sq = mnd_id_v(identity_h(M))
    assert sq.body == identity_nat(identity_h(M).f)
    assert thin_morphism("H", M, M, {"0": "0", "1": "1", "2": "2"}).f == identity_fun(M.base)
