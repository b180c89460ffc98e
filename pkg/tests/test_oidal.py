import itertools

import pytest

from oidal_engine.em import H1, K2, em, eq_K_composite, linton
from oidal_engine.fincat import (
    LawViolation, Nat, compose_fun, leq, product, product_fun,
)
from oidal_engine.fixtures import (
    BOT, DIAMOND, E, EMPTY, EX, SUBSETS, TOP, X, _SETS, diamond, diamond_join,
    diamond_monoidal, diamond_opmonoidal, powerset, powerset_duoidal,
    powerset_identity_oidal, powerset_oidal, powerset_times, powerset_union, _diamond_join,
)
from oidal_engine.mnd import closure_monad
from oidal_engine.oidal import (
    OidalMonad, OpmonCell, ShapeError, as_monoidal_presentation,
    as_opmonoidal_presentation, compose_opmon, from_mnd_pseudomonoid, identity_opmon,
    interchange_squares, lift_along_f, lift_along_f_squares, lift_along_u,
    lift_along_u_squares, lift_duoidal, lift_square_mode, monoidal_to_opmonoidal,
    opmonoidal_to_monoidal, tensor_pseudomonoids, thin_duoidal, thin_oidal_monad,
    thin_pseudomonoid, to_mnd_pseudomonoid, trivial_pseudomonoid, validate_duoidal,
    validate_mnd_pseudomonoid, validate_oidal_monad, validate_pseudomonoid,
)

NAMES = {v: k for k, v in _SETS.items()}


def set_union(p, q):
    return NAMES[_SETS[p] | _SETS[q]]


def set_times(p, q):
    # the group Z2 = {e, x}: e is the neutral element, x.x = e
    mul = {("e", "e"): "e", ("e", "x"): "x", ("x", "e"): "x", ("x", "x"): "e"}
    return NAMES[frozenset(mul[(g, h)] for g in _SETS[p] for h in _SETS[q])]


def subset(p, q):
    return _SETS[p] <= _SETS[q]


def table(P):
    return {(x, y): P.mult(x, y) for x in P.base.objects for y in P.base.objects}


def carrier_table(OM, L):
    B = em(OM.monad)
    return {(B.carrier(p), B.carrier(q)): B.carrier(L.mult(p, q))
            for p in L.base.objects for q in L.base.objects}


def test_diamond_join_is_a_pseudomonoid():
    P = diamond_join()
    assert validate_pseudomonoid(P).ok
    assert P.unit_obj == BOT


ORDER = {(x, y) for x in DIAMOND for y in DIAMOND
         if x == y or x == BOT or y == TOP}


def oracle_monoid(mult, unit):
    """Monotone, associative and unital, checked on the raw table."""
    objs = DIAMOND
    for x, y, x2, y2 in itertools.product(objs, repeat=4):
        if (x, x2) in ORDER and (y, y2) in ORDER and (mult[(x, y)], mult[(x2, y2)]) not in ORDER:
            return False
    for x, y, z in itertools.product(objs, repeat=3):
        if mult[(mult[(x, y)], z)] != mult[(x, mult[(y, z)])]:
            return False
    return all(mult[(unit, x)] == x == mult[(x, unit)] for x in objs)


def test_pseudomonoid_validation_agrees_with_the_table_oracle():
    D = diamond()
    base = {(x, y): _diamond_join(x, y) for x in DIAMOND for y in DIAMOND}
    seen = {True: 0, False: 0}
    for key in sorted(base):
        for v in DIAMOND:
            table_ = dict(base)
            table_[key] = v
            P = thin_pseudomonoid(D, table_, BOT, validate=False)
            expected = oracle_monoid(table_, BOT)
            assert validate_pseudomonoid(P).ok == expected, (key, v)
            seen[expected] += 1
    assert seen[True] and seen[False]


def test_powerset_duoidal_validates_and_matches_the_set_oracle():
    D = powerset_duoidal()
    assert validate_duoidal(D).ok
    assert table(D.pm_h) == {(p, q): set_times(p, q) for p in SUBSETS for q in SUBSETS}
    assert table(D.pm_v) == {(p, q): set_union(p, q) for p in SUBSETS for q in SUBSETS}
    # interchange inequalities checked on the sets themselves
    for w, x, y, z in itertools.product(SUBSETS, repeat=4):
        assert subset(set_union(set_times(w, x), set_times(y, z)),
                      set_times(set_union(w, y), set_union(x, z)))
    assert subset(EMPTY, set_times(EMPTY, EMPTY))
    assert subset(set_union(E, E), E)


def test_swapped_duoidal_orientation_fails():
    P = powerset()
    D = thin_duoidal(powerset_union(P), powerset_times(P), validate=False)
    assert not validate_duoidal(D).ok


def test_powerset_union_e_is_a_one_one_oidal_monad():
    OM = powerset_oidal()
    assert OM.shape == (1, 1)
    assert validate_oidal_monad(OM).ok
    t = {p: set_union(p, E) for p in SUBSETS}
    assert all(OM.monad.endo.obj(p) == t[p] for p in SUBSETS)


def test_unsupported_shapes_are_rejected():
    t = diamond_opmonoidal().monad
    for shape in ((2, 0), (0, 2), (2, 1)):
        with pytest.raises(ShapeError):
            OidalMonad(t, shape)
    with pytest.raises(ShapeError):
        OidalMonad(t, (0, 1))


def test_non_opmonoidal_closure_is_rejected():
    # a closure with t(bot) = a has no counit t.u => u for the join
    D = diamond()
    t = closure_monad(D, {BOT: "a", "a": "a", "b": TOP, TOP: TOP}, name="t")
    with pytest.raises(LawViolation):
        thin_oidal_monad(t, (0, 1), pm_op=diamond_join(D))


def test_tensor_with_trivial_is_the_identity():
    P = diamond_join()
    assert tensor_pseudomonoids(P, trivial_pseudomonoid()) is P


def test_tensor_of_joins_is_componentwise():
    P = diamond_join()
    T = tensor_pseudomonoids(P, P)
    assert validate_pseudomonoid(T).ok
    assert T.base == product(diamond(), diamond())
    for (x1, x2), (y1, y2) in itertools.product(T.base.objects, repeat=2):
        assert T.mult((x1, x2), (y1, y2)) == (_diamond_join(x1, y1), _diamond_join(x2, y2))
    assert T.unit_obj == (BOT, BOT)
    x = (BOT, "a", "b", TOP, "a", "b")
    assert T.alpha.at(x) == (P.alpha.at((BOT, "b", "a")), P.alpha.at(("a", TOP, "b")))


def thin_opmon(P, fmap, name):
    A = P.base
    f_obj = dict(fmap)
    from oidal_engine.fincat import Fun
    f = Fun(A, A, f_obj, {m: leq(A, f_obj[A.src(m)], f_obj[A.dst(m)]) for m in A.morphisms},
            name=name)
    c = OpmonCell(P, P, f, None, None, name=name, validate=False)
    c.binary = Nat(c.bin_src(), c.bin_dst(),
                   lambda x: leq(A, c.bin_src().obj(x), c.bin_dst().obj(x)))
    c.nullary = Nat(c.nul_src(), c.nul_dst(),
                    lambda x: leq(A, c.nul_src().obj(x), c.nul_dst().obj(x)))
    return c


def test_compose_opmon_of_lattice_cells():
    P = diamond_join()
    swap = thin_opmon(P, {BOT: BOT, "a": "b", "b": "a", TOP: TOP}, "swap")
    t = thin_opmon(P, {BOT: BOT, "a": "a", "b": TOP, TOP: TOP}, "t")
    assert swap.validate().ok and t.validate().ok
    c = compose_opmon(t, swap)
    assert c.validate().ok
    A = P.base
    ff = product_fun(swap.f, swap.f)
    for x in product(A, A).objects:
        assert c.binary.at(x) == A.compose(t.binary.at(ff.obj(x)), t.f.mor(swap.binary.at(x)))
    one = identity_opmon(P)
    c1 = compose_opmon(one, t)
    assert c1.f == t.f and c1.binary == t.binary and c1.nullary == t.nullary


def test_lift_along_u_of_identity_is_the_original():
    OM = powerset_identity_oidal()
    L = lift_along_u(OM)
    assert carrier_table(OM, L) == table(OM.pm_op)


def test_lift_along_u_on_the_diamond():
    OM = diamond_opmonoidal()
    L = lift_along_u(OM)
    B = em(OM.monad)
    fixed = [BOT, "a", TOP]
    assert sorted(B.carrier(p) for p in L.base.objects) == sorted(fixed)
    assert carrier_table(OM, L) == {(x, y): _diamond_join(x, y) for x in fixed for y in fixed}
    assert B.carrier(L.unit_obj) == BOT
    assert lift_along_u_squares(OM).ok


def test_lift_along_u_on_the_powerset():
    OM = powerset_oidal()
    L = lift_along_u(OM)
    fixed = [E, EX]
    assert carrier_table(OM, L) == {(p, q): set_times(p, q) for p in fixed for q in fixed}
    assert validate_pseudomonoid(L).ok
    assert lift_along_u_squares(OM).ok


def test_lift_along_f_on_the_diamond():
    OM = diamond_monoidal()
    L = lift_along_f(OM)
    t = {x: _diamond_join(x, "a") for x in DIAMOND}
    fixed = [x for x in DIAMOND if t[x] == x]
    oracle = {(x, y): t[_diamond_join(x, y)] for x in fixed for y in fixed}
    assert carrier_table(OM, L) == oracle
    assert em(OM.monad).carrier(L.unit_obj) == t[BOT]
    assert validate_pseudomonoid(L).ok
    assert lift_along_f_squares(OM).ok and lift_square_mode(OM) == "exact"


def test_lift_along_f_on_the_powerset():
    OM = powerset_oidal()
    L = lift_along_f(OM)
    fixed = [E, EX]
    oracle = {(p, q): set_union(set_union(p, q), E) for p in fixed for q in fixed}
    assert carrier_table(OM, L) == oracle
    assert validate_pseudomonoid(L).ok


def test_lift_duoidal_of_identity_is_the_fixture():
    OM = powerset_identity_oidal()
    D = lift_duoidal(OM)
    assert validate_duoidal(D).ok
    B = em(OM.monad)
    assert carrier_table(OM, D.pm_h) == table(OM.duoidal.pm_h)
    assert carrier_table(OM, D.pm_v) == table(OM.duoidal.pm_v)
    assert len(D.base.objects) == 4
    assert B.carrier(D.pm_h.unit_obj) == E and B.carrier(D.pm_v.unit_obj) == EMPTY


def test_lift_duoidal_of_union_e_is_a_two_chain():
    OM = powerset_oidal()
    D = lift_duoidal(OM)
    assert validate_duoidal(D).ok
    B = em(OM.monad)
    assert sorted(B.carrier(p) for p in D.base.objects) == sorted([E, EX])
    assert D.base.num_morphisms == 3 and D.base.is_thin()
    fixed = [E, EX]
    assert carrier_table(OM, D.pm_v) == {(p, q): set_union(set_union(p, q), E)
                                         for p in fixed for q in fixed}
    assert carrier_table(OM, D.pm_h) == {(p, q): set_times(p, q)
                                         for p in fixed for q in fixed}
    assert B.carrier(D.pm_v.unit_obj) == E and B.carrier(D.pm_h.unit_obj) == E


def test_interchange_cells_match_the_pointwise_composite():
    OM = powerset_oidal()
    for sq in interchange_squares(OM).values():
        k = K2(sq)
        path = eq_K_composite(sq)
        L = linton(sq.right)
        E_ = em(sq.right.dst).em_cat
        Hh = H1(sq.top)
        for p in k.base.objects:
            assert E_.compose(k.at(p), L.cocones[Hh.obj(p)].leg) == path.at(p)


def test_duoidal_lift_needs_both_axes():
    with pytest.raises(ShapeError):
        lift_duoidal(diamond_monoidal())
    with pytest.raises(ShapeError):
        lift_along_u(diamond_monoidal())
    with pytest.raises(ShapeError):
        lift_along_f(diamond_opmonoidal())


def test_presentation_conversions_are_inverse():
    D = powerset_duoidal()
    mon, opm = as_monoidal_presentation(D), as_opmonoidal_presentation(D)
    assert opmonoidal_to_monoidal(monoidal_to_opmonoidal(mon)).data() == mon.data()
    assert monoidal_to_opmonoidal(opmonoidal_to_monoidal(opm)).data() == opm.data()
    assert monoidal_to_opmonoidal(mon).data() == opm.data()


def test_mnd_pseudomonoid_round_trip():
    for OM, axis in ((diamond_opmonoidal(), "op"), (diamond_monoidal(), "mon"),
                     (powerset_oidal(), "op"), (powerset_oidal(), "mon")):
        X = to_mnd_pseudomonoid(OM, axis)
        assert validate_mnd_pseudomonoid(X).ok
        back = from_mnd_pseudomonoid(X)
        P = OM.pm_op if axis == "op" else OM.pm_mon
        Q = back.pm_op if axis == "op" else back.pm_mon
        assert table(Q) == table(P) and Q.unit_obj == P.unit_obj
        tau = OM.op if axis == "op" else OM.mon
        tau_back = back.op if axis == "op" else back.mon
        assert all(a.components == b.components for a, b in zip(tau, tau_back))
        assert to_mnd_pseudomonoid(back, axis).data() == X.data()


def test_mnd_pseudomonoid_needs_the_axis():
    with pytest.raises(ShapeError):
        to_mnd_pseudomonoid(diamond_opmonoidal(), "mon")


def test_union_and_times_units():
    assert powerset_union().unit_obj == EMPTY
    assert powerset_times().unit_obj == E
    assert set_times(X, X) == E
    assert compose_fun(powerset_union().m, product_fun(
        powerset_union().u, powerset_union().u)).obj(()) == EMPTY


def test_structure_morphisms_need_their_axis():
    with pytest.raises(ShapeError):
        diamond_opmonoidal().mon_morphisms()
    with pytest.raises(ShapeError):
        diamond_monoidal().op_morphisms()
    with pytest.raises(ShapeError):
        lift_square_mode(diamond_opmonoidal())
