"""Small named categories, monads and oidal structures used by the examples,
the test-suite and the bundled JSON fixtures."""
from __future__ import annotations

import itertools

from .fincat import FinCat, Fun, Nat, compose_fun, identity_fun, leq, poset
from .mnd import Monad, MonadMorH, MonadMorV, closure_monad, thin_morphism, trivial_monad
from .oidal import OidalMonad, thin_duoidal, thin_oidal_monad, thin_pseudomonoid

BOT, TOP = "⊥", "⊤"
DIAMOND = (BOT, "a", "b", TOP)
EMPTY, E, X, EX = "∅", "{e}", "{x}", "{e,x}"
SUBSETS = (EMPTY, E, X, EX)


def chain(n: int, name: str = "") -> FinCat:
    elems = [str(i) for i in range(n)]
    return poset(elems, list(zip(elems, elems[1:])), name=name or f"C{n}")


def chain3_closure() -> Monad:
    """cl(0)=1, cl(1)=1, cl(2)=2 on the chain 0<1<2."""
    return closure_monad(chain(3), {"0": "1", "1": "1", "2": "2"}, name="cl")


def chain2_top() -> Monad:
    """The closure sending everything to the top of the chain 0<1."""
    return closure_monad(chain(2), {"0": "1", "1": "1"}, name="top")


def chain2_identity() -> Monad:
    return closure_monad(chain(2), {"0": "0", "1": "1"}, name="id2")


def diamond() -> FinCat:
    return poset(DIAMOND, [(BOT, "a"), (BOT, "b"), ("a", TOP), ("b", TOP)], name="D")


def _diamond_join(x, y):
    if x == y or y == BOT:
        return x
    if x == BOT:
        return y
    return TOP


def diamond_join(D: FinCat | None = None, validate: bool = True):
    D = D or diamond()
    table = {(x, y): _diamond_join(x, y) for x in DIAMOND for y in DIAMOND}
    return thin_pseudomonoid(D, table, BOT, name="join", validate=validate)


def diamond_opmonoidal(validate: bool = True) -> OidalMonad:
    """t(bot)=bot, t(a)=a, t(b)=top, t(top)=top, opmonoidal for the join."""
    D = diamond()
    t = closure_monad(D, {BOT: BOT, "a": "a", "b": TOP, TOP: TOP}, name="t")
    return thin_oidal_monad(t, (0, 1), pm_op=diamond_join(D), name="diamond-op",
                            validate=validate)


def diamond_monoidal(validate: bool = True) -> OidalMonad:
    """t(x) = x join a, monoidal for the join."""
    D = diamond()
    t = closure_monad(D, {x: _diamond_join(x, "a") for x in DIAMOND}, name="t")
    return thin_oidal_monad(t, (1, 0), pm_mon=diamond_join(D), name="diamond-mon",
                            validate=validate)


def powerset() -> FinCat:
    return poset(SUBSETS, [(EMPTY, E), (EMPTY, X), (E, EX), (X, EX)], name="PZ2")


_SETS = {EMPTY: frozenset(), E: frozenset("e"), X: frozenset("x"), EX: frozenset("ex")}
_NAMES = {v: k for k, v in _SETS.items()}


def _union(p, q):
    return _NAMES[_SETS[p] | _SETS[q]]


def _times(p, q):
    out = set()
    for g in _SETS[p]:
        for h in _SETS[q]:
            out.add("e" if g == h else "x")
    return _NAMES[frozenset(out)]


def powerset_union(P: FinCat | None = None, validate: bool = True):
    P = P or powerset()
    return thin_pseudomonoid(P, {(p, q): _union(p, q) for p in SUBSETS for q in SUBSETS},
                             EMPTY, name="union", validate=validate)


def powerset_times(P: FinCat | None = None, validate: bool = True):
    P = P or powerset()
    return thin_pseudomonoid(P, {(p, q): _times(p, q) for p in SUBSETS for q in SUBSETS},
                             E, name="times", validate=validate)


def powerset_duoidal(P: FinCat | None = None, validate: bool = True):
    """Horizontal structure the pointwise product, vertical the union."""
    P = P or powerset()
    return thin_duoidal(powerset_times(P, validate), powerset_union(P, validate),
                        name="PZ2", validate=validate)


def union_e(P: FinCat | None = None) -> Monad:
    P = P or powerset()
    return closure_monad(P, {p: _union(p, E) for p in SUBSETS}, name="union-e")


def powerset_oidal(validate: bool = True, monad: Monad | None = None) -> OidalMonad:
    """t(X) = X u {e}: monoidal for the union, opmonoidal for the product."""
    P = powerset()
    D = powerset_duoidal(P, validate)
    t = monad or union_e(P)
    return thin_oidal_monad(t, (1, 1), pm_op=D.pm_h, pm_mon=D.pm_v, duoidal=D,
                            name="union-e", validate=validate)


def powerset_identity_oidal(validate: bool = True) -> OidalMonad:
    P = powerset()
    D = powerset_duoidal(P, validate)
    t = closure_monad(P, {p: p for p in SUBSETS}, name="1")
    return thin_oidal_monad(t, (1, 1), pm_op=D.pm_h, pm_mon=D.pm_v, duoidal=D,
                            name="identity", validate=validate)


# --- the category of sets with at most two elements -------------------------

def _fname(n: int, m: int, vals: tuple) -> str:
    return f"{n}→{m}:" + "".join(map(str, vals))


def finset2() -> FinCat:
    """Objects 0, 1, 2 and all functions. Within each hom-set, maps are listed
    in reverse lexicographic order, so the swap of 2 precedes its identity."""
    objs = ["0", "1", "2"]
    ends = {}
    table = {}
    for n in range(3):
        for m in range(3):
            maps = sorted(itertools.product(range(m), repeat=n), reverse=True)
            for vals in maps:
                name = _fname(n, m, vals)
                ends[name] = (str(n), str(m))
                table[name] = vals
    ident = {str(n): _fname(n, n, tuple(range(n))) for n in range(3)}
    comp = {}
    for f, (a, b) in ends.items():
        for g, (b2, c) in ends.items():
            if b == b2:
                vals = tuple(table[g][i] for i in table[f])
                comp[(g, f)] = _fname(int(a), int(c), vals)
    return FinCat(objs, ends, ident, comp, name="FinSet≤2")


def finset2_identity_monad(C: FinCat | None = None) -> Monad:
    C = C or finset2()
    one = identity_fun(C)
    return Monad(C, one, Nat(compose_fun(one, one), one, C.identity, name="mu"),
                 Nat(one, one, C.identity, name="eta"), name="I")


def finset2_terminal_monad(C: FinCat | None = None) -> Monad:
    """t(X) = 1 with the unique maps as unit."""
    C = C or finset2()
    one = C.identity("1")
    t = Fun(C, C, lambda x: "1", lambda f: one, name="1")
    mu = Nat(compose_fun(t, t), t, lambda x: one, name="mu")
    eta = Nat(identity_fun(C), t, lambda x: C.hom(x, "1")[0], name="eta")
    return Monad(C, t, mu, eta, name="T")


def finset2_collapse_v(I: Monad, T: Monad) -> MonadMorV:
    """(1, !): I -> T as a vertical monad morphism."""
    C = I.base
    chi = Nat(compose_fun(identity_fun(C), I.endo), compose_fun(T.endo, identity_fun(C)),
              lambda x: C.hom(x, "1")[0], name="!")
    return MonadMorV(I, T, identity_fun(C), chi, name="collapse")


def finset2_collapse_h(T: Monad, I: Monad) -> MonadMorH:
    """(1, !): T -> I as a horizontal monad morphism."""
    C = I.base
    chi = Nat(compose_fun(I.endo, identity_fun(C)), compose_fun(identity_fun(C), T.endo),
              lambda x: C.hom(x, "1")[0], name="!")
    return MonadMorH(T, I, identity_fun(C), chi, name="collapse")


def finset2_point_v(I: Monad, x: str = "2") -> MonadMorV:
    """The point x as a vertical monad morphism from the trivial monad."""
    C = I.base
    triv = trivial_monad()
    p = Fun(triv.base, C, {(): x}, {(): C.identity(x)}, name=x)
    chi = Nat(compose_fun(p, triv.endo), compose_fun(I.endo, p), {(): C.identity(x)},
              name="1")
    return MonadMorV(triv, I, p, chi, name=f"point {x}")


def finset2_point_h(I: Monad, x: str = "2") -> MonadMorH:
    C = I.base
    triv = trivial_monad()
    p = Fun(triv.base, C, {(): x}, {(): C.identity(x)}, name=x)
    chi = Nat(compose_fun(I.endo, p), compose_fun(p, triv.endo), {(): C.identity(x)},
              name="1")
    return MonadMorH(triv, I, p, chi, name=f"point {x}")


def chain_inclusion_h(src: Monad, dst: Monad, fmap: dict, name: str = ""):
    return thin_morphism("H", src, dst, fmap, name)


def chain_inclusion_v(src: Monad, dst: Monad, fmap: dict, name: str = ""):
    return thin_morphism("V", src, dst, fmap, name)


def diamond_leq(D: FinCat, x, y):
    return leq(D, x, y)


# --- suites for the double functor K ----------------------------------------

def _with_identity_squares(suite):
    from .dblcat import mnd_id_h, mnd_id_v
    suite.squares = list(suite.squares) + [mnd_id_v(h) for h in suite.hmors] + \
        [mnd_id_h(n) for n in suite.vmors]
    return suite


def finset2_squares(I: Monad, T: Monad) -> list:
    """Squares with top the point 2 of I: one with body the swap of 2, and one
    collapsing onto the point 1 of T."""
    C = I.base
    triv = trivial_monad()
    p2 = finset2_point_h(I, "2")
    p1 = finset2_point_h(T, "1")
    one_v = identity_v_of(triv)
    swap = Nat(compose_fun(identity_fun(C), p2.f), compose_fun(p2.f, one_v.f),
               {(): _fname(2, 2, (1, 0))}, name="swap")
    from .mnd import MndSquare, identity_v
    sq_swap = MndSquare(p2, p2, one_v, identity_v(I), swap, name="swap")
    col = finset2_collapse_v(I, T)
    bang = Nat(compose_fun(col.f, p2.f), compose_fun(p1.f, one_v.f),
               {(): C.hom("2", "1")[0]}, name="!")
    sq_col = MndSquare(p2, p1, one_v, col, bang, name="collapse")
    return [sq_swap, sq_col]


def identity_v_of(M: Monad) -> MonadMorV:
    from .mnd import identity_v
    return identity_v(M)


def finset2_suite():
    """Monads on the category of sets with at most two elements. The Linton
    coequalizers pick the swap of 2 before its identity, so V holds only up to
    the canonical comparisons."""
    from .dblcat import KSuite
    from .mnd import identity_h, identity_v
    C = finset2()
    I, T = finset2_identity_monad(C), finset2_terminal_monad(C)
    hmors = [finset2_point_h(I, "2"), finset2_collapse_h(T, I), identity_h(I)]
    vmors = [finset2_point_v(I, "2"), finset2_collapse_v(I, T), identity_v(I)]
    # share the morphism objects used by the squares
    sqs = finset2_squares(I, T)
    hmors[0] = sqs[0].top
    vmors[1] = sqs[1].right
    suite = KSuite("finset2", [I, T], hmors, vmors, sqs)
    return _with_identity_squares(suite)


def powerset_suite():
    """The (1,1)-oidal monad X u {e} on the subsets of Z2 with its interchange
    squares; every category involved is thin."""
    from .dblcat import KSuite
    from .oidal import interchange_squares
    OM = powerset_oidal()
    mh, uh = OM.op_morphisms()
    mv, uv = OM.mon_morphisms()
    sqs = list(interchange_squares(OM).values())
    suite = KSuite("powerset-Z2", [OM.monad], [mh, uh], [mv, uv], sqs)
    return _with_identity_squares(suite)


def diamond_suite():
    """Structure morphisms of the two diamond closures, with identity squares."""
    from .dblcat import KSuite
    op, mon = diamond_opmonoidal(), diamond_monoidal()
    suite = KSuite("diamond", [op.monad, mon.monad], list(op.op_morphisms()),
                   list(mon.mon_morphisms()), [])
    return _with_identity_squares(suite)
