"""Eilenberg-Moore categories, the liftings H and V, and the 2-cell action K2.

Algebra names are built componentwise from carrier and action ids, so the
Eilenberg-Moore category of a product monad is literally the product of
the Eilenberg-Moore categories.
"""
from __future__ import annotations

from dataclasses import dataclass

from .colim import (
    Cocone, NotFound, ReflexivePair, canonical_comparison, coequalizer, factor_through,
    is_split_coequalizer, is_universal,
)
from .fincat import (
    BoundaryMismatch, CategoryError, FinCat, Fun, Id, Nat, ValidationReport,
    check_size, compose_fun, compose_funs, identity_fun, identity_nat, join, parts,
    SizeCapExceeded, product, product_fun, product_nat, render, shuffle, split,
)
from .mnd import (
    Monad, MonadMorH, MonadMorV, MonadTrans, MndSquare, _memo, compose_v, identity_v,
    monoidal_product_monads, product_mor, shuffle_cell,
)


class InvalidLift(CategoryError):
    pass


class CoequalizerMissing(CategoryError):
    def __init__(self, algebra: Id, morphism: str = ""):
        super().__init__(f"no coequalizer of the Linton pair at algebra {render(algebra)}"
                         + (f" for {morphism}" if morphism else ""))
        self.algebra = algebra


def alg_name(x: Id, a: Id) -> Id:
    return join(*(f"{xi}⟨{ai}⟩" for xi, ai in zip(parts(x), parts(a))))


def alg_mor_name(f: Id, p: Id, q: Id) -> Id:
    return join(*(f"{fi}:{pi}→{qi}" for fi, pi, qi in zip(parts(f), parts(p), parts(q))))


class EMBundle:
    """The Eilenberg-Moore category of a monad with its free/forgetful adjunction."""

    def __init__(self, monad: Monad):
        self.monad = monad
        A, t, mu, eta = monad.base, monad.endo, monad.mult, monad.unit
        check_size(A.num_morphisms, "Eilenberg-Moore base")
        carrier: dict = {}
        action: dict = {}
        by_carrier: dict = {}
        for x in A.objects:
            tx = t.obj(x)
            for a in A.hom(tx, x):
                if A.compose(a, eta[x]) != A.identity(x):
                    continue
                if A.compose(a, mu[x]) != A.compose(a, t.mor(a)):
                    continue
                p = alg_name(x, a)
                if p in carrier:
                    raise CategoryError(f"algebra name clash at {render(p)}")
                carrier[p] = x
                action[p] = a
                by_carrier.setdefault(x, []).append(p)
        ends: dict = {}
        under: dict = {}
        lift: dict = {}
        algs = list(carrier)
        for p in algs:
            x, a = carrier[p], action[p]
            for q in algs:
                y, b = carrier[q], action[q]
                for f in A.hom(x, y):
                    if A.compose(b, t.mor(f)) == A.compose(f, a):
                        name = alg_mor_name(f, p, q)
                        if name in ends:
                            raise CategoryError(f"morphism name clash at {render(name)}")
                        ends[name] = (p, q)
                        under[name] = f
                        lift[(p, q, f)] = name
        check_size(len(ends), "Eilenberg-Moore category")
        ident = {p: lift[(p, p, A.identity(carrier[p]))] for p in algs}
        out: dict = {}
        for name, (p, _) in ends.items():
            out.setdefault(p, []).append(name)
        comp = {}
        for phi, (p, q) in ends.items():
            for psi in out.get(q, ()):
                r = ends[psi][1]
                comp[(psi, phi)] = lift[(p, r, A.compose(under[psi], under[phi]))]
        label = f"{A.name}^{monad.name}" if A.name or monad.name else "EM"
        self.em_cat = FinCat(algs, ends, ident, comp, name=label)
        self._carrier = carrier
        self._action = action
        self._under = under
        self._lift = lift
        E = self.em_cat

        def free_obj(x):
            return alg_name(t.obj(x), mu[x])

        self.free = Fun(A, E, free_obj,
                        lambda f: self.lift(free_obj(A.src(f)), free_obj(A.dst(f)), t.mor(f)),
                        name=f"f^{monad.name}")
        self.forgetful = Fun(E, A, carrier.__getitem__, under.__getitem__,
                             name=f"u^{monad.name}")
        self.unit = Nat(identity_fun(A), compose_fun(self.forgetful, self.free), eta.at,
                        name=f"eta^{monad.name}")
        self.counit = Nat(compose_fun(self.free, self.forgetful), identity_fun(E),
                          lambda p: self.lift(free_obj(carrier[p]), p, action[p]),
                          name=f"eps^{monad.name}")

    @property
    def algebras(self) -> tuple:
        return self.em_cat.objects

    def alg(self, x: Id, a: Id) -> Id:
        p = alg_name(x, a)
        if p not in self._carrier:
            raise InvalidLift(f"({render(x)}, {render(a)}) is not an algebra")
        return p

    def carrier(self, p: Id) -> Id:
        return self._carrier[p]

    def action(self, p: Id) -> Id:
        return self._action[p]

    def lift(self, p: Id, q: Id, f: Id) -> Id:
        try:
            return self._lift[(p, q, f)]
        except KeyError:
            raise InvalidLift(f"{render(f)} is not an algebra morphism "
                              f"{render(p)} -> {render(q)}") from None

    def __repr__(self):
        return f"<EMBundle of {self.monad.name}: {self.em_cat!r}>"


def em(M: Monad) -> EMBundle:
    return _memo("em", (M,), lambda: EMBundle(M))


def validate_em_bundle(B: EMBundle) -> ValidationReport:
    """The generated-monad equalities and triangle identities, as exact data."""
    rep = ValidationReport(f"EM bundle {B.monad.name}".strip())
    M = B.monad
    A, E = M.base, B.em_cat
    u, f = B.forgetful, B.free
    if compose_fun(u, f) != M.endo:
        rep.add("em.uf=t")
    for x in A.objects:
        if u.mor(B.counit[f.obj(x)]) != M.mult[x]:
            rep.add("em.u.eps.f=mu", x)
        if B.unit[x] != M.unit[x]:
            rep.add("em.eta^t=eta", x)
        if E.compose(B.counit[f.obj(x)], f.mor(B.unit[x])) != E.identity(f.obj(x)):
            rep.add("em.triangle.free", x)
    for p in E.objects:
        if A.compose(u.mor(B.counit[p]), B.unit[u.obj(p)]) != A.identity(u.obj(p)):
            rep.add("em.triangle.forgetful", p)
    t = M.endo
    for phi in E.morphisms:
        p, q = E.src(phi), E.dst(phi)
        g = u.mor(phi)
        if A.compose(B.action(q), t.mor(g)) != A.compose(g, B.action(p)):
            rep.add("em.morphism.action", phi)
    for x in A.objects:
        for g in A.hom_from(x):
            y = A.dst(g)
            for p in E.objects:
                if u.obj(p) != x:
                    continue
                for q in E.objects:
                    if u.obj(q) != y:
                        continue
                    commutes = A.compose(B.action(q), t.mor(g)) == A.compose(g, B.action(p))
                    if commutes and (p, q, g) not in B._lift:
                        rep.add("em.morphism.missing", g, p, q)
    return rep


def comparison_functor(M: Monad, left: Fun, right: Fun, counit: Nat) -> Fun:
    """The comparison 1-cell k(b) = (r b, r eps_b) into the EM category of M."""
    E = em(M)
    C = right.src

    def obj(b):
        return E.alg(right.obj(b), right.mor(counit[b]))

    return Fun(C, E.em_cat, obj, lambda g: E.lift(obj(C.src(g)), obj(C.dst(g)), right.mor(g)),
               name="comparison")


def verify_monoidal_em(*ms: Monad) -> ValidationReport:
    """EM of a product monad is the product of EM categories, and the comparison
    1-cell rebuilt from the product adjunction is the identity."""
    rep = ValidationReport("monoidal EM " + "x".join(M.name or "?" for M in ms))
    bundles = [em(M) for M in ms]
    P = monoidal_product_monads(*ms)
    EP = em(P)
    prod_cat = product(*(b.em_cat for b in bundles))
    if EP.em_cat != prod_cat:
        rep.add("em.product.category", detail="EM of the product differs from the product")
        return rep
    left = product_fun(*(b.free for b in bundles))
    right = product_fun(*(b.forgetful for b in bundles))
    counit = product_nat(*(b.counit for b in bundles))
    if compose_fun(right, left) != P.endo:
        rep.add("em.product.generates-t")
    for x in P.base.objects:
        if right.mor(counit[left.obj(x)]) != P.mult[x]:
            rep.add("em.product.generates-mu", x)
    if rep.violations:
        return rep
    if EP.free != left or EP.forgetful != right:
        rep.add("em.product.adjunction")
    k = comparison_functor(P, left, right, counit)
    one = identity_fun(prod_cat)
    for b in prod_cat.objects:
        if k.obj(b) != one.obj(b):
            rep.add("em.comparison.identity", b)
    for g in prod_cat.morphisms:
        if k.mor(g) != g:
            rep.add("em.comparison.identity", g)
    return rep


# --- H ----------------------------------------------------------------------

def H1(m: MonadMorH) -> Fun:
    return _memo("H1", (m,), lambda: _H1(m))


def _H1(m: MonadMorH) -> Fun:
    Es, Ed = em(m.src), em(m.dst)
    h, chi = m.f, m.chi
    B = m.dst.base

    def obj(p):
        x = Es.carrier(p)
        return Ed.alg(h.obj(x), B.compose(h.mor(Es.action(p)), chi[x]))

    def mor(phi):
        E = Es.em_cat
        return Ed.lift(obj(E.src(phi)), obj(E.dst(phi)), h.mor(Es.forgetful.mor(phi)))

    return Fun(Es.em_cat, Ed.em_cat, obj, mor, name=f"H({m.name})")


def H2(w: MonadTrans) -> Nat:
    if w.kind != "H":
        raise BoundaryMismatch("H2 needs a transformation of horizontal monad morphisms")
    return _memo("H2", (w,), lambda: _H2(w))


def _H2(w: MonadTrans) -> Nat:
    Es, Ed = em(w.src.src), em(w.src.dst)
    F, G = H1(w.src), H1(w.dst)
    return Nat(F, G, lambda p: Ed.lift(F.obj(p), G.obj(p), w.omega[Es.carrier(p)]),
               name=f"H({w.name})")


def em_lift_square(m: MonadMorH) -> ValidationReport:
    """u^s.H(h) = h.u^t and u^s.eps^s.H(h) = (h.u^t.eps^t)(chi.u^t), exactly."""
    rep = ValidationReport(f"EM lift square {m.name}".strip())
    Es, Ed = em(m.src), em(m.dst)
    F = H1(m)
    if compose_fun(Ed.forgetful, F) != compose_fun(m.f, Es.forgetful):
        rep.add("em-lift.forgetful", detail="u^s.H(h) differs from h.u^t")
        return rep
    B = m.dst.base
    for p in Es.em_cat.objects:
        x = Es.carrier(p)
        lhs = Ed.action(F.obj(p))
        rhs = B.compose(m.f.mor(Es.action(p)), m.chi[x])
        if lhs != rhs:
            rep.add("em-lift.action", p)
    return rep


# --- V ----------------------------------------------------------------------

@dataclass
class LintonData:
    functor: Fun
    epi: Nat
    cocones: dict
    pairs: dict


def linton_pair(m: MonadMorV, p: Id) -> tuple[Id, Id]:
    """The reflexive pair f^s.h.t.u^t => f^s.h.u^t at the algebra p."""
    Es, Ed = em(m.src), em(m.dst)
    x = Es.carrier(p)
    h = m.f
    E = Ed.em_cat
    upper = Ed.free.mor(h.mor(Es.action(p)))
    lower = E.compose(Ed.counit[Ed.free.obj(h.obj(x))], Ed.free.mor(m.chi[x]))
    return upper, lower


def linton_section(m: MonadMorV, p: Id) -> ReflexivePair:
    Es, Ed = em(m.src), em(m.dst)
    x = Es.carrier(p)
    upper, lower = linton_pair(m, p)
    return ReflexivePair(upper, lower, Ed.free.mor(m.f.mor(m.src.unit[x])))


def linton(m: MonadMorV) -> LintonData:
    return _memo("V", (m,), lambda: _linton(m))


def _linton(m: MonadMorV) -> LintonData:
    Es, Ed = em(m.src), em(m.dst)
    E = Ed.em_cat
    h = m.f
    cocones = {}
    pairs = {}
    for p in Es.em_cat.objects:
        pair = linton_pair(m, p)
        pairs[p] = pair
        try:
            cocones[p] = coequalizer(E, *pair)
        except NotFound:
            raise CoequalizerMissing(p, m.name) from None
    top = compose_funs(Ed.free, h, Es.forgetful)
    Es_cat = Es.em_cat

    def mor(phi):
        p, q = Es_cat.src(phi), Es_cat.dst(phi)
        target = E.compose(cocones[q].leg, top.mor(phi))
        return factor_through(E, cocones[p], target)

    F = Fun(Es_cat, E, lambda p: cocones[p].apex, mor, name=f"V({m.name})")
    epi = Nat(top, F, lambda p: cocones[p].leg, name=f"pi({m.name})")
    return LintonData(F, epi, cocones, pairs)


def V1(m: MonadMorV) -> Fun:
    return linton(m).functor


def V_epi(m: MonadMorV) -> Nat:
    return linton(m).epi


def V2(w: MonadTrans) -> Nat:
    if w.kind != "V":
        raise BoundaryMismatch("V2 needs a transformation of vertical monad morphisms")
    return _memo("V2", (w,), lambda: _V2(w))


def _V2(w: MonadTrans) -> Nat:
    Es, Ed = em(w.src.src), em(w.src.dst)
    E = Ed.em_cat
    L1, L2 = linton(w.src), linton(w.dst)

    def comp(p):
        x = Es.carrier(p)
        target = E.compose(L2.cocones[p].leg, Ed.free.mor(w.omega[x]))
        return factor_through(E, L1.cocones[p], target)

    return Nat(L1.functor, L2.functor, comp, name=f"V({w.name})")


def split_cocone(m: MonadMorV, y: Id) -> Cocone:
    """(f^s.h y, (eps^s.1.1)(1.chi)) at the free algebra on y."""
    Ed = em(m.dst)
    hy = m.f.obj(y)
    E = Ed.em_cat
    return Cocone(Ed.free.obj(hy), E.compose(Ed.counit[Ed.free.obj(hy)], Ed.free.mor(m.chi[y])))


def lemma_V_outcome(m: MonadMorV) -> tuple[str, tuple]:
    """'exact', 'upto-iso' or 'fail' with a witness, for the preservation of the
    Linton coequalizer at free algebras."""
    try:
        Es, Ed = em(m.src), em(m.dst)
        A, B = m.src.base, m.dst.base
        E = Ed.em_cat
        t, s = m.src.endo, m.dst.endo
        h = m.f
        L = linton(m)
        status = "exact"
        for y in A.objects:
            p = Es.free.obj(y)
            pair = L.pairs[p]
            sc = split_cocone(m, y)
            # the forgetful image is a split fork
            hty = h.obj(t.obj(y))
            if not is_split_coequalizer(
                    B, s.mor(h.mor(m.src.mult[y])),
                    B.compose(m.dst.mult[hty], s.mor(m.chi[t.obj(y)])),
                    Ed.forgetful.mor(sc.leg),
                    s.mor(h.mor(m.src.unit[y])),
                    s.mor(h.mor(t.mor(m.src.unit[y])))):
                return "fail", ("split", y)
            if not is_universal(E, *pair, sc):
                return "fail", ("universal", y)
            c = L.cocones[p]
            if c == sc:
                continue
            canonical_comparison(E, sc, c)
            status = "upto-iso"
        # V(h).f^t = f^s.h up to the comparison, naturally in y
        comp = {y: canonical_comparison(E, split_cocone(m, y), L.cocones[Es.free.obj(y)])
                for y in A.objects}
        lhs_f = compose_fun(Ed.free, h)
        rhs_f = compose_fun(L.functor, Es.free)
        for g in A.morphisms:
            y1, y2 = A.src(g), A.dst(g)
            if E.compose(rhs_f.mor(g), comp[y1]) != E.compose(comp[y2], lhs_f.mor(g)):
                return "fail", ("natural", g)
        return status, ()
    except SizeCapExceeded:
        raise
    except CategoryError as exc:
        return "fail", (type(exc).__name__, str(exc))


def lemma_V_check(m: MonadMorV) -> bool:
    return lemma_V_outcome(m)[0] != "fail"


def unit_coeq_check(M: Monad) -> ValidationReport:
    """The fork f^t.u^t.f^t.u^t => f^t.u^t -> 1 is a coequalizer, split under u^t."""
    rep = ValidationReport(f"unit coequalizer {M.name}".strip())
    B = em(M)
    A, E = M.base, B.em_cat
    t, mu, eta = M.endo, M.mult, M.unit
    for p in E.objects:
        x, a = B.carrier(p), B.action(p)
        upper = B.free.mor(a)
        lower = B.counit[B.free.obj(x)]
        e = Cocone(p, B.counit[p])
        if not is_split_coequalizer(A, mu[x], t.mor(a), a, eta[x], eta[t.obj(x)]):
            rep.add("unit-coeq.split", p)
        if not is_universal(E, upper, lower, e):
            rep.add("unit-coeq.universal", p)
            continue
        try:
            canonical_comparison(E, e, coequalizer(E, upper, lower))
        except SizeCapExceeded:
            raise
        except CategoryError:
            rep.add("unit-coeq.comparison", p)
    return rep


# --- canonical comparisons for V --------------------------------------------

def v_identity_comparison(M: Monad) -> Nat:
    """1 => V(1) at each algebra."""
    B = em(M)
    E = B.em_cat
    L = linton(identity_v(M))
    return Nat(identity_fun(E), L.functor,
               lambda p: canonical_comparison(E, Cocone(p, B.counit[p]), L.cocones[p]),
               name="c_id")


def lemma_V_comparison(m: MonadMorV, y: Id) -> Id:
    """f^s.h y -> V(h)(f^t y)."""
    Es, Ed = em(m.src), em(m.dst)
    L = linton(m)
    return canonical_comparison(Ed.em_cat, split_cocone(m, y), L.cocones[Es.free.obj(y)])


def v_composite_comparison(g: MonadMorV, f: MonadMorV) -> Nat:
    """V(g).V(f) => V(g.f)."""
    return _memo("cvc", (g, f), lambda: _v_composite_comparison(g, f))


def _v_composite_comparison(g, f):
    gf = compose_v(g, f)
    Ef, Eg = em(f.src), em(g.dst)
    E = Eg.em_cat
    Lf, Lg, Lgf = linton(f), linton(g), linton(gf)

    def comp(p):
        x = Ef.carrier(p)
        c = lemma_V_comparison(g, f.f.obj(x))
        leg = E.compose(Lg.functor.mor(Lf.cocones[p].leg), c)
        apex = Lg.functor.obj(Lf.functor.obj(p))
        return canonical_comparison(E, Cocone(apex, leg), Lgf.cocones[p])

    return Nat(compose_fun(Lg.functor, Lf.functor), Lgf.functor, comp, name="c_comp")


def v_product_comparison(*ms: MonadMorV) -> Nat:
    """V(f1) x V(f2) => V(f1 x f2)."""
    return _memo("cvp", ms, lambda: _v_product_comparison(ms))


def _v_product_comparison(ms):
    pm = product_mor(*ms)
    Ls = [linton(m) for m in ms]
    L = linton(pm)
    E = em(pm.dst).em_cat
    ar = [em(m.src).em_cat.arity for m in ms]

    def comp(p):
        ps = split(p, ar)
        cs = [Li.cocones[pi] for Li, pi in zip(Ls, ps)]
        c = Cocone(join(*(x.apex for x in cs)), join(*(x.leg for x in cs)))
        return canonical_comparison(E, c, L.cocones[p])

    F = product_fun(*(Li.functor for Li in Ls))
    src = Fun(L.functor.src, F.dst, F.obj, F.mor, name=F.name)
    return Nat(src, L.functor, comp, name="c_prod")


def v_shuffle_comparison(cell: MonadMorV, cats: tuple, order: tuple) -> Nat:
    """shuffle => V(shuffle, 1) on Eilenberg-Moore categories."""
    Ed = em(cell.dst)
    E = Ed.em_cat
    L = linton(cell)
    S = shuffle(cats, order)

    def comp(p):
        q = S.obj(p)
        return canonical_comparison(E, Cocone(q, Ed.counit[q]), L.cocones[p])

    src = Fun(L.functor.src, E, S.obj, S.mor, name=S.name)
    return Nat(src, L.functor, comp, name="c_shuffle")


# Expressions built from vertical monad morphisms, used to relate composites
# of V-images to the V-image of the composite.

@dataclass(frozen=True)
class VLeaf:
    m: MonadMorV


@dataclass(frozen=True)
class VId:
    M: Monad


@dataclass(frozen=True)
class VComp:
    g: object
    f: object


@dataclass(frozen=True)
class VProd:
    items: tuple


@dataclass(frozen=True)
class VShuffle:
    monads: tuple
    order: tuple


def v_eval(e) -> MonadMorV:
    if isinstance(e, VLeaf):
        return e.m
    if isinstance(e, VId):
        return identity_v(e.M)
    if isinstance(e, VComp):
        return compose_v(v_eval(e.g), v_eval(e.f), validate=False)
    if isinstance(e, VProd):
        return product_mor(*(v_eval(i) for i in e.items))
    if isinstance(e, VShuffle):
        return shuffle_v(e.monads, e.order)
    raise TypeError(e)


def shuffle_v(monads: tuple, order: tuple) -> MonadMorV:
    """The vertical cell (shuffle, 1), one object per (monads, order)."""
    return _memo("shv", monads + (order,), lambda: shuffle_cell(monads, order, "V"))


def v_functor(e) -> Fun:
    """The composite of V-images described by e, on Eilenberg-Moore categories."""
    if isinstance(e, VLeaf):
        return V1(e.m)
    if isinstance(e, VId):
        return identity_fun(em(e.M).em_cat)
    if isinstance(e, VComp):
        return compose_fun(v_functor(e.g), v_functor(e.f))
    if isinstance(e, VProd):
        return product_fun(*(v_functor(i) for i in e.items))
    if isinstance(e, VShuffle):
        return shuffle(tuple(em(M).em_cat for M in e.monads), e.order)
    raise TypeError(e)


def v_comparison(e) -> Nat:
    """The canonical iso v_functor(e) => V(v_eval(e))."""
    target = V1(v_eval(e))
    F = v_functor(e)
    if isinstance(e, VLeaf):
        return identity_nat(F)
    if isinstance(e, VId):
        c = v_identity_comparison(e.M)
        return Nat(F, target, c.at, name=c.name)
    if isinstance(e, VShuffle):
        c = v_shuffle_comparison(v_eval(e), tuple(em(M).em_cat for M in e.monads), e.order)
        return Nat(F, target, c.at, name=c.name)
    if isinstance(e, VComp):
        cg, cf = v_comparison(e.g), v_comparison(e.f)
        Fg = v_functor(e.g)
        k = v_composite_comparison(v_eval(e.g), v_eval(e.f))
        Vf = V1(v_eval(e.f))
        E = target.dst

        def comp(p):
            step1 = Fg.mor(cf[p])
            step2 = cg[Vf.obj(p)]
            return E.comp(k[p], step2, step1)

        return Nat(F, target, comp, name="c")
    if isinstance(e, VProd):
        cs = [v_comparison(i) for i in e.items]
        k = v_product_comparison(*(v_eval(i) for i in e.items))
        ar = [c.base.arity for c in cs]
        E = target.dst

        def comp(p):
            first = join(*(c[q] for c, q in zip(cs, split(p, ar))))
            return E.compose(k[p], first)

        return Nat(F, target, comp, name="c")
    raise TypeError(e)


def conjugate(a: Nat, c_src: Nat, c_dst: Nat) -> Nat:
    """c_dst^-1 . a . c_src for a between V-images and comparisons into them."""
    E = a.target

    def comp(x):
        inv = E.inverse(c_dst[x])
        if inv is None:
            raise CategoryError(f"comparison at {render(x)} is not invertible")
        return E.comp(inv, a[x], c_src[x])

    return Nat(c_src.src, c_dst.src, comp, name=f"conj({a.name})")


# --- K on 2-cells -----------------------------------------------------------

def eq_K_composite(sq: MndSquare) -> Nat:
    """The left/bottom path f^v.g.h.u^t -> H(k).V(n) of the defining diagram."""
    h, k, n, g = sq.top, sq.bottom, sq.left, sq.right
    Et, Es, Ev = em(h.src), em(n.dst), em(k.dst)
    E = Ev.em_cat
    Hk = H1(k)
    Ln = linton(n)

    def comp(p):
        x = Et.carrier(p)
        nx = n.f.obj(x)
        step1 = Ev.free.mor(sq.body[x])
        fsnx = Es.free.obj(nx)
        step2 = Ev.lift(Ev.free.obj(k.f.obj(nx)), Hk.obj(fsnx), k.chi[nx])
        step3 = Hk.mor(Ln.cocones[p].leg)
        return E.comp(step3, step2, step1)

    src = compose_funs(Ev.free, g.f, h.f, Et.forgetful)
    return Nat(src, compose_fun(Hk, Ln.functor), comp, name="eqK")


def K2(sq: MndSquare) -> Nat:
    return _memo("K2", (sq,), lambda: _K2(sq))


def _K2(sq: MndSquare) -> Nat:
    h, g = sq.top, sq.right
    Ev = em(g.dst)
    E = Ev.em_cat
    Hh = H1(h)
    Lg = linton(g)
    path = eq_K_composite(sq)

    def comp(p):
        q = Hh.obj(p)
        m = path[p]
        upper, lower = Lg.pairs[q]
        if E.compose(m, upper) != E.compose(m, lower):
            raise CategoryError(f"the defining diagram of K does not commute at {render(p)}")
        return factor_through(E, Lg.cocones[q], m)

    return Nat(compose_fun(Lg.functor, Hh), compose_fun(H1(sq.bottom), V1(sq.left)), comp,
               name=f"K({sq.name})")
