"""Monads in finite categories, monad morphisms of both variances, and
monad transformations.

A horizontal morphism (A,t) -> (B,s) is a functor h with chi: s.h => h.t;
a vertical one is a functor h with chi: h.t => s.h.
"""
from __future__ import annotations

from .fincat import (
    TERMINAL, BoundaryMismatch, Category, Fun, Nat, ValidationReport, check_size,
    compose_fun, identity_fun, identity_nat, join, leq, product, product_fun, same_cat,
    shuffle, split, validate_functor, validate_nat,
)

_MEMO: dict = {}


def _memo(kind: str, args: tuple, build):
    """Cache derived cells by the identity of their inputs, so that repeated
    requests return the same object (and downstream caches hit)."""
    key = (kind,) + tuple(id(a) for a in args)
    hit = _MEMO.get(key)
    if hit is not None:
        return hit[1]
    value = build()
    _MEMO[key] = (args, value)
    return value


class Monad:
    def __init__(self, base: Category, endo: Fun, mult: Nat, unit: Nat,
                 name: str = "", validate: bool = True):
        self.base = base
        self.endo = endo
        self.mult = mult
        self.unit = unit
        self.name = name
        if validate:
            validate_monad(self).raise_if_failed()

    @property
    def t(self) -> Fun:
        return self.endo

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Monad):
            return NotImplemented
        return (self.base == other.base and self.endo == other.endo
                and self.mult == other.mult and self.unit == other.unit)

    __hash__ = object.__hash__

    def __repr__(self):
        return f"<Monad {self.name or '?'} on {self.base!r}>"


def validate_monad(M: Monad) -> ValidationReport:
    rep = ValidationReport(f"monad {M.name}".strip())
    A, t, mu, eta = M.base, M.endo, M.mult, M.unit
    if not (same_cat(t.src, A) and same_cat(t.dst, A)):
        rep.add("monad.endofunctor", detail="t is not an endofunctor of the base")
        return rep
    rep.extend(validate_functor(t), "t")
    if rep.violations:
        return rep
    if mu.src != compose_fun(t, t) or mu.dst != t:
        rep.add("monad.mu.boundary")
    if eta.src != identity_fun(A) or eta.dst != t:
        rep.add("monad.eta.boundary")
    if rep.violations:
        return rep
    rep.extend(validate_nat(mu), "mu")
    rep.extend(validate_nat(eta), "eta")
    if rep.violations:
        return rep
    for x in A.objects:
        tx = t.obj(x)
        if A.compose(mu[x], mu[tx]) != A.compose(mu[x], t.mor(mu[x])):
            rep.add("monad.associativity", x)
        if A.compose(mu[x], eta[tx]) != A.identity(tx):
            rep.add("monad.unit.left", x)
        if A.compose(mu[x], t.mor(eta[x])) != A.identity(tx):
            rep.add("monad.unit.right", x)
    return rep


def identity_monad(A: Category) -> Monad:
    return _memo("idm", (A,), lambda: _identity_monad(A))


def _identity_monad(A: Category) -> Monad:
    one = identity_fun(A)
    return Monad(A, one, Nat(compose_fun(one, one), one, A.identity),
                 identity_nat(one), name=f"1_{A.name}" if A.name else "1", validate=False)


def trivial_monad() -> Monad:
    """The monoidal unit (I,1,1,1)."""
    return identity_monad(TERMINAL)


def closure_monad(P: Category, cmap: dict, name: str = "") -> Monad:
    """The monad of a closure-type operator on a thin category."""
    def mor(f):
        return leq(P, cmap[P.src(f)], cmap[P.dst(f)])

    t = Fun(P, P, dict(cmap), {f: mor(f) for f in P.morphisms}, name=name or "t")
    mu = Nat(compose_fun(t, t), t, lambda x: leq(P, cmap[cmap[x]], cmap[x]), name="mu")
    eta = Nat(identity_fun(P), t, lambda x: leq(P, x, cmap[x]), name="eta")
    return Monad(P, t, mu, eta, name=name)


def monoidal_product_monads(*ms: Monad) -> Monad:
    """(AA', tt', mu mu', eta eta'). Factors on the terminal category are
    dropped, so the trivial monad is a strict unit."""
    ms = tuple(M for M in ms if M.base.arity != 0)
    if not ms:
        return trivial_monad()
    if len(ms) == 1:
        return ms[0]
    return _memo("prod", ms, lambda: _product_monads(ms))


def _product_monads(ms: tuple) -> Monad:
    n = 1
    for M in ms:
        n *= M.base.num_morphisms
    check_size(n, "product monad")
    base = product(*(M.base for M in ms))
    t = product_fun(*(M.endo for M in ms))
    ar = [M.base.arity for M in ms]
    mu = Nat(compose_fun(t, t), t,
             lambda x: join(*(M.mult[p] for M, p in zip(ms, split(x, ar)))), name="mu")
    eta = Nat(identity_fun(base), t,
              lambda x: join(*(M.unit[p] for M, p in zip(ms, split(x, ar)))), name="eta")
    return Monad(base, t, mu, eta, name="".join(M.name or "?" for M in ms), validate=False)


# --- monad morphisms --------------------------------------------------------

class _MonadMor:
    kind = ""

    def __init__(self, src: Monad, dst: Monad, f: Fun, chi: Nat, name: str = "",
                 validate: bool = True):
        self.src = src
        self.dst = dst
        self.f = f
        self.chi = chi
        self.name = name
        if validate:
            self.validate().raise_if_failed()

    def validate(self) -> ValidationReport:
        raise NotImplementedError

    def __eq__(self, other):
        if self is other:
            return True
        if type(other) is not type(self):
            return NotImplemented
        return (self.src == other.src and self.dst == other.dst
                and self.f == other.f and self.chi == other.chi)

    __hash__ = object.__hash__

    def __repr__(self):
        return f"<{type(self).__name__} {self.name or '?'}: {self.src.name} -> {self.dst.name}>"


def _boundary(m: _MonadMor, rep: ValidationReport, chi_src: Fun, chi_dst: Fun) -> bool:
    A, B = m.src.base, m.dst.base
    if not (same_cat(m.f.src, A) and same_cat(m.f.dst, B)):
        rep.add("monad-morphism.functor.boundary")
        return False
    if m.chi.src != chi_src or m.chi.dst != chi_dst:
        rep.add("monad-morphism.chi.boundary")
        return False
    rep.extend(validate_nat(m.chi), "chi")
    return rep.ok


class MonadMorH(_MonadMor):
    """(h, chi: s.h => h.t) from (A,t) to (B,s)."""

    kind = "H"

    def validate(self) -> ValidationReport:
        rep = ValidationReport(f"horizontal monad morphism {self.name}".strip())
        t, s, h = self.src.endo, self.dst.endo, self.f
        if not _boundary(self, rep, compose_fun(s, h), compose_fun(h, t)):
            return rep
        A, B = self.src.base, self.dst.base
        mu, eta = self.src.mult, self.src.unit
        mu2, eta2 = self.dst.mult, self.dst.unit
        chi = self.chi
        for x in A.objects:
            lhs = B.comp(h.mor(mu[x]), chi[t.obj(x)], s.mor(chi[x]))
            if lhs != B.compose(chi[x], mu2[h.obj(x)]):
                rep.add("monad-morphism.multiplicativity", x)
            if h.mor(eta[x]) != B.compose(chi[x], eta2[h.obj(x)]):
                rep.add("monad-morphism.unitality", x)
        return rep


class MonadMorV(_MonadMor):
    """(h, chi: h.t => s.h) from (A,t) to (B,s)."""

    kind = "V"

    def validate(self) -> ValidationReport:
        rep = ValidationReport(f"vertical monad morphism {self.name}".strip())
        t, s, h = self.src.endo, self.dst.endo, self.f
        if not _boundary(self, rep, compose_fun(h, t), compose_fun(s, h)):
            return rep
        A, B = self.src.base, self.dst.base
        mu, eta = self.src.mult, self.src.unit
        mu2, eta2 = self.dst.mult, self.dst.unit
        chi = self.chi
        for x in A.objects:
            rhs = B.comp(mu2[h.obj(x)], s.mor(chi[x]), chi[t.obj(x)])
            if B.compose(chi[x], h.mor(mu[x])) != rhs:
                rep.add("monad-morphism.multiplicativity", x)
            if B.compose(chi[x], h.mor(eta[x])) != eta2[h.obj(x)]:
                rep.add("monad-morphism.unitality", x)
        return rep


def _ident_chi(src: Fun, dst: Fun) -> Nat:
    return Nat(src, dst, lambda x: dst.dst.identity(src.obj(x)), name="1")


def identity_h(M: Monad) -> MonadMorH:
    return _memo("idh", (M,), lambda: _identity_h(M))


def identity_v(M: Monad) -> MonadMorV:
    return _memo("idv", (M,), lambda: _identity_v(M))


def _identity_h(M: Monad) -> MonadMorH:
    one = identity_fun(M.base)
    t = M.endo
    return MonadMorH(M, M, one, _ident_chi(compose_fun(t, one), compose_fun(one, t)),
                     name=f"1_{M.name}", validate=False)


def _identity_v(M: Monad) -> MonadMorV:
    one = identity_fun(M.base)
    t = M.endo
    return MonadMorV(M, M, one, _ident_chi(compose_fun(one, t), compose_fun(t, one)),
                     name=f"1_{M.name}", validate=False)


def _check_chain(g: _MonadMor, f: _MonadMor) -> None:
    if f.dst != g.src:
        raise BoundaryMismatch(f"cannot compose {g.name} after {f.name}")


def compose_h(g: MonadMorH, f: MonadMorH, validate: bool = True) -> MonadMorH:
    """(g.f, (1.chi_f)(chi_g.1))."""
    return _memo("ch", (g, f), lambda: _compose_h(g, f, validate))


def compose_v(g: MonadMorV, f: MonadMorV, validate: bool = True) -> MonadMorV:
    """(g.f, (chi_g.1)(1.chi_f))."""
    return _memo("cv", (g, f), lambda: _compose_v(g, f, validate))


def _compose_h(g, f, validate):
    _check_chain(g, f)
    r, t = g.dst.endo, f.src.endo
    gf = compose_fun(g.f, f.f)
    C = g.dst.base
    chi = Nat(compose_fun(r, gf), compose_fun(gf, t),
              lambda x: C.compose(g.f.mor(f.chi[x]), g.chi[f.f.obj(x)]), name="chi")
    return MonadMorH(f.src, g.dst, gf, chi, name=f"{g.name}.{f.name}", validate=validate)


def _compose_v(g, f, validate):
    _check_chain(g, f)
    r, t = g.dst.endo, f.src.endo
    gf = compose_fun(g.f, f.f)
    C = g.dst.base
    chi = Nat(compose_fun(gf, t), compose_fun(r, gf),
              lambda x: C.compose(g.chi[f.f.obj(x)], g.f.mor(f.chi[x])), name="chi")
    return MonadMorV(f.src, g.dst, gf, chi, name=f"{g.name}.{f.name}", validate=validate)


def compose_mor(g: _MonadMor, f: _MonadMor, validate: bool = True) -> _MonadMor:
    if isinstance(g, MonadMorH) and isinstance(f, MonadMorH):
        return compose_h(g, f, validate)
    if isinstance(g, MonadMorV) and isinstance(f, MonadMorV):
        return compose_v(g, f, validate)
    raise BoundaryMismatch("cannot compose monad morphisms of different variance")


def product_mor(*ms: _MonadMor, validate: bool = False) -> _MonadMor:
    """Monoidal product of monad morphisms of one variance. Factors between
    trivial monads are identities of the unit and are dropped."""
    kind = ms[0].kind
    ms = tuple(m for m in ms if m.src.base.arity != 0 or m.dst.base.arity != 0)
    if not ms:
        return identity_h(trivial_monad()) if kind == "H" else identity_v(trivial_monad())
    if len(ms) == 1:
        return ms[0]
    return _memo("pm", ms, lambda: _product_mor(ms, validate))


def _product_mor(ms, validate):
    cls = type(ms[0])
    if any(type(m) is not cls for m in ms):
        raise BoundaryMismatch("mixed variances in a product of monad morphisms")
    src = monoidal_product_monads(*(m.src for m in ms))
    dst = monoidal_product_monads(*(m.dst for m in ms))
    f = product_fun(*(m.f for m in ms))
    ar = [m.src.base.arity for m in ms]
    if cls is MonadMorH:
        csrc, cdst = compose_fun(dst.endo, f), compose_fun(f, src.endo)
    else:
        csrc, cdst = compose_fun(f, src.endo), compose_fun(dst.endo, f)
    chi = Nat(csrc, cdst, lambda x: join(*(m.chi[p] for m, p in zip(ms, split(x, ar)))),
              name="chi")
    return cls(src, dst, f, chi, name="x".join(m.name or "?" for m in ms), validate=validate)


def shuffle_cell(ms: tuple[Monad, ...], order: tuple[int, ...], kind: str = "H"):
    """(shuffle, 1) between products of monads."""
    src = monoidal_product_monads(*ms)
    dst = monoidal_product_monads(*(ms[i] for i in order))
    p = shuffle(tuple(M.base for M in ms), order)
    if kind == "H":
        chi = _ident_chi(compose_fun(dst.endo, p), compose_fun(p, src.endo))
        return MonadMorH(src, dst, p, chi, name=p.name, validate=False)
    chi = _ident_chi(compose_fun(p, src.endo), compose_fun(dst.endo, p))
    return MonadMorV(src, dst, p, chi, name=p.name, validate=False)


def symmetry_monad_cell(M1: Monad, M2: Monad) -> MonadMorH:
    """(sigma, 1): M1 M2 -> M2 M1."""
    m = shuffle_cell((M1, M2), (1, 0), "H")
    m.f.name = m.name = "sigma"
    m.validate().raise_if_failed()
    return m


def symmetry_monad_cell_v(M1: Monad, M2: Monad) -> MonadMorV:
    m = shuffle_cell((M1, M2), (1, 0), "V")
    m.f.name = m.name = "sigma"
    m.validate().raise_if_failed()
    return m


def thin_morphism(kind: str, src: Monad, dst: Monad, fmap: dict, name: str = ""):
    """A monad morphism between monads on thin categories, with forced chi."""
    A, B = src.base, dst.base
    f = Fun(A, B, dict(fmap), {m: leq(B, fmap[A.src(m)], fmap[A.dst(m)]) for m in A.morphisms},
            name=name)
    t, s = src.endo, dst.endo
    if kind == "H":
        chi = Nat(compose_fun(s, f), compose_fun(f, t),
                  lambda x: leq(B, s.obj(fmap[x]), fmap[t.obj(x)]), name="chi")
        return MonadMorH(src, dst, f, chi, name=name)
    chi = Nat(compose_fun(f, t), compose_fun(s, f),
              lambda x: leq(B, fmap[t.obj(x)], s.obj(fmap[x])), name="chi")
    return MonadMorV(src, dst, f, chi, name=name)


# --- monad transformations --------------------------------------------------

class MonadTrans:
    """omega: f => g between parallel monad morphisms of one variance."""

    def __init__(self, src: _MonadMor, dst: _MonadMor, omega: Nat, name: str = "",
                 validate: bool = True):
        self.src = src
        self.dst = dst
        self.omega = omega
        self.name = name
        if validate:
            validate_monad_trans(self).raise_if_failed()

    @property
    def kind(self) -> str:
        return self.src.kind

    def __repr__(self):
        return f"<MonadTrans {self.name or '?'}: {self.src.name} => {self.dst.name}>"


def validate_monad_trans(w: MonadTrans) -> ValidationReport:
    rep = ValidationReport(f"monad transformation {w.name}".strip())
    f, g = w.src, w.dst
    if type(f) is not type(g) or f.src != g.src or f.dst != g.dst:
        rep.add("monad-transformation.boundary", detail="morphisms are not parallel")
        return rep
    om = w.omega
    if om.src != f.f or om.dst != g.f:
        rep.add("monad-transformation.omega.boundary")
        return rep
    rep.extend(validate_nat(om), "omega")
    if rep.violations:
        return rep
    A, B = f.src.base, f.dst.base
    t, s = f.src.endo, f.dst.endo
    for x in A.objects:
        if isinstance(f, MonadMorH):
            ok = B.compose(om[t.obj(x)], f.chi[x]) == B.compose(g.chi[x], s.mor(om[x]))
        else:
            ok = B.compose(g.chi[x], om[t.obj(x)]) == B.compose(s.mor(om[x]), f.chi[x])
        if not ok:
            rep.add("monad-transformation.compatibility", x)
    return rep


def identity_trans(m: _MonadMor) -> MonadTrans:
    return MonadTrans(m, m, identity_nat(m.f), name=f"1_{m.name}", validate=False)


def product_trans(*ws: MonadTrans) -> MonadTrans:
    src = product_mor(*(w.src for w in ws))
    dst = product_mor(*(w.dst for w in ws))
    ar = [w.omega.base.arity for w in ws]
    om = Nat(src.f, dst.f, lambda x: join(*(w.omega[p] for w, p in zip(ws, split(x, ar)))),
             name="x".join(w.name or "?" for w in ws))
    return MonadTrans(src, dst, om, name=om.name, validate=False)




# --- squares of the monad double category -----------------------------------

class MndSquare:
    """A 2-cell omega: g.h => k.n with horizontal edges top (h, Xi): (A,t) -> (C,z),
    bottom (k, Theta): (B,s) -> (D,v) and vertical edges left (n, Phi): (A,t) -> (B,s),
    right (g, Gamma): (C,z) -> (D,v)."""

    def __init__(self, top: MonadMorH, bottom: MonadMorH, left: MonadMorV,
                 right: MonadMorV, body: Nat, name: str = "", validate: bool = True):
        self.top = top
        self.bottom = bottom
        self.left = left
        self.right = right
        self.body = body
        self.name = name
        if validate:
            validate_mnd_square(self).raise_if_failed()

    def __repr__(self):
        return f"<MndSquare {self.name or '?'}>"


def validate_mnd_square(sq: MndSquare) -> ValidationReport:
    rep = ValidationReport(f"monad square {sq.name}".strip())
    h, k, n, g = sq.top, sq.bottom, sq.left, sq.right
    for label, m in (("top", h), ("bottom", k), ("left", n), ("right", g)):
        rep.extend(m.validate(), label)
    if rep.violations:
        return rep
    if not (h.src == n.src and h.dst == g.src and n.dst == k.src and g.dst == k.dst):
        rep.add("square.boundary", detail="edges do not form a square")
        return rep
    w = sq.body
    if w.src != compose_fun(g.f, h.f) or w.dst != compose_fun(k.f, n.f):
        rep.add("square.body.boundary")
        return rep
    rep.extend(validate_nat(w), "body")
    if rep.violations:
        return rep
    A, D = h.src.base, k.dst.base
    t, v = h.src.endo, k.dst.endo
    for x in A.objects:
        one = D.comp(k.f.mor(n.chi[x]), w[t.obj(x)], g.f.mor(h.chi[x]))
        two = D.comp(k.chi[n.f.obj(x)], v.mor(w[x]), g.chi[h.f.obj(x)])
        if one != two:
            rep.add("square.hexagon", x)
    return rep
