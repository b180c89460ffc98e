"""Pseudomonoids, (op)monoidal cells, duoidal objects and (p,q)-oidal monads
with p+q <= 2, together with their liftings to Eilenberg-Moore categories.

Writing x*y for m(x,y), the cells of a pseudomonoid have components
alpha_{x,y,z}: (x*y)*z -> x*(y*z), lambda_x: u*x -> x and rho_x: x*u -> x.
In a duoidal object the horizontal structure (m-, u-) is written x.y and
the vertical one (m|, u|) is written x|y; the interchange cell has
components xi_{w,x,y,z}: (w.x)|(y.z) -> (w|y).(x|z).
"""
from __future__ import annotations

from .colim import CategoryError
from .em import (
    VComp, VId, VLeaf, VProd, VShuffle, H1, H2, K2, V1, V2, conjugate, em,
    em_lift_square, lemma_V_outcome, shuffle_v, v_comparison,
)
from .fincat import (
    TERMINAL, BoundaryMismatch, Category, Fun, Id, Nat, ValidationReport,
    compose_fun, compose_funs, identity_fun, identity_nat, join, leq, product, product_fun,
    render, same_cat, shuffle, split, validate_functor, validate_nat,
)
from .mnd import (
    Monad, MonadMorH, MonadMorV, MonadTrans, MndSquare, _memo, compose_h, compose_v,
    identity_h, identity_v, monoidal_product_monads, product_mor,
    trivial_monad, validate_monad, validate_monad_trans,
)


class ShapeError(CategoryError):
    pass


def _retype_fun(F: Fun, src: Category, dst: Category) -> Fun:
    """The same maps between categories equal, as data, to the given ones."""
    if not (same_cat(F.src, src) and same_cat(F.dst, dst)):
        raise BoundaryMismatch(f"{F.name} does not live on the requested categories")
    return Fun(src, dst, F.obj, F.mor, name=F.name)


def _nat_as(a: Nat, src: Fun, dst: Fun, name: str = "") -> Nat:
    """The components of a viewed between src and dst, which must be equal as
    data to the functors a already runs between."""
    if a.src != src or a.dst != dst:
        raise BoundaryMismatch(f"{name or a.name} does not run between the expected functors")
    return Nat(src, dst, a.at, name=name or a.name)


# --- pseudomonoids ----------------------------------------------------------

class Pseudomonoid:
    def __init__(self, base: Category, m: Fun, u: Fun, alpha: Nat, lam: Nat, rho: Nat,
                 name: str = "", validate: bool = True):
        self.base = base
        self.m = m
        self.u = u
        self.alpha = alpha
        self.lam = lam
        self.rho = rho
        self.name = name
        if validate:
            validate_pseudomonoid(self).raise_if_failed()

    def mult(self, x: Id, y: Id) -> Id:
        return self.m.obj(join(x, y))

    def mult_mor(self, f: Id, g: Id) -> Id:
        return self.m.mor(join(f, g))

    @property
    def unit_obj(self) -> Id:
        return self.u.obj(())

    def m_m1(self) -> Fun:
        return compose_fun(self.m, product_fun(self.m, identity_fun(self.base)))

    def m_1m(self) -> Fun:
        return compose_fun(self.m, product_fun(identity_fun(self.base), self.m))

    def m_u1(self) -> Fun:
        return compose_fun(self.m, product_fun(self.u, identity_fun(self.base)))

    def m_1u(self) -> Fun:
        return compose_fun(self.m, product_fun(identity_fun(self.base), self.u))

    def __repr__(self):
        return f"<Pseudomonoid {self.name or '?'} on {self.base!r}>"


def validate_pseudomonoid(P: Pseudomonoid) -> ValidationReport:
    rep = ValidationReport(f"pseudomonoid {P.name}".strip())
    A = P.base
    AA = product(A, A)
    if not (same_cat(P.m.src, AA) and same_cat(P.m.dst, A)):
        rep.add("pseudomonoid.m.boundary")
    if not (same_cat(P.u.src, TERMINAL) and same_cat(P.u.dst, A)):
        rep.add("pseudomonoid.u.boundary")
    if rep.violations:
        return rep
    rep.extend(validate_functor(P.m), "m")
    rep.extend(validate_functor(P.u), "u")
    if rep.violations:
        return rep
    one = identity_fun(A)
    for label, cell, src, dst in (("alpha", P.alpha, P.m_m1(), P.m_1m()),
                                  ("lambda", P.lam, P.m_u1(), one),
                                  ("rho", P.rho, P.m_1u(), one)):
        if cell.src != src or cell.dst != dst:
            rep.add(f"pseudomonoid.{label}.boundary")
            continue
        rep.extend(validate_nat(cell), label)
    if rep.violations:
        return rep
    for label, cell in (("alpha", P.alpha), ("lambda", P.lam), ("rho", P.rho)):
        for x in cell.base.objects:
            if A.inverse(cell[x]) is None:
                rep.add(f"pseudomonoid.{label}.invertible", *_wit(x))
    m, a = P.m, P.alpha
    objs = A.objects
    for x in objs:
        for y in objs:
            for z in objs:
                for w in objs:
                    lhs = A.compose(a[join(x, y, P.mult(z, w))], a[join(P.mult(x, y), z, w)])
                    rhs = A.comp(m.mor(join(A.identity(x), a[join(y, z, w)])),
                                 a[join(x, P.mult(y, z), w)],
                                 m.mor(join(a[join(x, y, z)], A.identity(w))))
                    if lhs != rhs:
                        rep.add("pseudomonoid.pentagon", x, y, z, w)
    u = P.unit_obj
    for x in objs:
        for y in objs:
            lhs = A.compose(m.mor(join(A.identity(x), P.lam[y])), a[join(x, u, y)])
            if lhs != m.mor(join(P.rho[x], A.identity(y))):
                rep.add("pseudomonoid.triangle", x, y)
    return rep


def _wit(x: Id) -> tuple:
    return x if isinstance(x, tuple) and x else (x,)


def thin_pseudomonoid(A: Category, mult: dict, unit: Id, name: str = "",
                      validate: bool = True) -> Pseudomonoid:
    """A pseudomonoid on a thin category from its multiplication table on
    objects; every structure cell is the forced comparison."""
    AA = product(A, A)

    def mobj(p):
        return mult[p]

    m = Fun(AA, A, mobj, lambda f: leq(A, mobj(AA.src(f)), mobj(AA.dst(f))), name=name or "m")
    u = Fun(TERMINAL, A, {(): unit}, {(): A.identity(unit)}, name="u")
    return _forced_pseudomonoid(A, m, u, name, validate)


def _forced_pseudomonoid(A, m, u, name, validate):
    P = Pseudomonoid(A, m, u, None, None, None, name=name, validate=False)
    for attr, src, dst in (("alpha", P.m_m1(), P.m_1m()),
                           ("lam", P.m_u1(), identity_fun(A)),
                           ("rho", P.m_1u(), identity_fun(A))):
        setattr(P, attr, Nat(src, dst, _forced(A, src, dst), name=attr))
    if validate:
        validate_pseudomonoid(P).raise_if_failed()
    return P


def _forced(B: Category, F: Fun, G: Fun):
    return lambda x: leq(B, F.obj(x), G.obj(x))


def strict_pseudomonoid(A: Category, m: Fun, u: Fun, name: str = "",
                        validate: bool = True) -> Pseudomonoid:
    """A strictly associative and unital structure; the cells are identities."""
    P = Pseudomonoid(A, m, u, None, None, None, name=name, validate=False)
    P.alpha = _identity_cell(P.m_m1(), P.m_1m(), "alpha")
    P.lam = _identity_cell(P.m_u1(), identity_fun(A), "lambda")
    P.rho = _identity_cell(P.m_1u(), identity_fun(A), "rho")
    if validate:
        validate_pseudomonoid(P).raise_if_failed()
    return P


def _identity_cell(F: Fun, G: Fun, name: str) -> Nat:
    B = F.dst
    return Nat(F, G, lambda x: B.identity(F.obj(x)), name=name)


def trivial_pseudomonoid() -> Pseudomonoid:
    """The monoidal unit: the terminal category with identity structure."""
    return _memo("trivpm", (TERMINAL,), _trivial_pseudomonoid)


def _trivial_pseudomonoid():
    one = identity_fun(TERMINAL)
    return strict_pseudomonoid(TERMINAL, one, one, name="I", validate=False)


def tensor_pseudomonoids(*ps: Pseudomonoid, validate: bool = True) -> Pseudomonoid:
    """Product structure: multiplication (m m').(1 sigma 1), unit u u', and
    coherence cells taken componentwise."""
    ps = tuple(P for P in ps if P.base.arity != 0)
    if not ps:
        return trivial_pseudomonoid()
    if len(ps) == 1:
        return ps[0]
    return _memo("tensorpm", ps, lambda: _tensor(ps, validate))


def _tensor(ps, validate):
    n = len(ps)
    bases = tuple(P.base for P in ps)
    A = product(*bases)
    inter = tuple(k for i in range(n) for k in (i, n + i))
    mid = shuffle(bases + bases, inter)
    m = compose_fun(product_fun(*(P.m for P in ps)), mid)
    m.name = "x".join(P.m.name or "m" for P in ps)
    u = product_fun(*(P.u for P in ps))
    T = Pseudomonoid(A, m, u, None, None, None, name="x".join(P.name or "?" for P in ps),
                     validate=False)
    ar = [P.base.arity for P in ps]

    def cell(attr, k):
        def comp(x):
            pieces = split(x, ar * k)
            return join(*(getattr(P, attr)[join(*pieces[i::n])] for i, P in enumerate(ps)))
        return comp

    T.alpha = Nat(T.m_m1(), T.m_1m(), cell("alpha", 3), name="alpha")
    T.lam = Nat(T.m_u1(), identity_fun(A), cell("lam", 1), name="lambda")
    T.rho = Nat(T.m_1u(), identity_fun(A), cell("rho", 1), name="rho")
    if validate:
        validate_pseudomonoid(T).raise_if_failed()
    return T


# --- opmonoidal and monoidal cells ------------------------------------------

class OpmonCell:
    """(f, binary: f.m => m'.ff, nullary: f.u => u')."""

    kind = "opmonoidal"

    def __init__(self, src: Pseudomonoid, dst: Pseudomonoid, f: Fun, binary: Nat,
                 nullary: Nat, name: str = "", validate: bool = True):
        self.src = src
        self.dst = dst
        self.f = f
        self.binary = binary
        self.nullary = nullary
        self.name = name
        if validate:
            self.validate().raise_if_failed()

    def validate(self) -> ValidationReport:
        return validate_opmon_cell(self)

    def bin_src(self) -> Fun:
        return compose_fun(self.f, self.src.m)

    def bin_dst(self) -> Fun:
        return compose_fun(self.dst.m, product_fun(self.f, self.f))

    def nul_src(self) -> Fun:
        return compose_fun(self.f, self.src.u)

    def nul_dst(self) -> Fun:
        return self.dst.u


class MonCell(OpmonCell):
    """(f, binary: m'.ff => f.m, nullary: u' => f.u)."""

    kind = "monoidal"

    def validate(self) -> ValidationReport:
        return validate_mon_cell(self)

    def bin_src(self) -> Fun:
        return compose_fun(self.dst.m, product_fun(self.f, self.f))

    def bin_dst(self) -> Fun:
        return compose_fun(self.f, self.src.m)

    def nul_src(self) -> Fun:
        return self.dst.u

    def nul_dst(self) -> Fun:
        return compose_fun(self.f, self.src.u)


def _cell_boundaries(c: OpmonCell, rep: ValidationReport) -> bool:
    A, B = c.src.base, c.dst.base
    if not (same_cat(c.f.src, A) and same_cat(c.f.dst, B)):
        rep.add(f"{c.kind}.functor.boundary")
        return False
    if c.binary.src != c.bin_src() or c.binary.dst != c.bin_dst():
        rep.add(f"{c.kind}.binary.boundary")
    if c.nullary.src != c.nul_src() or c.nullary.dst != c.nul_dst():
        rep.add(f"{c.kind}.nullary.boundary")
    if rep.violations:
        return False
    rep.extend(validate_nat(c.binary), "binary")
    rep.extend(validate_nat(c.nullary), "nullary")
    return rep.ok


def validate_opmon_cell(c: OpmonCell) -> ValidationReport:
    rep = ValidationReport(f"opmonoidal cell {c.name}".strip())
    if not _cell_boundaries(c, rep):
        return rep
    P, Q, f, b, n = c.src, c.dst, c.f, c.binary, c.nullary
    B = Q.base
    objs = P.base.objects
    for x in objs:
        fx = f.obj(x)
        for y in objs:
            fy = f.obj(y)
            for z in objs:
                fz = f.obj(z)
                lhs = B.comp(Q.alpha[join(fx, fy, fz)],
                             Q.mult_mor(b[join(x, y)], B.identity(fz)),
                             b[join(P.mult(x, y), z)])
                rhs = B.comp(Q.mult_mor(B.identity(fx), b[join(y, z)]),
                             b[join(x, P.mult(y, z))],
                             f.mor(P.alpha[join(x, y, z)]))
                if lhs != rhs:
                    rep.add("opmonoidal.coassociativity", x, y, z)
    u = P.unit_obj
    n0 = n[()]
    for x in objs:
        fx = f.obj(x)
        lhs = B.comp(Q.lam[fx], Q.mult_mor(n0, B.identity(fx)), b[join(u, x)])
        if lhs != f.mor(P.lam[x]):
            rep.add("opmonoidal.counit.left", x)
        lhs = B.comp(Q.rho[fx], Q.mult_mor(B.identity(fx), n0), b[join(x, u)])
        if lhs != f.mor(P.rho[x]):
            rep.add("opmonoidal.counit.right", x)
    return rep


def validate_mon_cell(c: MonCell) -> ValidationReport:
    rep = ValidationReport(f"monoidal cell {c.name}".strip())
    if not _cell_boundaries(c, rep):
        return rep
    P, Q, f, b, n = c.src, c.dst, c.f, c.binary, c.nullary
    B = Q.base
    objs = P.base.objects
    for x in objs:
        fx = f.obj(x)
        for y in objs:
            fy = f.obj(y)
            for z in objs:
                fz = f.obj(z)
                lhs = B.comp(f.mor(P.alpha[join(x, y, z)]),
                             b[join(P.mult(x, y), z)],
                             Q.mult_mor(b[join(x, y)], B.identity(fz)))
                rhs = B.comp(b[join(x, P.mult(y, z))],
                             Q.mult_mor(B.identity(fx), b[join(y, z)]),
                             Q.alpha[join(fx, fy, fz)])
                if lhs != rhs:
                    rep.add("monoidal.associativity", x, y, z)
    u = P.unit_obj
    n0 = n[()]
    for x in objs:
        fx = f.obj(x)
        lhs = B.comp(f.mor(P.lam[x]), b[join(u, x)], Q.mult_mor(n0, B.identity(fx)))
        if lhs != Q.lam[fx]:
            rep.add("monoidal.unit.left", x)
        lhs = B.comp(f.mor(P.rho[x]), b[join(x, u)], Q.mult_mor(B.identity(fx), n0))
        if lhs != Q.rho[fx]:
            rep.add("monoidal.unit.right", x)
    return rep


def identity_opmon(P: Pseudomonoid) -> OpmonCell:
    one = identity_fun(P.base)
    c = OpmonCell(P, P, one, None, None, name=f"1_{P.name}", validate=False)
    c.binary = _identity_cell(c.bin_src(), c.bin_dst(), "1")
    c.nullary = _identity_cell(c.nul_src(), c.nul_dst(), "1")
    return c


def identity_mon(P: Pseudomonoid) -> MonCell:
    one = identity_fun(P.base)
    c = MonCell(P, P, one, None, None, name=f"1_{P.name}", validate=False)
    c.binary = _identity_cell(c.bin_src(), c.bin_dst(), "1")
    c.nullary = _identity_cell(c.nul_src(), c.nul_dst(), "1")
    return c


def compose_opmon(g: OpmonCell, f: OpmonCell, validate: bool = True) -> OpmonCell:
    """(g.f, (gamma2.1)(1.phi2), gamma0 (1.phi0))."""
    if f.dst is not g.src and not (f.dst.base == g.src.base and f.dst.m == g.src.m):
        raise BoundaryMismatch(f"cannot compose {g.name} after {f.name}")
    cls = type(g)
    if type(f) is not cls:
        raise BoundaryMismatch("cannot compose monoidal and opmonoidal cells")
    gf = compose_fun(g.f, f.f)
    c = cls(f.src, g.dst, gf, None, None, name=f"{g.name}.{f.name}", validate=False)
    C = g.dst.base
    ff = product_fun(f.f, f.f)
    if cls is OpmonCell:
        c.binary = Nat(c.bin_src(), c.bin_dst(),
                       lambda x: C.compose(g.binary[ff.obj(x)], g.f.mor(f.binary[x])),
                       name="binary")
        c.nullary = Nat(c.nul_src(), c.nul_dst(),
                        lambda x: C.compose(g.nullary[()], g.f.mor(f.nullary[x])),
                        name="nullary")
    else:
        c.binary = Nat(c.bin_src(), c.bin_dst(),
                       lambda x: C.compose(g.f.mor(f.binary[x]), g.binary[ff.obj(x)]),
                       name="binary")
        c.nullary = Nat(c.nul_src(), c.nul_dst(),
                        lambda x: C.compose(g.f.mor(f.nullary[x]), g.nullary[()]),
                        name="nullary")
    if validate:
        c.validate().raise_if_failed()
    return c


compose_mon = compose_opmon


# --- duoidal objects --------------------------------------------------------

class Duoidal:
    """Horizontal structure pm_h = (m-, u-), vertical structure pm_v = (m|, u|),
    and interchange cells
    xi: m|.(m- m-) => m-.(m| m|).(1 sigma 1), xi0: u| => m-.(u| u|),
    xi_0: m|.(u- u-) => u-, xi00: u| => u-."""

    def __init__(self, pm_h: Pseudomonoid, pm_v: Pseudomonoid, xi: Nat, xi0: Nat,
                 xi_0: Nat, xi00: Nat, name: str = "", validate: bool = True):
        self.pm_h = pm_h
        self.pm_v = pm_v
        self.xi = xi
        self.xi0 = xi0
        self.xi_0 = xi_0
        self.xi00 = xi00
        self.name = name
        if validate:
            validate_duoidal(self).raise_if_failed()

    @property
    def base(self) -> Category:
        return self.pm_h.base

    def m_h_cell(self) -> MonCell:
        """m- as a monoidal cell (A A, m| m|.(1 sigma 1)) -> (A, m|)."""
        src = tensor_pseudomonoids(self.pm_v, self.pm_v, validate=False)
        c = MonCell(src, self.pm_v, self.pm_h.m, None, None, name="m-", validate=False)
        c.binary = _nat_as(self.xi, c.bin_src(), c.bin_dst(), "xi")
        c.nullary = _nat_as(self.xi0, c.nul_src(), c.nul_dst(), "xi0")
        return c

    def u_h_cell(self) -> MonCell:
        c = MonCell(trivial_pseudomonoid(), self.pm_v, self.pm_h.u, None, None, name="u-",
                    validate=False)
        c.binary = _nat_as(self.xi_0, c.bin_src(), c.bin_dst(), "xi_0")
        c.nullary = _nat_as(self.xi00, c.nul_src(), c.nul_dst(), "xi00")
        return c

    def m_v_cell(self) -> OpmonCell:
        """m| as an opmonoidal cell (A A, m- m-.(1 sigma 1)) -> (A, m-); its binary
        part is xi read at (w,y,x,z)."""
        src = tensor_pseudomonoids(self.pm_h, self.pm_h, validate=False)
        c = OpmonCell(src, self.pm_h, self.pm_v.m, None, None, name="m|", validate=False)
        ar = self.base.arity
        xi = self.xi
        c.binary = Nat(c.bin_src(), c.bin_dst(), lambda q: xi[_mid_swap(q, ar)], name="xi.1")
        c.nullary = _nat_as(self.xi_0, c.nul_src(), c.nul_dst(), "xi_0")
        return c

    def u_v_cell(self) -> OpmonCell:
        c = OpmonCell(trivial_pseudomonoid(), self.pm_h, self.pm_v.u, None, None, name="u|",
                      validate=False)
        c.binary = _nat_as(self.xi0, c.bin_src(), c.bin_dst(), "xi0")
        c.nullary = _nat_as(self.xi00, c.nul_src(), c.nul_dst(), "xi00")
        return c


def _mid_swap(q: Id, ar: int) -> Id:
    a, b, c, d = split(q, [ar] * 4)
    return join(a, c, b, d)


def validate_duoidal(D: Duoidal) -> ValidationReport:
    rep = ValidationReport(f"duoidal {D.name}".strip())
    rep.extend(validate_pseudomonoid(D.pm_h), "horizontal")
    rep.extend(validate_pseudomonoid(D.pm_v), "vertical")
    if not same_cat(D.pm_h.base, D.pm_v.base):
        rep.add("duoidal.base", detail="the two structures live on different objects")
    if rep.violations:
        return rep
    groups = (("duoidal.m-.monoidal", D.m_h_cell), ("duoidal.u-.monoidal", D.u_h_cell),
              ("duoidal.m|.opmonoidal", D.m_v_cell), ("duoidal.u|.opmonoidal", D.u_v_cell))
    for label, build in groups:
        try:
            cell = build()
        except BoundaryMismatch as exc:
            rep.add(f"{label}.boundary", detail=str(exc))
            continue
        rep.extend(cell.validate(), label)
    return rep


def trivial_duoidal() -> Duoidal:
    P = trivial_pseudomonoid()
    one = identity_fun(TERMINAL)
    n = identity_nat(one)
    return Duoidal(P, P, n, n, n, n, name="I", validate=False)


def duoidal_from_cells(pm_h: Pseudomonoid, pm_v: Pseudomonoid, xi_map, xi0: Id, xi_0: Id,
                       xi00: Id, name: str = "", validate: bool = True) -> Duoidal:
    """Assemble a duoidal object from component data of the interchange cells."""
    A = pm_h.base
    D = Duoidal(pm_h, pm_v, None, None, None, None, name=name, validate=False)
    mh, mv, uh, uv = pm_h.m, pm_v.m, pm_h.u, pm_v.u
    mid = shuffle((A, A, A, A), (0, 2, 1, 3))
    xi_src = compose_fun(mv, product_fun(mh, mh))
    xi_dst = compose_funs(mh, product_fun(mv, mv), mid)
    D.xi = Nat(xi_src, xi_dst, xi_map, name="xi")
    D.xi0 = Nat(uv, compose_fun(mh, product_fun(uv, uv)), {(): xi0}, name="xi0")
    D.xi_0 = Nat(compose_fun(mv, product_fun(uh, uh)), uh, {(): xi_0}, name="xi_0")
    D.xi00 = Nat(uv, uh, {(): xi00}, name="xi00")
    if validate:
        validate_duoidal(D).raise_if_failed()
    return D


def thin_duoidal(pm_h: Pseudomonoid, pm_v: Pseudomonoid, name: str = "",
                 validate: bool = True) -> Duoidal:
    """On a thin category the interchange cells are the forced comparisons."""
    A = pm_h.base
    mh, mv, uh, uv = pm_h.m, pm_v.m, pm_h.u, pm_v.u
    mid = shuffle((A, A, A, A), (0, 2, 1, 3))
    xi_src = compose_fun(mv, product_fun(mh, mh))
    xi_dst = compose_funs(mh, product_fun(mv, mv), mid)
    D = Duoidal(pm_h, pm_v, None, None, None, None, name=name, validate=False)
    D.xi = Nat(xi_src, xi_dst, _forced(A, xi_src, xi_dst), name="xi")
    s0, d0 = uv, compose_fun(mh, product_fun(uv, uv))
    D.xi0 = Nat(s0, d0, _forced(A, s0, d0), name="xi0")
    s1, d1 = compose_fun(mv, product_fun(uh, uh)), uh
    D.xi_0 = Nat(s1, d1, _forced(A, s1, d1), name="xi_0")
    D.xi00 = Nat(uv, uh, _forced(A, uv, uh), name="xi00")
    if validate:
        validate_duoidal(D).raise_if_failed()
    return D


# The two presentations of a duoidal object: as a pseudomonoid among monoidal
# cells for the vertical structure, or among opmonoidal cells for the
# horizontal one.

class DuoidalAsMon:
    """(pm_v; m- with (xi, xi0); u- with (xi_0, xi00); alpha-, lambda-, rho-)."""

    def __init__(self, pm_v, m_cell, u_cell, alpha, lam, rho, name=""):
        self.pm_v = pm_v
        self.m_cell = m_cell
        self.u_cell = u_cell
        self.alpha = alpha
        self.lam = lam
        self.rho = rho
        self.name = name

    def data(self) -> tuple:
        return (self.pm_v.m.obj_map, self.pm_v.u.obj_map, self.m_cell.binary.components,
                self.m_cell.nullary.components, self.u_cell.binary.components,
                self.u_cell.nullary.components, self.alpha.components,
                self.lam.components, self.rho.components)


class DuoidalAsOpmon:
    """(pm_h; m| with (xi.1, xi_0); u| with (xi0, xi00); alpha|, lambda|, rho|)."""

    def __init__(self, pm_h, m_cell, u_cell, alpha, lam, rho, name=""):
        self.pm_h = pm_h
        self.m_cell = m_cell
        self.u_cell = u_cell
        self.alpha = alpha
        self.lam = lam
        self.rho = rho
        self.name = name

    def data(self) -> tuple:
        return (self.pm_h.m.obj_map, self.pm_h.u.obj_map, self.m_cell.binary.components,
                self.m_cell.nullary.components, self.u_cell.binary.components,
                self.u_cell.nullary.components, self.alpha.components,
                self.lam.components, self.rho.components)


def as_monoidal_presentation(D: Duoidal) -> DuoidalAsMon:
    h = D.pm_h
    return DuoidalAsMon(D.pm_v, D.m_h_cell(), D.u_h_cell(), h.alpha, h.lam, h.rho, D.name)


def as_opmonoidal_presentation(D: Duoidal) -> DuoidalAsOpmon:
    v = D.pm_v
    return DuoidalAsOpmon(D.pm_h, D.m_v_cell(), D.u_v_cell(), v.alpha, v.lam, v.rho, D.name)


def duoidal_from_monoidal(p: DuoidalAsMon, validate: bool = True) -> Duoidal:
    A = p.pm_v.base
    pm_h = Pseudomonoid(A, p.m_cell.f, p.u_cell.f, p.alpha, p.lam, p.rho, name="h",
                        validate=False)
    return Duoidal(pm_h, p.pm_v, p.m_cell.binary, p.m_cell.nullary, p.u_cell.binary,
                   p.u_cell.nullary, name=p.name, validate=validate)


def duoidal_from_opmonoidal(p: DuoidalAsOpmon, validate: bool = True) -> Duoidal:
    A = p.pm_h.base
    pm_v = Pseudomonoid(A, p.m_cell.f, p.u_cell.f, p.alpha, p.lam, p.rho, name="v",
                        validate=False)
    ar = A.arity
    b = p.m_cell.binary
    mid = shuffle((A, A, A, A), (0, 2, 1, 3))
    xi_src = compose_fun(pm_v.m, product_fun(p.pm_h.m, p.pm_h.m))
    xi_dst = compose_funs(p.pm_h.m, product_fun(pm_v.m, pm_v.m), mid)
    xi = Nat(xi_src, xi_dst, lambda q: b[_mid_swap(q, ar)], name="xi")
    return Duoidal(p.pm_h, pm_v, xi, p.u_cell.binary, p.m_cell.nullary, p.u_cell.nullary,
                   name=p.name, validate=validate)


def monoidal_to_opmonoidal(p: DuoidalAsMon) -> DuoidalAsOpmon:
    return as_opmonoidal_presentation(duoidal_from_monoidal(p, validate=False))


def opmonoidal_to_monoidal(p: DuoidalAsOpmon) -> DuoidalAsMon:
    return as_monoidal_presentation(duoidal_from_opmonoidal(p, validate=False))


# --- (p,q)-oidal monads -----------------------------------------------------

SHAPES = ((0, 0), (0, 1), (1, 0), (1, 1))


class OidalMonad:
    """A monad with q opmonoidal structures (tau2: t.m => m.tt, tau0: t.u => u)
    on pm_op and p monoidal structures (tau_2: m.tt => t.m, tau_0: u => t.u) on
    pm_mon. For shape (1,1) the two pseudomonoids form the duoidal object
    with pm_h = pm_op and pm_v = pm_mon."""

    def __init__(self, monad: Monad, shape: tuple[int, int], pm_op: Pseudomonoid | None = None,
                 op: tuple[Nat, Nat] | None = None, pm_mon: Pseudomonoid | None = None,
                 mon: tuple[Nat, Nat] | None = None, duoidal: Duoidal | None = None,
                 name: str = "", validate: bool = True):
        shape = tuple(shape)
        if shape not in SHAPES:
            raise ShapeError(f"shape {shape} is not supported; p+q <= 2 with p, q <= 1")
        p, q = shape
        if q and (pm_op is None or op is None):
            raise ShapeError("an opmonoidal axis needs a pseudomonoid and (tau2, tau0)")
        if p and (pm_mon is None or mon is None):
            raise ShapeError("a monoidal axis needs a pseudomonoid and (tau_2, tau_0)")
        if p and q and duoidal is None:
            raise ShapeError("shape (1,1) needs the duoidal interchange data")
        self.monad = monad
        self.shape = shape
        self.pm_op = pm_op if q else None
        self.op = op if q else None
        self.pm_mon = pm_mon if p else None
        self.mon = mon if p else None
        self.duoidal = duoidal if p and q else None
        self.name = name
        if validate:
            validate_oidal_monad(self).raise_if_failed()

    def op_morphisms(self) -> tuple[MonadMorH, MonadMorH]:
        """(m, tau2) and (u, tau0) as horizontal monad morphisms."""
        if not self.shape[1]:
            raise ShapeError(f"{self.name or 'monad'} has no opmonoidal axis")
        return _memo("opm", (self,), lambda: _op_morphisms(self))

    def mon_morphisms(self) -> tuple[MonadMorV, MonadMorV]:
        """(m, tau_2) and (u, tau_0) as vertical monad morphisms."""
        if not self.shape[0]:
            raise ShapeError(f"{self.name or 'monad'} has no monoidal axis")
        return _memo("monm", (self,), lambda: _mon_morphisms(self))


def _op_morphisms(OM):
    t = OM.monad
    P = OM.pm_op
    tau2, tau0 = OM.op
    tt = monoidal_product_monads(t, t)
    I = trivial_monad()
    mH = MonadMorH(tt, t, P.m, _nat_as(tau2, compose_fun(t.endo, P.m),
                                       compose_fun(P.m, tt.endo)), name="m", validate=False)
    uH = MonadMorH(I, t, P.u, _nat_as(tau0, compose_fun(t.endo, P.u),
                                      compose_fun(P.u, I.endo)), name="u", validate=False)
    return mH, uH


def _mon_morphisms(OM):
    t = OM.monad
    P = OM.pm_mon
    tau2, tau0 = OM.mon
    tt = monoidal_product_monads(t, t)
    I = trivial_monad()
    mV = MonadMorV(tt, t, P.m, _nat_as(tau2, compose_fun(P.m, tt.endo),
                                       compose_fun(t.endo, P.m)), name="m", validate=False)
    uV = MonadMorV(I, t, P.u, _nat_as(tau0, compose_fun(P.u, I.endo),
                                      compose_fun(t.endo, P.u)), name="u", validate=False)
    return mV, uV


def _tau_cell(OM, axis) -> OpmonCell:
    t = OM.monad.endo
    if axis == "op":
        P, (b, n) = OM.pm_op, OM.op
        c = OpmonCell(P, P, t, None, None, name="t", validate=False)
    else:
        P, (b, n) = OM.pm_mon, OM.mon
        c = MonCell(P, P, t, None, None, name="t", validate=False)
    c.binary = _nat_as(b, c.bin_src(), c.bin_dst(), "binary")
    c.nullary = _nat_as(n, c.nul_src(), c.nul_dst(), "nullary")
    return c


def validate_oidal_monad(OM: OidalMonad) -> ValidationReport:
    rep = ValidationReport(f"({OM.shape[0]},{OM.shape[1]})-oidal monad {OM.name}".strip())
    M = OM.monad
    rep.extend(validate_monad(M), "monad")
    if rep.violations:
        return rep
    p, q = OM.shape
    if q:
        rep.extend(_validate_axis(OM, "op"), "op")
    if p:
        rep.extend(_validate_axis(OM, "mon"), "mon")
    if p and q and rep.ok:
        rep.extend(validate_duoidal(OM.duoidal), "duoidal")
        if OM.duoidal.pm_h is not OM.pm_op or OM.duoidal.pm_v is not OM.pm_mon:
            rep.add("oidal.duoidal.structures",
                    detail="duoidal data must be built on the two axis structures")
        if rep.ok:
            rep.extend(_validate_mixed(OM))
    return rep


def _validate_axis(OM, axis) -> ValidationReport:
    label = "opmonoidal" if axis == "op" else "monoidal"
    rep = ValidationReport(f"{label} axis")
    P = OM.pm_op if axis == "op" else OM.pm_mon
    rep.extend(validate_pseudomonoid(P), "pseudomonoid")
    if rep.violations:
        return rep
    try:
        cell = _tau_cell(OM, axis)
        ms = OM.op_morphisms() if axis == "op" else OM.mon_morphisms()
    except BoundaryMismatch as exc:
        rep.add(f"oidal.{label}.boundary", detail=str(exc))
        return rep
    rep.extend(cell.validate(), "t")
    # the compatibility of mu and eta with the structure: multiplicativity
    # and unitality of (m, tau) and (u, tau) as monad morphisms
    for name, m in zip(("m", "u"), ms):
        sub = m.validate()
        for v in sub.violations:
            axiom = v.axiom.replace("monad-morphism.", "")
            if axiom.startswith("chi."):
                axiom = axiom[4:]
            rep.add(f"oidal.{label}.{name}.{_law_name(axiom)}", *_wit(v.witness[0])
                    if v.witness else (), detail=v.detail)
    return rep


def _law_name(axiom: str) -> str:
    return {"multiplicativity": "mu", "unitality": "eta"}.get(axiom, axiom)


def _validate_mixed(OM) -> ValidationReport:
    """The structure maps of t are a (1,1)-oidal 1-cell."""
    rep = ValidationReport("mixed compatibility")
    D = OM.duoidal
    A = D.base
    t = OM.monad.endo
    H, V = D.pm_h, D.pm_v
    tau2, tau0 = OM.op
    tau_2, tau_0 = OM.mon
    uh, uv = H.unit_obj, V.unit_obj
    objs = A.objects
    for w in objs:
        for x in objs:
            for y in objs:
                for z in objs:
                    wx, yz = H.mult(w, x), H.mult(y, z)
                    wy, xz = V.mult(w, y), V.mult(x, z)
                    lhs = A.comp(tau2[join(wy, xz)], t.mor(D.xi[join(w, x, y, z)]),
                                 tau_2[join(wx, yz)])
                    tw, tx, ty, tz = (t.obj(a) for a in (w, x, y, z))
                    rhs = A.comp(H.mult_mor(tau_2[join(w, y)], tau_2[join(x, z)]),
                                 D.xi[join(tw, tx, ty, tz)],
                                 V.mult_mor(tau2[join(w, x)], tau2[join(y, z)]))
                    if lhs != rhs:
                        rep.add("oidal.mixed.xi", w, x, y, z)
    lhs = A.comp(tau2[join(uv, uv)], t.mor(D.xi0[()]), tau_0[()])
    if lhs != A.compose(H.mult_mor(tau_0[()], tau_0[()]), D.xi0[()]):
        rep.add("oidal.mixed.xi0", ())
    lhs = A.comp(tau0[()], t.mor(D.xi_0[()]), tau_2[join(uh, uh)])
    if lhs != A.compose(D.xi_0[()], V.mult_mor(tau0[()], tau0[()])):
        rep.add("oidal.mixed.xi_0", ())
    if A.comp(tau0[()], t.mor(D.xi00[()]), tau_0[()]) != D.xi00[()]:
        rep.add("oidal.mixed.xi00", ())
    return rep


def thin_oidal_monad(monad: Monad, shape, pm_op=None, pm_mon=None, duoidal=None,
                     name: str = "", validate: bool = True) -> OidalMonad:
    """On a thin base all structure cells of t are forced comparisons."""
    A = monad.base
    t = monad.endo
    op = mon = None
    if pm_op is not None:
        P = pm_op
        s2, d2 = compose_fun(t, P.m), compose_fun(P.m, product_fun(t, t))
        s0, d0 = compose_fun(t, P.u), P.u
        op = (Nat(s2, d2, _forced(A, s2, d2), name="tau2"),
              Nat(s0, d0, _forced(A, s0, d0), name="tau0"))
    if pm_mon is not None:
        P = pm_mon
        s2, d2 = compose_fun(P.m, product_fun(t, t)), compose_fun(t, P.m)
        s0, d0 = P.u, compose_fun(t, P.u)
        mon = (Nat(s2, d2, _forced(A, s2, d2), name="tau_2"),
               Nat(s0, d0, _forced(A, s0, d0), name="tau_0"))
    return OidalMonad(monad, shape, pm_op, op, pm_mon, mon, duoidal, name=name,
                      validate=validate)


# --- conversions with pseudomonoids among monads ---------------------------

class MndPseudomonoid:
    """A pseudomonoid in the category of monads: a monad, monad morphisms m and
    u of one variance, and invertible monad transformations alpha, lambda, rho."""

    def __init__(self, monad, m, u, alpha, lam, rho, kind):
        self.monad = monad
        self.m = m
        self.u = u
        self.alpha = alpha
        self.lam = lam
        self.rho = rho
        self.kind = kind

    def data(self) -> tuple:
        return (self.m.f.obj_map, self.m.chi.components, self.u.f.obj_map,
                self.u.chi.components, self.alpha.omega.components,
                self.lam.omega.components, self.rho.omega.components)


def _structure_trans(OM, axis, validate):
    t = OM.monad
    if axis == "op":
        P = OM.pm_op
        mm, um = OM.op_morphisms()
        ident, comp = identity_h(t), compose_h
    else:
        P = OM.pm_mon
        mm, um = OM.mon_morphisms()
        ident, comp = identity_v(t), compose_v
    m_m1 = comp(mm, product_mor(mm, ident), validate=False)
    m_1m = comp(mm, product_mor(ident, mm), validate=False)
    m_u1 = comp(mm, product_mor(um, ident), validate=False)
    m_1u = comp(mm, product_mor(ident, um), validate=False)
    alpha = MonadTrans(m_m1, m_1m, _nat_as(P.alpha, m_m1.f, m_1m.f), name="alpha",
                       validate=validate)
    lam = MonadTrans(m_u1, ident, _nat_as(P.lam, m_u1.f, ident.f), name="lambda",
                     validate=validate)
    rho = MonadTrans(m_1u, ident, _nat_as(P.rho, m_1u.f, ident.f), name="rho",
                     validate=validate)
    return mm, um, alpha, lam, rho


def to_mnd_pseudomonoid(OM: OidalMonad, axis: str = "op",
                        validate: bool = True) -> MndPseudomonoid:
    """A (0,1)-oidal monad as a pseudomonoid among horizontal monad morphisms
    (axis 'op'), or a (1,0)-oidal one among vertical monad morphisms ('mon')."""
    if (axis == "op" and not OM.shape[1]) or (axis == "mon" and not OM.shape[0]):
        raise ShapeError(f"the monad has no {axis} axis")
    mm, um, a, lam, rho = _structure_trans(OM, axis, validate)
    return MndPseudomonoid(OM.monad, mm, um, a, lam, rho, "H" if axis == "op" else "V")


def from_mnd_pseudomonoid(X: MndPseudomonoid, validate: bool = True) -> OidalMonad:
    t = X.monad
    A = t.base
    P = Pseudomonoid(A, X.m.f, X.u.f, None, None, None, name="m", validate=False)
    P.alpha = _nat_as(X.alpha.omega, P.m_m1(), P.m_1m(), "alpha")
    P.lam = _nat_as(X.lam.omega, P.m_u1(), identity_fun(A), "lambda")
    P.rho = _nat_as(X.rho.omega, P.m_1u(), identity_fun(A), "rho")
    tau = (X.m.chi, X.u.chi)
    if X.kind == "H":
        return OidalMonad(t, (0, 1), pm_op=P, op=tau, validate=validate)
    return OidalMonad(t, (1, 0), pm_mon=P, mon=tau, validate=validate)


def validate_mnd_pseudomonoid(X: MndPseudomonoid) -> ValidationReport:
    rep = ValidationReport("pseudomonoid of monads")
    rep.extend(X.m.validate(), "m")
    rep.extend(X.u.validate(), "u")
    for label, w in (("alpha", X.alpha), ("lambda", X.lam), ("rho", X.rho)):
        rep.extend(validate_monad_trans(w), label)
    if rep.ok:
        P = Pseudomonoid(X.monad.base, X.m.f, X.u.f, None, None, None, validate=False)
        A = P.base
        P.alpha = _nat_as(X.alpha.omega, P.m_m1(), P.m_1m())
        P.lam = _nat_as(X.lam.omega, P.m_u1(), identity_fun(A))
        P.rho = _nat_as(X.rho.omega, P.m_1u(), identity_fun(A))
        rep.extend(validate_pseudomonoid(P), "underlying")
    return rep


# --- liftings ---------------------------------------------------------------

def lift_along_u(OM: OidalMonad, validate: bool = True) -> Pseudomonoid:
    """Lift the opmonoidal axis to the Eilenberg-Moore category along u^t."""
    if not OM.shape[1]:
        raise ShapeError("lifting along the forgetful functor needs an opmonoidal axis")
    return _memo("liftu", (OM,), lambda: _lift_u(OM, validate))


def _lift_u(OM, validate):
    t = OM.monad
    E = em(t).em_cat
    mm, um, alpha, lam, rho = _structure_trans(OM, "op", validate=False)
    EE = product(E, E)
    m = _retype_fun(H1(mm), EE, E)
    u = _retype_fun(H1(um), TERMINAL, E)
    L = Pseudomonoid(E, m, u, None, None, None, name=f"{OM.pm_op.name}^", validate=False)
    L.alpha = _nat_as(H2(alpha), L.m_m1(), L.m_1m(), "alpha")
    L.lam = _nat_as(H2(lam), L.m_u1(), identity_fun(E), "lambda")
    L.rho = _nat_as(H2(rho), L.m_1u(), identity_fun(E), "rho")
    if validate:
        validate_pseudomonoid(L).raise_if_failed()
    return L


def lift_along_u_squares(OM: OidalMonad) -> ValidationReport:
    """u^t.m^ = m.(u^t u^t) and u^t.u^ = u, exactly, plus the lifted actions."""
    rep = ValidationReport("forgetful-side lifting squares")
    mm, um = OM.op_morphisms()
    rep.extend(em_lift_square(mm), "m")
    rep.extend(em_lift_square(um), "u")
    L = lift_along_u(OM, validate=False)
    B = em(OM.monad)
    uu = product_fun(B.forgetful, B.forgetful)
    if compose_fun(B.forgetful, L.m) != compose_fun(OM.pm_op.m, uu):
        rep.add("lift-u.square.m")
    if compose_fun(B.forgetful, L.u) != OM.pm_op.u:
        rep.add("lift-u.square.u")
    return rep


def _v_retyped(expr, src: Category, dst: Category) -> tuple[Fun, Nat]:
    c = v_comparison(expr)
    return _retype_fun(c.src, src, dst), c


def lift_along_f(OM: OidalMonad, validate: bool = True) -> Pseudomonoid:
    """Lift the monoidal axis to the Eilenberg-Moore category along f^t."""
    if not OM.shape[0]:
        raise ShapeError("lifting along the free functor needs a monoidal axis")
    return _memo("liftf", (OM,), lambda: _lift_f(OM, validate))


def _lift_f(OM, validate):
    t = OM.monad
    E = em(t).em_cat
    mm, um, alpha, lam, rho = _structure_trans(OM, "mon", validate=False)
    EE = product(E, E)
    m = _retype_fun(V1(mm), EE, E)
    u = _retype_fun(V1(um), TERMINAL, E)
    L = Pseudomonoid(E, m, u, None, None, None, name=f"{OM.pm_mon.name}^", validate=False)
    M, U, ONE = VLeaf(mm), VLeaf(um), VId(t)
    pairs = (("alpha", alpha, VComp(M, VProd((M, ONE))), VComp(M, VProd((ONE, M))),
              L.m_m1(), L.m_1m()),
             ("lam", lam, VComp(M, VProd((U, ONE))), ONE, L.m_u1(), identity_fun(E)),
             ("rho", rho, VComp(M, VProd((ONE, U))), ONE, L.m_1u(), identity_fun(E)))
    for attr, w, e_src, e_dst, F, G in pairs:
        cell = conjugate(V2(w), v_comparison(e_src), v_comparison(e_dst))
        setattr(L, attr, _nat_as(cell, F, G, attr))
    if validate:
        validate_pseudomonoid(L).raise_if_failed()
    return L


def lift_along_f_squares(OM: OidalMonad) -> ValidationReport:
    """m^.(f^t f^t) = f^t.m and u^ = f^t.u up to the comparison of the
    preservation check; the report records the mode."""
    rep = ValidationReport("free-side lifting squares")
    mm, um = OM.mon_morphisms()
    for name, m in (("m", mm), ("u", um)):
        mode, wit = lemma_V_outcome(m)
        if mode == "fail":
            rep.add(f"lift-f.square.{name}", *wit)
    return rep


def lift_square_mode(OM: OidalMonad) -> str:
    """'exact' if the free-side squares commute on the nose, else 'upto-iso'."""
    mm, um = OM.mon_morphisms()
    modes = {lemma_V_outcome(m)[0] for m in (mm, um)}
    if "fail" in modes:
        return "fail"
    return "upto-iso" if "upto-iso" in modes else "exact"


def interchange_squares(OM: OidalMonad) -> dict:
    """The four squares of the monad double category carrying xi, xi0, xi_0, xi00.

    Horizontal edges come from the opmonoidal axis, vertical edges from the
    monoidal one."""
    return _memo("isq", (OM,), lambda: _interchange_squares(OM))


def _interchange_squares(OM):
    if OM.shape != (1, 1):
        raise ShapeError("interchange squares need a (1,1)-oidal monad")
    t = OM.monad
    D = OM.duoidal
    I = trivial_monad()
    mh, uh = OM.op_morphisms()
    mv, uv = OM.mon_morphisms()
    mid = shuffle_v((t, t, t, t), (0, 2, 1, 3))
    vv = product_mor(mv, mv)
    left_xi = compose_v(vv, mid, validate=False)

    def square(name, top, bottom, left, right, body):
        sq = MndSquare(top, bottom, left, right, None, name=name, validate=False)
        sq.body = _nat_as(body, compose_fun(right.f, top.f), compose_fun(bottom.f, left.f))
        return sq

    return {
        "xi": square("xi", product_mor(mh, mh), mh, left_xi, mv, D.xi),
        "xi0": square("xi0", identity_h(I), mh, product_mor(uv, uv), uv, D.xi0),
        "xi_0": square("xi_0", product_mor(uh, uh), uh, identity_v(I), mv, D.xi_0),
        "xi00": square("xi00", identity_h(I), uh, identity_v(I), uv, D.xi00),
    }


def interchange_exprs(OM: OidalMonad) -> dict:
    """For each square: the V-expressions whose functors the lifted cell uses
    on its right edge (source side) and left edge (target side)."""
    t = OM.monad
    mv, uv = OM.mon_morphisms()
    I = trivial_monad()
    M, U = VLeaf(mv), VLeaf(uv)
    return {
        "xi": (M, VComp(VProd((M, M)), VShuffle((t, t, t, t), (0, 2, 1, 3)))),
        "xi0": (U, VProd((U, U))),
        "xi_0": (M, VId(I)),
        "xi00": (U, VId(I)),
    }


def lifted_interchange(OM: OidalMonad, which: str) -> Nat:
    """K2 of an interchange square, conjugated by the comparisons so that it
    lives between composites of the lifted structure functors."""
    sq = interchange_squares(OM)[which]
    e_right, e_left = interchange_exprs(OM)[which]
    k = K2(sq)
    c_right = v_comparison(e_right)
    c_left = v_comparison(e_left)
    Hk = H1(sq.bottom)
    Hh = H1(sq.top)
    E, B = k.target, c_left.target

    def comp(P):
        left_inv = B.inverse(c_left[P])
        if left_inv is None:
            raise CategoryError(f"comparison at {render(P)} is not invertible")
        return E.comp(Hk.mor(left_inv), k[P], c_right[Hh.obj(P)])

    src = compose_fun(c_right.src, Hh)
    dst = compose_fun(Hk, c_left.src)
    return Nat(src, dst, comp, name=f"K({which})")


def lift_duoidal(OM: OidalMonad, validate: bool = True) -> Duoidal:
    if OM.shape != (1, 1):
        raise ShapeError(f"duoidal lifting needs shape (1,1), got {OM.shape}")
    return _memo("liftd", (OM,), lambda: _lift_duoidal(OM, validate))


def _lift_duoidal(OM, validate):
    H = lift_along_u(OM, validate=validate)
    V = lift_along_f(OM, validate=validate)
    E = H.base
    D = Duoidal(H, V, None, None, None, None, name=f"{OM.duoidal.name}^", validate=False)
    mid = shuffle((E, E, E, E), (0, 2, 1, 3))
    targets = {
        "xi": (compose_fun(V.m, product_fun(H.m, H.m)),
               compose_funs(H.m, product_fun(V.m, V.m), mid)),
        "xi0": (V.u, compose_fun(H.m, product_fun(V.u, V.u))),
        "xi_0": (compose_fun(V.m, product_fun(H.u, H.u)), H.u),
        "xi00": (V.u, H.u),
    }
    for which, (F, G) in targets.items():
        setattr(D, which, _nat_as(lifted_interchange(OM, which), F, G, which))
    if validate:
        validate_duoidal(D).raise_if_failed()
    return D


def lift(OM: OidalMonad, mode: str):
    if mode == "u":
        return lift_along_u(OM)
    if mode == "f":
        return lift_along_f(OM)
    if mode == "duoidal":
        return lift_duoidal(OM)
    raise ValueError(f"unknown lifting mode {mode!r}")


