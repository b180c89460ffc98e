"""The square double category of finite categories, the monad double category,
the double functor K with its law suites, and the data of the adjunction
between K and the inclusion of squares as cells between identity monads.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .colim import Cocone, canonical_comparison
from .em import (
    H1, K2, V1, em, lemma_V_comparison, linton, v_composite_comparison,
    v_identity_comparison, v_product_comparison, v_shuffle_comparison, verify_monoidal_em,
)
from .fincat import (
    TERMINAL, BoundaryMismatch, CategoryError, Fun, Nat, ValidationReport, compose_fun,
    flip, identity_fun, identity_nat, leq, product_fun, product_nat, render,
    SizeCapExceeded, validate_functor, validate_nat,
)
from .mnd import (
    Monad, MndSquare, MonadMorH, MonadMorV, compose_h, compose_v, identity_h, identity_monad,
    identity_v, product_mor, symmetry_monad_cell, symmetry_monad_cell_v, trivial_monad,
    validate_mnd_square,
)
from .oidal import MonCell, OpmonCell, ShapeError, lift_along_f, validate_pseudomonoid

# --- the square double category ----------------------------------------------


class SqrCell:
    """A 2-cell body: right.top => bottom.left with horizontal edges top: A -> C,
    bottom: B -> D and vertical edges left: A -> B, right: C -> D."""

    def __init__(self, top: Fun, bottom: Fun, left: Fun, right: Fun, body: Nat,
                 name: str = "", validate: bool = True):
        self.top = top
        self.bottom = bottom
        self.left = left
        self.right = right
        self.body = body
        self.name = name
        if validate:
            validate_sqr_cell(self).raise_if_failed()

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, SqrCell):
            return NotImplemented
        return (self.top == other.top and self.bottom == other.bottom
                and self.left == other.left and self.right == other.right
                and self.body == other.body)

    __hash__ = object.__hash__

    def __repr__(self):
        return f"<SqrCell {self.name or '?'}>"


def validate_sqr_cell(c: SqrCell) -> ValidationReport:
    rep = ValidationReport(f"square {c.name}".strip())
    h, k, f, g = c.top, c.bottom, c.left, c.right
    if not (h.src == f.src and h.dst == g.src and f.dst == k.src and g.dst == k.dst):
        rep.add("square.boundary", detail="edges do not form a square")
        return rep
    if c.body.src != compose_fun(g, h) or c.body.dst != compose_fun(k, f):
        rep.add("square.body.boundary")
        return rep
    rep.extend(validate_nat(c.body), "body")
    return rep


def sqr_hcomp(c2: SqrCell, c1: SqrCell) -> SqrCell:
    """c1 on the left, c2 on the right; body (k2.w1)(w2.h1)."""
    if c1.right != c2.left:
        raise BoundaryMismatch(f"cannot place {c2.name} to the right of {c1.name}")
    top = compose_fun(c2.top, c1.top)
    bottom = compose_fun(c2.bottom, c1.bottom)
    D = c2.bottom.dst
    k2, h1 = c2.bottom, c1.top
    body = Nat(compose_fun(c2.right, top), compose_fun(bottom, c1.left),
               lambda x: D.compose(k2.mor(c1.body[x]), c2.body[h1.obj(x)]),
               name=f"{c2.body.name}|{c1.body.name}")
    return SqrCell(top, bottom, c1.left, c2.right, body, name=f"{c2.name}|{c1.name}",
                   validate=False)


def sqr_vcomp(c2: SqrCell, c1: SqrCell) -> SqrCell:
    """c1 on top, c2 below; body (w2.f1)(g2.w1)."""
    if c1.bottom != c2.top:
        raise BoundaryMismatch(f"cannot place {c2.name} below {c1.name}")
    left = compose_fun(c2.left, c1.left)
    right = compose_fun(c2.right, c1.right)
    D = c2.bottom.dst
    g2, f1 = c2.right, c1.left
    body = Nat(compose_fun(right, c1.top), compose_fun(c2.bottom, left),
               lambda x: D.compose(c2.body[f1.obj(x)], g2.mor(c1.body[x])),
               name=f"{c2.body.name}/{c1.body.name}")
    return SqrCell(c1.top, c2.bottom, left, right, body, name=f"{c2.name}/{c1.name}",
                   validate=False)


def sqr_id_h(f: Fun) -> SqrCell:
    """Identity for horizontal composition on the vertical 1-cell f."""
    return SqrCell(identity_fun(f.src), identity_fun(f.dst), f, f, identity_nat(f),
                   name=f"1h_{f.name}", validate=False)


def sqr_id_v(h: Fun) -> SqrCell:
    """Identity for vertical composition on the horizontal 1-cell h."""
    return SqrCell(h, h, identity_fun(h.src), identity_fun(h.dst), identity_nat(h),
                   name=f"1v_{h.name}", validate=False)


def thin_sqr(top: Fun, bottom: Fun, left: Fun, right: Fun, name: str = "") -> SqrCell:
    """The unique square over a thin corner category, if the inequality holds."""
    D = bottom.dst
    gh, kf = compose_fun(right, top), compose_fun(bottom, left)
    body = Nat(gh, kf, lambda x: leq(D, gh.obj(x), kf.obj(x)), name=name)
    return SqrCell(top, bottom, left, right, body, name=name)


def sqr_laws(cells) -> ValidationReport:
    """Unit and associativity laws of both compositions and middle-four
    interchange, on all composable configurations of the given cells."""
    rep = ValidationReport("square double category")
    cells = list(cells)
    for c in cells:
        rep.extend(validate_sqr_cell(c), c.name)
    if rep.violations:
        return rep
    for c in cells:
        if sqr_hcomp(sqr_id_h(c.right), c) != c or sqr_hcomp(c, sqr_id_h(c.left)) != c:
            rep.add("sqr.hcomp.unit", c.name)
        if sqr_vcomp(sqr_id_v(c.bottom), c) != c or sqr_vcomp(c, sqr_id_v(c.top)) != c:
            rep.add("sqr.vcomp.unit", c.name)
    hpairs = [(a, b) for a in cells for b in cells if a.right == b.left]
    vpairs = [(a, b) for a in cells for b in cells if a.bottom == b.top]
    for a, b in hpairs:
        if validate_sqr_cell(sqr_hcomp(b, a)).violations:
            rep.add("sqr.hcomp.valid", a.name, b.name)
        for c in cells:
            if b.right == c.left:
                if sqr_hcomp(c, sqr_hcomp(b, a)) != sqr_hcomp(sqr_hcomp(c, b), a):
                    rep.add("sqr.hcomp.assoc", a.name, b.name, c.name)
    for a, b in vpairs:
        if validate_sqr_cell(sqr_vcomp(b, a)).violations:
            rep.add("sqr.vcomp.valid", a.name, b.name)
        for c in cells:
            if b.bottom == c.top:
                if sqr_vcomp(c, sqr_vcomp(b, a)) != sqr_vcomp(sqr_vcomp(c, b), a):
                    rep.add("sqr.vcomp.assoc", a.name, b.name, c.name)
    for a, b in hpairs:
        for c, d in hpairs:
            if a.bottom == c.top and b.bottom == d.top:
                one = sqr_vcomp(sqr_hcomp(d, c), sqr_hcomp(b, a))
                two = sqr_hcomp(sqr_vcomp(d, b), sqr_vcomp(c, a))
                if one != two:
                    rep.add("sqr.interchange", a.name, b.name, c.name, d.name)
    return rep


# --- the monad double category -----------------------------------------------

def mnd_hcomp(s2: MndSquare, s1: MndSquare) -> MndSquare:
    """s1 on the left, s2 on the right."""
    if s1.right != s2.left:
        raise BoundaryMismatch(f"cannot place {s2.name} to the right of {s1.name}")
    top = compose_h(s2.top, s1.top, validate=False)
    bottom = compose_h(s2.bottom, s1.bottom, validate=False)
    D = s2.bottom.dst.base
    k2, h1 = s2.bottom.f, s1.top.f
    body = Nat(compose_fun(s2.right.f, top.f), compose_fun(bottom.f, s1.left.f),
               lambda x: D.compose(k2.mor(s1.body[x]), s2.body[h1.obj(x)]),
               name=f"{s2.body.name}|{s1.body.name}")
    return MndSquare(top, bottom, s1.left, s2.right, body, name=f"{s2.name}|{s1.name}",
                     validate=False)


def mnd_vcomp(s2: MndSquare, s1: MndSquare) -> MndSquare:
    """s1 on top, s2 below."""
    if s1.bottom != s2.top:
        raise BoundaryMismatch(f"cannot place {s2.name} below {s1.name}")
    left = compose_v(s2.left, s1.left, validate=False)
    right = compose_v(s2.right, s1.right, validate=False)
    D = s2.bottom.dst.base
    g2, n1 = s2.right.f, s1.left.f
    body = Nat(compose_fun(right.f, s1.top.f), compose_fun(s2.bottom.f, left.f),
               lambda x: D.compose(s2.body[n1.obj(x)], g2.mor(s1.body[x])),
               name=f"{s2.body.name}/{s1.body.name}")
    return MndSquare(s1.top, s2.bottom, left, right, body, name=f"{s2.name}/{s1.name}",
                     validate=False)


def mnd_id_h(n: MonadMorV) -> MndSquare:
    """Identity for horizontal composition on a vertical monad morphism."""
    return MndSquare(identity_h(n.src), identity_h(n.dst), n, n, identity_nat(n.f),
                     name=f"1h_{n.name}", validate=False)


def mnd_id_v(h: MonadMorH) -> MndSquare:
    """Identity for vertical composition on a horizontal monad morphism."""
    return MndSquare(h, h, identity_v(h.src), identity_v(h.dst), identity_nat(h.f),
                     name=f"1v_{h.name}", validate=False)


def mnd_product(*sqs: MndSquare) -> MndSquare:
    top = product_mor(*(s.top for s in sqs))
    bottom = product_mor(*(s.bottom for s in sqs))
    left = product_mor(*(s.left for s in sqs))
    right = product_mor(*(s.right for s in sqs))
    inner = product_nat(*(s.body for s in sqs))
    body = Nat(compose_fun(right.f, top.f), compose_fun(bottom.f, left.f), inner.at,
               name=inner.name)
    return MndSquare(top, bottom, left, right, body, name="x".join(s.name for s in sqs),
                     validate=False)


def mnd_laws(squares) -> ValidationReport:
    """Validity of each square and closure under both compositions."""
    rep = ValidationReport("monad double category")
    squares = list(squares)
    for s in squares:
        rep.extend(validate_mnd_square(s), s.name)
    if rep.violations:
        return rep
    for a in squares:
        for b in squares:
            if a.right == b.left:
                rep.extend(validate_mnd_square(mnd_hcomp(b, a)), f"{b.name}|{a.name}")
            if a.bottom == b.top:
                rep.extend(validate_mnd_square(mnd_vcomp(b, a)), f"{b.name}/{a.name}")
    return rep


# --- the double functor K -------------------------------------------------------

EXACT, UPTO, FAIL = "exact", "upto-iso", "fail"


@dataclass
class LawEntry:
    claim: str
    status: str
    witness: tuple = ()
    detail: str = ""

    def to_json(self) -> dict:
        return {"claim": self.claim, "status": self.status,
                "witness": [render(w) for w in self.witness], "detail": self.detail}


@dataclass
class KSuite:
    name: str
    monads: list = field(default_factory=list)
    hmors: list = field(default_factory=list)
    vmors: list = field(default_factory=list)
    squares: list = field(default_factory=list)


@dataclass
class KResult:
    object_map: dict
    h_map: dict
    v_map: dict
    cell_map: dict
    law_report: list

    def ok(self, strict_iso: bool = False) -> bool:
        bad = {FAIL, UPTO} if strict_iso else {FAIL}
        return not any(e.status in bad for e in self.law_report)

    def statuses(self) -> dict:
        return {e.claim: e.status for e in self.law_report}


def _is_iso_nat(c: Nat) -> bool:
    if validate_nat(c).violations:
        return False
    E = c.target
    return all(E.inverse(c[x]) is not None for x in c.base.objects)


def _is_identity(c: Nat) -> bool:
    E = c.target
    return all(c[x] == E.identity(c.src.obj(x)) for x in c.base.objects)


def _fun_claim(claim: str, F: Fun, G: Fun, comparison=None) -> LawEntry:
    """F == G exactly, or up to the canonical iso comparison: F => G."""
    if F == G:
        return LawEntry(claim, EXACT)
    if comparison is None:
        return LawEntry(claim, FAIL, (F.first_difference(G),))
    try:
        c = comparison()
    except SizeCapExceeded:
        raise
    except CategoryError as exc:
        return LawEntry(claim, FAIL, (), str(exc))
    if _is_iso_nat(c):
        return LawEntry(claim, UPTO, (), "related by the canonical comparison")
    return LawEntry(claim, FAIL, (), "comparison is not a natural isomorphism")


def _pointwise(claim: str, objects, exact, conj) -> LawEntry:
    """exact(x) / conj(x) are the on-the-nose and conjugated equalities."""
    status = EXACT
    for x in objects:
        if exact(x):
            continue
        if not conj(x):
            return LawEntry(claim, FAIL, (x,))
        status = UPTO
    return LawEntry(claim, status)


def _guard(claim: str, thunk) -> LawEntry:
    try:
        return thunk()
    except SizeCapExceeded:
        raise
    except CategoryError as exc:
        return LawEntry(claim, FAIL, (), f"{type(exc).__name__}: {exc}")


def _label(x) -> str:
    return x.name or "?"


def K(suite: KSuite) -> KResult:
    """Apply K to every member of the suite and run the double-functor laws."""
    monads = list(suite.monads)
    hmors, vmors, squares = list(suite.hmors), list(suite.vmors), list(suite.squares)
    object_map = {M: em(M) for M in monads}
    h_map = {h: H1(h) for h in hmors}
    v_map = {n: V1(n) for n in vmors}
    cell_map = {s: K2(s) for s in squares}
    laws: list = []
    add = laws.append

    # identities
    for M in monads:
        E = em(M).em_cat
        one = identity_fun(E)
        add(_guard(f"K.identity.h.{_label(M)}",
                   lambda: _fun_claim(f"K.identity.h.{_label(M)}", H1(identity_h(M)), one)))
        add(_guard(f"K.identity.v.{_label(M)}",
                   lambda: _fun_claim(f"K.identity.v.{_label(M)}", one, V1(identity_v(M)),
                                      lambda: v_identity_comparison(M))))
    for h in hmors:
        add(_guard(f"K.identity.cell.h.{_label(h)}", lambda: _identity_cell_h(h)))
    for n in vmors:
        add(_guard(f"K.identity.cell.v.{_label(n)}", lambda: _identity_cell_v(n)))

    # composition of 1-cells
    for h1 in hmors:
        for h2 in hmors:
            if h1.dst == h2.src:
                claim = f"K.hcomp.1cell.{_label(h2)}.{_label(h1)}"
                add(_guard(claim, lambda: _fun_claim(
                    claim, H1(compose_h(h2, h1, validate=False)),
                    compose_fun(H1(h2), H1(h1)))))
    for f in vmors:
        for g in vmors:
            if f.dst == g.src:
                claim = f"K.vcomp.1cell.{_label(g)}.{_label(f)}"
                add(_guard(claim, lambda: _fun_claim(
                    claim, compose_fun(V1(g), V1(f)), V1(compose_v(g, f, validate=False)),
                    lambda: v_composite_comparison(g, f))))

    # composition of cells
    for s1 in squares:
        for s2 in squares:
            if s1.right == s2.left:
                claim = f"K.hcomp.cell.{s2.name}|{s1.name}"
                add(_guard(claim, lambda: _hcomp_cell(claim, s2, s1)))
            if s1.bottom == s2.top:
                claim = f"K.vcomp.cell.{s2.name}/{s1.name}"
                add(_guard(claim, lambda: _vcomp_cell(claim, s2, s1)))

    # strict monoidality
    add(LawEntry("K.monoidal.unit", EXACT if em(trivial_monad()).em_cat == TERMINAL else FAIL))
    atomic = [M for M in monads if M.base.arity == 1]
    for i, M in enumerate(atomic):
        for N in atomic[i:]:
            claim = f"K.monoidal.objects.{_label(M)}x{_label(N)}"
            add(_guard(claim, lambda: _report_claim(claim, verify_monoidal_em(M, N))))
            claim = f"K.symmetry.h.{_label(M)},{_label(N)}"
            add(_guard(claim, lambda: _fun_claim(
                claim, H1(symmetry_monad_cell(M, N)),
                flip(em(M).em_cat, em(N).em_cat))))
            claim = f"K.symmetry.v.{_label(M)},{_label(N)}"
            add(_guard(claim, lambda: _symmetry_v(claim, M, N)))
    small_h = [h for h in hmors if h.src.base.arity <= 1 and h.dst.base.arity <= 1]
    small_v = [n for n in vmors if n.src.base.arity <= 1 and n.dst.base.arity <= 1]
    for i, h in enumerate(small_h):
        for h2 in small_h[i:]:
            claim = f"K.monoidal.h.{_label(h)}x{_label(h2)}"
            add(_guard(claim, lambda: _fun_claim(
                claim, H1(product_mor(h, h2)), product_fun(H1(h), H1(h2)))))
    for i, n in enumerate(small_v):
        for n2 in small_v[i:]:
            claim = f"K.monoidal.v.{_label(n)}x{_label(n2)}"
            add(_guard(claim, lambda: _monoidal_v(claim, n, n2)))
    small_sq = [s for s in squares if max(s.top.src.base.arity, s.top.dst.base.arity,
                                          s.bottom.src.base.arity,
                                          s.bottom.dst.base.arity) <= 1]
    for i, s in enumerate(small_sq):
        for s2 in small_sq[i:]:
            claim = f"K.monoidal.cell.{s.name}x{s2.name}"
            add(_guard(claim, lambda: _monoidal_cell(claim, s, s2)))

    # coherence of the comparisons
    for f in vmors:
        claim = f"K.cocycle.unit.{_label(f)}"
        add(_guard(claim, lambda: _cocycle_unit(claim, f)))
        for g in vmors:
            if f.dst != g.src:
                continue
            for h in vmors:
                if g.dst == h.src:
                    claim = f"K.cocycle.assoc.{_label(h)}.{_label(g)}.{_label(f)}"
                    add(_guard(claim, lambda: _cocycle_assoc(claim, h, g, f)))
    laws.sort(key=lambda e: e.claim)
    return KResult(object_map, h_map, v_map, cell_map, laws)


def _report_claim(claim: str, rep: ValidationReport) -> LawEntry:
    if rep.ok:
        return LawEntry(claim, EXACT)
    v = rep.violations[0]
    return LawEntry(claim, FAIL, v.witness, v.axiom)


def _identity_cell_h(h: MonadMorH) -> LawEntry:
    """K of the vertical identity square on h is the identity of H(h), after
    the comparison 1 => V(1) on either side."""
    claim = f"K.identity.cell.h.{_label(h)}"
    k = K2(mnd_id_v(h))
    Hh = H1(h)
    E = Hh.dst
    c_src, c_dst = v_identity_comparison(h.src), v_identity_comparison(h.dst)
    return _pointwise(
        claim, Hh.src.objects,
        lambda p: (c_src[p] == Hh.src.identity(p) and c_dst[Hh.obj(p)] == E.identity(Hh.obj(p))
                   and k[p] == E.identity(Hh.obj(p))),
        lambda p: E.compose(k[p], c_dst[Hh.obj(p)]) == Hh.mor(c_src[p]))


def _identity_cell_v(n: MonadMorV) -> LawEntry:
    """K of the horizontal identity square on n is the identity of V(n)."""
    claim = f"K.identity.cell.v.{_label(n)}"
    k = K2(mnd_id_h(n))
    Vn = V1(n)
    E = Vn.dst
    ok = lambda p: k[p] == E.identity(Vn.obj(p))  # noqa: E731
    return _pointwise(claim, Vn.src.objects, ok, ok)


def _hcomp_cell(claim: str, s2: MndSquare, s1: MndSquare) -> LawEntry:
    k = K2(mnd_hcomp(s2, s1))
    k1, k2 = K2(s1), K2(s2)
    Hk2, Hh1 = H1(s2.bottom), H1(s1.top)
    E = k.target
    pasted = lambda p: E.compose(Hk2.mor(k1[p]), k2[Hh1.obj(p)])  # noqa: E731
    ok = lambda p: k[p] == pasted(p)  # noqa: E731
    return _pointwise(claim, k.base.objects, ok, ok)


def _vcomp_cell(claim: str, s2: MndSquare, s1: MndSquare) -> LawEntry:
    comp = mnd_vcomp(s2, s1)
    k = K2(comp)
    k1, k2 = K2(s1), K2(s2)
    Vg2, Vn1 = V1(s2.right), V1(s1.left)
    Hh, Hl = H1(s1.top), H1(s2.bottom)
    c_g = v_composite_comparison(s2.right, s1.right)
    c_n = v_composite_comparison(s2.left, s1.left)
    E = k.target

    def pasted(p):
        return E.compose(k2[Vn1.obj(p)], Vg2.mor(k1[p]))

    def exact(p):
        hp = Hh.obj(p)
        return (c_g[hp] == E.identity(c_g.src.obj(hp))
                and c_n[p] == c_n.target.identity(c_n.src.obj(p))
                and k[p] == pasted(p))

    def conj(p):
        return E.compose(k[p], c_g[Hh.obj(p)]) == E.compose(Hl.mor(c_n[p]), pasted(p))

    return _pointwise(claim, k.base.objects, exact, conj)


def _monoidal_v(claim: str, n: MonadMorV, n2: MonadMorV) -> LawEntry:
    P = product_fun(V1(n), V1(n2))
    W = V1(product_mor(n, n2))
    F = Fun(W.src, W.dst, P.obj, P.mor, name=P.name)
    return _fun_claim(claim, F, W, lambda: v_product_comparison(n, n2))


def _monoidal_cell(claim: str, s: MndSquare, s2: MndSquare) -> LawEntry:
    prod = mnd_product(s, s2)
    k = K2(prod)
    pk = product_nat(K2(s), K2(s2))
    c_g = v_product_comparison(s.right, s2.right)
    c_n = v_product_comparison(s.left, s2.left)
    Hh, Hk = H1(prod.top), H1(prod.bottom)
    E = k.target

    def exact(p):
        hp = Hh.obj(p)
        return (c_g[hp] == E.identity(c_g.src.obj(hp))
                and c_n[p] == c_n.target.identity(c_n.src.obj(p))
                and k[p] == pk[p])

    def conj(p):
        return E.compose(k[p], c_g[Hh.obj(p)]) == E.compose(Hk.mor(c_n[p]), pk[p])

    return _pointwise(claim, k.base.objects, exact, conj)


def _symmetry_v(claim: str, M: Monad, N: Monad) -> LawEntry:
    EM, EN = em(M).em_cat, em(N).em_cat
    cell = symmetry_monad_cell_v(M, N)
    W = V1(cell)
    S = flip(EM, EN)
    F = Fun(W.src, W.dst, S.obj, S.mor, name=S.name)
    return _fun_claim(claim, F, W, lambda: v_shuffle_comparison(cell, (EM, EN), (1, 0)))


def _cocycle_unit(claim: str, f: MonadMorV) -> LawEntry:
    """c(f,1).V(f)c_id = 1 and c(1,f).c_id V(f) = 1."""
    Vf = V1(f)
    E = Vf.dst
    c_r = v_composite_comparison(f, identity_v(f.src))
    c_l = v_composite_comparison(identity_v(f.dst), f)
    id_s, id_d = v_identity_comparison(f.src), v_identity_comparison(f.dst)

    def ok(p):
        one = E.identity(Vf.obj(p))
        return (E.compose(c_r[p], Vf.mor(id_s[p])) == one
                and E.compose(c_l[p], id_d[Vf.obj(p)]) == one)

    return _pointwise(claim, Vf.src.objects, ok, ok)


def _cocycle_assoc(claim: str, h: MonadMorV, g: MonadMorV, f: MonadMorV) -> LawEntry:
    """c(h,gf).V(h)c(g,f) = c(hg,f).c(h,g)V(f)."""
    gf = compose_v(g, f, validate=False)
    hg = compose_v(h, g, validate=False)
    c_gf, c_hg = v_composite_comparison(g, f), v_composite_comparison(h, g)
    c_h_gf, c_hg_f = v_composite_comparison(h, gf), v_composite_comparison(hg, f)
    Vh, Vf = V1(h), V1(f)
    E = Vh.dst

    def ok(p):
        lhs = E.compose(c_h_gf[p], Vh.mor(c_gf[p]))
        rhs = E.compose(c_hg_f[p], c_hg[Vf.obj(p)])
        return lhs == rhs

    return _pointwise(claim, Vf.src.objects, ok, ok)


# --- the inclusion I and the adjunction data -------------------------------------

def inclusion_I(c: SqrCell) -> MndSquare:
    """A square of functors as a cell between identity monads."""
    A, C, B, D = c.top.src, c.top.dst, c.bottom.src, c.bottom.dst
    tA, tC, tB, tD = (identity_monad(X) for X in (A, C, B, D))
    top = _trivial_mor(MonadMorH, tA, tC, c.top)
    bottom = _trivial_mor(MonadMorH, tB, tD, c.bottom)
    left = _trivial_mor(MonadMorV, tA, tB, c.left)
    right = _trivial_mor(MonadMorV, tC, tD, c.right)
    body = Nat(compose_fun(right.f, top.f), compose_fun(bottom.f, left.f), c.body.at,
               name=c.body.name)
    return MndSquare(top, bottom, left, right, body, name=f"I({c.name})")


def _trivial_mor(cls, src: Monad, dst: Monad, f: Fun):
    F = Fun(src.base, dst.base, f.obj, f.mor, name=f.name)
    B = dst.base
    if cls is MonadMorH:
        a, b = compose_fun(dst.endo, F), compose_fun(F, src.endo)
    else:
        a, b = compose_fun(F, src.endo), compose_fun(dst.endo, F)
    chi = Nat(a, b, lambda x: B.identity(F.obj(x)), name="1")
    return cls(src, dst, F, chi, name=f.name, validate=False)


def counit_h(M: Monad) -> MonadMorH:
    """(u^t, 1.eps^t): (A^t, 1) -> (A, t)."""
    B = em(M)
    E = B.em_cat
    trivial = identity_monad(E)
    chi = Nat(compose_fun(M.endo, B.forgetful), compose_fun(B.forgetful, trivial.endo),
              B.action, name="1.eps")
    return MonadMorH(trivial, M, B.forgetful, chi, name=f"eps_{M.name}", validate=False)


def counit_cell(g: MonadMorV) -> MndSquare:
    """The counit square at a vertical monad morphism (g, gamma): its body is
    (1.pi(g,gamma))(eta^s.1.1): g.u^t => u^s.V(g)."""
    Bt, Bs = em(g.src), em(g.dst)
    Vg = V1(g)
    left = _trivial_mor(MonadMorV, identity_monad(Bt.em_cat), identity_monad(Bs.em_cat), Vg)
    top, bottom = counit_h(g.src), counit_h(g.dst)
    pi = linton(g).epi
    A = g.dst.base

    def comp(p):
        x = g.f.obj(Bt.carrier(p))
        return A.compose(Bs.forgetful.mor(pi[p]), g.dst.unit[x])

    body = Nat(compose_fun(g.f, top.f), compose_fun(bottom.f, left.f), comp,
               name=f"counit({g.name})")
    return MndSquare(top, bottom, left, g, body, name=f"eps({g.name})", validate=False)


def free_v(M: Monad) -> MonadMorV:
    """(f^t, eps^t.1): (A, t) -> (A^t, 1)."""
    B = em(M)
    E = B.em_cat
    trivial = identity_monad(E)
    chi = Nat(compose_fun(B.free, M.endo), compose_fun(trivial.endo, B.free),
              lambda x: B.counit[B.free.obj(x)], name="eps.1")
    return MonadMorV(M, trivial, B.free, chi, name=f"f_{M.name}", validate=False)


def free_side_cell(h: MonadMorH) -> Nat:
    """(eps^s.1.1)(1.1.eta^t): f^s.h => H(h).f^t."""
    Bt, Bs = em(h.src), em(h.dst)
    Hh = H1(h)
    E = Bs.em_cat

    def comp(x):
        step = Bs.free.mor(h.f.mor(Bt.unit[x]))
        return E.compose(Bs.counit[Hh.obj(Bt.free.obj(x))], step)

    return Nat(compose_fun(Bs.free, h.f), compose_fun(Hh, Bt.free), comp,
               name=f"free({h.name})")


def free_side_square(h: MonadMorH) -> MndSquare:
    Bt, Bs = em(h.src), em(h.dst)
    bottom = _trivial_mor(MonadMorH, identity_monad(Bt.em_cat), identity_monad(Bs.em_cat),
                          H1(h))
    body = free_side_cell(h)
    left, right = free_v(h.src), free_v(h.dst)
    body = Nat(compose_fun(right.f, h.f), compose_fun(bottom.f, left.f), body.at,
               name=body.name)
    return MndSquare(h, bottom, left, right, body, name=f"f({h.name})", validate=False)


def epsilon_square(M: Monad) -> MndSquare:
    """Top (u^t, 1.eps^t), right (f^t, eps^t.1), identities elsewhere, body eps^t."""
    B = em(M)
    trivial = identity_monad(B.em_cat)
    top, right = counit_h(M), free_v(M)
    body = Nat(compose_fun(right.f, top.f), identity_fun(B.em_cat), B.counit.at, name="eps")
    return MndSquare(top, identity_h(trivial), identity_v(trivial), right, body,
                     name=f"eps_sq({M.name})", validate=False)


def eta_square(M: Monad) -> MndSquare:
    """Left (f^t, eps^t.1), bottom (u^t, 1.eps^t), identities elsewhere, body eta^t."""
    B = em(M)
    left, bottom = free_v(M), counit_h(M)
    body = Nat(identity_fun(M.base), compose_fun(bottom.f, left.f), B.unit.at, name="eta")
    return MndSquare(identity_h(M), bottom, left, identity_v(M), body,
                     name=f"eta_sq({M.name})", validate=False)


def _is_identity_square(s: MndSquare, check_h: bool) -> bool:
    """Identity 2-cell: body identity, and the pair of parallel edges are
    identity monad morphisms (vertical ones if check_h, else horizontal)."""
    if not _is_identity(s.body):
        return False
    if check_h:
        edges, ident = (s.left, s.right), (identity_v(s.left.src), identity_v(s.right.src))
    else:
        edges, ident = (s.top, s.bottom), (identity_h(s.top.src), identity_h(s.bottom.src))
    return all(e.f == i.f and e.chi == i.chi for e, i in zip(edges, ident))


def triangle_identities(M: Monad) -> ValidationReport:
    """The two pastings of the eps and eta squares are identity 2-cells."""
    rep = ValidationReport(f"orthogonal adjoints {M.name}".strip())
    es, hs = epsilon_square(M), eta_square(M)
    for label, s in (("eps", es), ("eta", hs)):
        rep.extend(validate_mnd_square(s), label)
    if rep.violations:
        return rep
    side = mnd_hcomp(hs, es)
    if validate_mnd_square(side).violations or not _is_identity_square(side, True):
        rep.add("adjoint.triangle.horizontal", side.body.first_difference(
            identity_nat(side.body.src)) or ())
    stack = mnd_vcomp(es, hs)
    if validate_mnd_square(stack).violations or not _is_identity_square(stack, False):
        rep.add("adjoint.triangle.vertical", stack.body.first_difference(
            identity_nat(stack.body.src)) or ())
    return rep


def unit_functor(A) -> Fun:
    """A -> K(I(A)): x |-> (x, 1_x), the unit of I -| K at a 0-cell."""
    B = em(identity_monad(A))

    def obj(x):
        return B.alg(x, A.identity(x))

    return Fun(A, B.em_cat, obj, lambda f: B.lift(obj(A.src(f)), obj(A.dst(f)), f),
               name=f"eta_{A.name}")


def unit_cell(f: Fun) -> Nat:
    """V(I f).eta_A => eta_B.f, the canonical comparison at each object."""
    tA, tB = identity_monad(f.src), identity_monad(f.dst)
    n = _trivial_mor(MonadMorV, tA, tB, f)
    L = linton(n)
    Bb = em(tB)
    uA, uB = unit_functor(f.src), unit_functor(f.dst)
    E = Bb.em_cat

    def comp(x):
        q = uB.obj(f.obj(x))
        return canonical_comparison(E, L.cocones[uA.obj(x)], Cocone(q, Bb.counit[q]))

    return Nat(compose_fun(L.functor, uA), compose_fun(uB, f), comp, name=f"unit({f.name})")


def adjunction_report(monads, vmors, squares=(), functors=()) -> ValidationReport:
    """Unit and counit data of I -| K, counit naturality, and the orthogonal
    adjoint triangles."""
    rep = ValidationReport("adjunction I -| K")
    for M in monads:
        label = M.name or "?"
        c = counit_h(M)
        rep.extend(c.validate(), f"counit[{label}]")
        A = M.base
        E = em(M).em_cat
        u = unit_functor(E)
        if validate_functor(u).violations or not _is_bijective(u):
            rep.add("adjunction.unit.iso", label)
        # K(eps).eta_K = 1
        if compose_fun(H1(c), u) != identity_fun(E):
            rep.add("adjunction.triangle.K", label)
        # eps_I.I(eta) = 1 on the base
        uA = unit_functor(A)
        back = compose_fun(counit_h(identity_monad(A)).f, uA)
        if back != identity_fun(A):
            rep.add("adjunction.triangle.I", label)
        rep.extend(triangle_identities(M), label)
    for g in vmors:
        s = counit_cell(g)
        rep.extend(validate_mnd_square(s), f"counit[{g.name}]")
    for s in squares:
        if not counit_naturality(s):
            rep.add("adjunction.counit.naturality", s.name)
    for f in functors:
        c = unit_cell(f)
        if not _is_iso_nat(c):
            rep.add("adjunction.unit.cell", f.name)
    return rep


def _is_bijective(F: Fun) -> bool:
    A, B = F.src, F.dst
    objs = {F.obj(x) for x in A.objects}
    mors = {F.mor(f) for f in A.morphisms}
    return len(objs) == len(A.objects) == len(B.objects) and \
        len(mors) == A.num_morphisms == B.num_morphisms


def _i_of_k(s: MndSquare) -> MndSquare:
    """I.K applied to a square of the monad double category."""
    k = K2(s)
    c = SqrCell(H1(s.top), H1(s.bottom), V1(s.left), V1(s.right), k, name=f"K({s.name})",
                validate=False)
    tA, tC = identity_monad(em(s.top.src).em_cat), identity_monad(em(s.top.dst).em_cat)
    tB, tD = identity_monad(em(s.bottom.src).em_cat), identity_monad(em(s.bottom.dst).em_cat)
    top = _trivial_mor(MonadMorH, tA, tC, c.top)
    bottom = _trivial_mor(MonadMorH, tB, tD, c.bottom)
    left = _trivial_mor(MonadMorV, tA, tB, c.left)
    right = _trivial_mor(MonadMorV, tC, tD, c.right)
    body = Nat(compose_fun(right.f, top.f), compose_fun(bottom.f, left.f), k.at, name=k.name)
    return MndSquare(top, bottom, left, right, body, name=c.name, validate=False)


def counit_naturality(s: MndSquare) -> bool:
    """eps_g after I.K(s) equals s after eps_n, side by side."""
    lhs = mnd_hcomp(counit_cell(s.right), _i_of_k(s))
    rhs = mnd_hcomp(s, counit_cell(s.left))
    if lhs.top.f != rhs.top.f or lhs.top.chi != rhs.top.chi:
        return False
    if lhs.bottom.f != rhs.bottom.f or lhs.bottom.chi != rhs.bottom.chi:
        return False
    return all(lhs.body[x] == rhs.body[x] for x in lhs.body.base.objects)


# --- Eilenberg-Moore objects for monoidal monads --------------------------------

def em_in_M10_check(OM) -> ValidationReport:
    """The free-side lift of a monad with monoidal structure, u^t made into a
    monoidal cell by the counit squares at (m, tau_2) and (u, tau_0), and f^t
    made into an opmonoidal cell by the preservation comparisons."""
    rep = ValidationReport(f"EM object in M10 {OM.name}".strip())
    if not OM.shape[0]:
        raise ShapeError("needs a monoidal axis")
    try:
        L = lift_along_f(OM, validate=False)
    except SizeCapExceeded:
        raise
    except CategoryError as exc:
        rep.add("em10.lift", detail=str(exc))
        return rep
    rep.extend(validate_pseudomonoid(L), "lift")
    if rep.violations:
        return rep
    mV, uV = OM.mon_morphisms()
    B = em(OM.monad)
    P = OM.pm_mon
    for label, g in (("m", mV), ("u", uV)):
        rep.extend(validate_mnd_square(counit_cell(g)), f"counit.{label}")
    if rep.violations:
        return rep
    cm, cu = counit_cell(mV), counit_cell(uV)
    forget = MonCell(L, P, B.forgetful, None, None, name="u^t", validate=False)
    forget.binary = Nat(forget.bin_src(), forget.bin_dst(), cm.body.at, name="phi2")
    forget.nullary = Nat(forget.nul_src(), forget.nul_dst(), cu.body.at, name="phi0")
    rep.extend(forget.validate(), "forgetful")
    free = OpmonCell(P, L, B.free, None, None, name="f^t", validate=False)
    free.binary = Nat(free.bin_src(), free.bin_dst(),
                      lambda x: lemma_V_comparison(mV, x), name="phi2")
    free.nullary = Nat(free.nul_src(), free.nul_dst(),
                       lambda x: lemma_V_comparison(uV, x), name="phi0")
    rep.extend(free.validate(), "free")
    return rep
