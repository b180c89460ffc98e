"""Finite categories, functors and natural transformations.

Object and morphism ids are strings for atomic categories. Products use
flat tuples of atomic ids, so ``(A x B) x C`` and ``A x (B x C)`` carry
literally the same names and the terminal category (object ``()``,
morphism ``()``) is a strict unit.
"""
from __future__ import annotations

import contextlib
import contextvars
import itertools
import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Hashable, Iterable, Iterator, Mapping

Id = Hashable

DEFAULT_MAX_SIZE = 20000

_cap_override: contextvars.ContextVar[int | None] = contextvars.ContextVar(
    "oidal_max_size", default=None)


class CategoryError(Exception):
    pass


class BoundaryMismatch(CategoryError):
    pass


class SizeCapExceeded(CategoryError):
    pass


def size_cap() -> int:
    override = _cap_override.get()
    if override is not None:
        return override
    env = os.environ.get("OIDAL_MAX_SIZE")
    return int(env) if env else DEFAULT_MAX_SIZE


@contextlib.contextmanager
def size_limit(n: int | None):
    token = _cap_override.set(None if n is None else int(n))
    try:
        yield
    finally:
        _cap_override.reset(token)


def check_size(n: int, what: str = "category") -> None:
    cap = size_cap()
    if n > cap:
        raise SizeCapExceeded(f"{what} needs {n} morphisms, cap is {cap}")


# --- naming -----------------------------------------------------------------

def parts(x: Id) -> tuple:
    return x if isinstance(x, tuple) else (x,)


def join(*xs: Id) -> Id:
    flat = tuple(p for x in xs for p in parts(x))
    return flat[0] if len(flat) == 1 else flat


def split(x: Id, arities: Iterable[int]) -> tuple:
    ps = parts(x)
    out = []
    i = 0
    for a in arities:
        chunk = ps[i:i + a]
        if len(chunk) != a:
            raise KeyError(x)
        out.append(chunk[0] if a == 1 else chunk)
        i += a
    if i != len(ps):
        raise KeyError(x)
    return tuple(out)


def render(x: Id) -> str:
    if isinstance(x, tuple):
        return "(" + ",".join(render(p) for p in x) + ")"
    return str(x)


# --- reports ----------------------------------------------------------------

@dataclass
class Violation:
    axiom: str
    witness: tuple
    detail: str = ""

    def to_json(self) -> dict:
        out = {"axiom": self.axiom, "witness": [render(w) for w in self.witness]}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class ValidationReport:
    subject: str = ""
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, axiom: str, *witness: Any, detail: str = "") -> None:
        self.violations.append(Violation(axiom, tuple(witness), detail))

    def extend(self, other: "ValidationReport", prefix: str = "") -> None:
        for v in other.violations:
            name = f"{prefix}.{v.axiom}" if prefix else v.axiom
            self.violations.append(Violation(name, v.witness, v.detail))

    def axioms(self) -> set[str]:
        return {v.axiom for v in self.violations}

    def raise_if_failed(self, exc: type[Exception] | None = None) -> None:
        if self.violations:
            raise (exc or LawViolation)(self)

    def to_json(self) -> dict:
        return {"subject": self.subject, "ok": self.ok,
                "violations": [v.to_json() for v in self.violations]}

    def __str__(self) -> str:
        if self.ok:
            return f"{self.subject}: ok"
        lines = [f"{self.subject}: {len(self.violations)} violation(s)"]
        for v in self.violations[:10]:
            w = ", ".join(render(x) for x in v.witness)
            lines.append(f"  {v.axiom} at ({w}) {v.detail}".rstrip())
        return "\n".join(lines)


class LawViolation(CategoryError):
    def __init__(self, report: ValidationReport):
        super().__init__(str(report))
        self.report = report


# --- categories -------------------------------------------------------------

class Category:
    """Common interface of tabulated and lazily computed finite categories."""

    name: str = ""

    @property
    def objects(self) -> tuple:
        raise NotImplementedError

    @property
    def morphisms(self) -> tuple:
        raise NotImplementedError

    @property
    def num_morphisms(self) -> int:
        raise NotImplementedError

    @property
    def arity(self) -> int:
        raise NotImplementedError

    def src(self, f: Id) -> Id:
        raise NotImplementedError

    def dst(self, f: Id) -> Id:
        raise NotImplementedError

    def identity(self, x: Id) -> Id:
        raise NotImplementedError

    def compose(self, g: Id, f: Id) -> Id:
        """g after f."""
        raise NotImplementedError

    def hom(self, x: Id, y: Id) -> tuple:
        raise NotImplementedError

    def has_object(self, x: Id) -> bool:
        raise NotImplementedError

    def has_morphism(self, f: Id) -> bool:
        raise NotImplementedError

    def generators(self) -> Iterator[Id]:
        """Morphisms whose naturality squares imply naturality everywhere."""
        return iter(self.morphisms)

    def comp(self, *fs: Id) -> Id:
        """Compose a path written right to left: comp(h, g, f) = h g f."""
        out = fs[-1]
        for g in reversed(fs[:-1]):
            out = self.compose(g, out)
        return out

    def is_thin(self) -> bool:
        for x in self.objects:
            for y in self.objects:
                if len(self.hom(x, y)) > 1:
                    return False
        return True

    def inverse(self, f: Id) -> Id | None:
        x, y = self.src(f), self.dst(f)
        for g in self.hom(y, x):
            if (self.compose(g, f) == self.identity(x)
                    and self.compose(f, g) == self.identity(y)):
                return g
        return None

    def data(self) -> tuple:
        check_size(self.num_morphisms)
        objs = frozenset(self.objects)
        ends = {f: (self.src(f), self.dst(f)) for f in self.morphisms}
        ident = {x: self.identity(x) for x in self.objects}
        comp = {}
        for f in self.morphisms:
            for g in self.hom_from(self.dst(f)):
                comp[(g, f)] = self.compose(g, f)
        return objs, ends, ident, comp

    def hom_from(self, x: Id) -> tuple:
        return tuple(f for y in self.objects for f in self.hom(x, y))

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Category):
            return NotImplemented
        if isinstance(self, ProductCat) and isinstance(other, ProductCat):
            if self.factors == other.factors:
                return True
        key = (id(self), id(other))
        hit = _EQ_CACHE.get(key)
        if hit is not None and hit[0] is self and hit[1] is other:
            return hit[2]
        if len(self.objects) != len(other.objects):
            out = False
        elif self.num_morphisms != other.num_morphisms:
            out = False
        else:
            out = self.data() == other.data()
        _EQ_CACHE[key] = (self, other, out)
        _EQ_CACHE[(key[1], key[0])] = (other, self, out)
        return out

    def __hash__(self) -> int:
        return hash((len(self.objects), self.num_morphisms))

    def __repr__(self) -> str:
        label = self.name or type(self).__name__
        return f"<{label}: {len(self.objects)} objects, {self.num_morphisms} morphisms>"


# Equality of categories is by data; results are kept per instance pair (the
# instances themselves are held so that ids cannot be recycled).
_EQ_CACHE: dict = {}


class FinCat(Category):
    """A tabulated finite category.

    The constructor stores whatever it is given; ``validate_category``
    decides whether the data is a category.
    """

    def __init__(self, objects: Iterable[Id], morphisms: Mapping[Id, tuple[Id, Id]],
                 identities: Mapping[Id, Id], composition: Mapping[tuple[Id, Id], Id],
                 name: str = ""):
        self._objects = tuple(objects)
        self._ends = dict(morphisms)
        self._ident = dict(identities)
        self._comp = dict(composition)
        self.name = name
        self._objset = frozenset(self._objects)

    @property
    def objects(self) -> tuple:
        return self._objects

    @cached_property
    def morphisms(self) -> tuple:
        return tuple(self._ends)

    @property
    def num_morphisms(self) -> int:
        return len(self._ends)

    @cached_property
    def arity(self) -> int:
        if not self._objects:
            return 1
        return len(parts(self._objects[0]))

    @property
    def composition(self) -> dict:
        return self._comp

    @property
    def identities(self) -> dict:
        return self._ident

    def src(self, f):
        return self._ends[f][0]

    def dst(self, f):
        return self._ends[f][1]

    def identity(self, x):
        return self._ident[x]

    def compose(self, g, f):
        try:
            return self._comp[(g, f)]
        except KeyError:
            raise CategoryError(f"{render(g)} and {render(f)} are not composable") from None

    @cached_property
    def _hom(self) -> dict:
        table: dict = {}
        for f, (x, y) in self._ends.items():
            table.setdefault((x, y), []).append(f)
        return {k: tuple(v) for k, v in table.items()}

    @cached_property
    def _out(self) -> dict:
        table: dict = {}
        for f, (x, _) in self._ends.items():
            table.setdefault(x, []).append(f)
        return {k: tuple(v) for k, v in table.items()}

    def hom(self, x, y):
        return self._hom.get((x, y), ())

    def hom_from(self, x):
        return self._out.get(x, ())

    def has_object(self, x):
        try:
            return x in self._objset
        except TypeError:
            return False

    def has_morphism(self, f):
        try:
            return f in self._ends
        except TypeError:
            return False

    def data(self):
        return self._objset, self._ends, self._ident, self._comp


class ProductCat(Category):
    """Cartesian product of two or more non-trivial categories, computed lazily."""

    def __init__(self, factors: tuple[Category, ...]):
        assert len(factors) >= 2
        self.factors = factors
        self.name = " x ".join(f.name or "?" for f in factors)

    @cached_property
    def arities(self) -> tuple:
        return tuple(f.arity for f in self.factors)

    @cached_property
    def arity(self) -> int:
        return sum(self.arities)

    def split(self, x):
        return split(x, self.arities)

    @cached_property
    def objects(self) -> tuple:
        return tuple(join(*c) for c in itertools.product(*(f.objects for f in self.factors)))

    @cached_property
    def num_morphisms(self) -> int:
        n = 1
        for f in self.factors:
            n *= f.num_morphisms
        return n

    @cached_property
    def morphisms(self) -> tuple:
        check_size(self.num_morphisms, f"product {self.name}")
        return tuple(join(*c) for c in itertools.product(*(f.morphisms for f in self.factors)))

    def src(self, f):
        return join(*(c.src(p) for c, p in zip(self.factors, self.split(f))))

    def dst(self, f):
        return join(*(c.dst(p) for c, p in zip(self.factors, self.split(f))))

    def identity(self, x):
        return join(*(c.identity(p) for c, p in zip(self.factors, self.split(x))))

    def compose(self, g, f):
        return join(*(c.compose(a, b) for c, a, b
                      in zip(self.factors, self.split(g), self.split(f))))

    def hom(self, x, y):
        homs = [c.hom(a, b) for c, a, b in zip(self.factors, self.split(x), self.split(y))]
        return tuple(join(*m) for m in itertools.product(*homs))

    def hom_from(self, x):
        outs = [c.hom_from(p) for c, p in zip(self.factors, self.split(x))]
        return tuple(join(*m) for m in itertools.product(*outs))

    def has_object(self, x):
        try:
            return all(c.has_object(p) for c, p in zip(self.factors, self.split(x)))
        except KeyError:
            return False

    def has_morphism(self, f):
        try:
            return all(c.has_morphism(p) for c, p in zip(self.factors, self.split(f)))
        except KeyError:
            return False

    def generators(self):
        objs = [c.objects for c in self.factors]
        for i, c in enumerate(self.factors):
            for m in c.morphisms:
                if m == c.identity(c.src(m)):
                    continue
                others = [[self.factors[j].identity(x) for x in objs[j]]
                          for j in range(len(self.factors)) if j != i]
                for rest in itertools.product(*others):
                    rest = list(rest)
                    rest.insert(i, m)
                    yield join(*rest)

    def materialize(self) -> FinCat:
        check_size(self.num_morphisms, f"product {self.name}")
        objs, ends, ident, comp = self.data()
        return FinCat(self.objects, {f: ends[f] for f in self.morphisms}, ident, comp,
                      name=self.name)


TERMINAL = FinCat([()], {(): ((), ())}, {(): ()}, {((), ()): ()}, name="1")


def terminal() -> FinCat:
    return TERMINAL


def product(*cats: Category) -> Category:
    """Strictly associative and unital product of categories."""
    factors: list[Category] = []
    for c in cats:
        if isinstance(c, ProductCat):
            factors.extend(c.factors)
        elif c.arity == 0:
            continue
        else:
            factors.append(c)
    if not factors:
        return TERMINAL
    if len(factors) == 1:
        return factors[0]
    return ProductCat(tuple(factors))


def poset(elements: Iterable[str], leq: Iterable[tuple[str, str]], name: str = "") -> FinCat:
    """Thin category of the reflexive-transitive closure of ``leq``."""
    elements = list(elements)
    rel = {(x, x) for x in elements}
    rel.update((x, y) for x, y in leq)
    changed = True
    while changed:
        changed = False
        for (a, b) in list(rel):
            for (c, d) in list(rel):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
    order = {x: i for i, x in enumerate(elements)}
    pairs = sorted(rel, key=lambda p: (order[p[0]], order[p[1]]))
    mors = {f"{x}≤{y}": (x, y) for x, y in pairs}
    ident = {x: f"{x}≤{x}" for x in elements}
    comp = {}
    for (x, y) in pairs:
        for (y2, z) in pairs:
            if y == y2:
                comp[(f"{y}≤{z}", f"{x}≤{y}")] = f"{x}≤{z}"
    return FinCat(elements, mors, ident, comp, name=name)


def leq(C: Category, x: Id, y: Id) -> Id:
    """The unique morphism x -> y of a thin category."""
    hs = C.hom(x, y)
    if len(hs) != 1:
        raise CategoryError(f"expected exactly one morphism {render(x)} -> {render(y)}")
    return hs[0]


def validate_category(C: Category) -> ValidationReport:
    rep = ValidationReport(f"category {C.name}".strip())
    if isinstance(C, ProductCat):
        for c in C.factors:
            rep.extend(validate_category(c))
        return rep
    assert isinstance(C, FinCat)
    ends = C._ends
    for f, (x, y) in ends.items():
        if not C.has_object(x) or not C.has_object(y):
            rep.add("endpoints", f, detail="source or target is not an object")
    for x in C.objects:
        i = C._ident.get(x)
        if i is None or ends.get(i) != (x, x):
            rep.add("identity.exists", x)
    for (g, f), h in C._comp.items():
        if f not in ends or g not in ends or ends[f][1] != ends[g][0]:
            rep.add("composability", g, f, detail="composite defined on a non-composable pair")
        elif ends.get(h) != (ends[f][0], ends[g][1]):
            rep.add("composite.type", g, f)
    if rep.violations:
        return rep
    for f, (x, y) in ends.items():
        for g in C.hom_from(y):
            if (g, f) not in C._comp:
                rep.add("composability", g, f, detail="missing composite")
    if rep.violations:
        return rep
    for f, (x, y) in ends.items():
        if C._comp[(f, C._ident[x])] != f:
            rep.add("identity.right", f)
        if C._comp[(C._ident[y], f)] != f:
            rep.add("identity.left", f)
    for f, (_, y) in ends.items():
        for g in C.hom_from(y):
            gf = C._comp[(g, f)]
            for h in C.hom_from(ends[g][1]):
                if C._comp[(h, gf)] != C._comp[(C._comp[(h, g)], f)]:
                    rep.add("associativity", h, g, f)
    return rep


# --- functors ---------------------------------------------------------------

def _lookup(m: Mapping | Callable) -> Callable:
    if callable(m) and not isinstance(m, Mapping):
        cache: dict = {}

        def get(x):
            try:
                return cache[x]
            except KeyError:
                v = cache[x] = m(x)
                return v
        return get
    table = dict(m)
    return table.__getitem__


class Fun:
    """A functor between finite categories.

    The object and morphism maps may be dicts or callables; callables are
    memoised, so composites of large lazy products stay cheap.
    """

    def __init__(self, src: Category, dst: Category, obj_map: Mapping | Callable,
                 mor_map: Mapping | Callable, name: str = ""):
        self.src = src
        self.dst = dst
        self._obj = _lookup(obj_map)
        self._mor = _lookup(mor_map)
        self.name = name

    def obj(self, x: Id) -> Id:
        return self._obj(x)

    def mor(self, f: Id) -> Id:
        return self._mor(f)

    @property
    def obj_map(self) -> dict:
        return {x: self._obj(x) for x in self.src.objects}

    @property
    def mor_map(self) -> dict:
        return {f: self._mor(f) for f in self.src.morphisms}

    def _probe(self) -> Iterator[Id]:
        if isinstance(self.src, ProductCat) and self.src.num_morphisms > size_cap():
            return self.src.generators()
        return iter(self.src.morphisms)

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Fun):
            return NotImplemented
        if self.src != other.src or self.dst != other.dst:
            return False
        if any(self.obj(x) != other.obj(x) for x in self.src.objects):
            return False
        return all(self.mor(f) == other.mor(f) for f in self._probe())

    def first_difference(self, other: "Fun") -> Id | None:
        for x in self.src.objects:
            if self.obj(x) != other.obj(x):
                return x
        for f in self._probe():
            if self.mor(f) != other.mor(f):
                return f
        return None

    __hash__ = object.__hash__

    def __repr__(self) -> str:
        return f"<Fun {self.name or '?'}: {self.src!r} -> {self.dst!r}>"


def same_cat(A: Category, B: Category) -> bool:
    return A is B or A == B


def validate_functor(F: Fun) -> ValidationReport:
    rep = ValidationReport(f"functor {F.name}".strip())
    A, B = F.src, F.dst
    for x in A.objects:
        try:
            y = F.obj(x)
        except (KeyError, CategoryError):
            rep.add("functor.obj.defined", x)
            continue
        if not B.has_object(y):
            rep.add("functor.obj.target", x)
    if rep.violations:
        return rep
    for f in A.morphisms:
        try:
            g = F.mor(f)
        except (KeyError, CategoryError):
            rep.add("functor.mor.defined", f)
            continue
        if not B.has_morphism(g):
            rep.add("functor.mor.target", f)
        elif B.src(g) != F.obj(A.src(f)) or B.dst(g) != F.obj(A.dst(f)):
            rep.add("functor.endpoints", f)
    if rep.violations:
        return rep
    for x in A.objects:
        if F.mor(A.identity(x)) != B.identity(F.obj(x)):
            rep.add("functor.identity", x)
    for f in A.morphisms:
        for g in A.hom_from(A.dst(f)):
            if F.mor(A.compose(g, f)) != B.compose(F.mor(g), F.mor(f)):
                rep.add("functor.composition", g, f)
    return rep


def identity_fun(C: Category) -> Fun:
    return Fun(C, C, lambda x: x, lambda f: f, name=f"1_{C.name}")


def constant_fun(A: Category, B: Category, y: Id) -> Fun:
    i = B.identity(y)
    return Fun(A, B, lambda x: y, lambda f: i, name=f"const {render(y)}")


def point(A: Category, x: Id) -> Fun:
    """The functor from the terminal category picking out x."""
    i = A.identity(x)
    return Fun(TERMINAL, A, {(): x}, {(): i}, name=render(x))


def compose_fun(g: Fun, f: Fun) -> Fun:
    """g after f."""
    if not same_cat(f.dst, g.src):
        raise BoundaryMismatch(f"cannot compose {g.name} after {f.name}")
    return Fun(f.src, g.dst, lambda x: g.obj(f.obj(x)), lambda m: g.mor(f.mor(m)),
               name=f"{g.name}.{f.name}")


def compose_funs(*fs: Fun) -> Fun:
    """Composite written right to left."""
    out = fs[-1]
    for g in reversed(fs[:-1]):
        out = compose_fun(g, out)
    return out


def product_fun(*fs: Fun) -> Fun:
    src = product(*(f.src for f in fs))
    dst = product(*(f.dst for f in fs))
    src_ar = [f.src.arity for f in fs]

    def obj(x):
        return join(*(f.obj(p) for f, p in zip(fs, split(x, src_ar))))

    def mor(m):
        return join(*(f.mor(p) for f, p in zip(fs, split(m, src_ar))))

    return Fun(src, dst, obj, mor, name="x".join(f.name or "?" for f in fs))


def shuffle(cats: tuple[Category, ...], order: tuple[int, ...]) -> Fun:
    """The permutation functor prod(cats) -> prod(cats[i] for i in order)."""
    ar = [c.arity for c in cats]
    src = product(*cats)
    dst = product(*(cats[i] for i in order))

    def move(x):
        ps = split(x, ar)
        return join(*(ps[i] for i in order))

    return Fun(src, dst, move, move, name="shuffle" + "".join(map(str, order)))


def flip(A: Category, B: Category) -> Fun:
    """The symmetry A x B -> B x A."""
    F = shuffle((A, B), (1, 0))
    F.name = "flip"
    return F


def symmetry_laws(cats, functors=()) -> ValidationReport:
    """Involution and hexagon of the symmetry on all pairs and triples of the
    given categories, and its naturality against all pairs of functors."""
    rep = ValidationReport("symmetry")
    cats = list(cats)
    for A in cats:
        for B in cats:
            if compose_fun(flip(B, A), flip(A, B)) != identity_fun(product(A, B)):
                rep.add("symmetry.involution", A.name, B.name)
            for C in cats:
                one = compose_fun(product_fun(identity_fun(B), flip(A, C)),
                                  product_fun(flip(A, B), identity_fun(C)))
                if flip(A, product(B, C)) != one:
                    rep.add("symmetry.hexagon", A.name, B.name, C.name)
    functors = list(functors)
    for F in functors:
        for G in functors:
            lhs = compose_fun(flip(F.dst, G.dst), product_fun(F, G))
            rhs = compose_fun(product_fun(G, F), flip(F.src, G.src))
            if lhs != rhs:
                rep.add("symmetry.naturality", F.name, G.name)
    return rep


# --- natural transformations ------------------------------------------------

class Nat:
    """A natural transformation, stored as its component family."""

    def __init__(self, src: Fun, dst: Fun, components: Mapping | Callable, name: str = ""):
        if not (same_cat(src.src, dst.src) and same_cat(src.dst, dst.dst)):
            raise BoundaryMismatch(f"nat {name}: functors {src.name} and {dst.name} "
                                   "are not parallel")
        self.src = src
        self.dst = dst
        self._at = _lookup(components)
        self.name = name

    def at(self, x: Id) -> Id:
        return self._at(x)

    __getitem__ = at

    @property
    def components(self) -> dict:
        return {x: self._at(x) for x in self.src.src.objects}

    @property
    def base(self) -> Category:
        return self.src.src

    @property
    def target(self) -> Category:
        return self.src.dst

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Nat):
            return NotImplemented
        return (self.src == other.src and self.dst == other.dst
                and all(self.at(x) == other.at(x) for x in self.base.objects))

    def first_difference(self, other: "Nat") -> Id | None:
        for x in self.base.objects:
            if self.at(x) != other.at(x):
                return x
        return None

    __hash__ = object.__hash__

    def __repr__(self) -> str:
        return f"<Nat {self.name or '?'}: {self.src.name} => {self.dst.name}>"


def validate_nat(a: Nat) -> ValidationReport:
    rep = ValidationReport(f"nat {a.name}".strip())
    A, B = a.base, a.target
    F, G = a.src, a.dst
    for x in A.objects:
        try:
            c = a.at(x)
        except (KeyError, CategoryError):
            rep.add("nat.component.defined", x)
            continue
        if not B.has_morphism(c) or B.src(c) != F.obj(x) or B.dst(c) != G.obj(x):
            rep.add("nat.component.type", x)
    if rep.violations:
        return rep
    for f in A.generators():
        x, y = A.src(f), A.dst(f)
        if B.compose(G.mor(f), a.at(x)) != B.compose(a.at(y), F.mor(f)):
            rep.add("nat.naturality", f)
    return rep


def identity_nat(F: Fun) -> Nat:
    B = F.dst
    return Nat(F, F, lambda x: B.identity(F.obj(x)), name=f"1_{F.name}")


def vcomp_nat(b: Nat, a: Nat) -> Nat:
    """b after a, for a: F => G and b: G => H."""
    if a.dst != b.src:
        raise BoundaryMismatch(f"cannot stack {b.name} on {a.name}")
    B = a.target
    return Nat(a.src, b.dst, lambda x: B.compose(b.at(x), a.at(x)), name=f"{b.name}*{a.name}")


def vcomp_nats(*ns: Nat) -> Nat:
    out = ns[-1]
    for b in reversed(ns[:-1]):
        out = vcomp_nat(b, out)
    return out


def whisker_left(G: Fun, a: Nat) -> Nat:
    """G.a, with components G(a_x)."""
    return Nat(compose_fun(G, a.src), compose_fun(G, a.dst), lambda x: G.mor(a.at(x)),
               name=f"{G.name}.{a.name}")


def whisker_right(a: Nat, F: Fun) -> Nat:
    """a.F, with components a_{F x}."""
    return Nat(compose_fun(a.src, F), compose_fun(a.dst, F), lambda x: a.at(F.obj(x)),
               name=f"{a.name}.{F.name}")


def hcomp_nat(b: Nat, a: Nat) -> Nat:
    """b.a for a: F => F' (A -> B) and b: G => G' (B -> C)."""
    if not same_cat(a.target, b.base):
        raise BoundaryMismatch(f"cannot compose {b.name} after {a.name} horizontally")
    C = b.target
    Gp, Fp = b.dst, a.dst
    return Nat(compose_fun(b.src, a.src), compose_fun(Gp, Fp),
               lambda x: C.compose(b.at(Fp.obj(x)), b.src.mor(a.at(x))),
               name=f"{b.name}.{a.name}")


def product_nat(*ns: Nat) -> Nat:
    src = product_fun(*(n.src for n in ns))
    dst = product_fun(*(n.dst for n in ns))
    ar = [n.base.arity for n in ns]
    return Nat(src, dst, lambda x: join(*(n.at(p) for n, p in zip(ns, split(x, ar)))),
               name="x".join(n.name or "?" for n in ns))


def retype(a: Nat, src: Fun, dst: Fun) -> Nat:
    """The same components viewed between equal functors with other presentations."""
    if a.src != src or a.dst != dst:
        raise BoundaryMismatch(f"cannot retype {a.name}")
    return Nat(src, dst, a.at, name=a.name)


def nat_inverse(a: Nat) -> Nat:
    B = a.target

    def inv(x):
        g = B.inverse(a.at(x))
        if g is None:
            raise CategoryError(f"component of {a.name} at {render(x)} is not invertible")
        return g
    return Nat(a.dst, a.src, inv, name=f"{a.name}^-1")


def is_identity_nat(a: Nat) -> bool:
    B = a.target
    return all(a.at(x) == B.identity(a.src.obj(x)) for x in a.base.objects) and a.src == a.dst
