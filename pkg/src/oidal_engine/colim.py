"""Coequalizers in finite categories, found by searching for a universal cocone."""
from __future__ import annotations

from dataclasses import dataclass

from .fincat import BoundaryMismatch, Category, CategoryError, Id, render


class NotFound(CategoryError):
    pass


class NoFactorization(CategoryError):
    pass


class NonUniqueFactorization(CategoryError):
    pass


class NotIsomorphic(CategoryError):
    pass


@dataclass(frozen=True)
class Cocone:
    apex: Id
    leg: Id


@dataclass(frozen=True)
class ReflexivePair:
    f: Id
    g: Id
    section: Id

    def holds(self, C: Category) -> bool:
        y = C.dst(self.f)
        one = C.identity(y)
        return C.compose(self.f, self.section) == one and C.compose(self.g, self.section) == one


def _parallel(C: Category, f: Id, g: Id) -> None:
    if C.src(f) != C.src(g) or C.dst(f) != C.dst(g):
        raise BoundaryMismatch(f"{render(f)} and {render(g)} are not parallel")


def cocones(C: Category, f: Id, g: Id) -> list[Cocone]:
    """All cocones under the pair, in stored object and morphism order."""
    _parallel(C, f, g)
    y = C.dst(f)
    out = []
    for z in C.objects:
        for q in C.hom(y, z):
            if C.compose(q, f) == C.compose(q, g):
                out.append(Cocone(z, q))
    return out


def factorizations(C: Category, e: Cocone, m: Id) -> list[Id]:
    w = C.dst(m)
    return [u for u in C.hom(e.apex, w) if C.compose(u, e.leg) == m]


def is_universal(C: Category, f: Id, g: Id, e: Cocone,
                 others: list[Cocone] | None = None) -> bool:
    if C.compose(e.leg, f) != C.compose(e.leg, g):
        return False
    for c in others if others is not None else cocones(C, f, g):
        if len(factorizations(C, e, c.leg)) != 1:
            return False
    return True


def coequalizer(C: Category, f: Id, g: Id) -> Cocone:
    """The first universal cocone in stored order."""
    cands = cocones(C, f, g)
    for e in cands:
        if is_universal(C, f, g, e, cands):
            return e
    raise NotFound(f"no coequalizer of {render(f)}, {render(g)} in {C.name or 'category'}")


def factor_through(C: Category, e: Cocone, m: Id) -> Id:
    us = factorizations(C, e, m)
    if not us:
        raise NoFactorization(f"{render(m)} does not factor through {render(e.leg)}")
    if len(us) > 1:
        raise NonUniqueFactorization(f"{render(m)} factors through {render(e.leg)} "
                                     f"in {len(us)} ways")
    return us[0]


def canonical_comparison(C: Category, e1: Cocone, e2: Cocone) -> Id:
    """The iso u with u . e1.leg = e2.leg between two universal cocones."""
    u = factor_through(C, e1, e2.leg)
    v = factor_through(C, e2, e1.leg)
    if (C.compose(v, u) != C.identity(e1.apex)
            or C.compose(u, v) != C.identity(e2.apex)):
        raise NotIsomorphic(f"cocones at {render(e1.apex)} and {render(e2.apex)} "
                            "are not isomorphic")
    return u


def is_split_coequalizer(C: Category, f: Id, g: Id, e: Id, s1: Id, s2: Id) -> bool:
    """Split fork f, g: X -> Y, e: Y -> Z with sections s1: Z -> Y and s2: Y -> X.

    The identities are e f = e g, e s1 = 1, f s2 = 1 and g s2 = s1 e.
    """
    _parallel(C, f, g)
    x, y = C.src(f), C.dst(f)
    z = C.dst(e)
    if (C.src(e) != y or C.src(s1) != z or C.dst(s1) != y
            or C.src(s2) != y or C.dst(s2) != x):
        raise BoundaryMismatch("split coequalizer data has the wrong shape")
    return (C.compose(e, f) == C.compose(e, g)
            and C.compose(e, s1) == C.identity(z)
            and C.compose(f, s2) == C.identity(y)
            and C.compose(g, s2) == C.compose(s1, e))
