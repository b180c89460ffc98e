"""JSON fixtures: loading into engine objects, and dumping engine objects.

A fixture directory holds any number of ``*.json`` documents. Each document is
an object whose sections map names to payloads, plus an optional free-form
``notes`` string. Identifiers are strings; tuples (objects of product
categories) are JSON arrays. Names may refer to entries of any document in the
directory, or to the built-ins ``@terminal``, ``@trivial``, ``@id:<category>``,
``@id_h:<monad>`` and ``@id_v:<monad>``. "pairs" below means a list of
``[key, value]`` rows.

categories
    ``{"objects": [...], "morphisms": [{"name", "src", "dst"}],
    "identities": {object: morphism} or pairs, "composition": [[g, f, g.f]]}``,
    or ``{"poset": {"elements": [...], "leq": [[x, y]]}}`` whose morphisms are
    named ``x≤y``.
functors
    ``{"src", "dst", "objects": pairs, "morphisms": pairs}``; ``morphisms`` may
    be omitted when the target is thin.
nats
    ``{"src", "dst", "components": pairs}`` between functor names; components
    may be omitted when the target is thin.
monads
    ``{"category", "endofunctor", "mu", "eta"}`` (the endofunctor a name or an
    inline functor), or ``{"category", "closure": {"map": {x: cx}}}``.
monad_morphisms
    ``{"kind": "H" | "V", "src", "dst", "functor", "chi"}``, or on thin
    categories ``{"kind", "src", "dst", "map": {x: hx}}``.
pseudomonoids
    ``{"category", "table": [[x, y, xy]], "unit"}`` on a thin category.
duoidals
    ``{"horizontal", "vertical"}`` naming two pseudomonoids.
oidal_monads
    ``{"monad", "shape": [p, q], "opmonoidal", "monoidal", "duoidal"}``; the
    structure keys needed by the shape are required.
cells
    squares of functors ``{"top", "bottom", "left", "right", "body"}``; the
    body may be omitted over a thin target.
squares
    squares of monad morphisms, same keys as cells.
suites
    ``{"monads", "hmors", "vmors", "squares", "oidal", "identity_squares"}``:
    lists of names; ``oidal`` adds the structure morphisms and interchange
    squares of the named oidal monads, and ``identity_squares`` adds the
    identity squares of every listed morphism.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .dblcat import KSuite, SqrCell, mnd_id_h, mnd_id_v, validate_sqr_cell
from .fincat import (
    TERMINAL, CategoryError, FinCat, Fun, Nat, SizeCapExceeded, ValidationReport, compose_fun,
    identity_fun, leq, poset, validate_category, validate_functor, validate_nat,
)
from .mnd import (
    Monad, MndSquare, MonadMorH, MonadMorV, identity_h, identity_v, trivial_monad,
    validate_mnd_square, validate_monad,
)
from .oidal import (
    interchange_squares, thin_duoidal, thin_oidal_monad, thin_pseudomonoid, validate_duoidal,
    validate_oidal_monad, validate_pseudomonoid,
)

SECTIONS = ("categories", "functors", "nats", "monads", "monad_morphisms", "pseudomonoids",
            "duoidals", "oidal_monads", "cells", "squares", "suites")


class FixtureError(Exception):
    """Malformed input: bad JSON, a dangling reference or a bad payload."""

    def __init__(self, message: str, location: str = ""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location


class FixtureValidationError(FixtureError):
    def __init__(self, location: str, report: ValidationReport):
        super().__init__(str(report), location)
        self.report = report


def decode_id(x):
    if isinstance(x, list):
        return tuple(decode_id(p) for p in x)
    if isinstance(x, str):
        return x
    raise FixtureError(f"identifier must be a string or an array, got {x!r}")


def encode_id(x):
    if isinstance(x, tuple):
        return [encode_id(p) for p in x]
    return x


@dataclass
class FixtureSet:
    categories: dict = field(default_factory=dict)
    functors: dict = field(default_factory=dict)
    nats: dict = field(default_factory=dict)
    monads: dict = field(default_factory=dict)
    monad_morphisms: dict = field(default_factory=dict)
    pseudomonoids: dict = field(default_factory=dict)
    duoidals: dict = field(default_factory=dict)
    oidal_monads: dict = field(default_factory=dict)
    cells: dict = field(default_factory=dict)
    squares: dict = field(default_factory=dict)
    suites: dict = field(default_factory=dict)
    notes: dict = field(default_factory=dict)
    raw: dict = field(default_factory=dict)

    def items(self):
        """(section, name, object) in a fixed order."""
        for sec in SECTIONS:
            for name in sorted(getattr(self, sec)):
                yield sec, name, getattr(self, sec)[name]

    def __len__(self):
        return sum(len(getattr(self, s)) for s in SECTIONS)


def validator_for(section: str):
    return {
        "categories": validate_category,
        "functors": validate_functor,
        "nats": validate_nat,
        "monads": validate_monad,
        "monad_morphisms": lambda m: m.validate(),
        "pseudomonoids": validate_pseudomonoid,
        "duoidals": validate_duoidal,
        "oidal_monads": validate_oidal_monad,
        "cells": validate_sqr_cell,
        "squares": validate_mnd_square,
    }.get(section)


def validate_item(section: str, obj) -> ValidationReport:
    v = validator_for(section)
    if v is None:
        return ValidationReport(section)
    try:
        return v(obj)
    except SizeCapExceeded:
        raise
    except CategoryError as exc:
        rep = ValidationReport(section)
        rep.add(f"{section}.construction", detail=f"{type(exc).__name__}: {exc}")
        return rep


# --- locating fixtures -----------------------------------------------------------

def bundled_root() -> Path:
    return Path(str(resources.files("oidal_engine") / "data"))


def bundled_names() -> list[str]:
    root = bundled_root()
    return sorted(p.name for p in root.iterdir() if p.is_dir() and any(p.glob("*.json")))


def resolve_path(spec: str) -> Path:
    """A directory path, or the name of a bundled fixture directory
    (``perturbations/<name>`` included)."""
    p = Path(spec)
    if p.is_dir():
        return p
    q = bundled_root() / spec
    if q.is_dir():
        return q
    raise FixtureError(f"no fixture directory {spec!r}")


# --- loading ---------------------------------------------------------------------

def read_documents(path: Path) -> dict:
    merged: dict = {s: {} for s in SECTIONS}
    notes = {}
    files = [path] if path.is_file() else sorted(path.glob("*.json"))
    for f in files:
        try:
            doc = json.loads(f.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise FixtureError(f"invalid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})",
                               f.name) from None
        if not isinstance(doc, dict):
            raise FixtureError("top level must be an object", f.name)
        for key, body in doc.items():
            if key == "notes":
                notes[f.name] = body
                continue
            if key not in SECTIONS:
                raise FixtureError(f"unknown section {key!r}", f.name)
            if not isinstance(body, dict):
                raise FixtureError(f"section {key!r} must be an object", f.name)
            for name, payload in body.items():
                if name in merged[key]:
                    raise FixtureError(f"duplicate {key} entry {name!r}", f.name)
                merged[key][name] = (f.name, payload)
    merged["notes"] = notes
    return merged


def load(path, validate: bool = True) -> FixtureSet:
    """Load a fixture directory (or a bundled fixture name)."""
    path = resolve_path(str(path)) if not isinstance(path, Path) else path
    docs = read_documents(path)
    return _Builder(docs).build(validate)


class _Builder:
    def __init__(self, docs: dict):
        self.docs = docs
        self.fs = FixtureSet(notes=docs["notes"], raw={s: docs[s] for s in SECTIONS})

    def build(self, validate: bool) -> FixtureSet:
        for sec in SECTIONS:
            for name in self.docs[sec]:
                self.get(sec, name)
        if validate:
            for sec, name, obj in self.fs.items():
                if sec == "suites":
                    continue
                rep = validate_item(sec, obj)
                if not rep.ok:
                    raise FixtureValidationError(f"{sec}/{name}", rep)
        return self.fs

    # generic lookup with recursion on references

    def get(self, sec: str, name: str):
        table = getattr(self.fs, sec)
        if name in table:
            return table[name]
        if name not in self.docs[sec]:
            raise FixtureError(f"unresolved reference {name!r} in {sec}")
        fname, payload = self.docs[sec][name]
        loc = f"{fname}:{sec}/{name}"
        if not isinstance(payload, dict):
            raise FixtureError("payload must be an object", loc)
        try:
            obj = getattr(self, "_" + sec)(name, payload, loc)
        except FixtureError:
            raise
        except KeyError as exc:
            raise FixtureError(f"missing or unknown key {exc}", loc) from None
        except (TypeError, ValueError) as exc:
            raise FixtureError(str(exc), loc) from None
        table[name] = obj
        return obj

    def category(self, ref: str):
        if ref == "@terminal":
            return TERMINAL
        return self.get("categories", ref)

    def functor(self, ref: str):
        if ref.startswith("@id:"):
            return identity_fun(self.category(ref[4:]))
        return self.get("functors", ref)

    def monad(self, ref: str):
        if ref == "@trivial":
            return trivial_monad()
        return self.get("monads", ref)

    def morphism(self, ref: str):
        if ref.startswith("@id_h:"):
            return identity_h(self.monad(ref[6:]))
        if ref.startswith("@id_v:"):
            return identity_v(self.monad(ref[6:]))
        return self.get("monad_morphisms", ref)

    @staticmethod
    def pairs(rows, loc: str) -> dict:
        out = {}
        for row in rows:
            if not isinstance(row, list) or len(row) != 2:
                raise FixtureError(f"expected [key, value] pairs, got {row!r}", loc)
            out[decode_id(row[0])] = decode_id(row[1])
        return out

    # sections

    def _categories(self, name, p, loc):
        if "poset" in p:
            spec = p["poset"]
            return poset(spec["elements"], [tuple(r) for r in spec.get("leq", [])], name=name)
        objects = [decode_id(x) for x in p["objects"]]
        ends = {}
        for m in p["morphisms"]:
            ends[decode_id(m["name"])] = (decode_id(m["src"]), decode_id(m["dst"]))
        ids = p["identities"]
        ident = self.pairs(ids, loc) if isinstance(ids, list) else \
            {k: decode_id(v) for k, v in ids.items()}
        comp = {}
        for row in p["composition"]:
            if not isinstance(row, list) or len(row) != 3:
                raise FixtureError(f"composition rows are [g, f, g.f], got {row!r}", loc)
            g, f, gf = (decode_id(x) for x in row)
            comp[(g, f)] = gf
        return FinCat(objects, ends, ident, comp, name=name)

    def _functors(self, name, p, loc):
        A, B = self.category(p["src"]), self.category(p["dst"])
        obj = self.pairs(p["objects"], loc)
        if "morphisms" in p:
            mor = self.pairs(p["morphisms"], loc)
        else:
            def mor(f, A=A, B=B, obj=obj):
                return leq(B, obj[A.src(f)], obj[A.dst(f)])
        return Fun(A, B, obj, mor, name=name)

    def _nats(self, name, p, loc):
        F, G = self.functor(p["src"]), self.functor(p["dst"])
        if "components" in p:
            comps = self.pairs(p["components"], loc)
        else:
            B = F.dst

            def comps(x, F=F, G=G, B=B):
                return leq(B, F.obj(x), G.obj(x))
        return Nat(F, G, comps, name=name)

    def _monads(self, name, p, loc):
        A = self.category(p["category"])
        if "closure" in p:
            return _closure_unchecked(A, dict(p["closure"]["map"]), name)
        endo = p["endofunctor"]
        if isinstance(endo, dict):
            endo = dict(endo, src=endo.get("src", p["category"]), dst=endo.get("dst", p["category"]))
            t = self._functors(f"{name}.endofunctor", endo, loc)
        else:
            t = self.functor(endo)
        mu = Nat(compose_fun(t, t), t, self.pairs(p["mu"], loc), name="mu")
        eta = Nat(identity_fun(A), t, self.pairs(p["eta"], loc), name="eta")
        return Monad(A, t, mu, eta, name=name, validate=False)

    def _monad_morphisms(self, name, p, loc):
        kind = p["kind"]
        if kind not in ("H", "V"):
            raise FixtureError(f"kind must be 'H' or 'V', got {kind!r}", loc)
        src, dst = self.monad(p["src"]), self.monad(p["dst"])
        if "map" in p:
            return _thin_morphism_unchecked(kind, src, dst, dict(p["map"]), name)
        f = self.functor(p["functor"])
        t, s = src.endo, dst.endo
        if kind == "H":
            a, b, cls = compose_fun(s, f), compose_fun(f, t), MonadMorH
        else:
            a, b, cls = compose_fun(f, t), compose_fun(s, f), MonadMorV
        chi = Nat(a, b, self.pairs(p["chi"], loc), name="chi")
        return cls(src, dst, f, chi, name=name, validate=False)

    def _pseudomonoids(self, name, p, loc):
        A = self.category(p["category"])
        table = {}
        for row in p["table"]:
            x, y, z = (decode_id(v) for v in row)
            table[(x, y)] = z
        return thin_pseudomonoid(A, table, decode_id(p["unit"]), name=name, validate=False)

    def _duoidals(self, name, p, loc):
        h = self.get("pseudomonoids", p["horizontal"])
        v = self.get("pseudomonoids", p["vertical"])
        return thin_duoidal(h, v, name=name, validate=False)

    def _oidal_monads(self, name, p, loc):
        M = self.monad(p["monad"])
        shape = tuple(p["shape"])
        op = self.get("pseudomonoids", p["opmonoidal"]) if p.get("opmonoidal") else None
        mon = self.get("pseudomonoids", p["monoidal"]) if p.get("monoidal") else None
        D = self.get("duoidals", p["duoidal"]) if p.get("duoidal") else None
        return thin_oidal_monad(M, shape, pm_op=op, pm_mon=mon, duoidal=D, name=name,
                                validate=False)

    def _cells(self, name, p, loc):
        top, bottom = self.functor(p["top"]), self.functor(p["bottom"])
        left, right = self.functor(p["left"]), self.functor(p["right"])
        gh, kf = compose_fun(right, top), compose_fun(bottom, left)
        if "body" in p:
            body = Nat(gh, kf, self.pairs(p["body"], loc), name=name)
        else:
            D = bottom.dst
            body = Nat(gh, kf, lambda x: leq(D, gh.obj(x), kf.obj(x)), name=name)
        return SqrCell(top, bottom, left, right, body, name=name, validate=False)

    def _squares(self, name, p, loc):
        top, bottom = self.morphism(p["top"]), self.morphism(p["bottom"])
        left, right = self.morphism(p["left"]), self.morphism(p["right"])
        gh, kf = compose_fun(right.f, top.f), compose_fun(bottom.f, left.f)
        if "body" in p:
            body = Nat(gh, kf, self.pairs(p["body"], loc), name=name)
        else:
            D = bottom.dst.base
            body = Nat(gh, kf, lambda x: leq(D, gh.obj(x), kf.obj(x)), name=name)
        return MndSquare(top, bottom, left, right, body, name=name, validate=False)

    def _suites(self, name, p, loc):
        suite = KSuite(name)
        for ref in p.get("monads", []):
            suite.monads.append(self.monad(ref))
        for ref in p.get("hmors", []):
            suite.hmors.append(self.morphism(ref))
        for ref in p.get("vmors", []):
            suite.vmors.append(self.morphism(ref))
        for ref in p.get("squares", []):
            suite.squares.append(self.get("squares", ref))
        for ref in p.get("oidal", []):
            OM = self.get("oidal_monads", ref)
            if OM.monad not in suite.monads:
                suite.monads.append(OM.monad)
            if OM.shape[1]:
                suite.hmors.extend(OM.op_morphisms())
            if OM.shape[0]:
                suite.vmors.extend(OM.mon_morphisms())
            if OM.shape == (1, 1):
                suite.squares.extend(interchange_squares(OM).values())
        if p.get("identity_squares", False):
            suite.squares.extend([mnd_id_v(h) for h in suite.hmors]
                                 + [mnd_id_h(n) for n in suite.vmors])
        for kind, m in (("H", suite.hmors), ("V", suite.vmors)):
            for x in m:
                if x.kind != kind:
                    raise FixtureError(f"{x.name} is not of kind {kind}", loc)
        return suite


def _closure_unchecked(P, cmap, name):
    """The closure monad of ``cmap`` with every structure map forced lazily, so
    a broken operator surfaces in validation rather than on construction."""
    t = Fun(P, P, cmap, lambda f: leq(P, cmap[P.src(f)], cmap[P.dst(f)]), name=name)
    mu = Nat(compose_fun(t, t), t, lambda x: leq(P, cmap[cmap[x]], cmap[x]), name="mu")
    eta = Nat(identity_fun(P), t, lambda x: leq(P, x, cmap[x]), name="eta")
    return Monad(P, t, mu, eta, name=name, validate=False)


def _thin_morphism_unchecked(kind, src, dst, fmap, name):
    A, B = src.base, dst.base

    def fmor(m):
        return leq(B, fmap[A.src(m)], fmap[A.dst(m)])

    f = Fun(A, B, fmap, fmor, name=name)
    t, s = src.endo, dst.endo
    if kind == "H":
        chi = Nat(compose_fun(s, f), compose_fun(f, t),
                  lambda x: leq(B, s.obj(fmap[x]), fmap[t.obj(x)]), name="chi")
        return MonadMorH(src, dst, f, chi, name=name, validate=False)
    chi = Nat(compose_fun(f, t), compose_fun(s, f),
              lambda x: leq(B, fmap[t.obj(x)], s.obj(fmap[x])), name="chi")
    return MonadMorV(src, dst, f, chi, name=name, validate=False)


# --- dumping -----------------------------------------------------------------------

def dump_category(C) -> dict:
    if C.is_thin() and all(f == f"{C.src(f)}≤{C.dst(f)}" for f in C.morphisms):
        rel = [[C.src(f), C.dst(f)] for f in C.morphisms if C.src(f) != C.dst(f)]
        return {"poset": {"elements": list(C.objects), "leq": rel}}
    objs, ends, ident, comp = C.data()
    return {
        "objects": [encode_id(x) for x in C.objects],
        "morphisms": [{"name": encode_id(f), "src": encode_id(ends[f][0]),
                       "dst": encode_id(ends[f][1])} for f in C.morphisms],
        "identities": {x: encode_id(C.identity(x)) for x in C.objects}
        if all(isinstance(x, str) for x in C.objects)
        else [[encode_id(x), encode_id(C.identity(x))] for x in C.objects],
        "composition": [[encode_id(g), encode_id(f), encode_id(h)]
                        for (g, f), h in comp.items()],
    }


def dump_functor(F: Fun, src: str, dst: str, thin: bool = False) -> dict:
    out = {"src": src, "dst": dst,
           "objects": [[encode_id(x), encode_id(F.obj(x))] for x in F.src.objects]}
    if not thin:
        out["morphisms"] = [[encode_id(f), encode_id(F.mor(f))] for f in F.src.morphisms]
    return out


def dump_components(a: Nat) -> list:
    return [[encode_id(x), encode_id(a[x])] for x in a.base.objects]


def dump_json(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=1, sort_keys=True) + "\n"
