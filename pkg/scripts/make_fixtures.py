"""Regenerate the bundled JSON fixtures under src/oidal_engine/data.

Run from the repository root: python3 scripts/make_fixtures.py
"""
from __future__ import annotations

import shutil
from pathlib import Path

from oidal_engine import fixtures as fx
from oidal_engine.fixture_io import dump_category, dump_components, dump_functor, dump_json

ROOT = Path(__file__).resolve().parent.parent / "src" / "oidal_engine" / "data"


def poset_doc(C):
    return dump_category(C)


def table(pm, elems):
    return [[x, y, pm.m.obj((x, y))] for x in elems for y in elems]


def closure(base, M, elems):
    return {"category": base, "closure": {"map": {x: M.endo.obj(x) for x in elems}}}


def write(name, docs):
    d = ROOT / name
    d.mkdir(parents=True, exist_ok=True)
    for fname, doc in docs.items():
        (d / fname).write_text(dump_json(doc), encoding="utf-8")


def chain3():
    C2, C3 = fx.chain(2), fx.chain(3)
    cl = fx.chain3_closure()
    cells = {}
    # thin squares on the 2-chain with horizontal edges in {id, const 1} and
    # vertical edges in {id, const 0}, whenever the inequality is fillable
    functors = {
        "c0": dump_functor(fx.Fun(C2, C2, {"0": "0", "1": "0"}, lambda f: "0≤0"), "C2", "C2",
                           thin=True),
        "c1": dump_functor(fx.Fun(C2, C2, {"0": "1", "1": "1"}, lambda f: "1≤1"), "C2", "C2",
                           thin=True),
    }
    value = {"@id:C2": lambda x: x, "c0": lambda x: "0", "c1": lambda x: "1"}
    for top in ("@id:C2", "c1"):
        for bottom in ("@id:C2", "c1"):
            for left in ("@id:C2", "c0"):
                for right in ("@id:C2", "c0"):
                    if all(value[right](value[top](x)) <= value[bottom](value[left](x))
                           for x in "01"):
                        nm = "/".join(s.replace("@id:C2", "1") for s in (top, bottom, left, right))
                        cells[nm] = {"top": top, "bottom": bottom, "left": left, "right": right}
    write("chain3", {
        "chain3.json": {
            "notes": "The 3-chain with the closure cl(0)=1, cl(1)=1, cl(2)=2, and the 2-chain.",
            "categories": {"C3": poset_doc(C3), "C2": poset_doc(C2)},
            "monads": {"cl": closure("C3", cl, C3.objects),
                       "top": closure("C2", fx.chain2_top(), C2.objects),
                       "id2": closure("C2", fx.chain2_identity(), C2.objects)},
            "suites": {"chain": {"monads": ["cl", "top", "id2"], "identity_squares": True}},
        },
        "cells.json": {
            "notes": "Thin squares between endofunctors of the 2-chain.",
            "functors": functors,
            "cells": cells,
        },
    })


def diamond():
    D = fx.diamond()
    op, mon = fx.diamond_opmonoidal(), fx.diamond_monoidal()
    write("diamond", {"diamond.json": {
        "notes": "The four-element diamond lattice with its join, one closure that is "
                 "opmonoidal for the join and one (x join a) that is monoidal for it.",
        "categories": {"D": poset_doc(D)},
        "pseudomonoids": {"join": {"category": "D", "table": table(op.pm_op, fx.DIAMOND),
                                   "unit": fx.BOT}},
        "monads": {"t-op": closure("D", op.monad, fx.DIAMOND),
                   "t-mon": closure("D", mon.monad, fx.DIAMOND)},
        "oidal_monads": {
            "diamond-op": {"monad": "t-op", "shape": [0, 1], "opmonoidal": "join"},
            "diamond-mon": {"monad": "t-mon", "shape": [1, 0], "monoidal": "join"},
        },
        "suites": {"diamond": {"oidal": ["diamond-op", "diamond-mon"],
                               "identity_squares": True}},
    }})


def powerset():
    OM = fx.powerset_oidal()
    P = OM.monad.base
    write("powerset-Z2", {"powerset.json": {
        "notes": "Subsets of Z2 = {e, x} with union and the pointwise product; "
                 "t(X) = X u {e} is monoidal for the union and opmonoidal for the product.",
        "categories": {"PZ2": poset_doc(P)},
        "pseudomonoids": {
            "union": {"category": "PZ2", "table": table(OM.pm_mon, fx.SUBSETS), "unit": fx.EMPTY},
            "times": {"category": "PZ2", "table": table(OM.pm_op, fx.SUBSETS), "unit": fx.E},
        },
        "duoidals": {"PZ2": {"horizontal": "times", "vertical": "union"}},
        "monads": {"union-e": closure("PZ2", OM.monad, fx.SUBSETS),
                   "identity": {"category": "PZ2",
                                  "closure": {"map": {x: x for x in fx.SUBSETS}}}},
        "oidal_monads": {
            "union-e": {"monad": "union-e", "shape": [1, 1], "opmonoidal": "times",
                        "monoidal": "union", "duoidal": "PZ2"},
            "identity": {"monad": "identity", "shape": [1, 1], "opmonoidal": "times",
                         "monoidal": "union", "duoidal": "PZ2"},
        },
        "suites": {"powerset-Z2": {"oidal": ["union-e"], "identity_squares": True}},
    }})


def finset2():
    C = fx.finset2()
    I, T = fx.finset2_identity_monad(C), fx.finset2_terminal_monad(C)
    ident = {x: C.identity(x) for x in C.objects}
    bang = {x: C.hom(x, "1")[0] for x in C.objects}
    swap, bang2 = "2→2:10", C.hom("2", "1")[0]
    write("finset2", {"finset2.json": {
        "notes": "Sets with at most two elements and all functions. Each hom-set lists "
                 "its maps in reverse lexicographic order, so the swap of 2 precedes "
                 "its identity and the chosen coequalizers differ from the identity.",
        "categories": {"FinSet≤2": dump_category(C)},
        "functors": {
            "one": dump_functor(T.endo, "FinSet≤2", "FinSet≤2"),
            "pt2": {"src": "@terminal", "dst": "FinSet≤2", "objects": [[[], "2"]],
                    "morphisms": [[[], ident["2"]]]},
            "pt1": {"src": "@terminal", "dst": "FinSet≤2", "objects": [[[], "1"]],
                    "morphisms": [[[], ident["1"]]]},
        },
        "monads": {
            "I": {"category": "FinSet≤2", "endofunctor": "@id:FinSet≤2",
                  "mu": dump_components(I.mult), "eta": dump_components(I.unit)},
            "T": {"category": "FinSet≤2", "endofunctor": "one",
                  "mu": dump_components(T.mult), "eta": dump_components(T.unit)},
        },
        "monad_morphisms": {
            "point2-h": {"kind": "H", "src": "@trivial", "dst": "I", "functor": "pt2",
                         "chi": [[[], ident["2"]]]},
            "point2-v": {"kind": "V", "src": "@trivial", "dst": "I", "functor": "pt2",
                         "chi": [[[], ident["2"]]]},
            "point1-h": {"kind": "H", "src": "@trivial", "dst": "T", "functor": "pt1",
                         "chi": [[[], ident["1"]]]},
            "collapse-h": {"kind": "H", "src": "T", "dst": "I", "functor": "@id:FinSet≤2",
                           "chi": [[x, f] for x, f in bang.items()]},
            "collapse-v": {"kind": "V", "src": "I", "dst": "T", "functor": "@id:FinSet≤2",
                           "chi": [[x, f] for x, f in bang.items()]},
        },
        "squares": {
            "swap": {"top": "point2-h", "bottom": "point2-h", "left": "@id_v:@trivial",
                     "right": "@id_v:I", "body": [[[], swap]]},
            "collapse": {"top": "point2-h", "bottom": "point1-h", "left": "@id_v:@trivial",
                         "right": "collapse-v", "body": [[[], bang2]]},
        },
        "suites": {"finset2": {
            "monads": ["I", "T"],
            "hmors": ["point2-h", "collapse-h", "@id_h:I"],
            "vmors": ["point2-v", "collapse-v", "@id_v:I"],
            "squares": ["swap", "collapse"],
            "identity_squares": True,
        }},
    }})


def perturbations():
    C = fx.finset2()
    ident = {x: C.identity(x) for x in C.objects}
    full = dump_category(C)
    swap = "2→2:10"
    out = {}
    out["category-associativity"] = {
        "notes": "A one-object category whose composition table is not associative: "
                 "(a.a).b = a but a.(a.b) = b.",
        "categories": {"M": {
            "objects": ["*"],
            "morphisms": [{"name": n, "src": "*", "dst": "*"} for n in ("1", "a", "b")],
            "identities": {"*": "1"},
            "composition": [["1", "1", "1"], ["1", "a", "a"], ["1", "b", "b"],
                            ["a", "1", "a"], ["b", "1", "b"],
                            ["a", "a", "b"], ["a", "b", "a"], ["b", "a", "b"], ["b", "b", "a"]],
        }},
    }
    out["functor-composition"] = {
        "notes": "Sends every object to 2 and every non-identity map to the swap, "
                 "so a composite of two non-identities goes to the swap instead of "
                 "the identity.",
        "categories": {"FinSet≤2": full},
        "functors": {"F": {"src": "FinSet≤2", "dst": "FinSet≤2",
                           "objects": [[x, "2"] for x in C.objects],
                           "morphisms": [[f, ident["2"] if f in ident.values() else swap]
                                         for f in C.morphisms]}},
    }
    out["nat-naturality"] = {
        "notes": "The identity functor to itself with the swap as component at 2.",
        "categories": {"FinSet≤2": full},
        "nats": {"a": {"src": "@id:FinSet≤2", "dst": "@id:FinSet≤2",
                       "components": [[x, swap if x == "2" else ident[x]]
                                      for x in C.objects]}},
    }
    const2 = {x: C.hom(x, "2") for x in C.objects}
    out["monad-unit"] = {
        "notes": "t constant at 2 with identity multiplication and the unit picking "
                 "the constant map onto 0; mu.(eta t) is not the identity.",
        "categories": {"FinSet≤2": full},
        "functors": {"two": {"src": "FinSet≤2", "dst": "FinSet≤2",
                             "objects": [[x, "2"] for x in C.objects],
                             "morphisms": [[f, ident["2"]] for f in C.morphisms]}},
        "monads": {"bad": {"category": "FinSet≤2", "endofunctor": "two",
                           "mu": [[x, ident["2"]] for x in C.objects],
                           "eta": [[x, "→".join([x, "2"]) + ":" + "0" * int(x)]
                                    for x in C.objects]}},
    }
    assert all(u[1] in const2[u[0]] for u in out["monad-unit"]["monads"]["bad"]["eta"])
    out["monad-morphism-unit"] = {
        "notes": "The point 2 of the identity monad with the swap as its structure map.",
        "categories": {"FinSet≤2": full},
        "functors": {"pt2": {"src": "@terminal", "dst": "FinSet≤2", "objects": [[[], "2"]],
                             "morphisms": [[[], ident["2"]]]}},
        "monads": {"I": {"category": "FinSet≤2", "endofunctor": "@id:FinSet≤2",
                         "mu": [[x, ident[x]] for x in C.objects],
                         "eta": [[x, ident[x]] for x in C.objects]}},
        "monad_morphisms": {"point2": {"kind": "V", "src": "@trivial", "dst": "I",
                                       "functor": "pt2", "chi": [[[], swap]]}},
    }
    out["pseudomonoid-unit"] = {
        "notes": "m(x, y) = y on the 3-chain with unit 0: the right unitor is not "
                 "invertible.",
        "categories": {"C3": poset_doc(fx.chain(3))},
        "pseudomonoids": {"right": {"category": "C3", "unit": "0",
                                    "table": [[x, y, y] for x in "012" for y in "012"]}},
    }
    P = fx.powerset()
    out["duoidal-orientation"] = {
        "notes": "Union taken as the horizontal structure and the product as the "
                 "vertical one: the interchange comparisons do not exist.",
        "categories": {"PZ2": poset_doc(P)},
        "pseudomonoids": {
            "union": {"category": "PZ2", "table": table(fx.powerset_union(P), fx.SUBSETS),
                      "unit": fx.EMPTY},
            "times": {"category": "PZ2", "table": table(fx.powerset_times(P), fx.SUBSETS),
                      "unit": fx.E},
        },
        "duoidals": {"flipped": {"horizontal": "union", "vertical": "times"}},
    }
    D = fx.diamond()
    mon = fx.diamond_monoidal()
    out["oidal-opmonoidal"] = {
        "notes": "x join a declared opmonoidal for the join: t(bottom) = a is not "
                 "below the unit.",
        "categories": {"D": poset_doc(D)},
        "pseudomonoids": {"join": {"category": "D", "table": table(mon.pm_mon, fx.DIAMOND),
                                   "unit": fx.BOT}},
        "monads": {"t": closure("D", mon.monad, fx.DIAMOND)},
        "oidal_monads": {"bad": {"monad": "t", "shape": [0, 1], "opmonoidal": "join"}},
    }
    out["square-edge"] = {
        "notes": "A square of identity monads whose right edge carries the swap of 2 "
                 "as its structure map.",
        "categories": {"FinSet≤2": full},
        "monads": {"I": out["monad-morphism-unit"]["monads"]["I"]},
        "monad_morphisms": {"twisted": {"kind": "V", "src": "I", "dst": "I",
                                        "functor": "@id:FinSet≤2",
                                        "chi": [[x, swap if x == "2" else ident[x]]
                                                for x in C.objects]}},
        "squares": {"bad": {"top": "@id_h:I", "bottom": "@id_h:I", "left": "@id_v:I",
                            "right": "twisted",
                            "body": [[x, ident[x]] for x in C.objects]}},
    }
    out["cell-naturality"] = {
        "notes": "A square of identity functors whose body is the swap at 2.",
        "categories": {"FinSet≤2": full},
        "cells": {"bad": {"top": "@id:FinSet≤2", "bottom": "@id:FinSet≤2",
                          "left": "@id:FinSet≤2", "right": "@id:FinSet≤2",
                          "body": [[x, swap if x == "2" else ident[x]] for x in C.objects]}},
    }
    for name, doc in out.items():
        write(f"perturbations/{name}", {f"{name}.json": doc})


def main():
    if ROOT.exists():
        shutil.rmtree(ROOT)
    chain3()
    diamond()
    powerset()
    finset2()
    perturbations()


if __name__ == "__main__":
    main()
