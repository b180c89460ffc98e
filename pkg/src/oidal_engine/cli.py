"""Command line entry point: validate fixtures, build Eilenberg-Moore data and
liftings, and run the law suites, emitting deterministic JSON reports.

Exit codes: 0 when every claim holds, 1 when some law fails, 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from .colim import cocones, coequalizer, is_universal
from .dblcat import (
    EXACT, FAIL, UPTO, K, LawEntry, adjunction_report, mnd_laws, sqr_laws,
    triangle_identities,
)
from .em import em, lemma_V_outcome, unit_coeq_check, validate_em_bundle
from .fincat import (
    CategoryError, SizeCapExceeded, ValidationReport, render, size_limit, symmetry_laws,
)
from .fixture_io import (
    FixtureError, FixtureSet, bundled_names, load, resolve_path, validate_item,
)
from .oidal import (
    ShapeError, lift_along_f, lift_along_f_squares, lift_along_u, lift_along_u_squares,
    lift_duoidal, lift_square_mode, validate_duoidal, validate_pseudomonoid,
)

COMMANDS = ("check", "em", "lift", "laws", "coeq", "report")
SUITES = ("sqr", "mnd", "K", "adjunction")


class InputError(Exception):
    pass


@dataclass
class Report:
    command: str
    suite: str = ""
    entries: list = field(default_factory=list)
    data: dict = field(default_factory=dict)
    timing: dict = field(default_factory=dict)

    def add(self, entry: LawEntry) -> None:
        self.entries.append(entry)

    def extend(self, prefix: str, entries) -> None:
        for e in entries:
            self.entries.append(LawEntry(f"{prefix}.{e.claim}", e.status, e.witness, e.detail))

    def add_report(self, claim: str, rep: ValidationReport) -> None:
        """One exact entry, or one failing entry per violated axiom."""
        if rep.ok:
            self.add(LawEntry(claim, EXACT))
            return
        seen = set()
        for v in rep.violations:
            if v.axiom in seen:
                continue
            seen.add(v.axiom)
            self.add(LawEntry(f"{claim}.{v.axiom}", FAIL, v.witness, v.detail))

    def ok(self, strict_iso: bool = False) -> bool:
        bad = {FAIL, UPTO} if strict_iso else {FAIL}
        return not any(e.status in bad for e in self.entries)

    def to_json(self, strict_iso: bool = False, timing: bool = False) -> dict:
        entries = sorted(self.entries, key=lambda e: e.claim)
        counts = {EXACT: 0, UPTO: 0, FAIL: 0}
        for e in entries:
            counts[e.status] += 1
        out = {
            "command": self.command,
            "suite": self.suite,
            "strict_iso": strict_iso,
            "ok": self.ok(strict_iso),
            "summary": counts,
            "entries": [e.to_json() for e in entries],
        }
        if strict_iso and counts[UPTO]:
            out["strict_iso_failures"] = [
                {"claim": e.claim, "reason": "holds only after conjugation by the canonical "
                                             "comparison isomorphisms"}
                for e in entries if e.status == UPTO]
        if self.data:
            out["data"] = self.data
        if timing:
            out["timing"] = {k: round(v, 3) for k, v in self.timing.items()}
        return out


# --- fixture selection -------------------------------------------------------

def _fixture_sets(spec: str | None) -> list[tuple[str, FixtureSet]]:
    names = [spec] if spec else bundled_names()
    out = []
    for n in names:
        path = resolve_path(n)
        out.append((path.name, load(path, validate=False)))
    return out


def _select(table: dict, selectors: dict, keys: tuple, what: str) -> dict:
    for k in keys:
        if k in selectors:
            name = selectors[k]
            if name not in table:
                raise InputError(f"no {what} named {name!r}")
            return {name: table[name]}
    return dict(table)


def _timed(report: Report, label: str, fn):
    t0 = time.perf_counter()
    try:
        return fn()
    finally:
        report.timing[label] = report.timing.get(label, 0.0) + time.perf_counter() - t0


# --- commands ----------------------------------------------------------------------

def run_check(report: Report, fixtures) -> None:
    for fname, fs in fixtures:
        for sec, name, obj in fs.items():
            if sec == "suites":
                continue
            rep = _timed(report, "validate", lambda: validate_item(sec, obj))
            report.add_report(f"check.{fname}.{sec}.{name}", rep)
        cats = [C for C in fs.categories.values() if C.arity <= 1]
        if cats and all(validate_item("categories", C).ok for C in cats):
            endos = [F for F in fs.functors.values() if validate_item("functors", F).ok]
            report.add_report(f"check.{fname}.symmetry",
                              _timed(report, "symmetry", lambda: symmetry_laws(cats, endos)))
        if fs.cells:
            report.add_report(f"check.{fname}.cells.laws",
                              _timed(report, "cells", lambda: sqr_laws(fs.cells.values())))


def _em_data(M) -> dict:
    B = em(M)
    E = B.em_cat
    return {
        "monad": M.name,
        "algebras": [{"name": render(p), "carrier": render(B.carrier(p)),
                      "action": render(B.action(p))} for p in E.objects],
        "morphisms": [{"name": render(f), "src": render(E.src(f)), "dst": render(E.dst(f)),
                       "underlying": render(B.forgetful.mor(f))} for f in E.morphisms],
        "free": [[render(x), render(B.free.obj(x))] for x in M.base.objects],
        "forgetful": [[render(p), render(B.forgetful.obj(p))] for p in E.objects],
    }


def run_em(report: Report, fixtures, selectors: dict) -> None:
    for fname, fs in fixtures:
        monads = _select(fs.monads, selectors, ("t", "monad"), "monad")
        for name in sorted(monads):
            M = monads[name]
            rep = validate_item("monads", M)
            report.add_report(f"em.{fname}.{name}.monad", rep)
            if not rep.ok:
                continue
            _timed(report, "em", lambda: em(M))
            report.data.setdefault(fname, {})[name] = _em_data(M)
            report.add_report(f"em.{fname}.{name}.bundle", validate_em_bundle(em(M)))
            report.add_report(f"em.{fname}.{name}.unit-coequalizer", unit_coeq_check(M))
            report.add_report(f"em.{fname}.{name}.triangles", triangle_identities(M))
        for name, m in sorted(fs.monad_morphisms.items()):
            if m.kind != "V" or not m.validate().ok:
                continue
            status, wit = lemma_V_outcome(m)
            report.add(LawEntry(f"em.{fname}.linton.{name}", status, wit))


def _pm_data(L) -> dict:
    E = L.base
    return {
        "objects": [render(p) for p in E.objects],
        "unit": render(L.u.obj(())),
        "table": [[render(p), render(q), render(L.m.obj((p, q)))]
                  for p in E.objects for q in E.objects],
    }


def _oidal_for(fs: FixtureSet, selectors: dict, mode: str) -> dict:
    table = fs.oidal_monads
    if "t" in selectors or "oidal" in selectors:
        name = selectors.get("oidal", selectors.get("t"))
        hits = {k: v for k, v in table.items() if k == name or v.monad.name == name}
        if not hits:
            raise InputError(f"no oidal monad named {name!r}")
        return hits
    need = {"u": lambda s: s[1], "f": lambda s: s[0], "duoidal": lambda s: s == (1, 1)}[mode]
    return {k: v for k, v in table.items() if need(v.shape)}


def run_lift(report: Report, fixtures, selectors: dict, mode: str) -> None:
    if mode not in ("u", "f", "duoidal"):
        raise InputError("lift needs --mode u, f or duoidal")
    for fname, fs in fixtures:
        for name, OM in sorted(_oidal_for(fs, selectors, mode).items()):
            claim = f"lift.{mode}.{fname}.{name}"
            rep = validate_item("oidal_monads", OM)
            report.add_report(f"{claim}.input", rep)
            if not rep.ok:
                continue
            if mode == "u":
                L = _timed(report, "lift", lambda: lift_along_u(OM, validate=False))
                report.add_report(f"{claim}.pseudomonoid", validate_pseudomonoid(L))
                report.add_report(f"{claim}.squares", lift_along_u_squares(OM))
                report.data.setdefault(fname, {})[name] = _pm_data(L)
            elif mode == "f":
                L = _timed(report, "lift", lambda: lift_along_f(OM, validate=False))
                report.add_report(f"{claim}.pseudomonoid", validate_pseudomonoid(L))
                rep = lift_along_f_squares(OM)
                if rep.ok:
                    report.add(LawEntry(f"{claim}.squares", lift_square_mode(OM)))
                else:
                    report.add_report(f"{claim}.squares", rep)
                report.data.setdefault(fname, {})[name] = _pm_data(L)
            else:
                D = _timed(report, "lift", lambda: lift_duoidal(OM, validate=False))
                report.add_report(f"{claim}.duoidal", validate_duoidal(D))
                E = D.pm_h.base
                report.data.setdefault(fname, {})[name] = {
                    "horizontal": _pm_data(D.pm_h),
                    "vertical": _pm_data(D.pm_v),
                    "xi": [[render(x), render(D.xi[x])] for x in D.xi.base.objects],
                    "xi0": render(D.xi0[()]),
                    "xi_0": render(D.xi_0[()]),
                    "xi00": render(D.xi00[()]),
                    "objects": [render(p) for p in E.objects],
                }


def _suites(fs: FixtureSet, selectors: dict) -> dict:
    return _select(fs.suites, selectors, ("suite",), "suite")


def run_laws(report: Report, fixtures, selectors: dict, suite: str) -> None:
    if suite not in SUITES:
        raise InputError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
    report.suite = suite
    for fname, fs in fixtures:
        if suite == "sqr":
            if fs.cells:
                report.add_report(f"laws.sqr.{fname}",
                                  _timed(report, "sqr", lambda: sqr_laws(fs.cells.values())))
            continue
        suites = _suites(fs, selectors)
        if suite == "mnd":
            squares = list(fs.squares.values())
            for s in suites.values():
                squares.extend(x for x in s.squares if x not in squares)
            if squares:
                report.add_report(f"laws.mnd.{fname}",
                                  _timed(report, "mnd", lambda: mnd_laws(squares)))
            continue
        for sname, S in sorted(suites.items()):
            if suite == "K":
                res = _timed(report, "K", lambda: K(S))
                report.extend(f"laws.{fname}.{sname}", res.law_report)
            else:
                rep = _timed(report, "adjunction", lambda: adjunction_report(
                    S.monads, S.vmors, S.squares))
                report.add_report(f"laws.adjunction.{fname}.{sname}", rep)


def run_coeq(report: Report, fixtures, operands: list) -> None:
    if len(fixtures) != 1 or len(operands) != 3:
        raise InputError("coeq needs one fixture and the operands CATEGORY F G")
    fname, fs = fixtures[0]
    cname, f, g = operands
    if cname not in fs.categories:
        raise InputError(f"no category named {cname!r}")
    C = fs.categories[cname]
    for m in (f, g):
        if not C.has_morphism(m):
            raise InputError(f"no morphism {m!r} in {cname}")
    if C.src(f) != C.src(g) or C.dst(f) != C.dst(g):
        raise InputError(f"{f!r} and {g!r} are not parallel")
    claim = f"coeq.{fname}.{cname}"
    cands = cocones(C, f, g)
    try:
        e = coequalizer(C, f, g)
    except SizeCapExceeded:
        raise
    except CategoryError as exc:
        report.add(LawEntry(claim, FAIL, (f, g), str(exc)))
        report.data = {"cocones": len(cands)}
        return
    status = EXACT if is_universal(C, f, g, e, cands) else FAIL
    report.add(LawEntry(claim, status, () if status == EXACT else (f, g)))
    report.data = {"apex": render(e.apex), "leg": render(e.leg), "cocones": len(cands)}


def run(command: str, fixture: str | None = None, mode: str | None = None,
        suite: str | None = None, args=(), max_size: int | None = None) -> Report:
    """Run a command and return its report. Raises InputError, FixtureError or
    SizeCapExceeded on bad input."""
    if command not in COMMANDS:
        raise InputError(f"unknown command {command!r}")
    selectors, operands = {}, []
    for a in args:
        if "=" in a and command != "coeq":
            k, v = a.split("=", 1)
            selectors[k] = v
        elif fixture is None and not operands and _is_fixture(a):
            fixture = a
        else:
            operands.append(a)
    if operands and command != "coeq":
        raise InputError(f"no fixture directory {operands[0]!r}")
    report = Report(command, suite or "")
    with size_limit(max_size):
        fixtures = _timed(report, "load", lambda: _fixture_sets(fixture))
        if command == "check":
            run_check(report, fixtures)
        elif command == "em":
            run_em(report, fixtures, selectors)
        elif command == "lift":
            run_lift(report, fixtures, selectors, mode or "")
        elif command == "laws":
            run_laws(report, fixtures, selectors, suite or "K")
        elif command == "coeq":
            run_coeq(report, fixtures, operands)
        else:
            run_check(report, fixtures)
            run_em(report, fixtures, selectors)
            for m in ("u", "f", "duoidal"):
                run_lift(report, fixtures, {}, m)
            for s in SUITES:
                run_laws(report, fixtures, selectors, s)
            report.suite = "all"
            report.data = {}
    return report


def _is_fixture(a: str) -> bool:
    try:
        resolve_path(a)
        return True
    except FixtureError:
        return False


def build_parser() -> argparse.ArgumentParser:
    summary = " ".join(__doc__.split("\n\n")[0].split())
    p = argparse.ArgumentParser(prog="oidal-engine", description=summary)
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("args", nargs="*",
                   help="fixture name, key=value selectors (t=, oidal=, suite=) "
                        "or coeq operands CATEGORY F G")
    p.add_argument("--fixture", help="fixture directory or bundled fixture name; "
                                     "default: every bundled fixture")
    p.add_argument("--mode", choices=("u", "f", "duoidal"), help="lifting mode for lift")
    p.add_argument("--suite", choices=SUITES, help="law suite for laws (default K)")
    p.add_argument("--strict-iso", action="store_true",
                   help="count claims that hold only up to canonical isomorphism as failures")
    p.add_argument("--max-size", type=int, help="morphism cap for constructed categories")
    p.add_argument("--out", help="write the JSON report to this file")
    p.add_argument("--timing", action="store_true", help="include phase timings in the report")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_intermixed_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        report = run(ns.command, ns.fixture, ns.mode, ns.suite, ns.args, ns.max_size)
    except (InputError, FixtureError, SizeCapExceeded, ShapeError) as exc:
        print(f"oidal-engine: error: {exc}", file=sys.stderr)
        return 2
    text = json.dumps(report.to_json(ns.strict_iso, ns.timing), ensure_ascii=False,
                      indent=2, sort_keys=True) + "\n"
    if ns.out:
        Path(ns.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0 if report.ok(ns.strict_iso) else 1


if __name__ == "__main__":
    sys.exit(main())
