"""Command-line front end.

Exit codes: 0 when every requested check passes, 1 when a mathematical
property fails (a witness is printed), 2 for input, parse or validation
errors.  Human-readable reports go to standard output; JSON and DOT are
emitted only when requested.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import core, dsl, frames, ideals, spectrum, suites
from .errors import (
    AxiomViolation,
    ClosureViolation,
    DslSyntaxError,
    EmptySeed,
    GateNotMet,
    InvalidUnit,
    MvwError,
    NotACover,
    NotCommutative,
    OrderNotAntisymmetric,
    SchemaError,
    SizeBound,
    Trivial,
)

PASS, FAIL, USAGE = 0, 1, 2


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _load_all(path: str, check=True):
    return dsl.elaborate_file(_read(path), check=check)


def _load_one(path: str, check=True):
    rigs = _load_all(path, check=check)
    if len(rigs) != 1:
        raise DslSyntaxError(dsl.ParseDiagnostic(
            "error", 1, 1,
            f"{path} defines {len(rigs)} algebras; this command needs exactly one"))
    return rigs[0]


def _witness_names(rig, witness):
    return "(" + ", ".join(rig.element_name(v) for v in witness) + ")"


def _parse_elements(rig, text: str):
    parts = [p.strip() for p in text.split(",") if p.strip()]
    names = {rig.element_name(i): i for i in rig.elements()}
    out = []
    for part in parts:
        if part in names:
            out.append(names[part])
        elif part.isdigit() and int(part) < rig.size:
            out.append(int(part))
        else:
            raise DslSyntaxError(dsl.ParseDiagnostic(
                "error", 1, 1, f"unknown element {part!r}"))
    return out


# -- subcommands ----------------------------------------------------------------

def _cmd_check(args) -> int:
    rigs = _load_all(args.file, check=False)
    worst = PASS
    for rig in rigs:
        print(rig.describe())
        report = core.check_mv(rig)
        if rig.mul_table is not None and not args.mv_only:
            report = report.merged_with(core.check_mvw(rig))
        elif rig.mv_only:
            print("  (no product: MV axioms only)")
        for axiom in report.axioms:
            status = report.status(axiom)
            line = f"  {axiom} {status}"
            if status == "FAIL":
                count, samples = report.failures[axiom]
                shown = ", ".join(_witness_names(rig, w) for w in samples)
                line += f"  [{count} counterexamples: {shown}]"
            print(line)
        verdict = "PASS" if report.passed else "FAIL"
        print(f"result: {verdict}")
        if not report.passed:
            worst = FAIL
    return worst


def _cmd_ideals(args) -> int:
    rig = _load_one(args.file)
    found = ideals.enumerate_ideals(rig)
    rows = []
    for ideal in found:
        cls = ideals.classify_ideal(rig, ideal)
        if args.prime and not (cls.prime and ideal.proper):
            continue
        if args.mv_prime and not (cls.mv_prime and ideal.proper):
            continue
        if args.maximal and not (cls.maximal and ideal.proper):
            continue
        rows.append((ideal, cls))
    if args.json:
        import json
        doc = {"ideals": [sorted(i.members) for i, _ in rows]}
        print(json.dumps(doc, indent=2))
        return PASS
    print(rig.describe())
    for ideal, cls in rows:
        tags = []
        tags.append("proper" if cls.proper else "improper")
        if cls.prime:
            tags.append("prime")
        if cls.mv_prime:
            tags.append("mv-prime")
        if cls.maximal:
            tags.append("maximal")
        print(f"  {ideal.display()}  {' '.join(tags)}")
    print(f"{len(rows)} ideals")
    return PASS


def _cmd_quotient(args) -> int:
    rig = _load_one(args.file)
    members = set(_parse_elements(rig, args.ideal))
    ok, witness = ideals.is_ideal(rig, members)
    if not ok:
        clause, pair = witness
        raise DslSyntaxError(dsl.ParseDiagnostic(
            "error", 1, 1,
            f"{ideals.format_subset(rig, members)} is not an ideal "
            f"({clause} fails at {_witness_names(rig, pair)})"))
    q = ideals.quotient(rig, ideals.Ideal(rig, frozenset(members)))
    print(rig.describe())
    print(f"quotient by {q.ideal.display()} has {q.rig.size} classes")
    for c in q.rig.elements():
        cls = sorted(x for x in rig.elements() if q.projection[x] == c)
        print(f"  {q.rig.element_name(c)} = "
              f"{ideals.format_subset(rig, cls)}")
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(dsl.serialize(q))
        print(f"wrote {args.output}")
    return PASS


def _cmd_spec(args) -> int:
    rig = _load_one(args.file)
    space = spectrum.spec(rig)
    if args.json:
        print(dsl.serialize(space), end="")
        return PASS
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as handle:
            handle.write(spectrum.export_dot(space))
        print(f"wrote {args.dot}")
        return PASS
    print(rig.describe())
    for warning in space.warnings:
        print(f"  warning: {warning}")
    print(f"  {len(space.points)} prime ideal point(s)")
    for i in range(len(space.points)):
        print(f"    P{i} = {space.point_display(i)}")
    print(f"  {len(space.opens)} open set(s)")
    print(f"  T0: {'yes' if spectrum.is_t0(space) else 'no'}")
    print(f"  irreducible: {'yes' if spectrum.is_irreducible(space) else 'no'}")
    return PASS


def _cmd_filters(args) -> int:
    rig = _load_one(args.file)
    if args.json and not (args.frame or args.principal is not None):
        raise DslSyntaxError(dsl.ParseDiagnostic(
            "error", 1, 1, "--json needs --frame or --principal"))
    if args.principal is not None:
        elems = _parse_elements(rig, args.principal)
        if len(elems) != 1:
            raise DslSyntaxError(dsl.ParseDiagnostic(
                "error", 1, 1, "--principal takes a single element"))
        pf = frames.principal_pfilter(rig, elems[0])
        if args.json:
            print(dsl.serialize(pf), end="")
        else:
            print(rig.describe())
            print(f"  F_{rig.element_name(elems[0])} = {pf.display()}")
        return PASS
    bound = int(os.environ.get("MVW_SIZE_BOUND", frames.DEFAULT_FRAME_BOUND))
    if args.frame:
        fr = frames.frame(rig, bound=bound)
        if args.json:
            print(dsl.serialize(fr), end="")
            return PASS
        print(rig.describe())
        print(f"  {len(fr.pfilters)} P-filter(s)")
        for i, f in enumerate(fr.pfilters):
            print(f"    F{i} = {ideals.format_subset(rig, f)}")
        edges = fr.hasse_edges()
        print(f"  covering relation: "
              + (", ".join(f"F{i} < F{j}" for i, j in sorted(edges)) if edges else "none"))
        return PASS
    print(rig.describe())
    for a in rig.elements():
        pf = frames.principal_pfilter(rig, a)
        print(f"  F_{rig.element_name(a)} = {pf.display()}")
    return PASS


def _cmd_verify(args) -> int:
    if args.list:
        current = None
        for suite, name, desc in suites.listing():
            if suite != current:
                print(f"suite {suite}:")
                current = suite
            print(f"  {name}: {desc}")
        return PASS
    if not args.file:
        raise DslSyntaxError(dsl.ParseDiagnostic("error", 1, 1, "missing input file"))
    rig = _load_one(args.file)
    names = suites.SUITE_NAMES if args.suite == "all" else (args.suite,)
    for name in names:
        if name not in suites.SUITE_NAMES:
            raise DslSyntaxError(dsl.ParseDiagnostic(
                "error", 1, 1,
                f"unknown suite {name!r} (choose from {', '.join(suites.SUITE_NAMES)}, all)"))
    print(rig.describe())
    counts = {"PASS": 0, "FAIL": 0, "SKIPPED": 0}
    bound = int(os.environ.get("MVW_SIZE_BOUND", frames.DEFAULT_FRAME_BOUND))
    for suite in names:
        for result in suites.run_suite(rig, suite, frame_bound=bound):
            counts[result.status] += 1
            print(result.line())
    print(f"result: {counts['PASS']} passed, {counts['FAIL']} failed, "
          f"{counts['SKIPPED']} skipped")
    return PASS if counts["FAIL"] == 0 else FAIL


def _cmd_parse(args) -> int:
    text = _read(args.file)
    sources = dsl.parse(text)
    if args.emit_json:
        for rig in dsl.elaborate_file(text):
            print(dsl.serialize(rig), end="")
        return PASS
    for source in sources:
        kind = "builder" if source.builder is not None else "tables"
        print(f"parsed algebra {source.name} ({kind})")
    return PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mvw",
        description="Workbench for finite MV-algebras with product: check "
                    "axioms, compute ideals, quotients, spectra and P-filter "
                    "frames.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run the axiom checker on a definition file")
    p.add_argument("file")
    p.add_argument("--mv-only", action="store_true",
                   help="check only the MV axioms")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("ideals", help="enumerate and classify ideals")
    p.add_argument("file")
    p.add_argument("--prime", action="store_true", help="proper prime ideals only")
    p.add_argument("--mv-prime", action="store_true", help="proper MV-prime ideals only")
    p.add_argument("--maximal", action="store_true", help="maximal proper ideals only")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_ideals)

    p = sub.add_parser("quotient", help="quotient by an ideal")
    p.add_argument("file")
    p.add_argument("--ideal", required=True,
                   help="comma-separated ideal elements (names or indices)")
    p.add_argument("-o", "--output", help="write the quotient as JSON")
    p.set_defaults(fn=_cmd_quotient)

    p = sub.add_parser("spec", help="the prime spectrum and its topology")
    p.add_argument("file")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--dot", metavar="OUT", help="write the specialization order as DOT")
    g.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_spec)

    p = sub.add_parser("filters", help="principal P-filters and the frame")
    p.add_argument("file")
    p.add_argument("--principal", metavar="ELEM",
                   help="show the principal P-filter of one element")
    p.add_argument("--frame", action="store_true", help="enumerate all P-filters")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_filters)

    p = sub.add_parser("verify", help="run the law suites")
    p.add_argument("file", nargs="?")
    p.add_argument("--suite", default="all",
                   help="core, ideals, spectrum, locale, or all")
    p.add_argument("--list", action="store_true",
                   help="list every suite and check")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("parse", help="syntax-check a definition file")
    p.add_argument("file")
    p.add_argument("--emit-json", action="store_true",
                   help="emit the canonical JSON of each algebra")
    p.set_defaults(fn=_cmd_parse)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except OrderNotAntisymmetric as exc:
        print(f"FAIL: {exc}")
        return FAIL
    except AxiomViolation as exc:
        print(f"FAIL: {exc}")
        for axiom in exc.report.failed_axioms():
            _count, samples = exc.report.failures[axiom]
            shown = ", ".join(str(w) for w in samples)
            print(f"  {axiom} witnesses: {shown}")
        return FAIL
    except (DslSyntaxError, ClosureViolation, SchemaError, SizeBound,
            InvalidUnit, NotCommutative, GateNotMet, Trivial, EmptySeed,
            NotACover) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except MvwError as exc:
        print(f"FAIL: {exc}")
        return FAIL
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
