"""Command-line interface.

Subcommands: enumerate, identify, check-graph, check-table, make, quotient,
fixture.  Every command prints a human-readable report by default and a
schema-versioned JSON document with --json; identify-style commands accept
--expect NAME to assert the result for CI use.

Exit codes: 0 success, 2 parse/usage error, 3 enumeration or closure cap
exceeded, 4 --expect mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from importlib import resources

from . import cosets, families, graphs, tables
from .cosets import CapExceeded
from .groups import (
    Fingerprint,
    Group,
    identify,
    normal_closure,
    quotient as group_quotient,
)
from .words import ParseError, format_presentation, parse_presentation, parse_word

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_EXPECT = 4


class ExpectMismatch(Exception):
    def __init__(self, expected: str, actual: str):
        super().__init__(f"expected {expected!r}, got {actual!r}")


def default_max_cosets() -> int:
    value = os.environ.get("CAYLEY_MAX_COSETS")
    if value is None:
        return cosets.DEFAULT_MAX_COSETS
    try:
        return int(value)
    except ValueError:
        raise ParseError(f"CAYLEY_MAX_COSETS must be an integer, got {value!r}", 0)


def fingerprint_json(fp: Fingerprint) -> dict:
    return {
        "order": fp.order,
        "abelian": fp.abelian,
        "exponent": fp.exponent,
        "order_histogram": [list(pair) for pair in fp.order_histogram],
        "center_order": fp.center_order,
        "derived_order": fp.derived_order,
    }


def check_expect(expected: str | None, actual: str):
    if expected is not None and expected != actual:
        raise ExpectMismatch(expected, actual)


def group_report(G: Group) -> dict:
    ident = identify(G)
    return {
        "order": G.order,
        "identified": ident.describe(),
        "fingerprint": fingerprint_json(G.fingerprint()),
    }


# ---------------------------------------------------------------------------
# subcommand handlers: each returns (report dict, human lines)
# ---------------------------------------------------------------------------


def cmd_enumerate(args) -> tuple[dict, list[str]]:
    presentation = parse_presentation(args.presentation)
    cap = args.max_cosets if args.max_cosets else default_max_cosets()
    table = cosets.todd_coxeter(presentation, cap)
    G = cosets.group_from_coset_table(table)
    report = {
        "presentation": format_presentation(presentation),
        "status": "closed",
        **group_report(G),
    }
    check_expect(args.expect, report["identified"])
    human = [
        f"presentation: {report['presentation']}",
        f"order: {G.order}",
        f"identified: {report['identified']}",
    ]
    return report, human


def cmd_identify(args) -> tuple[dict, list[str]]:
    if args.presentation:
        presentation = parse_presentation(args.presentation)
        G = cosets.group_from_presentation(presentation, default_max_cosets())
        report = {"source": "presentation", **group_report(G)}
    elif args.graph:
        graph = graphs.load_graph_json(_read(args.graph))
        analysis = graphs.analyze(graph, max_cosets=default_max_cosets())
        report = {
            "source": "graph",
            "is_cayley": analysis.is_cayley,
            "order": analysis.presented_order,
            "identified": analysis.presented_name,
            "fingerprint": fingerprint_json(analysis.presented_group.fingerprint()),
        }
    else:
        result = tables.group_from_table(tables.parse_table(_read(args.table)))
        if result.ok:
            report = {"source": "table", **group_report(result.group)}
        else:
            report = {
                "source": "table",
                "identified": None,
                "rejected": result.rejection.describe(),
            }
            human = [f"not a group: {result.rejection.describe()}"]
            check_expect(args.expect, "not-a-group")
            return report, human
    check_expect(args.expect, report["identified"])
    human = [f"order: {report['order']}", f"identified: {report['identified']}"]
    if "is_cayley" in report:
        human.insert(0, f"cayley: {'yes' if report['is_cayley'] else 'no'}")
    return report, human


def _graph_report(name: str | None, analysis: graphs.GraphReport) -> dict:
    verdict = analysis.verdict
    report = {
        "nodes": len(verdict.color_perms[0]),
        "colors": [c for c in analysis.presentation.generators],
        "connected": verdict.connected,
        "transitive": verdict.transitive,
        "perm_group_order": verdict.perm_group_order,
        "perm_group_order_exceeds_nodes": verdict.order_exceeds_nodes,
        "perm_group_order_capped": verdict.order_capped,
        "is_cayley": verdict.is_cayley,
        "presentation": format_presentation(analysis.presentation),
        "presented_order": analysis.presented_order,
        "presented_group": analysis.presented_name,
        "acting_group": (
            analysis.acting_identification.describe()
            if analysis.acting_identification
            else None
        ),
        "fingerprint": fingerprint_json(analysis.presented_group.fingerprint()),
    }
    if name is not None:
        report = {"fixture": name, **report}
    return report


def _graph_human(report: dict) -> list[str]:
    order = report["perm_group_order"]
    if order is None:
        order_text = (
            f"> {report['nodes']} (early exit)"
            if not report["perm_group_order_capped"]
            else "cap exceeded"
        )
    else:
        order_text = str(order)
    lines = [
        f"nodes: {report['nodes']}",
        f"colors: {', '.join(report['colors'])}",
        f"connected: {'yes' if report['connected'] else 'no'}",
        f"permutation group order: {order_text}",
        f"cayley: {'yes' if report['is_cayley'] else 'no'}",
        f"presented group: {report['presented_group']} (order {report['presented_order']})",
    ]
    if report["acting_group"] is not None:
        lines.append(f"acting group: {report['acting_group']}")
    if report.get("fixture"):
        lines.insert(0, f"fixture: {report['fixture']}")
    return lines


def cmd_check_graph(args) -> tuple[dict, list[str]]:
    graph = graphs.load_graph_json(_read(args.file))
    analysis = graphs.analyze(
        graph, full_order=args.full_order, max_cosets=default_max_cosets()
    )
    report = _graph_report(None, analysis)
    if args.dot:
        _write(args.dot, graphs.export_dot(graph))
    check_expect(args.expect, report["presented_group"])
    return report, _graph_human(report)


def cmd_check_table(args) -> tuple[dict, list[str]]:
    t = tables.parse_table(_read(args.file))
    violation = tables.latin_check(t)
    identity = tables.identity_check(t)
    witness = tables.associativity_witness(t)
    result = tables.group_from_table(t)
    report = {
        "symbols": list(t.symbols),
        "order": t.order,
        "latin": "ok"
        if violation is None
        else {
            "kind": violation.kind,
            "index": violation.index,
            "symbol": violation.symbol,
        },
        "identity": identity,
        "associative": witness is None,
        "witness": list(witness) if witness else None,
        "witness_symbols": [t.symbols[i] for i in witness] if witness else None,
        "precheck": result.rejection.precheck if result.rejection else None,
        "group": result.identification.describe() if result.ok else None,
        "rejected": result.rejection.describe() if result.rejection else None,
    }
    human = [f"order: {t.order}"]
    if violation is None:
        human.append("latin square: yes")
    else:
        human.append(
            f"latin square: no ({violation.kind} {violation.index} repeats {violation.symbol!r})"
        )
    human.append(f"identity: {identity if identity else 'none'}")
    if witness:
        x, y, z = report["witness_symbols"]
        human.append(f"associative: no (({x}*{y})*{z} != {x}*({y}*{z}))")
    else:
        human.append("associative: yes")
    if report["precheck"]:
        human.append(f"precheck: {report['precheck']}")
    human.append(
        f"group: {report['group']}" if result.ok else f"rejected: {report['rejected']}"
    )
    check_expect(args.expect, report["group"] if result.ok else "not-a-group")
    return report, human


FAMILY_USAGE = (
    "cyclic n | abelian d1,d2,... | dihedral n | quaternion m | "
    "semidihedral m | semiabelian m | sdp m k | dq m | pauli q"
)


def _family_spec(family: str, params: list[str]) -> families.FamilySpec:
    kinds = {
        "cyclic": ("cyclic", 1),
        "abelian": ("abelian", None),
        "dihedral": ("dihedral", 1),
        "quaternion": ("quaternion", 1),
        "semidihedral": ("semidihedral", 1),
        "semiabelian": ("semiabelian", 1),
        "sdp": ("sdp", 2),
        "dq": ("diquaternion", 1),
        "pauli": ("pauli", 1),
    }
    if family not in kinds:
        raise ParseError(f"unknown family {family!r} (use: {FAMILY_USAGE})", 0)
    kind, arity = kinds[family]
    if kind == "abelian":
        if len(params) != 1:
            raise ParseError("abelian takes one comma-separated factor list", 0)
        values = tuple(int(x) for x in params[0].split(","))
        return families.FamilySpec("abelian", values)
    if len(params) != arity:
        raise ParseError(f"{family} takes {arity} integer argument(s)", 0)
    return families.FamilySpec(kind, tuple(int(x) for x in params))


def cmd_make(args) -> tuple[dict, list[str]]:
    spec = _family_spec(args.family, args.params)
    G = families.make(spec)
    report = {
        "family": spec.kind,
        "params": list(spec.params),
        **group_report(G),
        "generators": [name for name, _ in G.generators],
    }
    human = [
        f"family: {spec.kind}({', '.join(str(p) for p in spec.params)})",
        f"order: {G.order}",
        f"identified: {report['identified']}",
    ]
    if args.table:
        text = tables.render_table(G)
        report["table"] = text
        human.append(text.rstrip("\n"))
    if args.dot:
        _write(args.dot, graphs.export_dot(graphs.build_cayley_graph(G)))
    check_expect(args.expect, report["identified"])
    return report, human


def cmd_quotient(args) -> tuple[dict, list[str]]:
    presentation = parse_presentation(args.presentation)
    G = cosets.group_from_presentation(presentation, default_max_cosets())
    assignment = {i: el for i, (_, el) in enumerate(G.generators)}
    elements = []
    for text in args.normal.split(","):
        word = parse_word(text.strip(), presentation.generators)
        value = G.identity
        for gen, sign in word:
            el = assignment[gen]
            value = G.table[value][el if sign > 0 else G.inverse[el]]
        elements.append(value)
    N = normal_closure(G, elements)
    Q = group_quotient(G, N)
    report = {
        "presentation": format_presentation(presentation),
        "group_order": G.order,
        "normal_words": [w.strip() for w in args.normal.split(",")],
        "normal_closure_order": len(N.members),
        "quotient_order": Q.order,
        "identified": identify(Q).describe(),
    }
    human = [
        f"group order: {G.order}",
        f"normal closure order: {len(N.members)}",
        f"quotient order: {Q.order}",
        f"identified: {report['identified']}",
    ]
    if args.table:
        text = tables.render_table(Q)
        report["table"] = text
        human.append(text.rstrip("\n"))
    check_expect(args.expect, report["identified"])
    return report, human


def cmd_fixture(args) -> tuple[dict, list[str]]:
    if args.analyze_all:
        names = graphs.fixture_names()
        cap = default_max_cosets()

        def run(name: str):
            analysis = graphs.analyze(graphs.fixture(name), max_cosets=cap)
            return _graph_report(name, analysis)

        with ThreadPoolExecutor(max_workers=4) as pool:
            results = list(pool.map(run, names))
        report = {"fixtures": {r["fixture"]: r for r in results}}
        human = []
        for r in results:
            verdict = "cayley" if r["is_cayley"] else "not cayley"
            human.append(
                f"{r['fixture']}: {verdict}; presented {r['presented_group']}"
                f" (order {r['presented_order']})"
            )
        return report, human
    if not args.name:
        raise ParseError("fixture name required (or use --analyze-all)", 0)
    if args.name not in graphs.fixture_names():
        known = ", ".join(graphs.fixture_names())
        raise ParseError(f"unknown fixture {args.name!r} (known: {known})", 0)
    graph = graphs.fixture(args.name)
    if args.dot:
        _write(args.dot, graphs.export_dot(graph))
    if not args.analyze:
        raw = (
            resources.files("cayleykit")
            .joinpath("fixtures", f"{args.name}.json")
            .read_text()
        )
        return {"fixture": args.name, "graph": json.loads(raw)}, [raw.rstrip("\n")]
    analysis = graphs.analyze(graph, max_cosets=default_max_cosets())
    report = _graph_report(args.name, analysis)
    check_expect(args.expect, report["presented_group"])
    return report, _graph_human(report)


# ---------------------------------------------------------------------------


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}", 0)


def _write(path: str, text: str):
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cayleykit",
        description="Construct, analyze, and identify finite groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, expect=True):
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        if expect:
            p.add_argument(
                "--expect",
                metavar="NAME",
                help="exit 4 unless the identified name equals NAME",
            )

    p = sub.add_parser("enumerate", help="enumerate a presentation and identify it")
    p.add_argument("presentation", help='e.g. "<r,f | r^4=f^2=1, r f r=f>"')
    p.add_argument("--max-cosets", type=int, default=None)
    add_common(p)
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("identify", help="identify a presentation, graph, or table")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--presentation", metavar="P")
    source.add_argument("--graph", metavar="FILE")
    source.add_argument("--table", metavar="FILE")
    add_common(p)
    p.set_defaults(handler=cmd_identify)

    p = sub.add_parser("check-graph", help="full Cayley-graph analysis of a graph file")
    p.add_argument("file")
    p.add_argument("--dot", metavar="OUT", help="also write a DOT rendering")
    p.add_argument(
        "--full-order",
        action="store_true",
        help="report the exact permutation-group order (capped at 10^6)",
    )
    add_common(p)
    p.set_defaults(handler=cmd_check_graph)

    p = sub.add_parser("check-table", help="group-axioms report for a table file")
    p.add_argument("file")
    add_common(p)
    p.set_defaults(handler=cmd_check_table)

    p = sub.add_parser("make", help="construct a named family member")
    p.add_argument("family", help=FAMILY_USAGE)
    p.add_argument("params", nargs="*", help="family parameters")
    p.add_argument("--table", action="store_true", help="print the Cayley table")
    p.add_argument("--dot", metavar="OUT", help="write the Cayley graph as DOT")
    add_common(p)
    p.set_defaults(handler=cmd_make)

    p = sub.add_parser("quotient", help="quotient by the normal closure of words")
    p.add_argument("--presentation", required=True, metavar="P")
    p.add_argument("--normal", required=True, metavar="W1,W2,...")
    p.add_argument("--table", action="store_true", help="print the quotient table")
    add_common(p)
    p.set_defaults(handler=cmd_quotient)

    p = sub.add_parser("fixture", help="emit or analyze a bundled puzzle graph")
    p.add_argument(
        "name",
        nargs="?",
        help="petersen, ring14, ring18, mirror16, mirror32, flower16_fwd, "
        "flower16_rev, twist32_k3, twist32_k5",
    )
    p.add_argument("--analyze", action="store_true")
    p.add_argument("--analyze-all", action="store_true")
    p.add_argument("--dot", metavar="OUT")
    add_common(p)
    p.set_defaults(handler=cmd_fixture)

    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    warnings: list[str] = []
    try:
        report, human = args.handler(args)
        code = EXIT_OK
    except ExpectMismatch as exc:
        print(f"expectation failed: {exc}", file=sys.stderr)
        return EXIT_EXPECT
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        document = {
            "schema_version": SCHEMA_VERSION,
            "command": argv,
            "report": report,
            "warnings": warnings,
            "timing_ms": int((time.perf_counter() - started) * 1000),
        }
        print(json.dumps(document, indent=2, sort_keys=True))
    else:
        for line in human:
            print(line)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
