"""Command-line interface: ``altwrithe <subcommand>``.

Exit codes: 0 success, 1 a check found a problem (corpus collision, flip
invariance violation), 2 parse error, 3 validation failure, 4 some corpus
entries were skipped.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .corpus import bundled_corpus, parse_corpus, profile_corpus
from .diagram import ParseError, ValidationFailed, emit_pd, parse_diagram, require_valid
from .flips import run_flip_trials
from .invariants import FIELDS, differing_fields, format_profile, profile
from .locks import PHI_MODES, ROTATION
from .rational import (RationalError, RationalLink, is_strongly_invertible,
                       odd_continued_fraction, orientation_variants)
from .seifert import seifert_graph, smooth, to_dot

EXIT_OK, EXIT_PROBLEM, EXIT_PARSE, EXIT_INVALID, EXIT_PARTIAL = 0, 1, 2, 3, 4
SEED_ENV = "ALTWRITHE_SEED"


class _Exit(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _Exit(EXIT_PARSE, f"cannot read {path}: {exc.strerror}") from exc


def _load(path: str, args):
    text = _read(path)
    try:
        d = parse_diagram(text, args.format, name=None if path == "-" else Path(path).stem)
    except ParseError as exc:
        raise _Exit(EXIT_PARSE, f"{path}: parse error: {exc}") from exc
    try:
        require_valid(d)
    except ValidationFailed as exc:
        raise _Exit(EXIT_INVALID, f"{path}: validation failed\n{_report_text(exc.report)}") from exc
    return d


def _report_text(report) -> str:
    lines = [f"connected: {str(report.connected).lower()}",
             f"alternating: {str(report.alternating).lower()}",
             f"reduced: {str(report.reduced).lower()}"]
    lines += [f"failure: {f}" for f in report.failures]
    return "\n".join(lines)


def _emit(args, doc: dict) -> None:
    if args.output == "structured":
        print(json.dumps(doc, separators=(", ", ": ")))
    else:
        for key, value in doc.items():
            if isinstance(value, (list, dict)):
                value = json.dumps(value, separators=(",", ":"))
            elif isinstance(value, bool):
                value = str(value).lower()
            print(f"{key}: {value}")


# ---------------------------------------------------------------------------


def cmd_compute(args) -> int:
    d = _load(args.input, args)
    header = {"name": d.name} if d.name else {}
    sys.stdout.write(format_profile(profile(d), args.output, args.phi_mode, header))
    return EXIT_OK


def cmd_compare(args) -> int:
    a, b = profile(_load(args.first, args)), profile(_load(args.second, args))
    diff = set(differing_fields(a, b, args.phi_mode))
    doc = {name: "different" if name in diff else "equal" for name in FIELDS}
    doc["verdict"] = "DISTINGUISHED" if diff else "NOT DISTINGUISHED"
    _emit(args, doc)
    return EXIT_OK


def cmd_corpus(args) -> int:
    try:
        entries = bundled_corpus() if args.corpus is None else parse_corpus(_read(args.corpus))
    except ParseError as exc:
        raise _Exit(EXIT_PARSE, f"corpus: {exc}") from exc
    report = profile_corpus(entries, args.phi_mode, args.jobs)
    if args.output == "structured":
        print(json.dumps({
            "entries": len(entries),
            "profiled": len(report.profiles),
            "skipped": report.errors,
            "collisions": [list(p) for p in report.collisions],
        }, separators=(", ", ": ")))
    else:
        for name, err in report.errors.items():
            print(f"skipped {name}: {err}")
        for a, b in report.collisions:
            print(f"NOT DISTINGUISHED: {a} {b}")
        print(f"entries: {len(entries)}  profiled: {len(report.profiles)}  "
              f"skipped: {len(report.errors)}  collisions: {len(report.collisions)}")
    if report.errors:
        return EXIT_PARTIAL
    return EXIT_PROBLEM if report.collisions else EXIT_OK


def cmd_graph(args) -> int:
    d = _load(args.input, args)
    sys.stdout.write(to_dot(seifert_graph(smooth(d), d)))
    return EXIT_OK


def cmd_rational(args) -> int:
    try:
        p, q = (int(x) for x in args.fraction.split("/"))
        cf = odd_continued_fraction(p, q)
    except (ValueError, RationalError) as exc:
        raise _Exit(EXIT_PARSE, f"bad fraction {args.fraction!r}: {exc}") from exc
    try:
        link = RationalLink.from_fraction(p, q)
    except RationalError as exc:
        raise _Exit(EXIT_INVALID, str(exc)) from exc
    doc = {"fraction": f"{p}/{q}", "cf": cf, "components": link.components}
    try:
        doc["strongly_invertible"] = is_strongly_invertible(p, q)
    except RationalError as exc:
        doc["strongly_invertible"] = f"n/a ({exc})"
    if args.pd:
        doc["pd"] = emit_pd(link.diagram)
    if args.profiles and link.components == 2:
        for label, d in zip(("L1", "L2"), orientation_variants(link)):
            doc[label] = profile(d).to_document(args.phi_mode)
    _emit(args, doc)
    return EXIT_OK


def cmd_fliptest(args) -> int:
    seed = int(os.environ.get(SEED_ENV, args.seed))
    report = run_flip_trials(args.trials, args.steps, seed, args.min_vertices,
                             args.max_vertices, args.max_weight)
    doc = {"seed": seed, "trials": report.trials, "steps": report.steps,
           "skipped": report.skipped, "flips": report.by_kind,
           "violations": len(report.violations)}
    _emit(args, doc)
    for v in report.violations:
        print(f"violation: {v}", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_PROBLEM


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="altwrithe",
        description="Invariants of reduced alternating link diagrams from their Seifert graphs.")
    parser.add_argument("--format", choices=("pd", "native"), default="pd",
                        help="input diagram format (default: pd)")
    parser.add_argument("--phi-mode", choices=PHI_MODES, default=ROTATION,
                        help="cyclic equivalence used for lock vectors (default: rotation)")
    parser.add_argument("--output", choices=("text", "structured"), default="text",
                        help="text lines or one JSON document (default: text)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="print the invariant profile of a diagram")
    p.add_argument("input", help="diagram file, or - for standard input")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("compare", help="compare the profiles of two diagrams field by field")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("corpus", help="report pairs of corpus entries with equal profiles")
    p.add_argument("corpus", nargs="?", help="name<TAB>pd file (default: bundled knot table)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (default: 1)")
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("graph", help="print the signed Seifert graph in DOT")
    p.add_argument("input")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("rational", help="continued fraction, 4-plat and strong invertibility")
    p.add_argument("--fraction", required=True, metavar="P/Q")
    p.add_argument("--pd", action="store_true", help="also print the 4-plat PD code")
    p.add_argument("--profiles", action="store_true",
                   help="also print the profiles of both orientations of a two-component link")
    p.set_defaults(func=cmd_rational)

    p = sub.add_parser("fliptest", help="random Whitney flip walks checking invariance")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--steps", type=int, default=50, help="maximum steps per walk")
    p.add_argument("--min-vertices", type=int, default=4)
    p.add_argument("--max-vertices", type=int, default=20)
    p.add_argument("--max-weight", type=int, default=9)
    p.add_argument("--seed", type=int, default=0, help=f"overridden by ${SEED_ENV}")
    p.set_defaults(func=cmd_fliptest)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Exit as exc:
        print(str(exc), file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
