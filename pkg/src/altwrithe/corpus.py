"""Named diagram collections: loading, batch profiling and collision reports."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from itertools import combinations

from .diagram import DiagramError, ParseError, ValidationFailed, parse_pd
from .invariants import InvariantProfile, profile
from .locks import ROTATION

BUNDLED = "alternating_knots_9.tsv"


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    pd: str
    line: int = 0


def parse_corpus(text: str) -> list[CorpusEntry]:
    """One ``name<TAB>pd`` entry per line; ``#`` lines and blank lines are skipped."""
    entries = []
    seen: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        name, sep, pd = raw.partition("\t")
        if not sep:
            raise ParseError(f"line {lineno}: expected name<TAB>pd-code")
        name = name.strip()
        if name in seen:
            raise ParseError(f"line {lineno}: name {name!r} already used on line {seen[name]}")
        seen[name] = lineno
        entries.append(CorpusEntry(name, pd.strip(), lineno))
    return entries


def data_text(filename: str) -> str:
    return resources.files("altwrithe").joinpath("data", filename).read_text(encoding="utf-8")


def bundled_corpus() -> list[CorpusEntry]:
    """Alternating prime knots through 9 crossings, one diagram each."""
    return parse_corpus(data_text(BUNDLED))


@dataclass
class CorpusReport:
    profiles: dict[str, InvariantProfile] = field(default_factory=dict)
    errors: dict[str, str] = field(default_factory=dict)
    collisions: list[tuple[str, str]] = field(default_factory=list)


def _profile_entry(entry: CorpusEntry) -> tuple[str, InvariantProfile | None, str | None]:
    try:
        return entry.name, profile(parse_pd(entry.pd, entry.name)), None
    except ValidationFailed as exc:
        return entry.name, None, "; ".join(exc.report.failures)
    except DiagramError as exc:
        return entry.name, None, str(exc)


def profile_corpus(entries: list[CorpusEntry], phi_mode: str = ROTATION,
                   jobs: int = 1) -> CorpusReport:
    """Profile every entry and list each unordered pair with equal profiles."""
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_profile_entry, entries, chunksize=8))
    else:
        results = [_profile_entry(e) for e in entries]
    report = CorpusReport()
    for name, prof, err in sorted(results, key=lambda r: r[0]):
        if err is None:
            report.profiles[name] = prof
        else:
            report.errors[name] = err
    # equal documents are exactly equal profiles under the chosen mode
    groups: dict[str, list[str]] = {}
    for name, prof in report.profiles.items():
        key = json.dumps(prof.to_document(phi_mode), sort_keys=True)
        groups.setdefault(key, []).append(name)
    for names in groups.values():
        report.collisions.extend(combinations(sorted(names), 2))
    report.collisions.sort()
    return report
