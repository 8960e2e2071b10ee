"""Oriented link diagrams: PD and native text formats, validation, mirror, reversal.

A crossing stores its four arcs counterclockwise starting from the incoming
under-strand, so slot 0 is the under-strand entering and slot 2 the
under-strand leaving. The sign fixes which of slots 1/3 carries the
incoming over-strand: slot 3 for a positive crossing, slot 1 for a
negative one.
"""

from __future__ import annotations

import re
from collections import Counter, defaultdict
from dataclasses import dataclass, field


class DiagramError(ValueError):
    """Raised for structurally invalid diagrams."""


class ParseError(DiagramError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ValidationFailed(DiagramError):
    """A diagram failed a precondition; carries the full report."""

    def __init__(self, report: ValidationReport):
        self.report = report
        super().__init__("; ".join(report.failures))


@dataclass(frozen=True)
class Crossing:
    id: int
    slots: tuple[int, int, int, int]
    sign: int

    @property
    def over_in_slot(self) -> int:
        return 3 if self.sign > 0 else 1

    @property
    def over_out_slot(self) -> int:
        return 1 if self.sign > 0 else 3

    @property
    def incoming(self) -> tuple[int, int]:
        """(incoming under arc, incoming over arc)."""
        return self.slots[0], self.slots[self.over_in_slot]

    @property
    def outgoing(self) -> tuple[int, int]:
        return self.slots[2], self.slots[self.over_out_slot]


def _rotate_to_min(cycle: tuple[int, ...]) -> tuple[int, ...]:
    if not cycle:
        return cycle
    i = cycle.index(min(cycle))
    return cycle[i:] + cycle[:i]


@dataclass(frozen=True)
class OrientedDiagram:
    crossings: tuple[Crossing, ...]
    components: tuple[tuple[int, ...], ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        comps = tuple(sorted(_rotate_to_min(tuple(c)) for c in self.components))
        object.__setattr__(self, "crossings", tuple(self.crossings))
        object.__setattr__(self, "components", comps)

    @property
    def arcs(self) -> list[int]:
        return sorted(a for comp in self.components for a in comp)

    @property
    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    def crossing(self, cid: int) -> Crossing:
        for c in self.crossings:
            if c.id == cid:
                return c
        raise KeyError(cid)

    def heads(self) -> dict[int, tuple[int, int]]:
        """Map each arc to (crossing index, slot) where it ends."""
        out = {}
        for i, c in enumerate(self.crossings):
            out[c.slots[0]] = (i, 0)
            out[c.slots[c.over_in_slot]] = (i, c.over_in_slot)
        return out

    def passes(self) -> list[list[tuple[int, bool]]]:
        """Per component, the crossings met in order as (crossing id, is_over)."""
        heads = self.heads()
        out = []
        for comp in self.components:
            seq = []
            for arc in comp:
                if arc not in heads:
                    continue
                i, slot = heads[arc]
                seq.append((self.crossings[i].id, slot != 0))
            out.append(seq)
        return out


# ---------------------------------------------------------------------------
# PD parsing

_TOKEN = re.compile(r"\s*(?:(X)\s*\[\s*([^\]]*)\]|(U)\b|(,))")


def _tokenize_pd(text: str) -> list[tuple[int, str, list[int] | None]]:
    # blank out comments so reported positions still index the original text
    text = re.sub(r"#[^\n]*", lambda m: " " * len(m.group()), text)
    body = text.strip()
    offset = len(text) - len(text.lstrip())
    m = re.fullmatch(r"PD\s*\[(.*)\]\s*", body, re.S)
    if m:
        offset += m.start(1)
        body = m.group(1)
    terms = []
    pos = 0
    while pos < len(body):
        if body[pos:].strip() == "":
            break
        m = _TOKEN.match(body, pos)
        if not m:
            rest = body[pos:].lstrip()
            where = offset + pos + len(body[pos:]) - len(rest)
            if rest.startswith("X"):
                raise ParseError("malformed crossing term, expected X[a,b,c,d]", where)
            raise ParseError(f"unexpected character {rest[:1]!r}", where)
        if m.group(1):
            start = offset + m.start(1)
            parts = [p.strip() for p in m.group(2).split(",")]
            if len(parts) != 4 or not all(p.isdigit() for p in parts):
                raise ParseError("crossing must be X[a,b,c,d] with positive integers", start)
            arcs = [int(p) for p in parts]
            if min(arcs) < 1:
                raise ParseError("arc labels must be positive", start)
            terms.append((start, "X", arcs))
        elif m.group(3):
            terms.append((offset + m.start(3), "U", None))
        pos = m.end()
    return terms


def parse_pd(text: str, name: str | None = None) -> OrientedDiagram:
    """Parse whitespace-separated ``X[a,b,c,d]`` terms (or ``U`` for the unknot).

    ``#`` starts a comment running to the end of the line.

    Orientation is recovered by walking each component: an arc in slot 0
    enters its crossing, one in slot 2 leaves it. Components met only as
    over-strands fall back to consecutive arc numbering.
    """
    terms = _tokenize_pd(text)
    if not terms:
        raise ParseError("empty diagram; write U for the 0-crossing unknot", 0)
    unknots = [t for t in terms if t[1] == "U"]
    if unknots:
        if len(terms) > 1:
            raise ParseError("U must be the only term (split diagrams are not supported)",
                             unknots[0][0])
        return OrientedDiagram((), ((1,),), name)

    raw = [tuple(t[2]) for t in terms]
    _check_arc_usage(raw)
    occ: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for i, slots in enumerate(raw):
        for s, a in enumerate(slots):
            occ[a].append((i, s))

    def other(i: int, s: int) -> tuple[int, int]:
        a, b = occ[raw[i][s]]
        return b if a == (i, s) else a

    seen: set[tuple[int, int]] = set()
    entering: dict[tuple[int, int], bool] = {}  # (crossing, slot) -> arc enters here
    components = []
    for i0 in range(len(raw)):
        for s0 in range(4):
            if (i0, s0) in seen:
                continue
            # walk: arrive at (i, s), leave through s+2, follow the arc
            walk = []
            i, s = i0, s0
            while True:
                walk.append((i, s))
                seen.add((i, s))
                seen.add((i, (s + 2) % 4))
                i, s = other(i, (s + 2) % 4)
                if (i, s) == (i0, s0):
                    break
                if len(walk) > 2 * len(raw):
                    raise ParseError("strand traversal does not close", terms[i0][0])
            forward = [(i, s) for i, s in walk if s == 0]
            backward = [(i, s) for i, s in walk if s == 2]
            if forward and backward:
                i = backward[0][0]
                raise ParseError(
                    f"inconsistent orientation: strand enters crossing {i + 1} "
                    f"through its outgoing under-slot", terms[i][0])
            if not forward and not backward:
                arcs_fwd = [raw[i][s] for i, s in walk]
                up = sum(1 for a, b in zip(arcs_fwd, arcs_fwd[1:] + arcs_fwd[:1]) if b == a + 1)
                down = sum(1 for a, b in zip(arcs_fwd, arcs_fwd[1:] + arcs_fwd[:1]) if a == b + 1)
                flip = down > up
            else:
                flip = bool(backward)
            if flip:
                walk = [(i, (s + 2) % 4) for i, s in walk]
                walk = walk[:1] + walk[1:][::-1]
            for i, s in walk:
                entering[(i, s)] = True
            components.append(tuple(raw[i][s] for i, s in walk))

    crossings = []
    for i, slots in enumerate(raw):
        if entering.get((i, 3)):
            sign = 1
        elif entering.get((i, 1)):
            sign = -1
        else:
            raise ParseError(f"crossing {i + 1} has no incoming over-strand", terms[i][0])
        if not entering.get((i, 0)):
            raise ParseError(f"crossing {i + 1}: slot 0 is not an incoming strand", terms[i][0])
        crossings.append(Crossing(i + 1, slots, sign))
    d = OrientedDiagram(tuple(crossings), tuple(components), name)
    _check_planar(d)
    return d


def _check_arc_usage(raw: list[tuple[int, ...]]) -> None:
    counts = Counter(a for slots in raw for a in slots)
    bad = sorted((a, n) for a, n in counts.items() if n != 2)
    if bad:
        words = {1: "once", 2: "twice"}
        detail = ", ".join(f"arc {a} appears {words.get(n, f'{n} times')}" for a, n in bad)
        raise ParseError(f"inconsistent arc usage: {detail}")


def _check_planar(d: OrientedDiagram) -> None:
    """Face count from the slot rotation must match Euler's formula."""
    if not d.crossings:
        return
    occ: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for i, c in enumerate(d.crossings):
        for s, a in enumerate(c.slots):
            occ[a].append((i, s))
    darts = {(i, s) for i in range(len(d.crossings)) for s in range(4)}
    faces = 0
    while darts:
        start = darts.pop()
        faces += 1
        i, s = start
        while True:
            a, b = occ[d.crossings[i].slots[s]]
            j, t = b if a == (i, s) else a
            i, s = j, (t - 1) % 4
            if (i, s) == start:
                break
            darts.discard((i, s))
    pieces = _piece_count(d)
    n = len(d.crossings)
    if n - 2 * n + faces != 2 * pieces:
        raise ParseError("incidence is not realisable in the plane")


def _piece_count(d: OrientedDiagram) -> int:
    parent = list(range(len(d.crossings)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    where: dict[int, int] = {}
    for i, c in enumerate(d.crossings):
        for a in c.slots:
            if a in where:
                parent[find(i)] = find(where[a])
            else:
                where[a] = i
    return len({find(i) for i in range(len(d.crossings))}) or 1


def emit_pd(d: OrientedDiagram) -> str:
    if not d.crossings:
        return "U"
    return " ".join("X[{},{},{},{}]".format(*c.slots) for c in d.crossings)


# ---------------------------------------------------------------------------
# native format

NATIVE_HEADER = "# altwrithe-diagram 1"


def emit_native(d: OrientedDiagram) -> str:
    lines = [NATIVE_HEADER]
    if d.name:
        lines.append(f"name: {d.name}")
    for c in d.crossings:
        a, b, cc, dd = c.slots
        lines.append(f"crossing: {c.id} {a} {b} {cc} {dd} {c.sign:+d}")
    for comp in d.components:
        lines.append("component: " + " ".join(map(str, comp)))
    return "\n".join(lines) + "\n"


def parse_native(text: str) -> OrientedDiagram:
    """Read the key/value diagram format written by :func:`emit_native`.

    Signs and component cycles are explicit here; they are checked against
    each other rather than inferred.
    """
    name = None
    crossings = []
    components = []
    pos = 0
    for raw_line in text.splitlines(keepends=True):
        line = raw_line.strip()
        line_pos = pos
        pos += len(raw_line)
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise ParseError(f"expected 'key: value', got {line!r}", line_pos)
        key, value = key.strip(), value.strip()
        if key == "name":
            name = value
        elif key == "crossing":
            parts = value.split()
            if len(parts) != 6:
                raise ParseError("crossing needs: id a b c d sign", line_pos)
            try:
                cid, a, b, c, dd = (int(p) for p in parts[:5])
                sign = int(parts[5])
            except ValueError:
                raise ParseError(f"non-integer field in {value!r}", line_pos) from None
            if sign not in (1, -1):
                raise ParseError("sign must be +1 or -1", line_pos)
            crossings.append(Crossing(cid, (a, b, c, dd), sign))
        elif key == "component":
            try:
                components.append(tuple(int(p) for p in value.split()))
            except ValueError:
                raise ParseError(f"non-integer arc in {value!r}", line_pos) from None
        else:
            raise ParseError(f"unknown key {key!r}", line_pos)
    if not components:
        raise ParseError("no components listed")
    if not crossings:
        if components != [(1,)]:
            raise ParseError("a 0-crossing diagram must be the single component '1'")
        return OrientedDiagram((), ((1,),), name)
    if len({c.id for c in crossings}) != len(crossings):
        raise ParseError("duplicate crossing id")
    _check_arc_usage([c.slots for c in crossings])
    d = OrientedDiagram(tuple(crossings), tuple(components), name)
    listed = Counter(a for comp in components for a in comp)
    if set(listed) != set(d.arcs) or any(n != 1 for n in listed.values()):
        raise ParseError("components must list every arc exactly once")
    heads = {}
    for c in d.crossings:
        for a in c.incoming:
            if a in heads:
                raise ParseError(f"arc {a} enters two crossings")
            heads[a] = c
    for comp in components:
        for a, nxt in zip(comp, comp[1:] + comp[:1]):
            c = heads[a]
            out = c.slots[2] if a == c.slots[0] else c.slots[c.over_out_slot]
            if out != nxt:
                raise ParseError(
                    f"component order disagrees with crossing {c.id}: arc {a} "
                    f"continues as {out}, not {nxt}")
    _check_planar(d)
    return d


def parse_diagram(text: str, fmt: str = "pd", name: str | None = None) -> OrientedDiagram:
    if fmt == "pd":
        return parse_pd(text, name)
    if fmt == "native":
        d = parse_native(text)
        if name and not d.name:
            d = OrientedDiagram(d.crossings, d.components, name)
        return d
    raise ValueError(f"unknown format {fmt!r}")


# ---------------------------------------------------------------------------
# transformations


def mirror(d: OrientedDiagram) -> OrientedDiagram:
    """Swap over and under at every crossing; every sign flips."""
    out = []
    for c in d.crossings:
        a, b, cc, dd = c.slots
        # the old incoming over-arc becomes slot 0
        slots = (dd, a, b, cc) if c.sign > 0 else (b, cc, dd, a)
        out.append(Crossing(c.id, slots, -c.sign))
    return OrientedDiagram(tuple(out), d.components, d.name)


def reverse_all(d: OrientedDiagram) -> OrientedDiagram:
    """Reverse the orientation of every component; signs are unchanged."""
    out = []
    for c in d.crossings:
        a, b, cc, dd = c.slots
        out.append(Crossing(c.id, (cc, dd, a, b), c.sign))
    comps = tuple(tuple(reversed(comp)) for comp in d.components)
    return OrientedDiagram(tuple(out), comps, d.name)


def reverse_component(d: OrientedDiagram, index: int) -> OrientedDiagram:
    """Reverse one component; crossings between it and the others flip sign."""
    comp = d.components[index]
    members = set(comp)
    out = []
    for c in d.crossings:
        a, b, cc, dd = c.slots
        under = a in members
        over = b in members
        if under and over:
            out.append(Crossing(c.id, (cc, dd, a, b), c.sign))
        elif under:
            out.append(Crossing(c.id, (cc, dd, a, b), -c.sign))
        elif over:
            out.append(Crossing(c.id, c.slots, -c.sign))
        else:
            out.append(c)
    comps = list(d.components)
    comps[index] = tuple(reversed(comp))
    return OrientedDiagram(tuple(out), tuple(comps), d.name)


# ---------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class ValidationReport:
    connected: bool
    alternating: bool
    reduced: bool
    crossing_count: int
    component_count: int
    failures: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures


def is_connected(d: OrientedDiagram) -> bool:
    if not d.crossings:
        return len(d.components) == 1
    return _piece_count(d) == 1


def is_alternating(d: OrientedDiagram) -> bool:
    if len(d.crossings) <= 1:
        return True
    for seq in d.passes():
        if len(seq) % 2:
            return False
        for (_, o1), (_, o2) in zip(seq, seq[1:] + seq[:1]):
            if o1 == o2:
                return False
    return True


def validate(d: OrientedDiagram) -> ValidationReport:
    from .seifert import is_reduced, seifert_graph, smooth_unchecked

    failures = []
    connected = is_connected(d)
    if not connected:
        failures.append("diagram is split: the crossing graph is disconnected")
    alternating = is_alternating(d)
    if not alternating:
        bad = []
        for k, seq in enumerate(d.passes()):
            runs = [c for (c, o1), (_, o2) in zip(seq, seq[1:] + seq[:1]) if o1 == o2]
            if runs or len(seq) % 2:
                bad.append(f"component {k + 1} (near crossing {runs[0] if runs else seq[0][0]})")
        failures.append("diagram is not alternating: " + ", ".join(bad))
    s = smooth_unchecked(d)
    g = seifert_graph(s, d, strict=False)
    reduced = is_reduced(g)
    if not reduced:
        failures.append("diagram is not reduced: Seifert graph has a single-crossing bridge")
    return ValidationReport(connected, alternating, reduced, len(d.crossings),
                            len(d.components), tuple(failures))


def require_valid(d: OrientedDiagram) -> ValidationReport:
    report = validate(d)
    if not report.ok:
        raise ValidationFailed(report)
    return report
