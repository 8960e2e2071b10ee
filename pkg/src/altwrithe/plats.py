"""Build diagrams from crossings laid out on horizontal strands.

Crossings sit in columns between adjacent rows ``i`` and ``i + 1`` (row 1 on
top). The rows are then closed off either as a closed braid (row ``i`` on
the right joins row ``i`` on the left) or as a plat (rows 1-2, 3-4, ... are
capped on both sides).
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import DiagramError, OrientedDiagram, parse_pd

# ends of a crossing, counterclockwise
NE, NW, SW, SE = 0, 1, 2, 3
OPPOSITE = {NE: SW, SW: NE, NW: SE, SE: NW}


@dataclass
class _Layout:
    rows: int
    positions: list[int]              # crossing k joins rows positions[k], positions[k] + 1
    link: dict[tuple[int, int], tuple[int, int]]  # port -> port along an arc
    last: dict[int, tuple[int, int] | None]      # rightmost port on each row

    def passes(self) -> list[list[tuple[int, int]]]:
        """Components as sequences of (crossing, entry end), one direction each."""
        seen = set()
        out = []
        for k in range(len(self.positions)):
            for end in (NW, SW):
                if (k, end) in seen:
                    continue
                walk = []
                port = (k, end)
                while port not in seen:
                    seen.add(port)
                    seen.add((port[0], OPPOSITE[port[1]]))
                    walk.append(port)
                    port = self.link[(port[0], OPPOSITE[port[1]])]
                out.append(walk)
        return out


def _layout(rows: int, positions: list[int], closure: str) -> _Layout:
    if not positions:
        raise DiagramError("at least one crossing is required")
    for p in positions:
        if not 1 <= p < rows:
            raise DiagramError(f"row pair {p},{p + 1} is outside {rows} rows")
    last: dict[int, tuple[int, int] | None] = {r: None for r in range(1, rows + 1)}
    first: dict[int, tuple[int, int] | None] = dict(last)
    link = {}
    for k, p in enumerate(positions):
        for row, west, east in ((p, NW, NE), (p + 1, SW, SE)):
            if last[row] is None:
                first[row] = (k, west)
            else:
                link[last[row]] = (k, west)
                link[(k, west)] = last[row]
            last[row] = (k, east)

    # boundary points: ('L', r) / ('R', r); each row is a path L-r ... R-r
    nodes: dict = {}

    def join(a, b):
        nodes.setdefault(a, []).append(b)
        nodes.setdefault(b, []).append(a)

    for r in range(1, rows + 1):
        if first[r] is None:
            join(("L", r), ("R", r))
        else:
            join(("L", r), first[r])
            join(last[r], ("R", r))
    if closure == "braid":
        for r in range(1, rows + 1):
            join(("L", r), ("R", r))
    elif closure == "plat":
        if rows % 2:
            raise DiagramError("a plat needs an even number of rows")
        for r in range(1, rows + 1, 2):
            join(("L", r), ("L", r + 1))
            join(("R", r), ("R", r + 1))
    else:
        raise ValueError(closure)

    visited = set()
    for start in list(nodes):
        if isinstance(start[0], str):
            continue
        prev, cur = start, nodes[start][0]
        while isinstance(cur[0], str):
            visited.add(cur)
            a, b = nodes[cur]
            prev, cur = cur, (b if a == prev else a)
        link[start] = cur
    if any(isinstance(n[0], str) and n not in visited for n in nodes):
        raise DiagramError("closure leaves a crossing-free loop")
    return _Layout(rows, list(positions), link, last)


def _to_pd(layout: _Layout, walks: list[list[tuple[int, int]]], over_nwse: list[bool],
           name: str | None) -> OrientedDiagram:
    """Number arcs along the oriented walks and write X[...] terms."""
    arc_into: dict[tuple[int, int], int] = {}
    arc_out_of: dict[tuple[int, int], int] = {}
    label = 0
    for walk in walks:
        for k, end in walk:
            label += 1
            arc_into[(k, end)] = label
        # the arc entering walk[j+1] leaves walk[j] through the opposite end
        for j, (k, end) in enumerate(walk):
            nk, nend = walk[(j + 1) % len(walk)]
            arc_out_of[(k, OPPOSITE[end])] = arc_into[(nk, nend)]
    terms = []
    for k in range(len(layout.positions)):
        ends = {}
        ends.update({e: a for (kk, e), a in arc_into.items() if kk == k})
        ends.update({e: a for (kk, e), a in arc_out_of.items() if kk == k})
        entries = [e for (kk, e) in arc_into if kk == k]
        under_in = next(e for e in entries if (e in (NW, SE)) != over_nwse[k])
        ccw = [(under_in + i) % 4 for i in range(4)]
        terms.append("X[{},{},{},{}]".format(*(ends[e] for e in ccw)))
    return parse_pd(" ".join(terms), name)


def closed_braid(word: list[int], strands: int | None = None, name: str | None = None) -> OrientedDiagram:
    """Closure of a braid word; generator ``±i`` crosses rows ``i`` and ``i + 1``.

    Strands run left to right and ``+i`` is a positive crossing.
    """
    if any(g == 0 for g in word):
        raise DiagramError("braid generators are nonzero integers")
    strands = strands or max(abs(g) for g in word) + 1
    layout = _layout(strands, [abs(g) for g in word], "braid")
    walks = layout.passes()
    # left-to-right with the NW-SE strand over is a positive crossing
    over = [g > 0 for g in word]
    return _to_pd(layout, walks, over, name)


def plat(positions: list[int], rows: int = 4, orientation: list[bool] | None = None,
         name: str | None = None) -> OrientedDiagram:
    """Alternating plat closure of crossings at the given row pairs.

    Over/under is chosen so the diagram alternates, with the leftmost
    crossing's NW-SE strand on top. Components are listed starting with the
    one through the bottom row, which is traversed left to right;
    ``orientation[i]`` reverses the i-th component.
    """
    layout = _layout(rows, positions, "plat")
    walks = _order_walks(layout, layout.passes())
    over = _alternate(walks, len(positions))
    if orientation:
        walks = [_reverse_walk(w) if flip else w for w, flip in zip(walks, orientation)]
    return _to_pd(layout, walks, over, name)


def _order_walks(layout: _Layout, walks):
    """Component through the bottom row first, that row traversed left to right."""
    if layout.last[layout.rows] is not None:
        return sorted(walks, key=lambda w: min(k for k, _ in w))
    # an empty bottom row is one arc from the last port of the row above
    # back to its first port; left to right means it ends at that last port
    end = layout.last[layout.rows - 1]
    out = []
    for walk in walks:
        if end in walk:
            out.insert(0, walk)
        elif (end[0], OPPOSITE[end[1]]) in walk:
            out.insert(0, _reverse_walk(walk))
        else:
            out.append(walk)
    return out


def _reverse_walk(walk):
    flipped = [(k, OPPOSITE[e]) for k, e in walk]
    return flipped[:1] + flipped[1:][::-1]


def _alternate(walks, n: int) -> list[bool]:
    """Solve for over_nwse[k] so every component alternates over/under."""
    # a pass through an NW or SE end uses the NW-SE strand
    events = [[(k, e in (NW, SE)) for k, e in walk] for walk in walks]
    over: list[bool | None] = [None] * n
    over[0] = True
    changed = True
    while changed:
        changed = False
        for seq in events:
            for (k1, s1), (k2, s2) in zip(seq, seq[1:] + seq[:1]):
                if over[k1] is not None and over[k2] is None:
                    is_over = over[k1] == s1
                    over[k2] = (not is_over) == s2
                    changed = True
                elif over[k2] is not None and over[k1] is None:
                    is_over = over[k2] == s2
                    over[k1] = (not is_over) == s1
                    changed = True
    for seq in events:
        for (k1, s1), (k2, s2) in zip(seq, seq[1:] + seq[:1]):
            if (over[k1] == s1) == (over[k2] == s2):
                raise DiagramError("layout admits no alternating crossing choice")
    return [bool(o) for o in over]
