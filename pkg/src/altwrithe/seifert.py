"""Seifert circles, the Seifert multigraph and its signed simple representation."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .diagram import DiagramError, OrientedDiagram, is_connected


class HomogeneityError(DiagramError):
    """Crossings of both signs join the same pair of Seifert circles."""


@dataclass(frozen=True)
class SeifertCircle:
    id: int
    arcs: tuple[int, ...]
    # crossing ids in the order met when walking the circle along its orientation
    incident_crossings: tuple[int, ...]


@dataclass(frozen=True)
class SeifertDecomposition:
    circles: tuple[SeifertCircle, ...]
    crossing_assignment: Mapping[int, tuple[int, int]]

    def circle(self, cid: int) -> SeifertCircle:
        return self.circles[cid - 1]


@dataclass(frozen=True, order=True)
class MultiEdge:
    key: int
    ends: tuple[int, int]
    sign: int


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class SignedGraph:
    vertices: tuple[int, ...]
    multi_edges: tuple[MultiEdge, ...]

    @classmethod
    def from_weights(cls, weights: Mapping[tuple[int, int], int],
                     vertices: Iterable[int] | None = None) -> SignedGraph:
        """Expand signed simple weights into unit multi-edges."""
        verts = set(vertices or ())
        edges = []
        key = 0
        for (u, v), w in sorted((_pair(*p), w) for p, w in weights.items()):
            if u == v or w == 0:
                raise ValueError(f"bad edge {(u, v)} with weight {w}")
            verts.update((u, v))
            for _ in range(abs(w)):
                key += 1
                edges.append(MultiEdge(key, (u, v), 1 if w > 0 else -1))
        return cls(tuple(sorted(verts)), tuple(edges))

    @cached_property
    def multiplicity(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = defaultdict(int)
        for e in self.multi_edges:
            out[e.ends] += 1
        return dict(out)

    @cached_property
    def simple_edges(self) -> dict[tuple[int, int], int]:
        """Signed weight per vertex pair; raises if a pair mixes signs."""
        signs: dict[tuple[int, int], set[int]] = defaultdict(set)
        for e in self.multi_edges:
            signs[e.ends].add(e.sign)
        out = {}
        for pair in sorted(signs):
            if len(signs[pair]) > 1:
                raise HomogeneityError(f"circles {pair[0]} and {pair[1]} share crossings of both signs")
            out[pair] = signs[pair].pop() * self.multiplicity[pair]
        return out

    @cached_property
    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.multiplicity:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def negated(self) -> SignedGraph:
        return SignedGraph(self.vertices,
                           tuple(MultiEdge(e.key, e.ends, -e.sign) for e in self.multi_edges))

    def canonical(self) -> tuple:
        """Labelled comparison key independent of multi-edge order."""
        return (self.vertices, tuple(sorted(self.multi_edges)))


# ---------------------------------------------------------------------------


def smooth_unchecked(d: OrientedDiagram) -> SeifertDecomposition:
    if not d.crossings:
        circles = tuple(SeifertCircle(i + 1, comp, ()) for i, comp in enumerate(d.components))
        return SeifertDecomposition(circles, {})
    heads = d.heads()
    succ = {}
    for arc, (i, slot) in heads.items():
        c = d.crossings[i]
        # incoming under turns onto outgoing over, incoming over onto outgoing under
        succ[arc] = c.slots[c.over_out_slot] if slot == 0 else c.slots[2]
    seen: set[int] = set()
    orbits = []
    for start in sorted(succ):
        if start in seen:
            continue
        orbit = [start]
        seen.add(start)
        a = succ[start]
        while a != start:
            orbit.append(a)
            seen.add(a)
            a = succ[a]
        orbits.append(tuple(orbit))
    circle_of = {a: k + 1 for k, orbit in enumerate(orbits) for a in orbit}
    circles = []
    for k, orbit in enumerate(orbits):
        inc = tuple(d.crossings[heads[a][0]].id for a in orbit)
        circles.append(SeifertCircle(k + 1, orbit, inc))
    assignment = {}
    for c in d.crossings:
        under, over = (circle_of[a] for a in c.incoming)
        if under == over:
            raise DiagramError(f"crossing {c.id} smooths onto a single Seifert circle")
        assignment[c.id] = (under, over)
    return SeifertDecomposition(tuple(circles), assignment)


def smooth(d: OrientedDiagram) -> SeifertDecomposition:
    """Seifert circles of ``d``, each with its crossings in traversal order."""
    if not is_connected(d):
        raise DiagramError("cannot smooth a split diagram")
    return smooth_unchecked(d)


def seifert_graph(s: SeifertDecomposition, d: OrientedDiagram, strict: bool = True) -> SignedGraph:
    """One vertex per circle, one signed edge per crossing.

    With ``strict`` a vertex pair joined by crossings of both signs raises
    :class:`HomogeneityError`, which can only happen for non-alternating input.
    """
    edges = tuple(MultiEdge(c.id, _pair(*s.crossing_assignment[c.id]), c.sign)
                  for c in d.crossings)
    g = SignedGraph(tuple(c.id for c in s.circles), edges)
    if strict:
        g.simple_edges  # noqa: B018 - raises on mixed pairs
    return g


def homogeneity_check(g: SignedGraph) -> bool:
    from .graphs import blocks

    try:
        g.simple_edges
    except HomogeneityError:
        return False
    return all(b.sign != 0 for b in blocks(g).blocks)


def is_reduced(g: SignedGraph) -> bool:
    """No bridge of the simple representation carries a single crossing."""
    from .graphs import bridges

    return all(g.multiplicity[p] != 1 for p in bridges(g.adjacency))


def to_dot(g: SignedGraph) -> str:
    lines = ["graph seifert {"]
    for v in sorted(g.vertices):
        lines.append(f"  {v};")
    for (u, v), w in sorted(g.simple_edges.items()):
        lines.append(f'  {u} -- {v} [label="weight={w}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
