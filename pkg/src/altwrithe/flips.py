"""Whitney flips of Types A, B and C on abstract signed graphs, and a random-walk harness.

Flips act on the signed simple representation. Mirroring the moved piece
only matters for an embedding, so on abstract graphs every flip is a
relabelling of the attachment vertices of a dependent subgraph.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator

from .graphs import (
    MAX_CYCLE_SEARCH_VERTICES,
    GraphError,
    articulation_points,
    blocks,
    components,
    is_bipartite,
    is_connected,
    two_cuts,
)
from .invariants import GRAPH_FIELDS, InvariantProfile, graph_profile
from .seifert import SignedGraph, _pair

KINDS = ("A", "B", "C")


class FlipError(ValueError):
    """A flip was requested whose preconditions do not hold."""


@dataclass(frozen=True)
class FlipMove:
    """One flip site. ``subgraph`` is the vertex set of the moved piece H.

    Roles: A uses the 2-cut (v1, v2); B moves H from v1 to v2 across the
    single edge v1-v2; C moves the single edge v0-v2 to v0-v1.
    """

    kind: str
    v1: int
    v2: int
    subgraph: frozenset[int]
    v0: int | None = None

    @property
    def edge(self) -> tuple[int, int] | None:
        if self.kind == "B":
            return _pair(self.v1, self.v2)
        if self.kind == "C":
            return _pair(self.v0, self.v2)
        return None


Weights = dict[tuple[int, int], int]


def _adjacency(vertices, weights: Weights) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {v: set() for v in vertices}
    for u, v in weights:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def _component_of(adj, start: int, removed) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen and w not in removed:
                seen.add(w)
                stack.append(w)
    return seen


def _relabel(g: SignedGraph, weights: Weights, inside: frozenset[int],
             mapping: dict[int, int], skip=frozenset()) -> Weights:
    """Apply ``mapping`` to the endpoints of every edge lying within ``inside``."""
    out = {}
    for (u, v), w in weights.items():
        if u in inside and v in inside and (u, v) not in skip:
            out[_pair(mapping.get(u, u), mapping.get(v, v))] = w
        else:
            out[(u, v)] = w
    return out


def _rebuild(g: SignedGraph, weights: Weights) -> SignedGraph:
    return SignedGraph.from_weights(weights, g.vertices)


# ---------------------------------------------------------------------------
# dependent subgraphs


def dependent_subgraphs(g: SignedGraph, cut) -> list[frozenset[int]]:
    """Vertex sets H with H meeting the rest of ``g`` exactly in ``cut``.

    One set per component of ``g - cut``, keeping those whose induced
    subgraph together with the cut is connected.
    """
    cut = frozenset(cut)
    if len(cut) not in (1, 2) or not cut <= set(g.vertices):
        raise FlipError(f"cut must be one or two vertices of the graph, got {sorted(cut)}")
    adj = g.adjacency
    comps = components(adj, cut)
    if len(comps) < 2:
        raise FlipError(f"removing {sorted(cut)} does not disconnect the graph")
    out = []
    for comp in comps:
        h = frozenset(comp) | cut
        sub = {v: adj[v] & h for v in h}
        if is_connected(sub):
            out.append(h)
    return out


# ---------------------------------------------------------------------------
# the three flips


def _check_a(g: SignedGraph, move: FlipMove) -> None:
    v1, v2, h = move.v1, move.v2, move.subgraph
    if not any(v1 in b.vertices and v2 in b.vertices and _pair(v1, v2) in two_cuts(b)
               for b in blocks(g).blocks):
        raise FlipError(f"{{{v1}, {v2}}} is not a 2-cut of a block")
    if not {v1, v2} <= h or h >= set(g.vertices):
        raise FlipError("H must contain the 2-cut and leave something outside")
    adj = g.adjacency
    inner = h - {v1, v2}
    for u in inner:
        if adj[u] - h:
            raise FlipError("H meets the rest of the graph outside the 2-cut")
    if not is_connected({v: adj[v] & h for v in h}):
        raise FlipError("H is not connected")


def flip_a(g: SignedGraph, move: FlipMove, check: bool = True) -> SignedGraph:
    """Swap the roles of the 2-cut vertices v1, v2 inside H."""
    if move.kind != "A":
        raise FlipError(f"expected a Type A move, got {move.kind}")
    if check:
        _check_a(g, move)
    weights = g.simple_edges
    # the edge v1-v2, if any, is symmetric under the swap and stays put
    new = _relabel(g, weights, move.subgraph, {move.v1: move.v2, move.v2: move.v1},
                   skip={_pair(move.v1, move.v2)})
    return _rebuild(g, new)


def _check_b(g: SignedGraph, move: FlipMove) -> None:
    v1, v2, h = move.v1, move.v2, move.subgraph
    if g.multiplicity.get(_pair(v1, v2)) != 1:
        raise FlipError(f"{v1} and {v2} are not joined by a single edge")
    if len(h) < 2:
        raise FlipError("H has no edges")
    if v1 not in h or v2 in h:
        raise FlipError("H must contain v1 and not v2")
    adj = g.adjacency
    if any(adj[u] - h for u in h - {v1}):
        raise FlipError(f"H is not {v1}-dependent")
    if not is_connected({v: adj[v] & h for v in h}):
        raise FlipError("H is not connected")


def flip_b(g: SignedGraph, move: FlipMove, check: bool = True) -> SignedGraph:
    """Re-attach the v1-dependent H at v2, keeping the edge v1-v2."""
    if move.kind != "B":
        raise FlipError(f"expected a Type B move, got {move.kind}")
    if check:
        _check_b(g, move)
    return _rebuild(g, _relabel(g, g.simple_edges, move.subgraph, {move.v1: move.v2}))


def _check_c(g: SignedGraph, move: FlipMove) -> None:
    v0, v1, v2, h = move.v0, move.v1, move.v2, move.subgraph
    if v0 is None or len({v0, v1, v2}) < 3:
        raise FlipError("Type C needs three distinct vertices v0, v1, v2")
    e = _pair(v0, v2)
    if g.multiplicity.get(e) != 1:
        raise FlipError(f"{v0} and {v2} are not joined by a single edge")
    rest = {p: w for p, w in g.simple_edges.items() if p != e}
    adj = _adjacency(g.vertices, rest)
    if not is_connected(adj) or v1 not in articulation_points(adj):
        raise FlipError(f"{v1} is not a cut vertex of the graph without the edge {e}")
    if h != frozenset(_component_of(adj, v0, {v1}) | {v1}) or v2 in h:
        raise FlipError(f"H must be the {v1}-dependent piece holding {v0} and not {v2}")


def flip_c(g: SignedGraph, move: FlipMove, check: bool = True) -> SignedGraph:
    """Send H's v0 to v2 and H's v1 to v0, then move the edge v0-v2 to v0-v1."""
    if move.kind != "C":
        raise FlipError(f"expected a Type C move, got {move.kind}")
    if check:
        _check_c(g, move)
    v0, v1, v2 = move.v0, move.v1, move.v2
    weights = dict(g.simple_edges)
    w = weights.pop(_pair(v0, v2))
    new = _relabel(g, weights, move.subgraph, {v0: v2, v1: v0})
    new[_pair(v0, v1)] = w
    return _rebuild(g, new)


_APPLY = {"A": flip_a, "B": flip_b, "C": flip_c}


def apply_flip(g: SignedGraph, move: FlipMove, check: bool = True) -> SignedGraph:
    return _APPLY[move.kind](g, move, check)


# ---------------------------------------------------------------------------
# enumerating flip sites


def flip_moves(g: SignedGraph) -> list[FlipMove]:
    """Every flip site of Types A, B and C, in a deterministic order."""
    n = len(g.vertices)
    if n > MAX_CYCLE_SEARCH_VERTICES:
        raise GraphError(f"flip enumeration is limited to {MAX_CYCLE_SEARCH_VERTICES} vertices")
    if n < 2:
        return []
    adj = g.adjacency
    weights = g.simple_edges
    decomposition = blocks(g)
    moves: list[FlipMove] = []

    for b in decomposition.blocks:
        for v1, v2 in two_cuts(b):
            for comp in components(adj, {v1, v2}):
                if comp & adj[v1] and comp & adj[v2]:
                    moves.append(FlipMove("A", v1, v2, frozenset(comp | {v1, v2})))

    singles = [p for p, w in weights.items() if abs(w) == 1]
    pieces = {v: components(adj, {v}) for v in sorted(decomposition.cut_vertices)}
    for u, v in singles:
        for v1, v2 in ((u, v), (v, u)):
            for comp in pieces.get(v1, ()):
                if v2 not in comp:
                    moves.append(FlipMove("B", v1, v2, frozenset(comp | {v1})))

    # v1 must separate v0 from v2 once e is gone, so it is a cut vertex of
    # the block of e minus e
    block_of = {p: b for b in decomposition.blocks for p, _ in b.edges}
    for e in singles:
        b = block_of[e]
        if len(b.edges) == 1:
            continue
        badj = b.adjacency
        badj[e[0]].discard(e[1])
        badj[e[1]].discard(e[0])
        cuts = sorted(articulation_points(badj))
        if not cuts:
            continue
        radj = {x: set(ns) for x, ns in adj.items()}
        radj[e[0]].discard(e[1])
        radj[e[1]].discard(e[0])
        for v0, v2 in (e, e[::-1]):
            for v1 in cuts:
                if v1 in (v0, v2):
                    continue
                h = _component_of(radj, v0, {v1})
                if v2 not in h:
                    moves.append(FlipMove("C", v1, v2, frozenset(h | {v1}), v0=v0))
    return moves


# ---------------------------------------------------------------------------
# random walks


@dataclass(frozen=True)
class FlipStep:
    move: FlipMove | None  # None when no flip site was available
    graph: SignedGraph


def flip_walk(g: SignedGraph, steps: int, rng: random.Random) -> Iterator[FlipStep]:
    """Apply ``steps`` uniformly chosen flips, yielding the graph after each."""
    for _ in range(steps):
        moves = flip_moves(g)
        if not moves:
            yield FlipStep(None, g)
            continue
        move = rng.choice(moves)
        # enumerated sites satisfy their preconditions by construction
        g = apply_flip(g, move, check=False)
        yield FlipStep(move, g)


def random_flip_walk(g: SignedGraph, steps: int, seed: int) -> SignedGraph:
    for step in flip_walk(g, steps, random.Random(seed)):
        g = step.graph
    return g


def random_homogeneous_graph(rng: random.Random, min_vertices: int = 4, max_vertices: int = 20,
                             max_weight: int = 9) -> SignedGraph:
    """A connected bipartite graph with sign-uniform blocks and no weight-1 bridges.

    Blocks are even cycles grown by ears and chords, or bridges of weight at
    least 2, glued at cut vertices. Weight 1 is favoured inside cycles so
    Type B and C sites are common.
    """
    if max_weight < 2:
        raise ValueError("max_weight must be at least 2 so bridges can avoid weight 1")
    target = rng.randint(min_vertices, max_vertices)
    color = {0: 0}
    weights: Weights = {}

    def new_vertex(c: int) -> int:
        v = len(color)
        color[v] = c
        return v

    def cycle_weight(sign: int) -> int:
        return sign * (1 if rng.random() < 0.5 else rng.randint(2, max_weight))

    while len(color) < target:
        left = target - len(color)
        root = rng.randrange(len(color))
        sign = rng.choice((1, -1))
        if left < 3 or rng.random() < 0.2:
            v = new_vertex(1 - color[root])
            weights[(root, v)] = sign * rng.randint(2, max_weight)
            continue
        length = 2 * rng.randint(2, (left + 1) // 2)
        cyc = [root]
        for i in range(1, length):
            cyc.append(new_vertex(color[root] ^ (i % 2)))
        block = set(cyc)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            weights[_pair(a, b)] = cycle_weight(sign)
        # ears and chords keep the block 2-connected and bipartite
        for _ in range(rng.randint(0, 3)):
            u, v = rng.sample(sorted(block), 2)
            same = color[u] == color[v]
            room = target - len(color)
            k = rng.choice([k for k in range(1, room + 2) if (k % 2 == 0) == same][:3] or [0])
            if k == 0 or (k == 1 and _pair(u, v) in weights):
                continue
            path = [u]
            for i in range(1, k):
                path.append(new_vertex(color[u] ^ (i % 2)))
            path.append(v)
            block.update(path)
            for a, b in zip(path, path[1:]):
                weights[_pair(a, b)] = cycle_weight(sign)
    return SignedGraph.from_weights(weights, color)


@dataclass
class FlipTrialReport:
    trials: int = 0
    steps: int = 0
    skipped: int = 0
    by_kind: dict[str, int] = field(default_factory=lambda: {k: 0 for k in KINDS})
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: FlipTrialReport) -> None:
        self.trials += other.trials
        self.steps += other.steps
        self.skipped += other.skipped
        for k, n in other.by_kind.items():
            self.by_kind[k] += n
        self.violations.extend(other.violations)


def check_step(before: SignedGraph, after: SignedGraph,
               before_profile: InvariantProfile | None = None) -> list[str]:
    """Differences a flip must not introduce."""
    problems = []
    a = before_profile or graph_profile(before)
    b = graph_profile(after)
    for name in GRAPH_FIELDS:
        if getattr(a, name) != getattr(b, name):
            problems.append(f"{name}: {getattr(a, name)} -> {getattr(b, name)}")
    if sorted(before.simple_edges.values()) != sorted(after.simple_edges.values()):
        problems.append("signed edge multiset changed")
    if not is_bipartite(after.adjacency):
        problems.append("graph is no longer bipartite")
    if not is_connected(after.adjacency):
        problems.append("graph is no longer connected")
    return problems


def run_flip_trials(trials: int, max_steps: int = 50, seed: int = 0, min_vertices: int = 4,
                    max_vertices: int = 20, max_weight: int = 9, first_trial: int = 0) -> FlipTrialReport:
    """Random walks from random graphs, checking every step against the start."""
    report = FlipTrialReport()
    for t in range(first_trial, first_trial + trials):
        rng = random.Random(f"{seed}:{t}")
        g = random_homogeneous_graph(rng, min_vertices, max_vertices, max_weight)
        start, start_profile = g, graph_profile(g)
        report.trials += 1
        for i, step in enumerate(flip_walk(g, rng.randint(1, max_steps), rng)):
            report.steps += 1
            if step.move is None:
                report.skipped += 1
                continue
            report.by_kind[step.move.kind] += 1
            for p in check_step(start, step.graph, start_profile):
                report.violations.append(f"trial {t} step {i + 1} ({step.move.kind}): {p}")
    return report
