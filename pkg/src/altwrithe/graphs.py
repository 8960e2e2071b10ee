"""Blocks, cut vertices, 2-cuts, Betti numbers and longest cycles of simple graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .seifert import SignedGraph, _pair

MAX_CYCLE_SEARCH_VERTICES = 64

Adjacency = Mapping[int, set[int]]


class GraphError(ValueError):
    pass


def is_connected(adj: Adjacency, removed: frozenset[int] | set[int] = frozenset()) -> bool:
    verts = [v for v in adj if v not in removed]
    if not verts:
        return True
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen and w not in removed:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(verts)


def components(adj: Adjacency, removed=frozenset()) -> list[set[int]]:
    out = []
    seen = set(removed)
    for v in sorted(adj):
        if v in seen:
            continue
        comp = {v}
        seen.add(v)
        stack = [v]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        out.append(comp)
    return out


def biconnected(adj: Adjacency) -> tuple[list[list[tuple[int, int]]], set[int]]:
    """Hopcroft-Tarjan: edge lists of the biconnected components, and cut vertices."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    comps: list[list[tuple[int, int]]] = []
    cuts: set[int] = set()
    counter = 0
    for root in sorted(adj):
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        root_children = 0
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, None, iter(adj[root]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w not in disc:
                    edge_stack.append((u, w))
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, u, iter(adj[w])))
                    advanced = True
                    break
                if disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent is None:
                continue
            low[parent] = min(low[parent], low[u])
            if low[u] >= disc[parent]:
                if stack[-1][1] is not None:
                    cuts.add(parent)
                else:
                    root_children += 1
                comp = []
                while True:
                    e = edge_stack.pop()
                    comp.append(_pair(*e))
                    if e == (parent, u):
                        break
                comps.append(comp)
        if root_children > 1:
            cuts.add(root)
    return comps, cuts


def articulation_points(adj: Adjacency) -> set[int]:
    return biconnected(adj)[1]


def bridges(adj: Adjacency) -> list[tuple[int, int]]:
    return sorted(c[0] for c in biconnected(adj)[0] if len(c) == 1)


def is_bipartite(adj: Adjacency) -> bool:
    color: dict[int, int] = {}
    for s in adj:
        if s in color:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in color:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return False
    return True


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Block:
    vertices: frozenset[int]
    edges: tuple[tuple[tuple[int, int], int], ...]

    @property
    def sign(self) -> int:
        """+1 or -1 for a sign-uniform block, 0 if empty or mixed."""
        signs = {1 if w > 0 else -1 for _, w in self.edges}
        return signs.pop() if len(signs) == 1 else 0

    @property
    def weight(self) -> int:
        return sum(w for _, w in self.edges)

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(sorted(w for _, w in self.edges))

    @property
    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for (u, v), _ in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]
    cut_vertices: frozenset[int]


def blocks(g: SignedGraph) -> BlockDecomposition:
    """Biconnected components of the simple representation of ``g``."""
    if not is_connected(g.adjacency):
        raise GraphError("block decomposition needs a connected graph")
    weights = g.simple_edges
    comps, cuts = biconnected(g.adjacency)
    out = []
    for comp in comps:
        edges = tuple(sorted((p, weights[p]) for p in comp))
        verts = frozenset(v for p, _ in edges for v in p)
        out.append(Block(verts, edges))
    out.sort(key=lambda b: b.edges)
    return BlockDecomposition(tuple(out), frozenset(cuts))


def betti(g: SignedGraph) -> int:
    if not is_connected(g.adjacency):
        raise GraphError("Betti number is defined here for connected graphs")
    return len(g.multiplicity) - len(g.vertices) + 1


def block_betti(b: Block) -> int:
    return len(b.edges) - len(b.vertices) + 1


def longest_cycle(b: Block) -> int:
    """Exact length of a longest cycle in ``b``; 0 when it has none.

    Backtracking from each vertex over higher-numbered vertices only, so each
    cycle is explored from its least vertex.
    """
    if len(b.edges) <= 1:
        return 0
    n = len(b.vertices)
    if n > MAX_CYCLE_SEARCH_VERTICES:
        raise GraphError(f"block with {n} vertices exceeds the exact search limit "
                         f"of {MAX_CYCLE_SEARCH_VERTICES}")
    adj = b.adjacency
    order = sorted(b.vertices)
    rank = {v: i for i, v in enumerate(order)}
    best = 0
    for s in order:
        remaining = n - rank[s]
        if remaining <= best:
            break
        nbrs = {v: [w for w in adj[v] if rank[w] > rank[s]] for v in order if rank[v] >= rank[s]}
        on_path = {s}
        # iterative DFS: stack of (vertex, neighbour iterator)
        stack = [(s, iter(nbrs[s]))]
        while stack:
            if best == remaining:
                break
            u, it = stack[-1]
            pushed = False
            for w in it:
                if w in on_path:
                    continue
                on_path.add(w)
                if len(stack) + 1 >= 3 and s in adj[w]:
                    best = max(best, len(stack) + 1)
                stack.append((w, iter(nbrs[w])))
                pushed = True
                break
            if not pushed:
                stack.pop()
                on_path.discard(u)
    return best


def two_cuts(b: Block) -> list[tuple[int, int]]:
    """Vertex pairs whose removal disconnects the block."""
    if len(b.vertices) < 4:
        return []
    adj = b.adjacency
    found = set()
    for v in sorted(adj):
        rest = {u: nb - {v} for u, nb in adj.items() if u != v}
        for a in articulation_points(rest):
            found.add(_pair(v, a))
    return sorted(found)


def is_two_cut(g: SignedGraph, v1: int, v2: int) -> bool:
    for b in blocks(g).blocks:
        if v1 in b.vertices and v2 in b.vertices:
            return _pair(v1, v2) in two_cuts(b)
    return False
