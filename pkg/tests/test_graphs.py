import random

import networkx as nx
import pytest
from diagrams import CORPUS
from hypothesis import given
from hypothesis import strategies as st
from oracles import longest_cycle_bruteforce, random_connected_graph, to_nx, two_cuts_bruteforce

from altwrithe.diagram import parse_pd
from altwrithe.graphs import (
    MAX_CYCLE_SEARCH_VERTICES,
    Block,
    GraphError,
    articulation_points,
    betti,
    biconnected,
    block_betti,
    blocks,
    bridges,
    is_bipartite,
    is_two_cut,
    longest_cycle,
    two_cuts,
)
from altwrithe.seifert import SignedGraph, seifert_graph, smooth


def cycle(n, w=1):
    return SignedGraph.from_weights({(i, i % n + 1): w for i in range(1, n + 1)})


def block_of(adj) -> Block:
    edges = tuple(sorted({((min(u, v), max(u, v)), 1) for u in adj for v in adj[u]}))
    return Block(frozenset(adj), edges)


PATH = SignedGraph.from_weights({(1, 2): 6, (2, 3): -5, (3, 4): 8})
K23 = SignedGraph.from_weights({(a, b): 1 for a in (1, 2) for b in (3, 4, 5)})


@st.composite
def connected_graphs(draw, max_n=12):
    n = draw(st.integers(2, max_n))
    seed = draw(st.integers(0, 2**32))
    extra = draw(st.integers(0, 2 * n))
    return random_connected_graph(random.Random(seed), n, extra)


class TestBlocks:
    def test_path(self):
        dec = blocks(PATH)
        assert len(dec.blocks) == 3
        assert dec.cut_vertices == {2, 3}
        assert sorted(b.sign for b in dec.blocks) == [-1, 1, 1]

    def test_figure_eight_graph(self):
        dec = blocks(SignedGraph.from_weights({(1, 2): 2, (2, 3): -2}))
        assert len(dec.blocks) == 2
        assert dec.cut_vertices == {2}

    def test_four_cycle(self):
        dec = blocks(cycle(4))
        assert len(dec.blocks) == 1
        assert dec.cut_vertices == frozenset()
        assert dec.blocks[0].sign == 1
        assert dec.blocks[0].weight == 4

    def test_disconnected_rejected(self):
        g = SignedGraph.from_weights({(1, 2): 2, (3, 4): 2})
        with pytest.raises(GraphError):
            blocks(g)

    def test_mixed_sign(self):
        b = blocks(SignedGraph.from_weights({(1, 2): 1, (2, 3): -1, (3, 4): 1, (4, 1): 1})).blocks[0]
        assert b.sign == 0

    @given(connected_graphs())
    def test_matches_networkx(self, adj):
        comps, cuts = biconnected(adj)
        g = to_nx(adj)
        assert cuts == set(nx.articulation_points(g))
        expected = sorted(sorted(tuple(sorted(e)) for e in c) for c in nx.biconnected_component_edges(g))
        assert sorted(sorted(c) for c in comps) == expected
        assert bridges(adj) == sorted(tuple(sorted(e)) for e in nx.bridges(g))

    @given(connected_graphs())
    def test_edges_partitioned(self, adj):
        weights = {(u, v): 1 for u in adj for v in adj[u] if u < v}
        g = SignedGraph.from_weights(weights)
        seen = [p for b in blocks(g).blocks for p, _ in b.edges]
        assert sorted(seen) == sorted(weights)
        assert sum(block_betti(b) for b in blocks(g).blocks) == betti(g)


class TestBetti:
    def test_examples(self):
        assert betti(PATH) == 0
        assert betti(SignedGraph((1,), ())) == 0
        assert betti(cycle(4)) == 1

    def test_counts_simple_edges(self):
        assert betti(SignedGraph.from_weights({(1, 2): 5})) == 0


class TestLongestCycle:
    def test_single_edge(self):
        assert longest_cycle(blocks(SignedGraph.from_weights({(1, 2): 3})).blocks[0]) == 0

    def test_four_cycle(self):
        assert longest_cycle(blocks(cycle(4)).blocks[0]) == 4

    def test_k23(self):
        # any cycle alternates sides and the small side has 2 vertices
        assert longest_cycle(blocks(K23).blocks[0]) == 4

    def test_k33_hamiltonian(self):
        g = SignedGraph.from_weights({(a, b): 1 for a in (1, 2, 3) for b in (4, 5, 6)})
        assert longest_cycle(blocks(g).blocks[0]) == 6

    def test_size_guard(self):
        big = blocks(cycle(MAX_CYCLE_SEARCH_VERTICES + 2)).blocks[0]
        with pytest.raises(GraphError, match="exceeds"):
            longest_cycle(big)

    @given(connected_graphs(max_n=10))
    def test_oracle(self, adj):
        for comp in biconnected(adj)[0]:
            sub: dict[int, set[int]] = {}
            for u, v in comp:
                sub.setdefault(u, set()).add(v)
                sub.setdefault(v, set()).add(u)
            assert longest_cycle(block_of(sub)) == longest_cycle_bruteforce(sub)

    @given(st.sampled_from(sorted(CORPUS)))
    def test_even_on_seifert_graphs(self, name):
        d = parse_pd(CORPUS[name])
        for b in blocks(seifert_graph(smooth(d), d)).blocks:
            assert longest_cycle(b) % 2 == 0


class TestTwoCuts:
    def test_four_cycle(self):
        assert two_cuts(blocks(cycle(4)).blocks[0]) == [(1, 3), (2, 4)]

    def test_single_edge(self):
        assert two_cuts(blocks(SignedGraph.from_weights({(1, 2): 2})).blocks[0]) == []

    def test_six_cycle(self):
        # all 15 pairs minus the 6 adjacent ones
        expected = [(1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (2, 6), (3, 5), (3, 6), (4, 6)]
        assert two_cuts(blocks(cycle(6)).blocks[0]) == expected

    def test_is_two_cut(self):
        assert is_two_cut(cycle(4), 1, 3)
        assert not is_two_cut(cycle(4), 1, 2)
        assert not is_two_cut(PATH, 1, 4)

    @given(connected_graphs(max_n=10))
    def test_oracle(self, adj):
        for comp in biconnected(adj)[0]:
            sub: dict[int, set[int]] = {}
            for u, v in comp:
                sub.setdefault(u, set()).add(v)
                sub.setdefault(v, set()).add(u)
            expected = two_cuts_bruteforce(sub) if len(sub) >= 4 else []
            assert two_cuts(block_of(sub)) == expected


class TestHelpers:
    def test_articulation_points(self):
        assert articulation_points(PATH.adjacency) == {2, 3}

    def test_bipartite(self):
        assert is_bipartite(cycle(4).adjacency)
        assert not is_bipartite(cycle(5).adjacency)
