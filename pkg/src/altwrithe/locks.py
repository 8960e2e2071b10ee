"""Locked Seifert-circle pairs and the cyclic cluster vectors built from them."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .graphs import blocks
from .seifert import SeifertDecomposition, SignedGraph, _pair

ROTATION = "rotation"
ROTATION_REVERSAL = "rotation-reversal"
PHI_MODES = (ROTATION, ROTATION_REVERSAL)


def _rotations(entries: tuple[int, ...]):
    for i in range(len(entries)):
        yield entries[i:] + entries[:i]


def canonical_rotation(entries: tuple[int, ...], reflect: bool = False) -> tuple[int, ...]:
    """Rotation chosen so that reading it backwards is lexicographically least.

    This picks the rotation ending in the most negative run, so a lock is
    written starting just after its largest negative cluster.
    With ``reflect`` the reversed cycle competes too.
    """
    if not entries:
        return ()
    candidates = list(_rotations(tuple(entries)))
    if reflect:
        candidates += list(_rotations(tuple(reversed(entries))))
    return min(candidates, key=lambda r: r[::-1])


@dataclass(frozen=True)
class ClusterVector:
    entries: tuple[int, ...]

    def canonical(self, mode: str = ROTATION) -> tuple[int, ...]:
        return canonical_rotation(self.entries, reflect=mode == ROTATION_REVERSAL)

    def negated(self) -> ClusterVector:
        return ClusterVector(tuple(-x for x in self.entries))


@dataclass(frozen=True)
class Lock:
    hub: int
    neighbors: tuple[int, int]  # (positive-edge neighbour, negative-edge neighbour)
    clusters: ClusterVector


@dataclass(frozen=True)
class Phi:
    vectors: tuple[ClusterVector, ...]

    def key(self, mode: str = ROTATION) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(v.canonical(mode) for v in self.vectors))

    def negated(self) -> Phi:
        return Phi(tuple(v.negated() for v in self.vectors))

    def __len__(self):
        return len(self.vectors)


def cluster_runs(sequence: tuple[int, ...], first: set[int], second: set[int],
                 signs: dict[int, int]) -> tuple[int, ...]:
    """Signed sizes of maximal runs of ``first``/``second`` crossings around a cycle.

    Crossings outside both sets are skipped. Each run is signed by its
    crossings' sign.
    """
    seq = [c for c in sequence if c in first or c in second]
    if not seq:
        return ()
    side = [c in first for c in seq]
    if all(side) or not any(side):
        return (len(seq) * signs[seq[0]],)
    # start at a run boundary so no run wraps around
    start = next(i for i in range(len(seq)) if side[i] != side[i - 1])
    seq = seq[start:] + seq[:start]
    side = side[start:] + side[:start]
    runs = []
    count = 1
    for i in range(1, len(seq)):
        if side[i] == side[i - 1]:
            count += 1
        else:
            runs.append(count * signs[seq[i - 1]])
            count = 1
    runs.append(count * signs[seq[-1]])
    return tuple(runs)


def find_locks(s: SeifertDecomposition, g: SignedGraph) -> list[Lock]:
    """Every cut-vertex circle with a pair of opposite-sign neighbours in 4+ clusters."""
    weights = g.simple_edges
    signs = {e.key: e.sign for e in g.multi_edges}
    by_pair: dict[tuple[int, int], set[int]] = {}
    for e in g.multi_edges:
        by_pair.setdefault(e.ends, set()).add(e.key)
    locks = []
    for hub in sorted(blocks(g).cut_vertices):
        nbrs = sorted(g.adjacency[hub])
        pos = [v for v in nbrs if weights[_pair(hub, v)] > 0]
        neg = [v for v in nbrs if weights[_pair(hub, v)] < 0]
        order = s.circle(hub).incident_crossings
        for p, n in product(pos, neg):
            runs = cluster_runs(order, by_pair[_pair(hub, p)], by_pair[_pair(hub, n)], signs)
            if len(runs) >= 4:
                locks.append(Lock(hub, (p, n), ClusterVector(runs)))
    return locks


def cluster_vector(lock: Lock) -> ClusterVector:
    return lock.clusters


def cyclic_equal(a, b, mode: str = ROTATION) -> bool:
    a = a.entries if isinstance(a, ClusterVector) else tuple(a)
    b = b.entries if isinstance(b, ClusterVector) else tuple(b)
    if len(a) != len(b):
        return False
    reflect = mode == ROTATION_REVERSAL
    return canonical_rotation(a, reflect) == canonical_rotation(b, reflect)


def phi(s: SeifertDecomposition, g: SignedGraph) -> Phi:
    return Phi(tuple(lock.clusters for lock in find_locks(s, g)))


def phi_equal(a: Phi, b: Phi, mode: str = ROTATION) -> bool:
    return a.key(mode) == b.key(mode)
