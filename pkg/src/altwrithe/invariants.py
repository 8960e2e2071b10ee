"""The full invariant profile of a reduced alternating diagram and its comparison."""

from __future__ import annotations

import json
from dataclasses import dataclass, replace

from .diagram import OrientedDiagram, require_valid
from .graphs import betti, block_betti, blocks, longest_cycle
from .locks import ROTATION, Phi, phi
from .seifert import SignedGraph, seifert_graph, smooth

# order used for text output and field-by-field comparison
FIELDS = ("writhe", "w_plus", "w_minus", "xi_plus", "xi_minus", "W", "w_B", "W_B",
          "beta", "beta_hat", "gamma", "phi")
GRAPH_FIELDS = FIELDS[:-1]


@dataclass(frozen=True)
class InvariantProfile:
    """Multisets are stored as sorted tuples so equality is multiset equality."""

    w_plus: int
    w_minus: int
    writhe: int
    xi_plus: int
    xi_minus: int
    W: tuple[int, ...]
    w_B: tuple[int, ...]
    W_B: tuple[tuple[int, ...], ...]
    beta: int
    beta_hat: tuple[int, ...]
    gamma: tuple[int, ...]
    phi: Phi | None = None

    def negated(self) -> InvariantProfile:
        """The profile expected of the mirror image."""
        return InvariantProfile(
            w_plus=-self.w_minus,
            w_minus=-self.w_plus,
            writhe=-self.writhe,
            xi_plus=self.xi_minus,
            xi_minus=self.xi_plus,
            W=tuple(sorted(-w for w in self.W)),
            w_B=tuple(sorted(-w for w in self.w_B)),
            W_B=tuple(sorted(tuple(sorted(-w for w in ws)) for ws in self.W_B)),
            beta=self.beta,
            beta_hat=self.beta_hat,
            gamma=self.gamma,
            phi=None if self.phi is None else self.phi.negated(),
        )

    def without_phi(self) -> InvariantProfile:
        return replace(self, phi=None)

    def field_value(self, name: str, phi_mode: str = ROTATION):
        if name == "phi":
            return None if self.phi is None else [list(v) for v in self.phi.key(phi_mode)]
        value = getattr(self, name)
        if isinstance(value, tuple):
            return [list(v) if isinstance(v, tuple) else v for v in value]
        return value

    def to_document(self, phi_mode: str = ROTATION) -> dict:
        return {name: self.field_value(name, phi_mode) for name in FIELDS}


def graph_profile(g: SignedGraph) -> InvariantProfile:
    """Every profile field that depends on the signed graph alone (no phi)."""
    weights = g.simple_edges
    w_plus = sum(w for w in weights.values() if w > 0)
    w_minus = sum(w for w in weights.values() if w < 0)
    if len(g.vertices) == 1:
        bs = ()
    else:
        bs = blocks(g).blocks
    for b in bs:
        if b.sign == 0:
            raise ValueError("block mixes positive and negative weights")
    return InvariantProfile(
        w_plus=w_plus,
        w_minus=w_minus,
        writhe=w_plus + w_minus,
        xi_plus=sum(1 for b in bs if b.sign > 0),
        xi_minus=sum(1 for b in bs if b.sign < 0),
        W=tuple(sorted(weights.values())),
        w_B=tuple(sorted(b.weight for b in bs)),
        W_B=tuple(sorted(b.weights for b in bs)),
        beta=betti(g),
        beta_hat=tuple(sorted(block_betti(b) for b in bs)),
        gamma=tuple(sorted(longest_cycle(b) for b in bs)),
    )


def profile(d: OrientedDiagram) -> InvariantProfile:
    """Profile of a connected, reduced alternating diagram.

    Raises :class:`~altwrithe.diagram.ValidationFailed` otherwise.
    """
    require_valid(d)
    s = smooth(d)
    g = seifert_graph(s, d)
    return replace(graph_profile(g), phi=phi(s, g))


def differing_fields(a: InvariantProfile, b: InvariantProfile,
                     phi_mode: str = ROTATION) -> list[str]:
    out = []
    for name in FIELDS:
        if name == "phi" and (a.phi is None or b.phi is None):
            continue
        if a.field_value(name, phi_mode) != b.field_value(name, phi_mode):
            out.append(name)
    return out


def profiles_equal(a: InvariantProfile, b: InvariantProfile, phi_mode: str = ROTATION) -> bool:
    """Field-wise equality; phi is compared up to cyclic rotation (or reflection)."""
    if (a.phi is None) != (b.phi is None):
        return False
    return not differing_fields(a, b, phi_mode)


def format_profile(p: InvariantProfile, output: str = "text", phi_mode: str = ROTATION,
                   header: dict | None = None) -> str:
    doc = dict(header or {})
    doc.update(p.to_document(phi_mode))
    if output == "structured":
        return json.dumps(doc, separators=(", ", ": ")) + "\n"
    return "".join(f"{k}: {_text(v)}\n" for k, v in doc.items())


def _text(value) -> str:
    if isinstance(value, list):
        return json.dumps(value, separators=(",", ":"))
    return str(value)
