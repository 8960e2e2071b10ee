"""Rational links: odd-length continued fractions, 4-plats and strong invertibility."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .diagram import DiagramError, OrientedDiagram, reverse_component, validate
from .plats import plat


class RationalError(ValueError):
    pass


def _check_fraction(p: int, q: int) -> None:
    if not 0 < p < q:
        raise RationalError(f"need 0 < p < q, got {p}/{q}")
    if gcd(p, q) != 1:
        raise RationalError(f"{p}/{q} is not in lowest terms")


def odd_continued_fraction(p: int, q: int) -> list[int]:
    """The odd-length vector [a1, ..., an] with p/q = 1/(a1 + 1/(a2 + ...))."""
    _check_fraction(p, q)
    cf = []
    num, den = q, p
    while den:
        a, r = divmod(num, den)
        cf.append(a)
        num, den = den, r
    # the Euclidean expansion ends in an entry >= 2 (or is [q] with q >= 2)
    if len(cf) % 2 == 0:
        cf[-1:] = [cf[-1] - 1, 1]
    return cf


def eval_continued_fraction(cf: list[int]) -> tuple[int, int]:
    if not cf:
        raise RationalError("empty continued fraction")
    if any(a <= 0 for a in cf):
        raise RationalError(f"entries must be positive: {cf}")
    x = Fraction(cf[-1])
    for a in reversed(cf[:-1]):
        x = a + 1 / x
    x = 1 / x
    return x.numerator, x.denominator


def four_plat(cf: list[int], name: str | None = None) -> OrientedDiagram:
    """Alternating 4-plat whose twist regions have sizes a1, a2, ... left to right.

    Odd-numbered regions twist the middle rows 2-3, even-numbered ones the
    top rows 1-2; rows 1-2 and 3-4 are capped at both ends.
    """
    if not cf or len(cf) % 2 == 0:
        raise RationalError(f"need an odd-length vector, got {cf}")
    if any(a <= 0 for a in cf):
        raise RationalError(f"entries must be positive: {cf}")
    positions = [2 if i % 2 == 0 else 1 for i, a in enumerate(cf) for _ in range(a)]
    d = plat(positions, rows=4, name=name)
    report = validate(d)
    if not report.ok:
        raise RationalError(f"4-plat for {cf} is not reduced alternating: "
                            + "; ".join(report.failures))
    return d


@dataclass(frozen=True)
class RationalLink:
    p: int
    q: int
    cf: tuple[int, ...]
    diagram: OrientedDiagram

    @classmethod
    def from_fraction(cls, p: int, q: int) -> RationalLink:
        cf = odd_continued_fraction(p, q)
        return cls(p, q, tuple(cf), four_plat(cf, name=f"L({p}/{q})"))

    @property
    def components(self) -> int:
        return len(self.diagram.components)


def orientation_variants(r: RationalLink) -> tuple[OrientedDiagram, OrientedDiagram]:
    """(L1, L2): the two orientations up to overall reversal.

    They differ in the direction of one component; L1 is the one whose
    leftmost crossing is positive.
    """
    if r.components != 2:
        raise RationalError(f"L({r.p}/{r.q}) is a knot, not a two-component link")
    d = r.diagram
    # reversing either component gives the same pair up to overall reversal
    flipped = reverse_component(d, 1)
    a, b = (d, flipped) if d.crossing(1).sign > 0 else (flipped, d)
    if a.crossing(1).sign < 0 or b.crossing(1).sign > 0:
        raise DiagramError("leftmost crossing is not shared by both components")
    return a, b


def is_strongly_invertible(p: int, q: int) -> bool:
    """Palindromic odd-length vector with an odd middle entry."""
    _check_fraction(p, q)
    if q % 2:
        raise RationalError(f"{p}/{q}: q is odd, so L(p/q) is a knot, not a two-component link")
    cf = odd_continued_fraction(p, q)
    return cf == cf[::-1] and cf[len(cf) // 2] % 2 == 1
