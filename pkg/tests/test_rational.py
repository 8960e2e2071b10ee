from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from altwrithe.diagram import validate
from altwrithe.invariants import differing_fields, profile, profiles_equal
from altwrithe.rational import (
    RationalError,
    RationalLink,
    eval_continued_fraction,
    four_plat,
    is_strongly_invertible,
    odd_continued_fraction,
    orientation_variants,
)


@st.composite
def fractions(draw, max_q=500):
    q = draw(st.integers(2, max_q))
    p = draw(st.integers(1, q - 1).filter(lambda p: gcd(p, q) == 1))
    return p, q


def naive_value(cf):
    x = Fraction(0)
    for a in reversed(cf):
        x = 1 / (a + x)
    return x


class TestContinuedFraction:
    def test_known_vector(self):
        assert odd_continued_fraction(278, 641) == [2, 3, 3, 1, 2, 3, 2]
        assert eval_continued_fraction([2, 3, 3, 1, 2, 3, 2]) == (278, 641)

    def test_small(self):
        assert odd_continued_fraction(1, 2) == [2]
        assert eval_continued_fraction([2]) == (1, 2)

    def test_hand_values(self):
        # 1/(2 + 1/(1 + 1/2)) = 1/(2 + 2/3) = 3/8
        assert odd_continued_fraction(3, 8) == [2, 1, 2]
        # bottom-up 3/2, 8/3, 11/8, 30/11
        assert eval_continued_fraction([2, 1, 2, 1, 2]) == (11, 30)

    def test_even_expansion_is_split(self):
        # Euclid gives 5/12 = [2, 2, 2], 7/10 = [1, 2, 3], 2/5 = [2, 2] -> [2, 1, 1]
        assert odd_continued_fraction(2, 5) == [2, 1, 1]

    def test_errors(self):
        with pytest.raises(RationalError):
            odd_continued_fraction(2, 4)
        with pytest.raises(RationalError):
            odd_continued_fraction(5, 3)
        with pytest.raises(RationalError):
            eval_continued_fraction([2, 0, 1])
        with pytest.raises(RationalError):
            eval_continued_fraction([])

    @given(fractions())
    def test_round_trip(self, pq):
        cf = odd_continued_fraction(*pq)
        assert len(cf) % 2 == 1
        assert all(a > 0 for a in cf)
        assert eval_continued_fraction(cf) == pq
        assert naive_value(cf) == Fraction(*pq)


class TestFourPlat:
    def test_known(self):
        d = four_plat([2, 3, 3, 1, 2, 3, 2])
        assert len(d.crossings) == 16
        assert len(d.components) == 1
        assert validate(d).ok

    def test_two_component(self):
        d = four_plat([2, 1, 2])
        assert len(d.crossings) == 5
        assert len(d.components) == 2

    def test_single_crossing_rejected(self):
        with pytest.raises(RationalError, match="not reduced"):
            four_plat([1])

    def test_even_length_rejected(self):
        with pytest.raises(RationalError):
            four_plat([2, 2])

    @given(fractions(max_q=120))
    def test_valid_with_parity(self, pq):
        r = RationalLink.from_fraction(*pq)
        assert validate(r.diagram).ok
        assert len(r.diagram.crossings) == sum(r.cf)
        assert r.components == (2 if pq[1] % 2 == 0 else 1)


class TestVariants:
    def test_leftmost_signs(self):
        a, b = orientation_variants(RationalLink.from_fraction(3, 8))
        assert a.crossing(1).sign == 1
        assert b.crossing(1).sign == -1

    def test_symmetric_case_writhes(self):
        a, b = orientation_variants(RationalLink.from_fraction(3, 8))
        assert a.writhe == b.writhe

    def test_non_palindrome_differs(self):
        r = RationalLink.from_fraction(7, 10)
        assert list(r.cf) == [1, 2, 3]
        a, b = orientation_variants(r)
        assert differing_fields(profile(a), profile(b))

    def test_knot_rejected(self):
        with pytest.raises(RationalError, match="knot"):
            orientation_variants(RationalLink.from_fraction(1, 3))


class TestStrongInvertibility:
    @pytest.mark.parametrize("p, q, expected", [
        (3, 8, True),      # [2,1,2]: palindrome, middle 1
        (11, 30, False),   # [2,1,2,1,2]: palindrome, middle 2
        (5, 12, False),    # [2,2,2]: palindrome, middle 2
        (7, 10, False),    # [1,2,3]: not a palindrome
        (1, 2, False),     # [2]: middle 2
        (1, 4, False),     # [4]
        (2, 11, None),     # q odd: a knot
    ])
    def test_cases(self, p, q, expected):
        if expected is None:
            with pytest.raises(RationalError, match="odd"):
                is_strongly_invertible(p, q)
        else:
            assert is_strongly_invertible(p, q) is expected

    def test_odd_q_error(self):
        with pytest.raises(RationalError, match="not a two-component link"):
            is_strongly_invertible(278, 641)

    def test_consistency_small_sweep(self):
        for q in range(2, 41, 2):
            for p in range(1, q):
                if gcd(p, q) == 1 and is_strongly_invertible(p, q):
                    a, b = orientation_variants(RationalLink.from_fraction(p, q))
                    assert profiles_equal(profile(a), profile(b)), (p, q)
