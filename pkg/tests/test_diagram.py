import pytest
from diagrams import CORPUS, KINKED_TREFOIL, TREFOIL, TWO_TREFOILS
from hypothesis import assume, given
from hypothesis import strategies as st

from altwrithe.diagram import (
    Crossing,
    DiagramError,
    OrientedDiagram,
    ParseError,
    ValidationFailed,
    emit_native,
    emit_pd,
    is_alternating,
    mirror,
    parse_diagram,
    parse_native,
    parse_pd,
    require_valid,
    reverse_all,
    reverse_component,
    validate,
)
from altwrithe.plats import closed_braid

corpus_names = st.sampled_from(sorted(CORPUS))


@st.composite
def braid_words(draw, max_strands=5, max_len=14):
    """Words using every generator at least once, so the closure is connected."""
    n = draw(st.integers(2, max_strands))
    gens = list(range(1, n))
    extra = draw(st.lists(st.sampled_from(gens), max_size=max_len))
    word = draw(st.permutations(gens + extra))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=len(word), max_size=len(word)))
    return [g * s for g, s in zip(word, signs)]


class TestParsePd:
    def test_trefoil_signs(self, trefoil):
        # arcs 1..6 run in order; in X[1,4,2,5] the over-strand goes 4 -> 5, i.e. it
        # enters at slot 1, which makes the crossing negative; likewise for the others
        assert len(trefoil.crossings) == 3
        assert len(trefoil.components) == 1
        assert [c.sign for c in trefoil.crossings] == [-1, -1, -1]
        assert trefoil.writhe == -3

    def test_mirror_table_trefoil_is_positive(self):
        # over-strand 4 -> 5 now sits in slot 3
        d = parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]")
        assert d.writhe == 3

    def test_components_from_traversal(self, trefoil):
        assert trefoil.components == ((1, 2, 3, 4, 5, 6),)

    def test_pd_wrapper_and_commas(self):
        a = parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]")
        assert a == parse_pd(TREFOIL)

    def test_comments_are_ignored(self):
        assert parse_pd("# trefoil\n" + TREFOIL + "  # end") == parse_pd(TREFOIL)

    def test_unknot_marker(self):
        d = parse_pd("U")
        assert d.crossings == ()
        assert len(d.components) == 1
        assert d.writhe == 0

    def test_empty_text_needs_marker(self):
        with pytest.raises(ParseError, match="write U"):
            parse_pd("   ")

    def test_arc_usage_error(self):
        with pytest.raises(ParseError) as err:
            parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,2]")
        assert "arc 2 appears 3 times, arc 3 appears once" in str(err.value)

    def test_syntax_error_position(self):
        with pytest.raises(ParseError) as err:
            parse_pd("X[1,4,2,5] X[3,6,4,1] Q[5,2,6,3]")
        assert err.value.position == 22

    def test_bad_term_shape(self):
        with pytest.raises(ParseError, match="X\\[a,b,c,d\\]"):
            parse_pd("X[1,2,3]")

    def test_non_planar_rejected(self):
        # every arc used twice and orientable, but the rotations trace only two
        # faces where a plane diagram with two crossings has four
        with pytest.raises(DiagramError, match="plane"):
            parse_pd("X[1,2,3,4] X[2,3,1,4]")

    def test_multi_component_hopf(self):
        d = parse_pd("X[1,3,2,4] X[3,1,4,2]")
        assert len(d.components) == 2
        assert abs(d.writhe) == 2

    @given(corpus_names)
    def test_emit_parse_round_trip(self, name):
        d = parse_pd(CORPUS[name], name)
        assert parse_pd(emit_pd(d), name) == d


class TestNative:
    @given(corpus_names)
    def test_round_trip_corpus(self, name):
        d = parse_pd(CORPUS[name], name)
        back = parse_native(emit_native(d))
        assert back == d
        assert back.name == name

    @given(braid_words())
    def test_round_trip_braids(self, word):
        d = closed_braid(word)
        assert parse_native(emit_native(d)) == d

    def test_format_text(self, trefoil):
        assert emit_native(trefoil).splitlines() == [
            "# altwrithe-diagram 1",
            "name: trefoil",
            "crossing: 1 1 4 2 5 -1",
            "crossing: 2 3 6 4 1 -1",
            "crossing: 3 5 2 6 3 -1",
            "component: 1 2 3 4 5 6",
        ]

    def test_wrong_sign_detected(self, trefoil):
        text = emit_native(trefoil).replace("1 4 2 5 -1", "1 4 2 5 +1")
        with pytest.raises(ParseError):
            parse_native(text)

    def test_unknown_key(self):
        with pytest.raises(ParseError, match="unknown key"):
            parse_native("colour: red\ncomponent: 1\n")

    def test_unknot(self):
        assert parse_native("component: 1\n").crossings == ()

    def test_parse_diagram_dispatch(self, trefoil):
        assert parse_diagram(emit_native(trefoil), "native") == trefoil
        assert parse_diagram(TREFOIL, "pd") == trefoil
        with pytest.raises(ValueError):
            parse_diagram(TREFOIL, "gauss")


class TestValidate:
    def test_trefoil(self, trefoil):
        r = validate(trefoil)
        assert (r.connected, r.alternating, r.reduced) == (True, True, True)
        assert r.ok and r.failures == ()
        assert (r.crossing_count, r.component_count) == (3, 1)

    def test_kinked_trefoil_not_reduced(self):
        r = validate(parse_pd(KINKED_TREFOIL))
        assert r.alternating and r.connected
        assert not r.reduced
        assert len(r.failures) == 1

    def test_split_union(self):
        r = validate(parse_pd(TWO_TREFOILS))
        assert not r.connected
        assert not r.ok

    def test_non_alternating(self):
        # over, over on the same strand at the 1-2 twist pair of a closed braid
        d = closed_braid([1, -1, 1, 1, 1])
        assert not is_alternating(d)
        assert not validate(d).alternating

    def test_small_diagrams_vacuously_alternating(self):
        assert is_alternating(parse_pd("U"))
        assert is_alternating(closed_braid([1]))

    def test_require_valid_raises_with_report(self):
        with pytest.raises(ValidationFailed) as err:
            require_valid(parse_pd(KINKED_TREFOIL))
        assert err.value.report.reduced is False

    @given(corpus_names)
    def test_corpus_is_valid(self, name):
        assert validate(parse_pd(CORPUS[name])).ok


class TestTransformations:
    def test_mirror_trefoil(self, trefoil):
        assert mirror(trefoil).writhe == 3

    def test_mirror_unknot(self):
        u = parse_pd("U")
        assert mirror(u) == u

    @given(corpus_names)
    def test_mirror_negates_signs_and_is_involution(self, name):
        d = parse_pd(CORPUS[name])
        m = mirror(d)
        assert [c.sign for c in m.crossings] == [-c.sign for c in d.crossings]
        assert m.components == d.components
        assert mirror(m) == d

    @given(braid_words())
    def test_mirror_keeps_slot_sets(self, word):
        d = closed_braid(word)
        m = mirror(d)
        assert [sorted(c.slots) for c in m.crossings] == [sorted(c.slots) for c in d.crossings]
        # PD text cannot orient a component that never passes under
        assume(all(not all(over for _, over in comp) for comp in m.passes()))
        assert parse_pd(emit_pd(m)) == m

    def test_reverse_trefoil(self, trefoil):
        r = reverse_all(trefoil)
        assert [c.sign for c in r.crossings] == [c.sign for c in trefoil.crossings]
        assert reverse_all(r) == trefoil

    def test_reverse_unknot(self):
        u = parse_pd("U")
        assert reverse_all(u) == u

    @given(corpus_names)
    def test_reverse_keeps_signs(self, name):
        d = parse_pd(CORPUS[name])
        r = reverse_all(d)
        assert [c.sign for c in r.crossings] == [c.sign for c in d.crossings]
        assert reverse_all(r) == d
        assert parse_pd(emit_pd(r)) == r

    def test_reverse_one_component_flips_mixed_crossings(self):
        d = closed_braid([1, 1, 1, 1])  # (2,4) torus link, all positive
        r = reverse_component(d, 1)
        assert [c.sign for c in r.crossings] == [-1, -1, -1, -1]
        assert reverse_component(r, 1) == d

    def test_crossing_dataclass_slots(self):
        c = Crossing(1, (1, 2, 3, 4), -1)
        assert c.incoming == (1, 2)
        assert c.outgoing == (3, 4)
        assert Crossing(1, (1, 2, 3, 4), 1).incoming == (1, 4)

    def test_components_normalised(self):
        a = OrientedDiagram((), ((1,),))
        assert a.arcs == [1]
