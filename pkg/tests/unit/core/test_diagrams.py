"""Tests for blob diagrams, concatenation and the tableau bijections."""

from math import comb

import pytest

from blobalg.core.diagrams import (
    BlobDiagram,
    TLDiagram,
    bitableaux_to_diagram,
    blob_diagrams,
    concat_blob,
    concat_tl,
    diagram_from_json,
    diagram_to_bitableaux,
    generator_diagram,
    half_diagrams,
    identity_diagram,
    parse_ascii,
    planar_matchings,
    render_ascii,
    tl_bijection,
    tl_diagrams,
    tl_from_tableaux,
)
from blobalg.core.exceptions import IndexOutOfRange, InvalidDiagram, ShapeMismatch
from blobalg.core.tabcomb import Bitableau, TwoColTableau


CATALAN = [1, 1, 2, 5, 14]


class TestConstruction:
    """Tests for building and validating diagrams."""

    def test_generator_pairs(self):
        """U_1 on three strands joins 1-2 on top and 4-5 below."""
        d = generator_diagram("U", 3, 1)
        assert d.pairs == ((1, 2), (3, 6), (4, 5))
        assert d.through_lines == 1
        assert d.top_arcs == [(1, 2)]
        assert d.bottom_arcs == [(1, 2)]

    def test_blob_generator(self):
        e = generator_diagram("e", 2)
        assert e.blobs == frozenset({1})
        assert e.forget_blobs() == identity_diagram(2, blob=False)

    def test_generator_index_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            generator_diagram("U", 3, 3)
        with pytest.raises(IndexOutOfRange):
            generator_diagram("e", 0)

    def test_crossing_is_rejected(self):
        with pytest.raises(InvalidDiagram, match="not planar"):
            TLDiagram(2, ((1, 4), (2, 3)))

    def test_incomplete_matching_is_rejected(self):
        with pytest.raises(InvalidDiagram, match="perfect matching"):
            TLDiagram(2, ((1, 2),))

    def test_blob_on_enclosed_line_is_rejected(self):
        """The arc 2-3 lies under the through line 1-4 and cannot carry a blob."""
        with pytest.raises(InvalidDiagram, match="not exposed"):
            BlobDiagram(3, ((1, 4), (2, 3), (5, 6)), frozenset({2}))

    def test_blob_recorded_by_smallest_point(self):
        with pytest.raises(InvalidDiagram, match="smallest point"):
            BlobDiagram(2, ((1, 3), (2, 4)), frozenset({3}))

    def test_json_round_trip(self):
        d = BlobDiagram(2, ((1, 2), (3, 4)), frozenset({1, 3}))
        assert diagram_from_json(d.to_json()) == d

    def test_flip(self):
        d = BlobDiagram(3, ((1, 2), (3, 4), (5, 6)), frozenset({1}))
        flipped = d.flip()
        assert flipped.pairs == ((1, 6), (2, 3), (4, 5))
        assert flipped.blobs == frozenset({4})
        assert flipped.flip() == d


class TestConcatenation:
    """Tests for stacking diagrams."""

    def test_tl_loop(self):
        U1 = generator_diagram("U", 2, 1, blob=False)
        result, loops = concat_tl(U1, U1)
        assert result == U1
        assert loops == 1

    def test_blob_idempotent(self):
        e = generator_diagram("e", 3)
        stacked = concat_blob(e, e)
        assert stacked.result == e
        assert stacked.undecorated_loops == 0
        assert stacked.decorated_loops == 0

    def test_decorated_loop(self):
        """U_1 e U_1 closes one decorated loop."""
        U1 = generator_diagram("U", 2, 1)
        e = generator_diagram("e", 2)
        first = concat_blob(U1, e)
        stacked = concat_blob(first.result, U1)
        assert stacked.result == U1
        assert stacked.decorated_loops == 1
        assert stacked.undecorated_loops == 0

    def test_identity_is_neutral(self):
        one = identity_diagram(3)
        for d in blob_diagrams(3):
            assert concat_blob(one, d).result == d
            assert concat_blob(d, one).result == d

    def test_size_mismatch(self):
        with pytest.raises(ShapeMismatch):
            concat_tl(identity_diagram(2, blob=False), identity_diagram(3, blob=False))


class TestBijections:
    """Tests for the diagram/tableau correspondences."""

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_blob_count(self, n):
        assert len(set(blob_diagrams(n))) == comb(2 * n, n)
        assert len(half_diagrams(n)) == 2**n

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_tl_count(self, n):
        assert len(set(tl_diagrams(n))) == CATALAN[n]
        assert set(planar_matchings(n)) == set(tl_diagrams(n))

    def test_identity_and_blob_generator(self):
        assert diagram_to_bitableaux(identity_diagram(3)) == (
            Bitableau((1, 2, 3), ()),
            Bitableau((1, 2, 3), ()),
        )
        e = generator_diagram("e", 3)
        assert diagram_to_bitableaux(e)[0] == Bitableau((), (1, 2, 3))

    def test_generator_bitableaux(self):
        top, bottom = diagram_to_bitableaux(generator_diagram("U", 3, 1))
        assert top == Bitableau((1, 3), (2,))
        assert bottom == top

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_enumeration_matches_bijection(self, n):
        diagrams = blob_diagrams(n)
        assert len(diagrams) == len(set(diagrams)) == comb(2 * n, n)
        images = {diagram_to_bitableaux(d) for d in diagrams}
        assert len(images) == len(diagrams)
        for d in diagrams:
            assert bitableaux_to_diagram(*diagram_to_bitableaux(d)) == d
        assert {bitableaux_to_diagram(s, t) for s, t in images} == set(diagrams)

    def test_shapes_must_agree(self):
        with pytest.raises(ShapeMismatch):
            bitableaux_to_diagram(Bitableau((1,), (2,)), Bitableau((1, 2), ()))

    def test_tl_bijection(self):
        U1 = generator_diagram("U", 3, 1, blob=False)
        top, bottom = tl_bijection(U1)
        assert top == TwoColTableau((1, 3), (2,))
        assert tl_from_tableaux(top, bottom) == U1


class TestAscii:
    """Tests for the bracket rendering."""

    def test_render_blob_generator(self):
        assert render_ascii(generator_diagram("e", 2)) == "top |*|\nbot | |"

    def test_render_cup_cap(self):
        assert render_ascii(generator_diagram("U", 2, 1)) == "top ( )\nbot ( )"

    def test_parse(self):
        assert parse_ascii("top |*|\nbot | |", 2) == generator_diagram("e", 2)
        assert parse_ascii("top ( )\nbot ( )", 2, blob=False) == generator_diagram(
            "U", 2, 1, blob=False
        )

    def test_parse_rejects_unknown_symbol(self):
        with pytest.raises(InvalidDiagram):
            parse_ascii("top x \nbot | ", 1)


class TestWorkedExamples:
    """Diagrams with known products and tableaux."""

    def test_tl7_product_closes_one_loop(self):
        x = TLDiagram(7, ((1, 12), (2, 7), (3, 4), (5, 6), (8, 11), (9, 10), (13, 14)))
        y = TLDiagram(7, ((1, 2), (3, 4), (5, 10), (6, 11), (7, 12), (8, 9), (13, 14)))
        expected = TLDiagram(7, ((1, 10), (2, 7), (3, 4), (5, 6), (8, 9), (11, 12), (13, 14)))
        assert concat_tl(x, y) == (expected, 1)

    def test_tl7_tableaux(self):
        beta = TLDiagram(7, ((1, 10), (2, 7), (3, 4), (5, 6), (8, 9), (11, 12), (13, 14)))
        top = TwoColTableau((1, 2, 3, 5), (4, 6, 7))
        bottom = TwoColTableau((1, 3, 4, 6), (2, 5, 7))
        assert tl_bijection(beta) == (top, bottom)
        assert tl_from_tableaux(top, bottom) == beta

    def test_blob11_bitableaux(self):
        """Decorated through line, two decorated arcs on each edge and nested arcs below them."""
        m = BlobDiagram(
            11,
            (
                (1, 4), (2, 3), (5, 10), (6, 7), (8, 9), (11, 16),
                (12, 13), (14, 15), (17, 18), (19, 22), (20, 21),
            ),
            frozenset({1, 5, 11, 12, 14}),
        )
        top = Bitableau((3, 4, 7, 9, 10), (1, 2, 5, 6, 8, 11))
        bottom = Bitableau((2, 4, 7, 10, 11), (1, 3, 5, 6, 8, 9))
        assert diagram_to_bitableaux(m) == (top, bottom)
        assert bitableaux_to_diagram(top, bottom) == m
