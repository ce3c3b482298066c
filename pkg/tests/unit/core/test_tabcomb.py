"""Tests for bipartitions, tableaux, orders, residues and degrees."""

import pytest

from blobalg.core.coeffs import generic_field
from blobalg.core.exceptions import InvalidTableau, ShapeMismatch
from blobalg.core.tabcomb import (
    Bitableau,
    OneLineBipartition,
    TwoColTableau,
    TwoColumnShape,
    all_standard_bitableaux,
    blob_dominates,
    degree,
    hook_expressions,
    max_tableau,
    pascal_count,
    pascal_table,
    reduced_expression,
    residue_sequence,
    shapes,
    standard_bitableaux,
    tilde,
    tl_dominance_geq,
    tl_max_tableau,
    tl_shapes,
    two_column_tableaux,
    walk,
)


def test_shapes_highest_first():
    assert shapes(3) == [
        OneLineBipartition(1, 2),
        OneLineBipartition(2, 1),
        OneLineBipartition(0, 3),
        OneLineBipartition(3, 0),
    ]
    assert shapes(0) == [OneLineBipartition(0, 0)]


def test_tl_shapes_most_dominant_first():
    assert tl_shapes(3) == [TwoColumnShape(2, 1), TwoColumnShape(3, 0)]
    assert tl_shapes(4)[0].partition == (2, 2)


def test_from_f_rejects_wrong_parity():
    assert OneLineBipartition.from_f(3, -1) == OneLineBipartition(1, 2)
    with pytest.raises(InvalidTableau):
        OneLineBipartition.from_f(3, 2)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_pascal_counts_match_enumeration(n):
    for shape in shapes(n):
        assert len(standard_bitableaux(shape)) == pascal_count(n, shape.f)
    assert len(all_standard_bitableaux(n)) == 2**n


def test_pascal_table_rows():
    table = pascal_table(4)
    assert table[4, 4] == 6
    assert table[3, 4 + 1] == 3
    assert table[4].sum() == 16


def test_max_tableau_first_and_maximal():
    shape = OneLineBipartition(1, 2)
    tableaux = standard_bitableaux(shape)
    assert tableaux[0] == max_tableau(shape) == Bitableau((2,), (1, 3))
    for t in tableaux:
        assert blob_dominates(tableaux[0], t)


def test_tl_max_tableau_is_row_reading():
    shape = TwoColumnShape(3, 2)
    top = tl_max_tableau(shape)
    assert top.rows == [[1, 2], [3, 4], [5]]
    for t in two_column_tableaux(shape):
        assert tl_dominance_geq(top, t)


def test_blob_dominates_direction():
    s = Bitableau((2, 4, 5, 6, 8, 9), (1, 3, 7))
    t = Bitableau((1, 4, 5, 6, 7, 9), (2, 3, 8))
    assert blob_dominates(s, t)
    assert not blob_dominates(t, s)
    assert blob_dominates(t, t)

    tableaux = standard_bitableaux(OneLineBipartition(1, 2))
    for t in tableaux[1:]:
        assert not blob_dominates(t, tableaux[0])


def test_order_rejects_different_shapes():
    with pytest.raises(ShapeMismatch):
        blob_dominates(Bitableau((1,), (2,)), Bitableau((1, 2), ()))


def test_invalid_tableaux():
    with pytest.raises(InvalidTableau):
        Bitableau((2, 1), (3,))
    with pytest.raises(InvalidTableau):
        TwoColTableau((2,), (1,))


def test_walk_and_signs():
    t = Bitableau((1, 3), (2,))
    assert t.sequence == (0, 1, 0, 1)
    assert walk(t).signs == "+-+"
    assert walk(t).to_bitableau() == t
    assert Bitableau.from_signs("-++") == Bitableau((2, 3), (1,))


def test_swap_requires_different_components():
    t = Bitableau((1, 2), (3,))
    assert t.swap(2) == Bitableau((1, 3), (2,))
    with pytest.raises(InvalidTableau):
        t.swap(1)


def test_tilde():
    assert tilde(Bitableau((2,), (1, 3))) == TwoColTableau((1, 3), (2,))


def test_blob_contents():
    K = generic_field()
    t = Bitableau((2,), (1, 3))
    assert t.content(1, K) == K.Q**-1
    assert t.content(2, K) == K.Q
    assert t.content(3, K) == K.q**2 * K.Q**-1


def test_two_column_contents():
    K = generic_field()
    t = TwoColTableau((1, 3), (2,))
    assert t.content(1, K) == K.one
    assert t.content(2, K) == K.q**2
    assert t.content(3, K) == K.q**-2


def test_residues():
    assert residue_sequence(Bitableau((2,), (1, 3)), 5, 2) == (4, 1, 0)
    assert residue_sequence(Bitableau((1, 2, 3), ()), 5, 2) == (1, 2, 3)
    assert residue_sequence(TwoColTableau((1, 3), (2,)), 3) == (0, 1, 2)


def test_reduced_expression_reaches_tableau():
    for shape in shapes(4):
        for t in standard_bitableaux(shape):
            u = t.initial()
            for k in reduced_expression(t):
                u = u.swap(k)
            assert u == t


def test_reduced_expression_of_maximal_is_empty():
    shape = OneLineBipartition(2, 1)
    assert reduced_expression(max_tableau(shape)) == []
    assert degree(max_tableau(shape), 5, 2) == 0


def test_hook_expressions_contain_reduced_expression():
    for t in all_standard_bitableaux(4):
        words = hook_expressions(t)
        assert reduced_expression(t) in words


def test_degrees_b3():
    """Degrees of the tableaux of b_3 at (l, m) = (5, 2)."""
    assert degree(Bitableau((3,), (1, 2)), 5, 2) == 1
    assert degree(Bitableau((1,), (2, 3)), 5, 2) == 0
    assert degree(Bitableau((1, 2), (3,)), 5, 2) == 0


def test_degrees_tl3():
    assert degree(TwoColTableau((1, 3), (2,)), 3) == 0
    assert degree(TwoColTableau((1, 2), (3,)), 3) == 1
