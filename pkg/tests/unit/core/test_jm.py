"""Tests for the Jucys-Murphy elements and the seminormal layer."""

import pytest

from blobalg.core.algebra import make_algebra
from blobalg.core.coeffs import cyclotomic_field
from blobalg.core.exceptions import IndexOutOfRange, SeparationFailure
from blobalg.core.jm import (
    calibrated_contents,
    jm_by_hecke,
    jm_by_product,
    jm_element,
    jm_matrix,
    left_multiply_jm,
    right_multiply_jm,
    seminormal,
    verify_calibrated_contents,
    verify_commutation,
    verify_hecke_images,
    verify_order_property,
    verify_seminormal,
    verify_triangularity,
)
from blobalg.core.tabcomb import Bitableau, OneLineBipartition, TwoColTableau


TRIANGULARITY_PARAMETERS = [("tl", 3, 0), ("tl", 5, 0), ("blob", 5, 2), ("blob", 7, 3)]


def test_first_jm_element(b2_generic):
    K = b2_generic.field
    e = b2_generic.e()
    L1 = jm_element(b2_generic, 1)
    assert L1 == (b2_generic.one() - e).scale(K.Q) + e.scale(K.Q**-1)


def test_first_jm_element_tl(tl3_generic):
    assert jm_element(tl3_generic, 1) == tl3_generic.one()


def test_jm_index_out_of_range(b2_generic):
    with pytest.raises(IndexOutOfRange):
        jm_element(b2_generic, 3)
    with pytest.raises(IndexOutOfRange):
        jm_element(b2_generic, 0)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_three_constructions_agree(b3_generic, k):
    L = jm_element(b3_generic, k)
    assert jm_by_product(b3_generic, k) == L
    assert jm_by_hecke(b3_generic, k) == L


@pytest.mark.parametrize("k", [1, 2, 3])
def test_hecke_construction_tl(tl3_generic, k):
    assert jm_by_hecke(tl3_generic, k) == jm_element(tl3_generic, k)


def test_sparse_multiplication(b3_generic):
    x = b3_generic.U(1) * b3_generic.e() + b3_generic.U(2)
    for k in range(1, 4):
        L = jm_element(b3_generic, k)
        assert left_multiply_jm(x, k) == L * x
        assert right_multiply_jm(x, k) == x * L


@pytest.mark.parametrize("kind", ["tl", "blob"])
def test_commutation(kind, generic):
    report = verify_commutation(make_algebra(kind, 3, generic))
    assert report.passed, report.failures()


def test_commutation_at_root_of_unity(b3_l5_m2):
    assert verify_commutation(b3_l5_m2).passed


@pytest.mark.parametrize("kind", ["tl", "blob"])
def test_triangularity(kind, generic):
    report = verify_triangularity(make_algebra(kind, 3, generic))
    assert report.passed, report.failures()


def test_contents_of_maximal_tableau(b2_generic):
    K = b2_generic.field
    top = Bitableau((2,), (1,))
    contents = calibrated_contents(b2_generic)
    assert contents[(top, 1)] == K.Q**-1
    assert contents[(top, 2)] == K.Q


def test_calibrated_contents_tl(tl3_generic):
    assert verify_calibrated_contents(tl3_generic).passed
    K = tl3_generic.field
    assert calibrated_contents(tl3_generic)[(TwoColTableau((1, 3), (2,)), 2)] == K.q**2


def test_order_property(b3_generic):
    assert verify_order_property(b3_generic).passed


@pytest.mark.parametrize("kind", ["tl", "blob"])
def test_hecke_images(kind, generic):
    report = verify_hecke_images(make_algebra(kind, 3, generic))
    assert report.passed, report.failures()


def test_jm_matrix_is_triangular_on_cell_module(b2_generic):
    shape = OneLineBipartition(1, 1)
    matrix = jm_matrix(b2_generic, shape, 2)
    tableaux = b2_generic.tableaux(shape)
    K = b2_generic.field
    for j, t in enumerate(tableaux):
        assert matrix[j][j] == t.content(2, K)


def test_seminormal_b2(b2_generic):
    report = verify_seminormal(b2_generic)
    assert report.passed, report.failures()


def test_seminormal_tl3(tl3_generic):
    report = verify_seminormal(tl3_generic)
    assert report.passed, report.failures()


def test_gamma_of_maximal_tableau(b2_generic):
    """gamma of the maximal tableau of ((1),(1)) is the decorated loop value."""
    data = seminormal(b2_generic)
    gamma = data.gamma(Bitableau((2,), (1,)))
    assert gamma == b2_generic.field.blob_parameter()


def test_seminormal_requires_generic_field(b2_l5_m2):
    with pytest.raises(SeparationFailure, match="generic"):
        seminormal(b2_l5_m2)


def test_gamma_table_csv(b2_generic):
    lines = seminormal(b2_generic).gamma_table_csv().splitlines()
    assert lines[0] == "tableau,gamma"
    assert len(lines) == 1 + 4


def test_seminormal_checks_the_f_basis(b2_generic):
    names = [c.name for c in verify_seminormal(b2_generic).checks]
    assert "f_tt / gamma_t sum to 1" in names
    assert "f_ss f_tt = 0" in names


@pytest.mark.slow
@pytest.mark.parametrize("kind,n", [(kind, n) for kind in ("tl", "blob") for n in (1, 2, 3, 4)])
def test_triangularity_generic_up_to_4(kind, n, generic):
    report = verify_triangularity(make_algebra(kind, n, generic))
    assert report.passed, report.failures()


@pytest.mark.slow
@pytest.mark.parametrize(
    "kind,n,l,m",
    [(kind, n, l, m) for kind, l, m in TRIANGULARITY_PARAMETERS for n in (1, 2, 3, 4)],
)
def test_triangularity_at_root_of_unity_up_to_4(kind, n, l, m):
    report = verify_triangularity(make_algebra(kind, n, cyclotomic_field(l, m)))
    assert report.passed, report.failures()


@pytest.mark.slow
@pytest.mark.parametrize("kind,n", [(kind, n) for kind in ("tl", "blob") for n in (2, 3, 4)])
def test_seminormal_up_to_4(kind, n, generic):
    report = verify_seminormal(make_algebra(kind, n, generic))
    assert report.passed, report.failures()
