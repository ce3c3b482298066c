"""Tests for the graded cellular basis and the worked examples."""

import shutil
from dataclasses import replace

import pytest

from blobalg.core.constants import GOLDEN_DIR, GOLDEN_FILES
from blobalg.core.exceptions import ShapeMismatch
from blobalg.core.golden import load_golden, save_golden
from blobalg.core.graded_basis import (
    GradedCellModule,
    golden_examples,
    graded_dimensions,
    klr_star,
    match_up_to_scalar,
    psi_basis,
    psi_basis_element,
    psi_coordinates,
    psi_expansion,
    update_golden,
    verify_expression_independence,
    verify_graded_cellularity,
    verify_graded_dimensions,
    verify_import,
)
from blobalg.core.klr import klr_generators
from blobalg.core.tabcomb import Bitableau, OneLineBipartition, TwoColTableau, TwoColumnShape


class TestGradedCellModule:
    """Tests for graded dimension bookkeeping."""

    @pytest.mark.parametrize(
        "degrees,expected",
        [
            ([0, 0, 1], "2 + v"),
            ([-1, 0, 2], "v^-1 + 1 + v^2"),
            ([1, 1], "2*v"),
            ([], "0"),
        ],
    )
    def test_format(self, degrees, expected):
        module = GradedCellModule(None, (), degrees)
        assert module.format() == expected

    def test_evaluate(self):
        module = GradedCellModule(None, (), [-1, 0, 0, 2])
        assert module.polynomial() == {-1: 1, 0: 2, 2: 1}
        assert module.evaluate(1) == 4
        assert module.evaluate(2) == 1 / 2 + 2 + 4


def test_graded_dimensions_b3(b3_l5_m2):
    modules = graded_dimensions(b3_l5_m2)
    assert modules[OneLineBipartition(1, 2)].format() == "2 + v"
    assert modules[OneLineBipartition(2, 1)].format() == "3"
    assert modules[OneLineBipartition(3, 0)].format() == "1"
    assert verify_graded_dimensions(b3_l5_m2).passed


def test_graded_dimensions_tl3(tl3_l3):
    modules = graded_dimensions(tl3_l3)
    assert modules[TwoColumnShape(2, 1)].format() == "1 + v"
    assert verify_graded_dimensions(tl3_l3).passed


def test_match_up_to_scalar(tl3_l3):
    U1, U2 = tl3_l3.U(1), tl3_l3.U(2)
    three = tl3_l3.field.from_int(3)
    assert tl3_l3.field.equal(match_up_to_scalar(U1.scale(3), U1), three)
    assert match_up_to_scalar(U1, U2) is None
    assert match_up_to_scalar(tl3_l3.zero(), U1) is None
    assert match_up_to_scalar(U1 + U2, U1 + U2.scale(2)) is None


def test_psi_basis_shape_mismatch(b3_l5_m2):
    with pytest.raises(ShapeMismatch):
        psi_basis_element(b3_l5_m2, Bitableau((2,), (1, 3)), Bitableau((1, 2, 3), ()))


def test_psi_of_maximal_pair_is_unit_multiple(b3_l5_m2):
    """psi of (t^shape, t^shape) is e(i^shape), a multiple of m modulo the cell ideal."""
    shape = OneLineBipartition(1, 2)
    top = b3_l5_m2.max_tableau(shape)
    b = psi_basis_element(b3_l5_m2, top, top)
    assert b.degree == 0
    reduced = b3_l5_m2.reduce_mod_cell_ideal(b.element, shape)
    assert reduced.support() == [b3_l5_m2.label_index[(top, top)]]


def test_psi_degree(b3_l5_m2):
    s = Bitableau((3,), (1, 2))
    assert psi_basis_element(b3_l5_m2, s, s).degree == 2


def test_psi_coordinates_recover_basis(tl3_l3):
    shape = TwoColumnShape(2, 1)
    basis = psi_basis(tl3_l3)
    for (s, t), b in basis.items():
        if s.shape != shape:
            continue
        coords = psi_coordinates(tl3_l3, b.element, shape)
        assert list(coords) == [(s, t)]
        assert tl3_l3.field.equal(coords[(s, t)], tl3_l3.field.one)


@pytest.mark.parametrize("shape", [OneLineBipartition(1, 2), OneLineBipartition(3, 0)])
def test_import_blob(b3_l5_m2, shape):
    report = verify_import(b3_l5_m2, shape)
    assert report.passed, report.failures()


def test_import_tl(tl3_l3):
    assert verify_import(tl3_l3, TwoColumnShape(2, 1)).passed


def test_graded_cellularity_tl3(tl3_l3):
    report = verify_graded_cellularity(tl3_l3)
    assert report.passed, report.failures()


@pytest.mark.slow
def test_graded_cellularity_b3(b3_l5_m2):
    report = verify_graded_cellularity(b3_l5_m2, workers=2)
    assert report.passed, report.failures()


def test_expression_independence(b3_l5_m2):
    assert verify_expression_independence(b3_l5_m2).passed


@pytest.mark.golden
def test_golden_examples():
    report = golden_examples()
    assert report.passed, report.failures()


@pytest.mark.golden
def test_update_golden(tmp_path):
    for filename in GOLDEN_FILES.values():
        shutil.copy(GOLDEN_DIR / filename, tmp_path / filename)
    assert update_golden(tmp_path) == ""

    data = load_golden("tl3_l3", tmp_path)
    data["anchors"] = {name: None for name in data["anchors"]}
    save_golden("tl3_l3", data, tmp_path)
    assert not golden_examples(tmp_path).passed

    diff = update_golden(tmp_path)
    assert "anchors" in diff
    assert '-    "st": null' in diff
    stored = load_golden("tl3_l3", tmp_path)["anchors"]
    assert set(stored) == {"st", "ts", "tt"}
    assert all(v is not None for v in stored.values())
    assert update_golden(tmp_path) == ""
    assert golden_examples(tmp_path).passed


@pytest.mark.golden
@pytest.mark.parametrize("name", ["tl3_l3", "b3_l5_m2"])
def test_every_scaled_example_has_an_anchor(name):
    data = load_golden(name)
    scaled = [e["name"] for e in data["elements"] if e["match"] == "up_to_scalar"]
    assert scaled
    for element in scaled:
        assert data["anchors"].get(element) is not None, element


@pytest.mark.golden
def test_wrong_anchor_fails(tmp_path):
    for filename in GOLDEN_FILES.values():
        shutil.copy(GOLDEN_DIR / filename, tmp_path / filename)
    data = load_golden("b3_l5_m2", tmp_path)
    data["anchors"]["t.lam"] = "1"
    save_golden("b3_l5_m2", data, tmp_path)

    report = golden_examples(tmp_path)
    assert [c.name for c in report.failures()] == ["b3_l5_m2: psi[t.lam] anchor"]


class TestKLRStar:
    """Tests for the anti-automorphism psi_st -> psi_ts."""

    def test_fixes_generators(self, tl3_l3, b3_l5_m2):
        for algebra in (tl3_l3, b3_l5_m2):
            gens = klr_generators(algebra)
            for g in [*gens.y, *gens.psi, *(gens.idempotents.e(i) for i in gens.idempotents)]:
                assert klr_star(algebra, g) == g

    def test_differs_from_diagram_flip(self, tl3_l3):
        """psi_2 of TL_3 at l = 3 is not fixed by the flip of diagrams."""
        psi2 = klr_generators(tl3_l3).psi[1]
        assert not psi2.is_zero()
        assert psi2.star() != psi2
        assert klr_star(tl3_l3, psi2) == psi2

    def test_corner_scalar_tl3(self, tl3_l3):
        s, t = TwoColTableau((1, 3), (2,)), TwoColTableau((1, 2), (3,))
        F = tl3_l3.field
        flipped = psi_basis_element(tl3_l3, s, t).element.star()
        assert psi_basis_element(tl3_l3, t, s).element == flipped.scale(F.q - F.q**2)

    def test_expansion_of_basis_elements(self, tl3_l3):
        basis = psi_basis(tl3_l3)
        for (s, t), b in basis.items():
            coords = psi_expansion(tl3_l3, b.element)
            assert list(coords) == [(s, t)]
            assert tl3_l3.field.equal(coords[(s, t)], tl3_l3.field.one)


class TestHomogeneity:
    """The degree check multiplies by y_r and psi_r and reads off the degrees."""

    def test_y_raises_degree_by_two(self, tl3_l3):
        basis = psi_basis(tl3_l3)
        nonzero = 0
        for b in basis.values():
            for y in klr_generators(tl3_l3).y:
                product = psi_expansion(tl3_l3, y * b.element)
                assert {basis[pair].degree for pair in product} <= {b.degree + 2}
                nonzero += bool(product)
        assert nonzero

    def test_wrong_degree_is_detected(self, tl3_l3, mocker):
        s, t = TwoColTableau((1, 3), (2,)), TwoColTableau((1, 2), (3,))
        basis = dict(psi_basis(tl3_l3))
        basis[(t, s)] = replace(basis[(t, s)], degree=basis[(t, s)].degree + 2)
        mocker.patch("blobalg.core.graded_basis.psi_basis", return_value=basis)

        report = verify_graded_cellularity(tl3_l3)
        assert [c.name for c in report.failures()] == ["homogeneity"]
