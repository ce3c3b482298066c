"""Tests for the subcommand implementations."""

import csv
import io

import pytest

from blobalg.commands import (
    execute_dim,
    execute_gamma,
    execute_golden,
    execute_graded_dims,
    execute_gram,
    execute_jm_matrix,
    execute_mult,
    execute_psi_basis,
    execute_verify_jm,
    execute_verify_klr,
    execute_verify_relations,
)
from blobalg.core.config import RunConfig
from blobalg.core.exceptions import ConfigurationError


class TestDim:
    """Tests for the dim command."""

    def test_blob(self):
        result = execute_dim(RunConfig(n=3))
        assert result.data["dimension"] == 20
        assert result.data["cells"] == {
            "((1),(2))": 3,
            "((2),(1))": 3,
            "((0),(3))": 1,
            "((3),(0))": 1,
        }
        assert result.text.splitlines()[0] == "20"
        assert result.passed

    def test_tl(self):
        result = execute_dim(RunConfig(algebra="tl", n=4, l=3, m=0))
        assert result.data["dimension"] == 14
        assert result.data["cells"] == {"(2,2)": 2, "(2,1,1)": 3, "(1,1,1,1)": 1}


def test_mult_rows():
    result = execute_mult(RunConfig(n=2, field="generic"))
    rows = list(csv.DictReader(io.StringIO(result.csv)))
    assert len(rows) == 36
    assert len(result.data) == 36
    assert {"i", "j", "k", "scalar"} == set(result.data[0])


@pytest.mark.parametrize("run_config", [{"algebra": "tl", "n": 3}, {"n": 3}], indirect=True)
def test_verify_relations(run_config):
    result = execute_verify_relations(run_config)
    assert result.passed
    assert len(result.reports) == 4
    assert "FAIL" not in result.text


@pytest.mark.parametrize("run_config", [{"algebra": "tl", "n": 3}, {"n": 2}], indirect=True)
def test_verify_jm_generic(run_config):
    result = execute_verify_jm(run_config)
    assert result.passed
    assert result.reports[-1].title.startswith("seminormal basis")


def test_verify_klr_tl3():
    result = execute_verify_klr(RunConfig(algebra="tl", n=3, l=3, m=0))
    assert result.passed
    assert result.reports[0].title.startswith("KLR presentation")


def test_psi_basis_tl3_selected_shape():
    result = execute_psi_basis(RunConfig(algebra="tl", n=3, l=3, m=0, shape="2,1"))
    assert result.passed
    assert len(result.data) == 4
    assert {entry["degree"] for entry in result.data} == {0, 1, 2}


def test_gram_tl3():
    result = execute_gram(RunConfig(algebra="tl", n=3, l=3, m=0, shape="2,1"))
    assert result.data[0]["rank"] == 1
    assert result.text.startswith("(2,1): rank 1")


def test_graded_dims():
    result = execute_graded_dims(RunConfig(n=3))
    assert result.passed
    by_shape = {tuple(entry["shape"]): entry["graded_dimension"] for entry in result.data}
    assert by_shape[(1, 2)] == "2 + v"
    assert result.csv.splitlines()[0] == "shape,graded_dimension"


def test_jm_matrix_requires_k():
    with pytest.raises(ConfigurationError, match="requires --k"):
        execute_jm_matrix(RunConfig(n=2))


def test_jm_matrix():
    result = execute_jm_matrix(RunConfig(n=2, k=1, shape="1,1", field="generic"))
    assert len(result.data) == 1
    assert len(result.data[0]["matrix"]) == 2
    assert result.text.startswith("L1 on ((1),(1))")


def test_gamma():
    result = execute_gamma(RunConfig(n=2))
    assert len(result.data) == 4
    assert result.csv.splitlines()[0] == "tableau,gamma"


def test_unknown_shape_selector():
    with pytest.raises(ConfigurationError, match="is not a shape"):
        execute_gram(RunConfig(algebra="tl", n=3, l=3, m=0, shape="1,2"))


@pytest.mark.golden
def test_golden():
    result = execute_golden(RunConfig(subcommand="golden"))
    assert result.passed
    assert result.text.startswith("golden examples: ok")
