"""Tests for the golden corpus file handling."""

import json

import pytest

from blobalg.core.exceptions import ConfigurationError
from blobalg.core.golden import diff_golden, golden_path, load_golden, save_golden


def test_shipped_files_load():
    data = load_golden("tl3_l3")
    assert data["algebra"] == "tl"
    assert (data["n"], data["l"]) == (3, 3)
    assert load_golden("b3_l5_m2")["m"] == 2


def test_unknown_name():
    with pytest.raises(ConfigurationError, match="Unknown golden file"):
        golden_path("b9")


def test_missing_file(tmp_path):
    with pytest.raises(ConfigurationError, match="Golden file not found"):
        load_golden("tl3_l3", tmp_path)


def test_invalid_json(tmp_path):
    (tmp_path / "tl3_l3.json").write_text("{not json")
    with pytest.raises(ConfigurationError, match="Invalid JSON"):
        load_golden("tl3_l3", tmp_path)


def test_save_and_diff(tmp_path):
    old = {"name": "tl3_l3", "anchors": {"st": None}}
    new = {"name": "tl3_l3", "anchors": {"st": "1"}}
    path = save_golden("tl3_l3", new, tmp_path / "v1")
    assert json.loads(path.read_text()) == new
    diff = diff_golden(old, new, "tl3_l3")
    assert '-    "st": null' in diff
    assert '+    "st": "1"' in diff
    assert diff_golden(new, new) == ""
