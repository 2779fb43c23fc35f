"""CSV writer contract: cell formats, sidecar metadata, atomic replacement."""

import json
import math
import os

import numpy as np
import pytest

from helix_spectra.output import format_cell, meta_path_for, write_csv


def test_format_cell_basics():
    assert format_cell(None) == ""
    assert format_cell(True) == "true"
    assert format_cell(False) == "false"
    assert format_cell(1.0) == "1"
    assert format_cell(0.5) == "0.5"
    assert format_cell(3) == "3"
    assert format_cell("branch") == "branch"


def test_format_cell_round_trips_floats():
    for v in (0.8541019662496845, -1.6180339887498949, 1e-300, 2.5e17, math.pi):
        assert float(format_cell(v)) == v
    assert float(format_cell(np.float64(0.1))) == 0.1


def test_meta_path_keeps_dotted_stems(tmp_path):
    assert meta_path_for(tmp_path / "a.csv").name == "a.meta.json"
    assert meta_path_for(tmp_path / "a.b.csv").name == "a.b.meta.json"


def test_write_csv_products(tmp_path):
    path = tmp_path / "out" / "table.csv"
    write_csv(path, ["a", "b", "c"], [[1.0, None, True], [0.25, "x", False]], {"k": [1, 2]})
    assert path.read_text() == "a,b,c\n1,,true\n0.25,x,false\n"
    assert b"\r" not in path.read_bytes()
    meta = json.loads((tmp_path / "out" / "table.meta.json").read_text())
    assert meta == {"k": [1, 2]}


def test_meta_sidecar_is_sorted_and_indented(tmp_path):
    write_csv(tmp_path / "t.csv", ["a"], [[1.0]], {"zz": 1, "aa": 2})
    body = (tmp_path / "t.meta.json").read_text()
    assert body.index('"aa"') < body.index('"zz"')
    assert body.startswith("{\n  ")


def test_row_width_mismatch(tmp_path):
    with pytest.raises(ValueError):
        write_csv(tmp_path / "bad.csv", ["a", "b"], [[1.0]], {})


def test_overwrite_leaves_no_temp_files(tmp_path):
    path = tmp_path / "x.csv"
    write_csv(path, ["a"], [[1.0]], {})
    write_csv(path, ["a"], [[2.0]], {})
    assert sorted(os.listdir(tmp_path)) == ["x.csv", "x.meta.json"]
    assert path.read_text() == "a\n2\n"
