# test_io.py - tests of the file formats and result writers.


import io
import json
import numpy as np
import pandas as pd
import pytest

from ..config import Config
from ..io.base import format_json, load_json, load_list_from_str, \
    load_state, load_vector, matrix_from_dict, matrix_to_dict, \
    result_table, to_jsonable, write_result
from ..utils.errors import InvalidMatrix
from .utils import write_json, write_matrix


def test_load_list_from_str():
    assert load_list_from_str("'a',\"b\",c") == ["a", "b", "c"]
    assert load_list_from_str("x;y", sep = ";") == ["x", "y"]


def test_matrix_dict():
    d = {"rows": 2, "cols": 2, "data": [[1, 0], [0, -1], [0, 1], 2]}
    M = matrix_from_dict(d)
    assert M[0, 1] == -1j and M[1, 0] == 1j and M[1, 1] == 2
    assert np.array_equal(matrix_from_dict(matrix_to_dict(M)), M)


@pytest.mark.parametrize("d", [
    [1, 2],
    {"rows": 2, "data": [1, 2, 3, 4]},
    {"rows": 2, "cols": 2, "data": [1, 2, 3]},
    {"rows": 1, "cols": 1, "data": [[1, 2, 3]]},
    {"rows": 1, "cols": 1, "data": [float("nan")]},
])
def test_matrix_dict_errors(d):
    with pytest.raises(InvalidMatrix):
        matrix_from_dict(d)


def test_load_missing(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_json(str(tmp_path / "none.json"))


def test_load_state_from_vector(tmp_path):
    psi = np.array([1, 1j]) / np.sqrt(2)
    fn = write_matrix(psi, tmp_path, "psi.json")
    assert np.allclose(load_vector(fn), psi)
    rho = load_state(fn)
    assert rho.shape == (2, 2)
    assert np.allclose(rho, np.outer(psi, np.conj(psi)))
    fn = write_matrix(np.eye(2) / 2, tmp_path, "rho.json")
    assert np.allclose(load_state(fn), np.eye(2) / 2)
    with pytest.raises(InvalidMatrix):
        load_vector(fn)


def test_to_jsonable():
    dat = {
        1: np.float64(np.inf),
        "b": np.bool_(True),
        "c": np.arange(3),
        "d": np.array([[1j, 0], [0, 1]]),
        "e": pd.DataFrame({"x": [1, 2]}),
        "f": (np.int64(2), 1 + 2j),
        "g": -float("inf")
    }
    res = to_jsonable(dat)
    assert res["1"] == "inf" and res["g"] == "-inf"
    assert res["b"] is True
    assert res["c"] == [0, 1, 2]
    assert res["d"]["rows"] == 2 and res["d"]["data"][0] == [0.0, 1.0]
    assert res["e"] == [{"x": 1}, {"x": 2}]
    assert res["f"] == [2, [1.0, 2.0]]
    json.dumps(res)


def test_format_json():
    conf = Config()
    s = format_json({"z": 1.0, "a": np.array([1.0, 2.0])}, conf.echo())
    dat = json.loads(s)
    assert list(dat.keys()) == ["a", "config", "z"]
    assert dat["config"]["seed"] == 0
    assert s == format_json({"a": np.array([1.0, 2.0]), "z": 1.0}, conf.echo())


def test_result_table():
    df = pd.DataFrame({"N": [1, 2]})
    assert result_table({"table": df, "x": 1}) is df
    row = result_table({"x": 1.5, "m": [1, 2], "s": "ok"})
    assert list(row.columns) == ["s", "x"]


def test_write_result_formats(tmp_path):
    conf = Config()
    res = {"value": 2.5, "nested": {"k": 1}}
    fp = io.StringIO()
    write_result(res, conf, fp)
    assert json.loads(fp.getvalue())["nested"] == {"k": 1}

    conf.output = "csv"
    fp = io.StringIO()
    write_result(res, conf, fp)
    assert fp.getvalue().strip().splitlines() == ["value", "2.5"]

    conf.output = "pretty"
    fp = io.StringIO()
    write_result(res, conf, fp)
    assert fp.getvalue() == "nested:\n    k = 1\nvalue = 2.5\n"

    conf.output = "json"
    conf.output_path = str(tmp_path / "out.json")
    write_result(res, conf)
    with open(conf.output_path) as f:
        assert json.load(f)["value"] == 2.5


def test_write_json_helper(tmp_path):
    fn = write_json({"a": 1}, tmp_path, "a.json")
    assert load_json(fn) == {"a": 1}
