# utils.py - help functions for tests.


import json
import numpy as np
import os

from ..io.base import matrix_to_dict
from ..main import dispatch
from ..utils.xmatrix import max_abs


def assert_close(A, B, tol):
    """Assert ‖A − B‖_max < `tol`."""
    d = max_abs(np.asarray(A) - np.asarray(B))
    assert d < tol, "max deviation %.3g >= %.3g" % (d, tol)


def write_json(dat, tmp_dir, name):
    fn = os.path.join(str(tmp_dir), name)
    with open(fn, "w") as fp:
        json.dump(dat, fp)
    return(fn)


def write_matrix(M, tmp_dir, name):
    return(write_json(matrix_to_dict(M), tmp_dir, name))


def run_cli(argv, capsys):
    """Run the command line and return (exit code, stdout, stderr)."""
    code = dispatch([str(x) for x in argv])
    out = capsys.readouterr()
    return((code, out.out, out.err))


def run_cli_json(argv, capsys):
    code, out, err = run_cli(argv, capsys)
    assert code == 0, err
    return(json.loads(out))
