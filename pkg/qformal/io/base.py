# base.py - basic input and output.

# Matrices are stored as {"rows": n, "cols": m, "data": [[re, im], ...]},
# row-major; every other file format nests that one.


import json
import numpy as np
import pandas as pd
import sys

from logging import debug, error
from ..utils.base import assert_e
from ..utils.errors import InvalidMatrix, InvalidState
from ..utils.xmatrix import as_matrix, ket2dm


def load_list_from_str(s, sep = ","):
    """Split the string into a list.

    Parameters
    ----------
    s : str
        The string to be splitted.
    sep : str, default ","
        The delimiter.

    Returns
    -------
    list of str
        A list of strings extracted from `s`.
    """
    dat = [x.strip('"').strip("'") for x in s.split(sep)]
    return(dat)


def load_json(fn):
    """Load a JSON file.

    Raises
    ------
    FileNotFoundError
        If `fn` does not exist.
    json.JSONDecodeError
        If `fn` is not valid JSON.
    """
    assert_e(fn)
    with open(fn, "r") as fp:
        dat = json.load(fp)
    debug("loaded JSON file '%s'." % fn)
    return(dat)


def save_json(dat, fn):
    with open(fn, "w") as fp:
        json.dump(dat, fp, sort_keys = True, indent = 2)


### Matrices

def _entry(x):
    if isinstance(x, (list, tuple)):
        if len(x) != 2:
            raise InvalidMatrix("matrix entries should be [re, im].")
        return(complex(float(x[0]), float(x[1])))
    return(complex(float(x)))


def matrix_from_dict(d, name = "matrix"):
    """Parse the matrix JSON object.

    Parameters
    ----------
    d : dict
        With keys "rows", "cols" and "data"; each entry of "data" is
        `[re, im]` or a real number.
    name : str
        Used in diagnostics.

    Returns
    -------
    numpy.ndarray
        A `rows x cols` complex matrix.

    Raises
    ------
    InvalidMatrix
    """
    if not isinstance(d, dict) or not all(k in d for k in ("rows", "cols", "data")):
        error("%s should be an object with 'rows', 'cols' and 'data'." % name)
        raise InvalidMatrix("malformed %s object." % name)
    n, m = int(d["rows"]), int(d["cols"])
    data = d["data"]
    if n < 1 or m < 1 or len(data) != n * m:
        error("%s: %d entries for a %dx%d matrix." % (name, len(data), n, m))
        raise InvalidMatrix("%s has the wrong number of entries." % name)
    M = np.array([_entry(x) for x in data], dtype = complex).reshape(n, m)
    return(as_matrix(M, name))


def matrix_to_dict(M):
    M = np.asarray(M, dtype = complex)
    if M.ndim == 1:
        M = M.reshape(-1, 1)
    return({
        "rows": int(M.shape[0]),
        "cols": int(M.shape[1]),
        "data": [[float(np.real(x)), float(np.imag(x))] for x in M.reshape(-1)]
    })


def load_matrix(fn, name = None):
    return(matrix_from_dict(load_json(fn), name if name else fn))


def save_matrix(M, fn):
    save_json(matrix_to_dict(M), fn)


def load_vector(fn):
    """A `n x 1` or `1 x n` matrix file as a 1d array."""
    M = load_matrix(fn)
    if 1 not in M.shape:
        error("'%s' holds a %dx%d matrix, not a vector." % (fn, *M.shape))
        raise InvalidMatrix("'%s' is not a vector." % fn)
    return(M.reshape(-1))


def load_state(fn):
    """A density matrix from a file holding either a density matrix or a
    state vector (converted to |ψ⟩⟨ψ|)."""
    M = load_matrix(fn)
    if M.shape[1] == 1 or M.shape[0] == 1:
        return(ket2dm(M.reshape(-1)))
    return(M)


### Algebras and states

def load_algebra(fn):
    """{"blocks": [n_1, ...]} as a BlockAlgebra."""
    from ..algebra.block import BlockAlgebra
    d = load_json(fn)
    if not isinstance(d, dict) or "blocks" not in d:
        raise InvalidState("algebra file '%s' misses 'blocks'." % fn)
    return BlockAlgebra(d["blocks"])


def load_algebra_state(fn, algebra, admit = None):
    """{"weights": [...], "densities": [matrix, ...]} as an AlgebraState.

    `admit`, if given, maps each loaded density before validation.
    """
    from ..algebra.block import AlgebraState
    d = load_json(fn)
    if not isinstance(d, dict) or "weights" not in d or "densities" not in d:
        raise InvalidState("state file '%s' misses 'weights' or 'densities'." \
            % fn)
    rhos = [matrix_from_dict(x, "density %d" % i) \
            for i, x in enumerate(d["densities"])]
    if admit is not None:
        rhos = [admit(r) for r in rhos]
    return AlgebraState(algebra, d["weights"], rhos)


def algebra_state_to_dict(state):
    return({
        "weights": [float(w) for w in state.weights],
        "densities": [matrix_to_dict(r) for r in state.densities]
    })


### Other domain files

def load_lattice(fn):
    from ..logic.lattice import FiniteLattice
    return FiniteLattice.from_dict(load_json(fn))


def load_directions(fn):
    """{"a": [x, y, z], "a_prime": ..., "b": ..., "b_prime": ...}."""
    from ..bell.chsh import MeasurementDirections
    d = load_json(fn)
    try:
        return MeasurementDirections.from_dict(d)
    except (KeyError, TypeError) as e:
        error("directions file '%s' is malformed (%s)." % (fn, str(e)))
        raise InvalidMatrix("malformed directions file '%s'." % fn)


def load_frame_sample(fn):
    """{"rays": [[c_1, ..., c_d], ...], "values": [...]} where each
    component is a real number or [re, im]."""
    from ..born.frame import FrameSample
    d = load_json(fn)
    if not isinstance(d, dict) or "rays" not in d or "values" not in d:
        raise InvalidMatrix("frame sample '%s' misses 'rays' or 'values'." % fn)
    rays = [[_entry(x) for x in r] for r in d["rays"]]
    return FrameSample(rays, d["values"])


def frame_sample_to_dict(sample):
    return({
        "rays": [[[float(np.real(x)), float(np.imag(x))] for x in r] \
                 for r in sample.rays],
        "values": [float(v) for v in sample.values]
    })


### Results

def to_jsonable(x):
    """Convert numpy scalars and arrays, DataFrames and nested containers
    into plain JSON types; complex arrays become matrix objects."""
    if isinstance(x, dict):
        return({str(k): to_jsonable(v) for k, v in x.items()})
    if isinstance(x, (list, tuple)):
        return([to_jsonable(v) for v in x])
    if isinstance(x, pd.DataFrame):
        return(to_jsonable(x.to_dict(orient = "records")))
    if isinstance(x, np.ndarray):
        if np.iscomplexobj(x):
            if np.all(np.imag(x) == 0) and x.ndim == 1:
                return(np.real(x).tolist())
            return(matrix_to_dict(x))
        return(x.tolist())
    if isinstance(x, (np.bool_, bool)):
        return(bool(x))
    if isinstance(x, np.integer):
        return(int(x))
    if isinstance(x, (np.floating, float)):
        x = float(x)
        if np.isinf(x):
            return("inf" if x > 0 else "-inf")
        return(x)
    if isinstance(x, (complex, np.complexfloating)):
        return([float(np.real(x)), float(np.imag(x))])
    return(x)


def format_json(res, config_echo):
    """Deterministic JSON text: sorted keys plus the "config" block."""
    dat = to_jsonable(res)
    dat["config"] = config_echo
    return(json.dumps(dat, sort_keys = True, indent = 2) + "\n")


def result_table(res):
    """The DataFrame written in CSV mode: `res["table"]` if present, else
    the scalar entries of `res` as one row."""
    if isinstance(res.get("table"), pd.DataFrame):
        return(res["table"])
    row = {}
    for k, v in sorted(res.items()):
        v = to_jsonable(v)
        if isinstance(v, (int, float, str, bool)) or v is None:
            row[k] = v
    return(pd.DataFrame([row]))


def format_pretty(res, prefix = ""):
    s = ""
    for k, v in sorted(res.items()):
        if isinstance(v, pd.DataFrame):
            s += "%s%s:\n%s\n" % (prefix, k, v.to_string(index = False))
        elif isinstance(v, dict):
            s += "%s%s:\n" % (prefix, k)
            s += format_pretty(v, prefix + "    ")
        else:
            v = to_jsonable(v)
            if isinstance(v, float):
                s += "%s%s = %.12g\n" % (prefix, k, v)
            else:
                s += "%s%s = %s\n" % (prefix, k, v)
    return(s)


def write_result(res, conf, fp = None):
    """Write a result dict in the format `conf.output`.

    Parameters
    ----------
    res : dict
        The result.
    conf : qformal.config.Config
        Gives the output format, the output path and the config echo.
    fp : file object or None
        Overrides `conf.output_path`; standard output when both are None.
    """
    if conf.output == "json":
        s = format_json(res, conf.echo())
    elif conf.output == "csv":
        s = result_table(res).to_csv(index = False)
    else:
        s = format_pretty(res)

    if fp is not None:
        fp.write(s)
    elif conf.output_path:
        with open(conf.output_path, "w") as out:
            out.write(s)
    else:
        sys.stdout.write(s)
