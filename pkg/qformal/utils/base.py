# base.py - basic utils.


import numpy as np
import os

from logging import error
from .errors import UsageError


def assert_e(path):
    """Assert file or folder exists, mimicking shell "test -e".

    Raises
    ------
    FileNotFoundError
        If `path` is None or does not exist.
    """
    if path is None or not os.path.exists(path):
        error("file '%s' does not exist." % path)
        raise FileNotFoundError(path)


def is_scalar_numeric(x):
    """Test whether `x` is a scalar numeric value."""
    return np.isscalar(x) and np.issubdtype(type(x), np.number)


def is_vector(x):
    """Test whether `x` is a vector."""
    return isinstance(x, (list, tuple, np.ndarray))


def parse_dims(s):
    """Parse comma separated subsystem dimensions, e.g., "2,2,2".

    Parameters
    ----------
    s : str or list of int
        The dimensions.

    Returns
    -------
    list of int
        The parsed dimensions, each >= 1.
    """
    if is_vector(s):
        dims = [int(x) for x in s]
    else:
        try:
            dims = [int(x) for x in str(s).split(",") if x.strip()]
        except ValueError:
            error("invalid dimension list '%s'." % s)
            raise UsageError("invalid dimension list '%s'." % s)
    if len(dims) == 0 or min(dims) < 1:
        error("invalid dimension list '%s'." % s)
        raise UsageError("invalid dimension list '%s'." % s)
    return(dims)


def parse_key_value(s):
    """Split "KEY=VAL" into (key, float value)."""
    if "=" not in s:
        raise UsageError("expect KEY=VAL, got '%s'." % s)
    key, val = s.split("=", 1)
    try:
        val = float(val)
    except ValueError:
        raise UsageError("invalid value in '%s'." % s)
    return((key.strip(), val))
