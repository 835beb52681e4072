# states.py - named states used as one-liners by the command line.


import numpy as np

from logging import error
from ..utils.errors import UnknownLabel, UsageError
from ..utils.xmatrix import ket2dm


def basis_vector(dim, i):
    v = np.zeros(dim, dtype = complex)
    v[i] = 1.0
    return(v)


def singlet_vector():
    """(|01⟩ − |10⟩)/√2."""
    return(np.array([0, 1, -1, 0], dtype = complex) / np.sqrt(2))


def bell_vector():
    """|Φ⁺⟩ = (|00⟩ + |11⟩)/√2."""
    return(np.array([1, 0, 0, 1], dtype = complex) / np.sqrt(2))


def ghz_vector(n = 3):
    """(|0…0⟩ + |1…1⟩)/√2 on `n` qubits."""
    v = np.zeros(2 ** n, dtype = complex)
    v[0] = v[-1] = 1 / np.sqrt(2)
    return(v)


def werner(p):
    """p |singlet⟩⟨singlet| + (1 − p) I/4, for p in [0, 1]."""
    p = float(p)
    if p < 0 or p > 1:
        error("werner parameter should be in [0, 1], got %g." % p)
        raise UsageError("werner parameter should be in [0, 1].")
    return(p * ket2dm(singlet_vector()) + (1 - p) * np.eye(4) / 4)


def named_state(name):
    """Look up a built-in state.

    Parameters
    ----------
    name : str
        One of "singlet", "bell", "ghz", "mixed" or "werner(p)" / "werner:p".

    Returns
    -------
    numpy.ndarray
        The density matrix.
    list of int
        The subsystem dimensions.

    Raises
    ------
    UnknownLabel
        If `name` is not a built-in state.
    """
    key = name.strip().lower()
    if key == "singlet":
        return((ket2dm(singlet_vector()), [2, 2]))
    elif key == "bell":
        return((ket2dm(bell_vector()), [2, 2]))
    elif key == "ghz":
        return((ket2dm(ghz_vector(3)), [2, 2, 2]))
    elif key == "mixed":
        return((np.eye(4, dtype = complex) / 4, [2, 2]))
    elif key.startswith("werner"):
        arg = key[len("werner"):].strip("():= ")
        try:
            p = float(arg)
        except ValueError:
            error("invalid werner parameter in '%s'." % name)
            raise UsageError("invalid werner parameter in '%s'." % name)
        return((werner(p), [2, 2]))
    error("unknown state '%s'." % name)
    raise UnknownLabel("unknown state '%s'." % name)


NAMED_STATES = ("singlet", "bell", "ghz", "mixed", "werner(p)")
