# main.py - the `decohere` subcommand.


import numpy as np

from logging import info
from .model import DEFAULT_TIME, overlap_scaling_experiment, \
    random_measurement_model, short_time_fit
from ..linalg.rand import spawn_seeds
from ..utils.base import parse_dims


SHORT_TIMES = np.linspace(1e-4, 1e-3, 10)


def decohere_core(dims, trials, t, conf, identical = False,
                  short_time = False):
    df = overlap_scaling_experiment(
        dims = dims,
        trials = trials,
        t = t,
        seed = conf.seed,
        workers = conf.workers,
        identical = identical,
        eig_tol = conf.tol("eig_tol")
    )
    means = df["mean_sq_overlap"].to_numpy()
    sems = df["sem"].to_numpy()
    # decreasing in N by more than 3 combined standard errors
    decreasing = bool(np.all(
        means[:-1] - means[1:] > 3 * np.sqrt(sems[:-1] ** 2 + sems[1:] ** 2)))
    res = {
        "dims": list(dims),
        "trials": int(trials),
        "time": float(t),
        "identical": identical,
        "strictly_decreasing": decreasing,
        "table": df
    }
    if short_time:
        ss = spawn_seeds(conf.seed, len(dims) + 1)[-1]
        m = random_measurement_model(int(dims[0]), t, ss)
        res["short_time"] = short_time_fit(m, SHORT_TIMES)
    info("decoherence table over N = %s done." % list(dims))
    return(res)


def decohere_wrapper(dims, trials = 1000, t = DEFAULT_TIME, conf = None,
                     identical = False, short_time = False):
    """Wrapper for the `decohere` subcommand.

    Parameters
    ----------
    dims : str
        Comma separated apparatus dimensions, e.g., "8,32,128".
    trials : int, default 1000
        Random models per dimension.
    t : float
        Interaction time.
    conf : qformal.config.Config
    identical : bool, default False
        Use H₋ = H₊ as a control.
    short_time : bool, default False
        Add the short-time slope fit of one random model of the first
        dimension.

    Returns
    -------
    int
        0.
    dict
        The per-N table (CSV mode writes it as is) plus a summary.
    """
    dims = parse_dims(dims)
    return((0, decohere_core(dims, int(trials), float(t), conf,
                             identical, short_time)))
