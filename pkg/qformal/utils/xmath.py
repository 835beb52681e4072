# xmath.py - statistics helpers for the Monte Carlo experiments.


import numpy as np
import statsmodels.api as sm


def binom_std_error(p, n):
    """Standard error of a Bernoulli mean with success probability `p` over
    `n` trials; 0 when `n` is 0."""
    if n <= 0:
        return(0.0)
    p = min(max(float(p), 0.0), 1.0)
    return(float(np.sqrt(p * (1.0 - p) / n)))


def mean_sem(x):
    """Sample mean and its standard error.

    Parameters
    ----------
    x : numpy.ndarray
        The (1d) vector containing sample values.

    Returns
    -------
    float
        The mean.
    float
        The standard error of the mean (0 for fewer than two values).
    """
    x = np.asarray(x, dtype = float)
    m = float(np.mean(x))
    if x.shape[0] < 2:
        return((m, 0.0))
    return((m, float(np.std(x, ddof = 1) / np.sqrt(x.shape[0]))))


def fit_slope_origin(x, y):
    """Fit `y = C * x` by ordinary least squares without intercept.

    Parameters
    ----------
    x : numpy.ndarray
        The (1d) regressor.
    y : numpy.ndarray
        The (1d) response.

    Returns
    -------
    dict
        - "slope" : the fitted C.
        - "bse" : its standard error.
        - "rsquared" : uncentered R².
        - "fit" : the statsmodels results object.
    """
    x = np.asarray(x, dtype = float).reshape(-1, 1)
    y = np.asarray(y, dtype = float)
    res = sm.OLS(y, x).fit()
    return({
        "slope": float(res.params[0]),
        "bse": float(res.bse[0]),
        "rsquared": float(res.rsquared),
        "fit": res
    })
