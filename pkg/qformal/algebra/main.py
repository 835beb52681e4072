# main.py - the `gns` subcommand.


import numpy as np
import os

from logging import info
from .block import AlgebraState, BlockAlgebra, element_from_direct_sum, \
    outcome_distribution, random_algebra_state, state_value
from .gns import commutant_dimension, gns_construct, purity_check, \
    state_reproduction_residual
from ..entropy.main import admit_state
from ..io.base import load_algebra, load_algebra_state, load_matrix
from ..utils.base import parse_dims


BUILTIN_STATES = ("tracial", "random", "random-pure")


def tracial_state(algebra):
    """ω(x) = Σ_k tr(x_k) / Σ_k n_k."""
    n = np.array(algebra.block_dims, dtype = float)
    return AlgebraState(algebra, n / np.sum(n),
                        [np.eye(int(k)) / k for k in n])


def gns_core(algebra, state, conf):
    """GNS report of (algebra, state).

    Returns
    -------
    dict
        "hilbert_dim", "commutant_dim", "irreducible", "pure" and
        "max_residual", the larger of the state reproduction and the
        homomorphism residuals.
    """
    rep = gns_construct(algebra, state, gram_tol = conf.tol("gram_tol"),
                        eig_tol = conf.tol("eig_tol"))
    comm = commutant_dimension(rep, rank_tol = conf.tol("rank_tol"))
    r_state = state_reproduction_residual(rep)
    r_hom = rep.homomorphism_residual()
    pure = purity_check(state, rank_tol = conf.tol("rank_tol"),
                        eig_tol = conf.tol("eig_tol"))
    info("GNS: hilbert dim %d, commutant dim %d, pure state %s." % \
        (rep.hilbert_dim, comm, pure))
    return({
        "algebra": list(algebra.block_dims),
        "hilbert_dim": rep.hilbert_dim,
        "commutant_dim": comm,
        "irreducible": comm == 1,
        "pure": pure,
        "state_residual": r_state,
        "homomorphism_residual": r_hom,
        "max_residual": max(r_state, r_hom),
        "gram_eigenvalues": rep.gram_eigenvalues
    })


def observable_core(algebra, state, M, conf):
    """Outcome distribution of the symmetric element given by the
    block-diagonal matrix `M` in `state`.

    Eigenvalues closer than the "cluster_tol" tolerance form one outcome.
    """
    herm_tol = conf.tol("hermiticity_tol")
    x = element_from_direct_sum(algebra, M, tol = herm_tol)
    dist = outcome_distribution(state, x,
        cluster_tol = conf.tol("cluster_tol"), tol = herm_tol)
    info("observable with %d distinct outcomes." % len(dist))
    return({
        "outcomes": [{"value": v, "probability": p} for v, p in dist],
        "expectation": float(np.real(state_value(state, x)))
    })


def gns_wrapper(algebra_fn, state_fn, conf, observable = None):
    """Wrapper for the `gns` subcommand.

    Parameters
    ----------
    algebra_fn : str
        An algebra JSON file {"blocks": [n_1, ...]}, or the block sizes
        directly, e.g., "2" or "2,1".
    state_fn : str
        A state JSON file {"weights": [...], "densities": [...]}, or one of
        "tracial", "random" and "random-pure" (drawn from `conf.seed`).
    conf : qformal.config.Config
    observable : str or None
        A block-diagonal matrix file; adds its outcome distribution under
        "observable".

    Returns
    -------
    int
        0.
    dict
        The report of :func:`gns_core`.
    """
    if os.path.exists(algebra_fn):
        algebra = load_algebra(algebra_fn)
    else:
        algebra = BlockAlgebra(parse_dims(algebra_fn))

    if state_fn == "tracial":
        state = tracial_state(algebra)
    elif state_fn == "random":
        state = random_algebra_state(algebra, conf.seed, pure = False)
    elif state_fn == "random-pure":
        state = random_algebra_state(algebra, conf.seed, pure = True)
    else:
        state = load_algebra_state(state_fn, algebra,
                                   admit = lambda r: admit_state(r, conf))
    res = gns_core(algebra, state, conf)
    if observable is not None:
        res["observable"] = observable_core(algebra, state,
                                            load_matrix(observable), conf)
    return((0, res))
