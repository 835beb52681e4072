# main.py - the `entropy` subcommand.


from logging import info
from .entropy import MultipartiteState
from .inequality import check_inequalities, fuzz_inequalities
from .thermal import imaginary_time_consistency, thermal_quantities
from ..io.base import load_matrix, load_state
from ..linalg.states import NAMED_STATES, named_state
from ..utils.base import parse_dims
from ..utils.errors import UsageError
from ..utils.xmatrix import admit_density


def admit_state(rho, conf):
    """`rho` validated under the tolerance profile of `conf`, see
    :func:`~qformal.utils.xmatrix.admit_density`."""
    return admit_density(rho,
        trace_tol = conf.tol("norm_tol"),
        psd_tol = conf.tol("psd_tol"),
        hermiticity_tol = conf.tol("hermiticity_tol"))


def load_named_or_file(name, dims = None, conf = None):
    """A built-in state name or a state file, with its dimensions.

    With `conf`, the state is passed through :func:`admit_state`.

    Returns
    -------
    numpy.ndarray
        The density matrix.
    list of int or None
        `dims` if given, else the dims of the built-in state (None for
        files).
    """
    base = name.split("(")[0].split(":")[0].strip().lower()
    if base in [s.split("(")[0] for s in NAMED_STATES]:
        rho, d = named_state(name)
        if dims is None:
            dims = d
    else:
        rho = load_state(name)
    if conf is not None:
        rho = admit_state(rho, conf)
    return((rho, dims))


def entropy_core(rho, dims, conf, labels = None):
    state = MultipartiteState(rho, dims, labels,
                              clamp = conf.tol("entropy_clamp"))
    rep = check_inequalities(state, violation_tol = conf.tol("violation_tol"),
                             unit = conf.entropy_unit)
    res = rep.to_dict()
    res["dims"] = list(dims)
    res["violation"] = not rep.all_satisfied
    info("%d inequalities checked, %d violated." % \
        (len(rep.margins), len(rep.violations())))
    return(res)


def fuzz_core(n_states, dims, conf):
    summary, df = fuzz_inequalities(
        n_states = n_states,
        dims = dims,
        seed = conf.seed,
        workers = conf.workers,
        violation_tol = conf.tol("violation_tol"),
        clamp = conf.tol("entropy_clamp")
    )
    res = dict(summary)
    res["violation"] = summary["n_violations"] > 0
    res["table"] = df
    return(res)


def thermal_core(H, beta, conf):
    eig_tol = conf.tol("eig_tol")
    herm_tol = conf.tol("hermiticity_tol")
    res = thermal_quantities(H, beta, unit = conf.entropy_unit,
        clamp = conf.tol("entropy_clamp"), eig_tol = eig_tol,
        hermiticity_tol = herm_tol)
    res["imaginary_time_residual"] = imaginary_time_consistency(
        H, beta, eig_tol = eig_tol, hermiticity_tol = herm_tol)
    return(res)


def entropy_wrapper(state = None, dims = None, conf = None,
                    labels = None, fuzz = None, hamiltonian = None,
                    beta = 1.0):
    """Wrapper for the `entropy` subcommand.

    Exactly one mode runs: the inequality report of `state`, a random
    sweep of `fuzz` states of `dims`, or the thermal quantities of
    `hamiltonian` at `beta`.

    Parameters
    ----------
    state : str or None
        A state JSON file (density matrix or vector) or a built-in name.
    dims : str or None
        Comma separated subsystem dims; required for state files.
    conf : qformal.config.Config
    labels : str or None
        Comma separated subsystem labels.
    fuzz : int or None
        Number of random states to sweep.
    hamiltonian : str or None
        A Hermitian matrix JSON file.
    beta : float, default 1.0
        Inverse temperature for `hamiltonian`.

    Returns
    -------
    int
        0.
    dict
        The result; key "violation" flags any violated inequality.
    """
    if dims is not None:
        dims = parse_dims(dims)
    if labels is not None:
        labels = [x.strip() for x in labels.split(",")]

    if fuzz is not None:
        if dims is None:
            raise UsageError("--fuzz needs --dims.")
        return((0, fuzz_core(int(fuzz), dims, conf)))
    if hamiltonian is not None:
        return((0, thermal_core(load_matrix(hamiltonian), float(beta), conf)))
    if state is None:
        raise UsageError("one of --state, --fuzz and --hamiltonian is needed.")

    rho, dims = load_named_or_file(state, dims, conf)
    if dims is None:
        raise UsageError("--dims is needed for state files.")
    return((0, entropy_core(rho, dims, conf, labels)))
