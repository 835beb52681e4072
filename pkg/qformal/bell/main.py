# main.py - the `chsh`, `box` and `ks-verify` subcommands.


import os

from logging import info
from .box import CorrelationBox, box_chsh, box_marginals, is_nonsignaling, \
    local_membership, pr_box, quantum_box
from .chsh import TSIRELSON, canonical_directions, chsh_value, \
    classical_max, horodecki_bound, maximize_chsh, random_directions
from .ks import BUNDLED_KS_SETS, bundled_ks_set, ks_verify, load_ks_set
from ..entropy.main import load_named_or_file
from ..io.base import load_directions, load_json
from ..utils.errors import MalformedTable, UsageError


CLASSICAL_BOUND = 2


def load_dirs(dirs, seed):
    """"canonical", "random" (from `seed`) or a directions JSON file."""
    if dirs == "canonical":
        return canonical_directions()
    if dirs == "random":
        return random_directions(seed)
    return load_directions(dirs)


def load_ks_source(source, ray_tol = None):
    """A bundled KS set name or a KS set JSON file."""
    if source.lower() in BUNDLED_KS_SETS and not os.path.exists(source):
        return bundled_ks_set(source)
    if ray_tol is None:
        return load_ks_set(source)
    return load_ks_set(source, ray_tol)


### CHSH

def chsh_wrapper(state = "singlet", dirs = "canonical", conf = None,
                 optimize = False, restarts = 32, classical = False):
    """Wrapper for the `chsh` subcommand.

    Parameters
    ----------
    state : str
        Built-in two-qubit state name or a state JSON file.
    dirs : str
        "canonical", "random" or a directions JSON file; ignored with
        `optimize`.
    conf : qformal.config.Config
    optimize : bool, default False
        Maximize over the directions from `restarts` random starts.
    restarts : int, default 32
    classical : bool, default False
        Enumerate the 16 deterministic local strategies instead.

    Returns
    -------
    int
        0.
    dict
        "value" with "violation" = value > 2 + violation_tol.
    """
    tol = conf.tol("violation_tol")
    if classical:
        res = classical_max()
        res["value"] = res.pop("max")
        res["violation"] = res["value"] > CLASSICAL_BOUND + tol
        return((0, res))

    rho, _ = load_named_or_file(state, conf = conf)
    if optimize:
        d, v = maximize_chsh(rho, seed = conf.seed, restarts = int(restarts))
        res = {
            "value": v,
            "directions": d.to_dict(),
            "restarts": int(restarts),
            "horodecki_bound": horodecki_bound(rho)
        }
    else:
        d = load_dirs(dirs, conf.seed)
        res = {"value": chsh_value(rho, d), "directions": d.to_dict()}
    res["classical_bound"] = CLASSICAL_BOUND
    res["tsirelson_bound"] = TSIRELSON
    res["violation"] = res["value"] > CLASSICAL_BOUND + tol
    info("CHSH value %.12g." % res["value"])
    return((0, res))


### Boxes

def box_core(box):
    ok, sig = is_nonsignaling(box)
    res = {
        "table": box.table,
        "chsh": box_chsh(box),
        "nonsignaling": ok,
        "signaling_violation": sig,
        "marginals": dict(zip(("alice", "bob"), box_marginals(box)))
    }
    if ok:
        local, cert = local_membership(box)
        res["local"] = local
        res["local_certificate"] = cert
        res["violation"] = not local
    else:
        res["violation"] = True
    return(res)


def box_wrapper(pr = False, state = None, dirs = "canonical", table = None,
                conf = None):
    """Wrapper for the `box` subcommand: the PR box, the Born box of a
    two-qubit state with directions, or a table file
    {"table": [[[[p]]]]} indexed [x][y][a][b]."""
    if pr:
        box = pr_box()
    elif state is not None:
        rho, _ = load_named_or_file(state, conf = conf)
        box = quantum_box(rho, load_dirs(dirs, conf.seed))
    elif table is not None:
        d = load_json(table)
        if not isinstance(d, dict) or "table" not in d:
            raise MalformedTable("box file '%s' misses 'table'." % table)
        box = CorrelationBox(d["table"])
    else:
        raise UsageError("one of --pr, --from-state and --table is needed.")
    return((0, box_core(box)))


### Kochen-Specker

def ks_verify_wrapper(source, conf, drop_context = None):
    """Wrapper for the `ks-verify` subcommand.

    Parameters
    ----------
    source : str
        Bundled set name ("cabello18", "peres33") or a KS set JSON file.
    conf : qformal.config.Config
    drop_context : int or None
        Index of a context removed before the search.

    Returns
    -------
    int
        0; the verdict is data, not an error.
    dict
        The search result plus set metadata.
    """
    ks = load_ks_source(source, conf.tol("ray_tol"))
    if drop_context is not None:
        k = int(drop_context)
        if k < 0 or k >= len(ks.contexts):
            raise UsageError("--drop-context should be in [0, %d)." % \
                len(ks.contexts))
        ks = ks.drop_context(k)
    res = ks_verify(ks, ray_tol = conf.tol("ray_tol")).to_dict()
    res["name"] = ks.name
    res["provenance"] = ks.provenance
    res["dim"] = ks.dim
    res["n_rays"] = ks.n_rays
    res["dropped_context"] = drop_context
    return((0, res))
