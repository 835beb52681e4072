# main.py - the `gleason-fit`, `protocols` and `evolve` subcommands.


import numpy as np

from logging import info
from .evolve import picture_equivalence
from .frame import fit_density_from_frame, frame_sample_from_density, \
    frame_verdict, ks_zero_one_sample, random_rays
from .protocol import protocol_backward, protocol_forward
from ..io.base import load_frame_sample, load_matrix, load_vector
from ..linalg.rand import get_rng, random_density, random_projector, \
    spawn_seeds
from ..utils.errors import UsageError


### Gleason fit

def gleason_core(sample, dim, conf):
    rho, residual = fit_density_from_frame(sample, dim)
    verdict = frame_verdict(residual, conf.tol("gleason_tol"))
    info("frame fit in dim %d from %d rays: residual %.3g (%s)." % \
        (sample.dim, len(sample), residual, verdict))
    return({
        "dim": sample.dim,
        "n_samples": len(sample),
        "rho": rho,
        "residual": residual,
        "verdict": verdict
    })


def gleason_fit_wrapper(samples = None, dim = None, conf = None,
                        ks = None, random_samples = None):
    """Wrapper for the `gleason-fit` subcommand.

    Parameters
    ----------
    samples : str or None
        A frame sample JSON file {"rays": [...], "values": [...]}.
    dim : int or None
        Expected dimension.
    conf : qformal.config.Config
    ks : str or None
        Fit the {0, 1} valuation of a KS set instead (bundled name or file).
    random_samples : int or None
        Fit `random_samples` rays of a hidden random density of `dim`
        (default 3) drawn from `conf.seed`; the report adds the recovery
        error ‖ρ_fit − ρ‖_F.

    Returns
    -------
    int
        0.
    dict
        "rho", "residual" and "verdict" ("quantum-consistent" or
        "non-frame").
    """
    if ks is not None:
        from ..bell.main import load_ks_source
        return((0, gleason_core(ks_zero_one_sample(load_ks_source(ks)),
                                None, conf)))
    if random_samples is not None:
        d = 3 if dim is None else int(dim)
        s_rho, s_rays = spawn_seeds(conf.seed, 2)
        hidden = random_density(d, s_rho)
        sample = frame_sample_from_density(
            hidden, random_rays(d, int(random_samples), s_rays))
        res = gleason_core(sample, d, conf)
        res["recovery_error"] = float(np.linalg.norm(res["rho"] - hidden))
        return((0, res))
    if samples is None:
        raise UsageError("one of --samples, --ks and --random is needed.")
    return((0, gleason_core(load_frame_sample(samples), dim, conf)))


### Protocols

def protocols_core(P_A, P_B, trials, seed, tol):
    """Both conditional-probability protocols on independent seed shards.

    Returns
    -------
    dict
        "forward" and "backward" results, "analytic_equal" and "z_score",
        the estimate difference in combined standard errors.
    """
    s_f, s_b = spawn_seeds(seed, 2)
    f = protocol_forward(P_A, P_B, trials, s_f, tol)
    b = protocol_backward(P_A, P_B, trials, s_b, tol)
    se = np.sqrt(f.std_error ** 2 + b.std_error ** 2)
    diff = abs(f.empirical_prob - b.empirical_prob)
    z = 0.0 if diff == 0 else (float("inf") if se == 0 else float(diff / se))
    info("forward %.6f, backward %.6f, analytic %.6f (z = %.2f)." % \
        (f.empirical_prob, b.empirical_prob, f.analytic_prob, z))
    return({
        "forward": f.to_dict(),
        "backward": b.to_dict(),
        "analytic_equal": abs(f.analytic_prob - b.analytic_prob) < 1e-12,
        "z_score": z
    })


def protocols_wrapper(pa = None, pb = None, trials = 100000, conf = None,
                      random_dim = None):
    """Wrapper for the `protocols` subcommand.

    Projectors come from the matrix files `pa` and `pb`, or with
    `random_dim` from Haar-random subspaces of random rank drawn from
    `conf.seed`.
    """
    if random_dim is not None:
        d = int(random_dim)
        if d < 1:
            raise UsageError("--random-dim should be >= 1.")
        rng = get_rng(spawn_seeds(conf.seed, 3)[2])
        P_A = random_projector(d, int(rng.integers(1, d + 1)), rng)
        P_B = random_projector(d, int(rng.integers(0, d + 1)), rng)
    else:
        if pa is None or pb is None:
            raise UsageError("--pa and --pb (or --random-dim) are needed.")
        P_A, P_B = load_matrix(pa), load_matrix(pb)
    res = protocols_core(P_A, P_B, int(trials), conf.seed,
                         conf.tol("idempotency_tol"))
    return((0, res))


### Pictures

def evolve_wrapper(state, observable, hamiltonian, t, conf):
    """Residual between the Schrödinger and Heisenberg expectations of an
    observable at time `t`."""
    psi = load_vector(state)
    A = load_matrix(observable)
    H = load_matrix(hamiltonian)
    r = picture_equivalence(psi, A, H, float(t),
                            hermiticity_tol = conf.tol("hermiticity_tol"))
    return((0, {
        "time": float(t),
        "residual": r,
        "equivalent": r <= conf.tol("norm_tol")
    }))
