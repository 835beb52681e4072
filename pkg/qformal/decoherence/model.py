# model.py - a q-bit measured by an N-level apparatus through the
# interaction |↑⟩⟨↑| ⊗ H₊ + |↓⟩⟨↓| ⊗ H₋.

# Composite index of system ⊗ apparatus is `s * N + k`, |↑⟩ = e₀.


import multiprocessing
import numpy as np
import pandas as pd

from logging import error, info, warning
from ..config import DefaultConfig
from ..linalg.core import hermitian_eig, partial_trace_multi, propagator, \
    tensor_all
from ..linalg.rand import get_rng, random_hermitian, random_state, \
    spawn_seeds
from ..utils.errors import DimensionMismatch, NotNormalized
from ..utils.xmath import fit_slope_origin, mean_sem
from ..utils.xmatrix import as_vector, check_hermitian, check_state_vector, \
    dagger, ket2dm, projector_onto


_DEF = DefaultConfig()
DEFAULT_TIME = 10.0
COEF_TOL = 1e-12
N_SHARDS = 8


class MeasurementModel:
    """Conditional Hamiltonians H₊, H₋ on the apparatus, its initial state
    |I⟩ and the interaction time t.

    Parameters
    ----------
    H_plus, H_minus : array_like
        N x N Hermitian.
    initial_apparatus : array_like
        Unit vector of length N.
    interaction_time : float
    """
    system_dim = 2

    def __init__(self, H_plus, H_minus, initial_apparatus,
                 interaction_time = DEFAULT_TIME):
        self.H_plus = check_hermitian(H_plus, name = "H_plus")
        self.H_minus = check_hermitian(H_minus, name = "H_minus")
        self.initial_apparatus = check_state_vector(initial_apparatus,
                                                    name = "initial apparatus")
        N = self.initial_apparatus.shape[0]
        if self.H_plus.shape != (N, N) or self.H_minus.shape != (N, N):
            error("apparatus of dim %d with Hamiltonians %s and %s." % \
                (N, self.H_plus.shape, self.H_minus.shape))
            raise DimensionMismatch("Hamiltonians do not match the apparatus.")
        self.interaction_time = float(interaction_time)

    @property
    def apparatus_dim(self):
        return self.initial_apparatus.shape[0]

    def with_time(self, t):
        return MeasurementModel(self.H_plus, self.H_minus,
                                self.initial_apparatus, t)

    def pointer_states(self):
        """(F₊, F₋) = (exp(−itH₊)|I⟩, exp(−itH₋)|I⟩)."""
        t = self.interaction_time
        I = self.initial_apparatus
        return((propagator(self.H_plus, t) @ I,
                propagator(self.H_minus, t) @ I))


def random_measurement_model(N, t = DEFAULT_TIME, seed = 0,
                             identical = False):
    """GUE conditional Hamiltonians (spectrum in about [−2, 2]) and a
    random initial apparatus state; `identical` sets H₋ = H₊."""
    rng = get_rng(seed)
    Hp = random_hermitian(N, rng)
    Hm = Hp.copy() if identical else random_hermitian(N, rng)
    return MeasurementModel(Hp, Hm, random_state(N, rng), t)


def orthogonal_pointer_model():
    """N = 2, H₊ = 0, H₋ = (π/2)σ_x, t = 1: F₊ = |0⟩, F₋ = −i|1⟩."""
    sx = np.array([[0, 1], [1, 0]], dtype = complex)
    return MeasurementModel(np.zeros((2, 2)), np.pi / 2 * sx,
                            np.array([1, 0], dtype = complex), 1.0)


def _check_coefficients(alpha, beta):
    alpha, beta = complex(alpha), complex(beta)
    s = abs(alpha) ** 2 + abs(beta) ** 2
    if abs(s - 1) > COEF_TOL:
        error("|alpha|^2 + |beta|^2 = %.15g." % s)
        raise NotNormalized("|alpha|^2 + |beta|^2 should be 1.")
    return((alpha, beta))


UP = np.array([1, 0], dtype = complex)
DOWN = np.array([0, 1], dtype = complex)


def measure_evolution(model, alpha, beta):
    """Evolve (α|↑⟩ + β|↓⟩) ⊗ |I⟩ under the interaction.

    Returns
    -------
    numpy.ndarray
        The joint state α|↑⟩⊗F₊ + β|↓⟩⊗F₋.
    numpy.ndarray
        F₊.
    numpy.ndarray
        F₋.
    complex
        The overlap ⟨F₊|F₋⟩.

    Raises
    ------
    NotNormalized
    """
    alpha, beta = _check_coefficients(alpha, beta)
    Fp, Fm = model.pointer_states()
    joint = alpha * np.kron(UP, Fp) + beta * np.kron(DOWN, Fm)
    return((joint, Fp, Fm, complex(np.vdot(Fp, Fm))))


def reduced_system_state(joint, apparatus_dim = None):
    """Trace out the apparatus of a 2 ⊗ N pure state."""
    psi = as_vector(joint, "joint state")
    n = psi.shape[0]
    if n % 2 != 0 or (apparatus_dim is not None and n != 2 * apparatus_dim):
        error("joint state of length %d is not on 2 x N." % n)
        raise DimensionMismatch("joint state does not live on 2 x N.")
    M = psi.reshape(2, n // 2)
    return(M @ dagger(M))


### Overlap statistics

def overlap_shard(N, seed, trials, t, identical, eig_tol = _DEF.EIG_TOL):
    """Squared pointer overlaps |⟨F₊|F₋⟩|² of `trials` random models."""
    rng = get_rng(seed)
    res = np.zeros(trials)
    for k in range(trials):
        Hp = random_hermitian(N, rng)
        Hm = Hp if identical else random_hermitian(N, rng)
        I = random_state(N, rng)
        wp, Vp = hermitian_eig(Hp, eig_tol = eig_tol)
        wm, Vm = hermitian_eig(Hm, eig_tol = eig_tol)
        Fp = Vp @ (np.exp(-1j * t * wp) * (dagger(Vp) @ I))
        Fm = Vm @ (np.exp(-1j * t * wm) * (dagger(Vm) @ I))
        res[k] = abs(np.vdot(Fp, Fm)) ** 2
    return(res)


def overlap_scaling_experiment(dims, trials, t = DEFAULT_TIME, seed = 0,
                               workers = 1, identical = False,
                               eig_tol = _DEF.EIG_TOL):
    """Mean squared pointer overlap against the apparatus dimension.

    Parameters
    ----------
    dims : list of int
        Apparatus dimensions N.
    trials : int
        Random models per N (>= 100 recommended).
    t : float
        Interaction time.
    seed : int
    workers : int, default 1
    identical : bool, default False
        Use H₋ = H₊ (control: no which-path information).
    eig_tol : float
        Residual tolerance of the eigendecompositions.

    Returns
    -------
    pandas.DataFrame
        Columns "N", "trials", "mean_sq_overlap", "sem", "inv_N" and
        "ratio" (= mean × N, the ratio to 1/N).
    """
    if trials < 100:
        warning("only %d trials per dimension; statistics will be rough." % \
            trials)
    dim_seeds = spawn_seeds(seed, len(dims))
    n_shards = max(1, min(N_SHARDS, trials))
    sizes = [trials // n_shards + (1 if i < trials % n_shards else 0) \
             for i in range(n_shards)]
    jobs = []
    for N, ss in zip(dims, dim_seeds):
        for i, s in enumerate(ss.spawn(n_shards)):
            jobs.append((int(N), s, sizes[i], float(t), identical, eig_tol))

    info("overlap experiment: dims %s, %d trials each, t = %g ..." % \
        (list(dims), trials, t))
    if workers <= 1:
        out = []
        step = max(1, len(jobs) // 10)
        for i, j in enumerate(jobs):
            out.append(overlap_shard(*j))
            if (i + 1) % step == 0:
                info("%d/%d shards done." % (i + 1, len(jobs)))
    else:
        pool = multiprocessing.Pool(processes = workers)
        mp_result = []
        for j in jobs:
            mp_result.append(pool.apply_async(func = overlap_shard, args = j))
        pool.close()
        pool.join()
        out = [res.get() for res in mp_result]

    rows = []
    for k, N in enumerate(dims):
        x = np.concatenate(out[(k * n_shards):((k + 1) * n_shards)])
        m, se = mean_sem(x)
        rows.append({
            "N": int(N),
            "trials": int(x.shape[0]),
            "mean_sq_overlap": m,
            "sem": se,
            "inv_N": 1.0 / N,
            "ratio": m * N
        })
        info("N = %d: mean |<F+|F->|^2 = %.4g (ratio to 1/N %.3f)." % \
            (N, m, m * N))
    return(pd.DataFrame(rows))


### Repeated measurements

def measurement_chain(models, alpha, beta):
    """α|↑⟩F₊F′₊… + β|↓⟩F₋F′₋… for a chain of independent apparatuses.

    Returns
    -------
    numpy.ndarray
        The state on 2 ⊗ N ⊗ N′ ⊗ …
    list of tuple
        (F₊, F₋) of every apparatus.
    """
    alpha, beta = _check_coefficients(alpha, beta)
    pointers = [m.pointer_states() for m in models]
    up = tensor_all(*([UP.reshape(-1, 1)] + [p[0].reshape(-1, 1) for p in pointers]))
    down = tensor_all(*([DOWN.reshape(-1, 1)] + [p[1].reshape(-1, 1) for p in pointers]))
    return(((alpha * up + beta * down).reshape(-1), pointers))


def _exclusive_projector(F, G, tol = 1e-12):
    """Projector onto the component of F orthogonal to G (0 if none)."""
    v = F - G * np.vdot(G, F) / np.vdot(G, G)
    n = np.linalg.norm(v)
    if n < tol:
        return(np.zeros((F.shape[0], F.shape[0]), dtype = complex))
    return(ket2dm(v / n))


def _readouts(Fp, Fm):
    """Apparatus read-out projectors (R_up, R_down): onto F₊ and onto the
    part of F₋ orthogonal to F₊."""
    return((ket2dm(Fp / np.linalg.norm(Fp)), _exclusive_projector(Fm, Fp)))


def repeated_measurement(model, model2, alpha, beta):
    """Total amplitude of the cross sectors of two successive
    measurements.

    The cross sectors are ↑ with the second pointer in the part of F′₋
    orthogonal to F′₊, and ↓ with it in the part of F′₊ orthogonal to F′₋.

    Returns
    -------
    float
        Norm of the state projected on the cross sectors; 0 up to rounding.
    """
    psi, pointers = measurement_chain([model, model2], alpha, beta)
    Fp2, Fm2 = pointers[1]
    Q_minus = _exclusive_projector(Fm2, Fp2)
    Q_plus = _exclusive_projector(Fp2, Fm2)
    I1 = np.eye(model.apparatus_dim)
    cross = tensor_all(ket2dm(UP), I1, Q_minus) + \
        tensor_all(ket2dm(DOWN), I1, Q_plus)
    return(float(np.linalg.norm(cross @ psi)))


def repeated_outcome_distribution(model, model2, alpha, beta):
    """Joint Born table P[i][j] of reading i on the first apparatus and j on
    the second (0 = up, 1 = down)."""
    psi, pointers = measurement_chain([model, model2], alpha, beta)
    R1 = _readouts(*pointers[0])
    R2 = _readouts(*pointers[1])
    I2 = np.eye(2)
    P = np.zeros((2, 2))
    for i in range(2):
        for j in range(2):
            v = tensor_all(I2, R1[i], R2[j]) @ psi
            P[i, j] = float(np.real(np.vdot(v, v)))
    return(P)


def apparatus_marginal(psi, dims, k):
    """Reduced state of subsystem `k` of a pure state on ⊗ dims."""
    return(partial_trace_multi(ket2dm(psi), dims, [k]))


### Short times

def short_time_fit(model, times):
    """Fit |1 − ⟨F₊|F₋⟩(t)| = C t through the origin.

    Returns
    -------
    dict
        "slope" C (statsmodels OLS), "bse", "rsquared" and
        "analytic_slope" = |⟨I|H₊ − H₋|I⟩|, the first-order prediction.
    """
    times = np.asarray(times, dtype = float)
    y = []
    for t in times:
        Fp, Fm = model.with_time(t).pointer_states()
        y.append(abs(1 - np.vdot(Fp, Fm)))
    fit = fit_slope_origin(times, np.array(y))
    I = model.initial_apparatus
    analytic = abs(np.vdot(I, (model.H_plus - model.H_minus) @ I))
    return({
        "slope": fit["slope"],
        "bse": fit["bse"],
        "rsquared": fit["rsquared"],
        "analytic_slope": float(analytic)
    })
