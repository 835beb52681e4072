# frame.py - frame functions and Gleason-style fitting of density matrices.


import numpy as np

from logging import debug, error
from ..config import DefaultConfig
from ..linalg.core import hermitian_eig
from ..linalg.rand import get_rng, random_state
from ..utils.errors import DimensionMismatch, InsufficientSamples, \
    InvalidMatrix
from ..utils.xmatrix import as_matrix, check_density, check_state_vector, \
    dagger


_DEF = DefaultConfig()


class FrameSample:
    """Values of a ray function on a list of rays.

    Parameters
    ----------
    rays : array_like
        `n x dim` array, one unit vector per row.
    values : array_like
        `n` reals in [0, 1].
    """
    def __init__(self, rays, values, tol = 1e-12):
        R = np.asarray(rays, dtype = complex)
        v = np.asarray(values, dtype = float).reshape(-1)
        if R.ndim != 2 or R.shape[0] != v.shape[0]:
            error("%d values for rays of shape %s." % (v.shape[0], R.shape))
            raise DimensionMismatch("one value per ray expected.")
        if not np.all(np.isfinite(v)) or np.any(v < -tol) or \
                np.any(v > 1 + tol):
            error("frame values should lie in [0, 1].")
            raise InvalidMatrix("frame values should lie in [0, 1].")
        nrm = np.linalg.norm(R, axis = 1)
        if np.any(nrm == 0):
            raise InvalidMatrix("rays should be non-zero.")
        self.rays = R / nrm[:, np.newaxis]
        self.values = v

    @property
    def dim(self):
        return self.rays.shape[1]

    def __len__(self):
        return self.rays.shape[0]


def frame_from_density(rho, ray):
    """ψ(e) = ⟨e|ρ|e⟩ for a unit vector `e`."""
    rho = as_matrix(rho, "rho")
    e = check_state_vector(ray, name = "ray")
    if rho.shape != (e.shape[0], e.shape[0]):
        error("ray of dim %d for a %dx%d density." % \
            (e.shape[0], rho.shape[0], rho.shape[1]))
        raise DimensionMismatch("ray and density differ in dimension.")
    return(float(np.real(np.vdot(e, rho @ e))))


def random_rays(dim, n, seed = 0):
    """`n x dim` array of uniformly random unit vectors."""
    rng = get_rng(seed)
    return(np.vstack([random_state(dim, rng) for _ in range(n)]))


def frame_sample_from_density(rho, rays):
    rho = check_density(rho)
    R = np.asarray(rays, dtype = complex)
    vals = np.real(np.einsum("ni,ij,nj->n", np.conj(R), rho, R))
    return FrameSample(R, np.clip(vals, 0.0, 1.0))


def hermitian_basis(dim):
    """Real basis of the Hermitian dim x dim matrices: E_jj,
    E_jk + E_kj and i(E_jk − E_kj) for j < k."""
    res = []
    for j in range(dim):
        B = np.zeros((dim, dim), dtype = complex)
        B[j, j] = 1
        res.append(B)
    for j in range(dim):
        for k in range(j + 1, dim):
            B = np.zeros((dim, dim), dtype = complex)
            B[j, k] = B[k, j] = 1
            res.append(B)
            C = np.zeros((dim, dim), dtype = complex)
            C[j, k] = 1j
            C[k, j] = -1j
            res.append(C)
    return(res)


def project_to_states(H):
    """Nearest-by-clipping density matrix: negative eigenvalues set to 0,
    then trace renormalized (I/dim if nothing is left)."""
    w, V = hermitian_eig((H + dagger(H)) / 2)
    w = np.clip(w, 0.0, None)
    if np.sum(w) <= 0:
        return(np.eye(H.shape[0], dtype = complex) / H.shape[0])
    w = w / np.sum(w)
    return((V * w[np.newaxis, :]) @ dagger(V))


def fit_density_from_frame(sample, dim = None):
    """Least-squares density matrix whose quadratic form matches a frame
    sample.

    Parameters
    ----------
    sample : FrameSample
    dim : int or None, default None
        Expected dimension, checked against the rays.

    Returns
    -------
    numpy.ndarray
        The fitted density matrix ρ.
    float
        Residual: mean squared misfit of the Hermitian least-squares
        solution H plus ‖ρ − H‖_F², the distortion of projecting H to
        the states. Small values (below gleason_tol) mean the sample is
        consistent with a quantum state.

    Raises
    ------
    InsufficientSamples
        If there are fewer than dim² rays.
    """
    if dim is None:
        dim = sample.dim
    if sample.dim != dim:
        raise DimensionMismatch("rays of dim %d, expected %d." % \
            (sample.dim, dim))
    if len(sample) < dim * dim:
        error("%d samples cannot determine a %dx%d density." % \
            (len(sample), dim, dim))
        raise InsufficientSamples("at least %d samples are needed." % (dim * dim))

    basis = hermitian_basis(dim)
    R = sample.rays
    A = np.column_stack([np.real(np.einsum("ni,ij,nj->n", np.conj(R), B, R)) \
                         for B in basis])
    theta, _, rank, _ = np.linalg.lstsq(A, sample.values, rcond = None)
    if rank < len(basis):
        error("rays do not determine the quadratic form (rank %d < %d)." % \
            (rank, len(basis)))
        raise InsufficientSamples("rays are not spread enough.")
    H = sum(t * B for t, B in zip(theta, basis))
    mse = float(np.mean((A @ theta - sample.values) ** 2))
    rho = project_to_states(H)
    dist = float(np.sum(np.abs(rho - H) ** 2))
    debug("frame fit: mse = %.3g, projection distance = %.3g." % (mse, dist))
    return((rho, mse + dist))


def frame_verdict(residual, gleason_tol = _DEF.GLEASON_TOL):
    return("quantum-consistent" if residual < gleason_tol else "non-frame")


def ks_zero_one_sample(ks_set):
    """A {0, 1} function on the rays of a KS context set.

    Uses the search witness when one exists; otherwise greedily sets one
    ray per context to 1 when no other context containing it has a 1
    already, and everything left to 0.

    Returns
    -------
    FrameSample
    """
    from ..bell.ks import ks_verify
    res = ks_verify(ks_set)
    if res.satisfiable:
        vals = np.array(res.witness, dtype = float)
    else:
        n = len(ks_set.rays)
        vals = -np.ones(n)
        members = [[c for c, ctx in enumerate(ks_set.contexts) if r in ctx] \
                   for r in range(n)]
        has_one = [False] * len(ks_set.contexts)
        for c, ctx in enumerate(ks_set.contexts):
            if not has_one[c]:
                for r in ctx:
                    if vals[r] < 0 and not any(has_one[k] for k in members[r]):
                        vals[r] = 1
                        for k in members[r]:
                            has_one[k] = True
                        break
            for r in ctx:
                if vals[r] < 0 and has_one[c]:
                    vals[r] = 0
        vals[vals < 0] = 0
    return FrameSample(np.asarray(ks_set.rays), vals)
