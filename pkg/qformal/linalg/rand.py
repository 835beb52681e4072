# rand.py - seeded random vectors and matrices.

# All generators draw from a counter-based Philox stream, so results are
# reproducible across platforms given the seed.


import numpy as np

from logging import error
from ..utils.errors import UsageError
from ..utils.xmatrix import dagger


def get_rng(seed = 0):
    """Return a `numpy.random.Generator` backed by Philox.

    Parameters
    ----------
    seed : int or numpy.random.SeedSequence or numpy.random.Generator
        If a Generator, it is returned as is so that callers can chain
        draws from one stream.

    Returns
    -------
    numpy.random.Generator
    """
    if isinstance(seed, np.random.Generator):
        return(seed)
    if isinstance(seed, np.random.SeedSequence):
        return(np.random.Generator(np.random.Philox(seed)))
    try:
        seed = int(seed)
    except (TypeError, ValueError):
        error("invalid seed '%s'." % str(seed))
        raise UsageError("invalid seed '%s'." % str(seed))
    if seed < 0 or seed >= 2 ** 64:
        raise UsageError("seed should be a 64-bit unsigned integer.")
    return(np.random.Generator(np.random.Philox(seed)))


def spawn_seeds(seed, n):
    """Split `seed` into `n` independent child SeedSequences."""
    if isinstance(seed, np.random.SeedSequence):
        ss = seed
    else:
        ss = np.random.SeedSequence(int(seed))
    return(ss.spawn(n))


def _check_dim(dim):
    if int(dim) < 1:
        error("dimension should be >= 1, got %s." % str(dim))
        raise UsageError("dimension should be >= 1.")
    return(int(dim))


def complex_gaussian(shape, seed = 0):
    """Array whose real and imaginary parts are i.i.d. standard normal."""
    rng = get_rng(seed)
    return(rng.standard_normal(shape) + 1j * rng.standard_normal(shape))


def random_state(dim, seed = 0):
    """Haar-random unit vector: normalized complex Gaussian vector."""
    dim = _check_dim(dim)
    v = complex_gaussian(dim, seed)
    return(v / np.linalg.norm(v))


def random_unitary(dim, seed = 0):
    """Haar-random unitary from the QR decomposition of a complex Gaussian
    matrix, with the phases of diag(R) moved into Q."""
    dim = _check_dim(dim)
    Z = complex_gaussian((dim, dim), seed)
    Q, R = np.linalg.qr(Z)
    d = np.diagonal(R)
    ph = np.where(np.abs(d) > 0, d / np.abs(d), 1.0)
    return(Q * ph[np.newaxis, :])


def random_density(dim, seed = 0, rank = None):
    """Random density matrix GG†/tr(GG†), G a `dim x rank` complex Gaussian
    matrix (`rank = dim` by default)."""
    dim = _check_dim(dim)
    if rank is None:
        rank = dim
    if rank < 1 or rank > dim:
        raise UsageError("rank should be in [1, %d]." % dim)
    G = complex_gaussian((dim, rank), seed)
    rho = G @ dagger(G)
    rho = (rho + dagger(rho)) / 2
    return(rho / np.real(np.trace(rho)))


def random_hermitian(dim, seed = 0, normalize = True):
    """GUE matrix (G + G†)/2.

    Parameters
    ----------
    dim : int
        Dimension N.
    seed : int or numpy.random.SeedSequence or numpy.random.Generator
    normalize : bool, default True
        If True, divide by √N so that the spectrum fills [-2, 2] for
        large N, independently of N.

    Returns
    -------
    numpy.ndarray
    """
    dim = _check_dim(dim)
    G = complex_gaussian((dim, dim), seed)
    H = (G + dagger(G)) / 2
    if normalize:
        H = H / np.sqrt(dim)
    return(H)


def random_projector(dim, rank, seed = 0):
    """Projector onto a Haar-random subspace of the given rank."""
    dim = _check_dim(dim)
    if rank < 0 or rank > dim:
        raise UsageError("rank should be in [0, %d]." % dim)
    U = random_unitary(dim, seed)
    B = U[:, :rank]
    return(B @ dagger(B))


def random_direction(seed = 0):
    """Uniform random real unit 3-vector."""
    rng = get_rng(seed)
    v = rng.standard_normal(3)
    return(v / np.linalg.norm(v))
