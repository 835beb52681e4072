# thermal.py - Gibbs states and the imaginary-time relation.


import numpy as np

from logging import error
from ..config import DefaultConfig
from ..linalg.core import hermitian_eig, matrix_exp
from ..utils.errors import NonFinite
from ..utils.xmatrix import check_hermitian, dagger, max_abs
from .entropy import shannon


_DEF = DefaultConfig()


def _check_beta(beta):
    beta = float(beta)
    if not np.isfinite(beta):
        error("inverse temperature should be finite, got %s." % beta)
        raise NonFinite("inverse temperature should be finite.")
    return(beta)


def boltzmann_weights(H, beta, eig_tol = _DEF.EIG_TOL,
                      hermiticity_tol = _DEF.HERMITICITY_TOL):
    """Eigen-decomposition of `H` and the normalized Gibbs populations.

    The exponents −βλ are shifted by their maximum before exponentiation.

    Returns
    -------
    numpy.ndarray
        Energies λ, ascending.
    numpy.ndarray
        Eigenvectors.
    numpy.ndarray
        Populations p = exp(−βλ)/Z.
    float
        log Z.
    """
    beta = _check_beta(beta)
    H = check_hermitian(H, tol = hermiticity_tol, name = "Hamiltonian")
    w, V = hermitian_eig(H, eig_tol = eig_tol, hermiticity_tol = hermiticity_tol)
    x = -beta * w
    xmax = np.max(x)
    e = np.exp(x - xmax)
    s = np.sum(e)
    return((w, V, e / s, float(xmax + np.log(s))))


def gibbs_state(H, beta, eig_tol = _DEF.EIG_TOL,
                hermiticity_tol = _DEF.HERMITICITY_TOL):
    """ρ_β = exp(−βH)/Z.

    `beta` may be negative (negative temperature); β = 0 gives I/N and
    large β approaches the uniform mixture over the ground space.

    Raises
    ------
    NonFinite
        If `beta` or `H` is not finite.
    """
    w, V, p, _ = boltzmann_weights(H, beta, eig_tol, hermiticity_tol)
    rho = (V * p[np.newaxis, :]) @ dagger(V)
    return((rho + dagger(rho)) / 2)


def _gershgorin_shift(H, beta):
    """A c with −β(λ − c) <= 0 on the spectrum, from Gershgorin discs."""
    H = np.asarray(H, dtype = complex)
    d = np.real(np.diagonal(H))
    r = np.sum(np.abs(H), axis = 1) - np.abs(np.diagonal(H))
    return(float(np.min(d - r)) if beta >= 0 else float(np.max(d + r)))


def imaginary_time_consistency(H, beta, eig_tol = _DEF.EIG_TOL,
                               hermiticity_tol = _DEF.HERMITICITY_TOL):
    """‖ρ_β − U(−iτ)/Z‖_max at τ = β.

    U(−iτ) = exp(−τH) is evaluated with the Padé exponential, independent
    of the eigenbasis path used by :func:`gibbs_state`; both sides are
    shifted by the same scalar, which cancels in the ratio.
    """
    beta = _check_beta(beta)
    H = check_hermitian(H, tol = hermiticity_tol, name = "Hamiltonian")
    H = (H + dagger(H)) / 2
    rho = gibbs_state(H, beta, eig_tol, hermiticity_tol)
    c = _gershgorin_shift(H, beta)
    U = matrix_exp(H - c * np.eye(H.shape[0]), scale = -beta, method = "pade")
    Z = np.trace(U)
    return(max_abs(rho - U / Z))


def thermal_quantities(H, beta, unit = _DEF.ENTROPY_UNIT,
                       clamp = _DEF.ENTROPY_CLAMP, eig_tol = _DEF.EIG_TOL,
                       hermiticity_tol = _DEF.HERMITICITY_TOL):
    """Partition function, energy, entropy and free energy at `beta`.

    Returns
    -------
    dict
        "log_Z", "Z" (inf on overflow), "energy", "entropy" (in `unit`)
        and "free_energy" = −log Z / β, which equals E − S/β with S in
        nats; None at β = 0.
    """
    w, V, p, logZ = boltzmann_weights(H, beta, eig_tol, hermiticity_tol)
    energy = float(np.sum(p * w))
    with np.errstate(over = "ignore"):
        Z = float(np.exp(logZ))
    free = None if beta == 0 else float(-logZ / beta)
    return({
        "beta": float(beta),
        "log_Z": logZ,
        "Z": Z,
        "energy": energy,
        "entropy": shannon(p, unit, clamp),
        "free_energy": free
    })
