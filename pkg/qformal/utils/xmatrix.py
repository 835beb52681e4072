# xmatrix.py - matrix validation for the operator types.

# Operators are plain complex `numpy.ndarray`s; the functions below enforce
# the invariants of HermitianOperator, Projector, DensityMatrix and
# StateVector at the boundary of every public operation.


import numpy as np

from logging import error
from ..config import DefaultConfig
from .errors import DimensionMismatch, InvalidMatrix, NonFinite, \
    NotNormalized


_DEF = DefaultConfig()


def as_matrix(x, name = "matrix"):
    """Convert `x` to a finite 2d complex array.

    Raises
    ------
    InvalidMatrix
        If `x` is not 2-dimensional.
    NonFinite
        If any entry is NaN or Inf.
    """
    M = np.asarray(x, dtype = complex)
    if M.ndim != 2:
        error("%s should be 2d, got shape %s." % (name, M.shape))
        raise InvalidMatrix("%s should be 2d." % name)
    if not np.all(np.isfinite(M)):
        error("%s contains NaN or Inf." % name)
        raise NonFinite("%s contains NaN or Inf." % name)
    return(M)


def as_vector(x, name = "vector"):
    """Convert `x` to a finite 1d complex array."""
    v = np.asarray(x, dtype = complex)
    if v.ndim == 2 and 1 in v.shape:
        v = v.reshape(-1)
    if v.ndim != 1:
        error("%s should be 1d, got shape %s." % (name, v.shape))
        raise InvalidMatrix("%s should be 1d." % name)
    if not np.all(np.isfinite(v)):
        error("%s contains NaN or Inf." % name)
        raise NonFinite("%s contains NaN or Inf." % name)
    return(v)


def max_abs(M):
    """The max-norm ‖M‖_max, 0 for empty input."""
    M = np.asarray(M)
    return(float(np.max(np.abs(M))) if M.size > 0 else 0.0)


def dagger(M):
    return(np.conj(np.transpose(M)))


def check_square(M, name = "matrix"):
    M = as_matrix(M, name)
    if M.shape[0] != M.shape[1]:
        error("%s should be square, got shape %s." % (name, M.shape))
        raise DimensionMismatch("%s should be square." % name)
    return(M)


def check_same_shape(A, B, what = "operands"):
    if np.shape(A) != np.shape(B):
        error("%s have different shapes %s and %s." % \
            (what, np.shape(A), np.shape(B)))
        raise DimensionMismatch("%s have different shapes." % what)


def hermiticity_residual(M):
    """Relative residual max|M - M†| / max|M|."""
    scale = max_abs(M)
    if scale == 0.0:
        return(0.0)
    return(max_abs(M - dagger(M)) / scale)


def is_hermitian(M, tol = _DEF.HERMITICITY_TOL):
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        return(False)
    return(hermiticity_residual(M) <= tol)


def check_hermitian(M, tol = _DEF.HERMITICITY_TOL, name = "operator"):
    """Validate a HermitianOperator and return it as a complex array."""
    M = check_square(M, name)
    r = hermiticity_residual(M)
    if r > tol:
        error("%s is not Hermitian (residual %.3g > %.3g)." % (name, r, tol))
        raise InvalidMatrix("%s is not Hermitian." % name)
    return(M)


def check_projector(P, tol = _DEF.IDEMPOTENCY_TOL, name = "projector"):
    """Validate a Projector: Hermitian and ‖P² − P‖_max ≤ `tol`."""
    P = check_hermitian(P, tol = tol, name = name)
    r = max_abs(P @ P - P)
    if r > tol:
        error("%s is not idempotent (residual %.3g > %.3g)." % (name, r, tol))
        raise InvalidMatrix("%s is not idempotent." % name)
    return(P)


def check_density(rho, trace_tol = _DEF.NORM_TOL, psd_tol = _DEF.PSD_TOL,
                  name = "density matrix",
                  hermiticity_tol = _DEF.HERMITICITY_TOL):
    """Validate a DensityMatrix: Hermitian, unit trace, min eigenvalue
    >= -`psd_tol`."""
    rho = check_hermitian(rho, tol = hermiticity_tol, name = name)
    tr = np.real(np.trace(rho))
    if abs(tr - 1.0) > trace_tol:
        error("%s has trace %.12g." % (name, tr))
        raise InvalidMatrix("%s does not have unit trace." % name)
    lmin = np.min(np.linalg.eigvalsh((rho + dagger(rho)) / 2))
    if lmin < -psd_tol:
        error("%s has negative eigenvalue %.3g." % (name, lmin))
        raise InvalidMatrix("%s is not positive semi-definite." % name)
    return(rho)


def admit_density(rho, trace_tol = _DEF.NORM_TOL, psd_tol = _DEF.PSD_TOL,
                  hermiticity_tol = _DEF.HERMITICITY_TOL,
                  name = "density matrix"):
    """Validate `rho` under the given tolerances and return the nearest
    exact density matrix.

    The Hermitian part is taken, eigenvalues are clipped at 0 and the
    trace is rescaled to 1, so the result passes :func:`check_density`
    with the default tolerances whatever tolerances admitted it.

    Raises
    ------
    InvalidMatrix
        If `rho` fails :func:`check_density` with the given tolerances.
    """
    rho = check_density(rho, trace_tol = trace_tol, psd_tol = psd_tol,
                        name = name, hermiticity_tol = hermiticity_tol)
    w, V = np.linalg.eigh((rho + dagger(rho)) / 2)
    w = np.clip(w, 0.0, None)
    w = w / np.sum(w)
    rho = (V * w[np.newaxis, :]) @ dagger(V)
    return((rho + dagger(rho)) / 2)


def check_state_vector(psi, tol = _DEF.NORM_TOL, name = "state vector"):
    """Validate a StateVector (unit Euclidean norm)."""
    psi = as_vector(psi, name)
    nrm = np.linalg.norm(psi)
    if abs(nrm - 1.0) > tol:
        error("%s has norm %.12g." % (name, nrm))
        raise NotNormalized("%s is not normalized." % name)
    return(psi)


def normalize(v):
    v = as_vector(v)
    nrm = np.linalg.norm(v)
    if nrm == 0.0:
        error("cannot normalize the zero vector.")
        raise NotNormalized("cannot normalize the zero vector.")
    return(v / nrm)


def ket2dm(psi):
    """|ψ⟩⟨ψ| of a (not necessarily normalized) vector."""
    psi = as_vector(psi)
    return(np.outer(psi, np.conj(psi)))


def projector_onto(basis):
    """Orthogonal projector B B† onto the span of orthonormal columns `basis`."""
    B = np.asarray(basis, dtype = complex)
    return(B @ dagger(B))
