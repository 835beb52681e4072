# evolve.py - Schrödinger and Heisenberg pictures.


import numpy as np

from logging import error
from ..config import DefaultConfig
from ..linalg.core import propagator
from ..utils.errors import DimensionMismatch
from ..utils.xmatrix import as_vector, check_hermitian, dagger


_DEF = DefaultConfig()


def _check(n, H, what):
    if H.shape != (n, n):
        error("%s of dim %d for a %dx%d Hamiltonian." % \
            (what, n, H.shape[0], H.shape[1]))
        raise DimensionMismatch("%s and Hamiltonian differ in dimension." % what)


def schrodinger_evolve(psi, H, t, hermiticity_tol = _DEF.HERMITICITY_TOL):
    """ψ(t) = exp(−itH) ψ."""
    psi = as_vector(psi, "psi")
    H = check_hermitian(H, tol = hermiticity_tol, name = "Hamiltonian")
    H = (H + dagger(H)) / 2
    _check(psi.shape[0], H, "state")
    return(propagator(H, t) @ psi)


def heisenberg_evolve(A, H, t, hermiticity_tol = _DEF.HERMITICITY_TOL):
    """A(t) = U(t)† A U(t) with U(t) = exp(−itH)."""
    A = check_hermitian(A, tol = hermiticity_tol, name = "observable")
    H = check_hermitian(H, tol = hermiticity_tol, name = "Hamiltonian")
    A, H = (A + dagger(A)) / 2, (H + dagger(H)) / 2
    _check(A.shape[0], H, "observable")
    U = propagator(H, t)
    At = dagger(U) @ A @ U
    return((At + dagger(At)) / 2)


def picture_equivalence(psi, A, H, t, hermiticity_tol = _DEF.HERMITICITY_TOL):
    """|⟨ψ(t)|A|ψ(t)⟩ − ⟨ψ|A(t)|ψ⟩|, with `A` and `H` replaced by their
    Hermitian parts once admitted under `hermiticity_tol`."""
    psi = as_vector(psi, "psi")
    pt = schrodinger_evolve(psi, H, t, hermiticity_tol)
    At = heisenberg_evolve(A, H, t, hermiticity_tol)
    A = np.asarray(A, dtype = complex)
    A = (A + dagger(A)) / 2
    return(float(abs(np.vdot(pt, A @ pt) - np.vdot(psi, At @ psi))))
