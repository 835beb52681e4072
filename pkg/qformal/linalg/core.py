# core.py - Hermitian eigendecomposition, matrix exponential, tensor products,
# partial traces and subspace arithmetic.

# Conventions:
# 1. hbar = 1.
# 2. Composite index of a tensor product is row-major and A-major, i.e.,
#    `i_a * dim_b + i_b`, which is what `numpy.kron` produces.


import numpy as np
import scipy.linalg as sla

from logging import error
from ..config import DefaultConfig
from ..utils.errors import DimensionMismatch, NoConvergence, NonFinite, \
    UsageError
from ..utils.xmatrix import as_matrix, as_vector, check_hermitian, \
    check_square, dagger, is_hermitian, max_abs


_DEF = DefaultConfig()

PAULI_X = np.array([[0, 1], [1, 0]], dtype = complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype = complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype = complex)
PAULIS = (PAULI_X, PAULI_Y, PAULI_Z)


### Spectral decomposition

def _fix_phases(V):
    """Make the largest-magnitude entry of every column real positive."""
    V = V.copy()
    for k in range(V.shape[1]):
        i = int(np.argmax(np.abs(V[:, k])))
        if np.abs(V[i, k]) > 0:
            V[:, k] *= np.conj(V[i, k]) / np.abs(V[i, k])
    return(V)


def _column_key(v, decimals = 10):
    x = np.column_stack([np.round(v.real, decimals), np.round(v.imag, decimals)])
    return(tuple(x.ravel()))


def _canonical_cluster(C):
    """Orthonormal basis of span(C) that only depends on the subspace.

    Gram-Schmidt on the columns P e_0, P e_1, ... of the projector P = CC†,
    skipping columns whose residual norm is at most 1/(2√n); at least
    rank(P) columns exceed it, so the basis is complete.
    """
    n, m = C.shape
    P = C @ dagger(C)
    thr = 0.5 / np.sqrt(n)
    Q = []
    for i in range(n):
        v = P[:, i].copy()
        for q in Q:
            v = v - q * np.vdot(q, v)
        nrm = np.linalg.norm(v)
        if nrm > thr:
            Q.append(v / nrm)
        if len(Q) == m:
            break
    return(np.column_stack(Q))


def hermitian_eig(op, eig_tol = _DEF.EIG_TOL,
                  hermiticity_tol = _DEF.HERMITICITY_TOL):
    """Eigendecomposition of a Hermitian operator.

    Parameters
    ----------
    op : array_like
        The Hermitian operator.
    eig_tol : float
        Maximum residual ‖op V − V diag(λ)‖_max, relative to max(1, ‖op‖_max).
        Also the width of degenerate clusters for tie-breaking.
    hermiticity_tol : float
        Relative tolerance of the Hermiticity check.

    Returns
    -------
    numpy.ndarray
        Eigenvalues in ascending order.
    numpy.ndarray
        Unitary matrix whose columns are the eigenvectors.
        Each column has its largest-magnitude entry real positive; within a
        degenerate cluster columns are ordered by descending lexicographic
        comparison of their (real, imag) entries. Clusters whose spread is
        at most `eig_tol` / 2 (relative) get a basis fixed by the
        eigenspace alone, independent of the LAPACK output.

    Raises
    ------
    NonFinite
        If `op` contains NaN or Inf.
    NoConvergence
        If LAPACK fails or the residual exceeds `eig_tol`.
    """
    H = check_hermitian(op, tol = hermiticity_tol)
    H = (H + dagger(H)) / 2
    try:
        w, V = sla.eigh(H)
    except (sla.LinAlgError, ValueError) as e:
        error("eigendecomposition failed: %s." % str(e))
        raise NoConvergence("eigendecomposition failed.")

    V = _fix_phases(V)
    scale = max(1.0, max_abs(H))
    order = []
    i = 0
    n = w.shape[0]
    while i < n:
        j = i + 1
        while j < n and w[j] - w[j - 1] <= eig_tol * scale:
            j += 1
        cluster = list(range(i, j))
        if len(cluster) > 1 and w[j - 1] - w[i] <= 0.5 * eig_tol * scale:
            V[:, i:j] = _fix_phases(_canonical_cluster(V[:, i:j]))
        if len(cluster) > 1:
            cluster.sort(key = lambda k: _column_key(V[:, k]), reverse = True)
        order.extend(cluster)
        i = j
    w, V = w[order], V[:, order]

    res = max_abs(H @ V - V * w[np.newaxis, :])
    if res > eig_tol * scale:
        error("eigendecomposition residual %.3g exceeds %.3g." % \
            (res, eig_tol * scale))
        raise NoConvergence("eigendecomposition residual too large.")
    return((w, V))


def matrix_exp(op, scale = 1.0, method = "auto"):
    """Matrix exponential exp(scale × op).

    Parameters
    ----------
    op : array_like
        Square matrix.
    scale : complex, default 1.0
        The scalar multiplying `op`, e.g., `-1j * t` for the propagator
        U(t) = exp(-itH) or `-beta` for the Boltzmann factor.
    method : {"auto", "eig", "pade"}
        "eig" uses the Hermitian eigendecomposition (requires Hermitian
        `op`); "pade" uses scipy's scaling-and-squaring Padé algorithm;
        "auto" picks "eig" for Hermitian input and "pade" otherwise.

    Returns
    -------
    numpy.ndarray
        The exponential.

    Raises
    ------
    NonFinite
        On overflow.
    """
    A = check_square(op, "exponent")
    if method == "auto":
        method = "eig" if is_hermitian(A) else "pade"
    if method == "eig":
        w, V = hermitian_eig(A)
        with np.errstate(over = "ignore", invalid = "ignore"):
            E = (V * np.exp(complex(scale) * w)[np.newaxis, :]) @ dagger(V)
    elif method == "pade":
        with np.errstate(over = "ignore", invalid = "ignore"):
            E = sla.expm(complex(scale) * A)
    else:
        raise UsageError("invalid method '%s'." % method)
    if not np.all(np.isfinite(E)):
        error("matrix exponential overflowed (scale = %s)." % str(scale))
        raise NonFinite("matrix exponential overflowed.")
    return(E)


def propagator(H, t):
    """U(t) = exp(-itH)."""
    return(matrix_exp(H, scale = -1j * t))


### Tensor products and partial traces

def tensor(a, b):
    """Kronecker product; composite index `i_a * dim_b + i_b`."""
    return(np.kron(as_matrix(a, "a"), as_matrix(b, "b")))


def tensor_all(*ops):
    res = np.ones((1, 1), dtype = complex)
    for op in ops:
        res = np.kron(res, np.asarray(op, dtype = complex))
    return(res)


def _check_dims(M, dims):
    d = int(np.prod(dims))
    if M.shape != (d, d):
        error("matrix of shape %s does not match dims %s." % \
            (M.shape, list(dims)))
        raise DimensionMismatch("matrix shape does not match dims.")


def partial_trace_multi(rho, dims, keep):
    """Partial trace keeping the subsystems with indices in `keep`.

    Parameters
    ----------
    rho : array_like
        Operator on the composite space of dimension prod(dims).
    dims : list of int
        Subsystem dimensions, A-major.
    keep : list of int
        Indices of kept subsystems; the result follows their ascending order.

    Returns
    -------
    numpy.ndarray
        The reduced operator.
    """
    M = check_square(rho, "rho")
    dims = [int(d) for d in dims]
    _check_dims(M, dims)
    n = len(dims)
    keep = sorted(set(int(k) for k in keep))
    if any(k < 0 or k >= n for k in keep):
        error("invalid subsystem indices %s for %d subsystems." % (keep, n))
        raise DimensionMismatch("invalid subsystem indices.")

    t = M.reshape(dims + dims)
    for k in sorted(set(range(n)) - set(keep), reverse = True):
        m = t.ndim // 2
        t = np.trace(t, axis1 = k, axis2 = k + m)
    d = int(np.prod([dims[k] for k in keep])) if keep else 1
    return(t.reshape(d, d))


def partial_trace(rho, dims, keep = "A"):
    """Bipartite partial trace.

    Parameters
    ----------
    rho : array_like
        Operator on ℂ^{d_A} ⊗ ℂ^{d_B}.
    dims : tuple of int
        (d_A, d_B).
    keep : {"A", "B"}
        The subsystem to keep.

    Returns
    -------
    numpy.ndarray
        The reduced operator on the kept subsystem; trace is preserved.

    Raises
    ------
    DimensionMismatch
        If `rho` is not (d_A d_B) × (d_A d_B) or `dims` is not a pair.
    """
    if len(dims) != 2:
        error("bipartite partial trace expects two dims, got %s." % \
            (list(dims), ))
        raise DimensionMismatch("expect two subsystem dimensions.")
    if keep in ("A", 0):
        return(partial_trace_multi(rho, dims, [0]))
    elif keep in ("B", 1):
        return(partial_trace_multi(rho, dims, [1]))
    raise UsageError("keep should be 'A' or 'B'.")


### Subspaces

def subspace_basis(vectors, dim = None, rank_tol = _DEF.RANK_TOL):
    """Orthonormal basis of the span of `vectors`.

    Parameters
    ----------
    vectors : list of array_like or numpy.ndarray
        A list of vectors, or a 2d array whose columns are the vectors.
    dim : int or None, default None
        Ambient dimension; required when `vectors` is empty.
    rank_tol : float
        Singular values <= `rank_tol` × the largest one are dropped.

    Returns
    -------
    numpy.ndarray
        A `dim x rank` matrix with orthonormal columns (`dim x 0` for the
        zero subspace).
    """
    if isinstance(vectors, np.ndarray) and vectors.ndim == 2:
        M = as_matrix(vectors)
    else:
        vectors = [as_vector(v) for v in vectors]
        if len(vectors) == 0:
            if dim is None:
                raise UsageError("'dim' is required for an empty input.")
            return(np.zeros((dim, 0), dtype = complex))
        lens = set(v.shape[0] for v in vectors)
        if len(lens) != 1:
            error("vectors of different dimensions %s." % sorted(lens))
            raise DimensionMismatch("vectors of different dimensions.")
        M = np.column_stack(vectors)
    if dim is not None and M.shape[0] != dim:
        raise DimensionMismatch("vectors do not live in dimension %d." % dim)
    if M.shape[1] == 0:
        return(np.zeros((M.shape[0], 0), dtype = complex))
    U, s, _ = np.linalg.svd(M, full_matrices = False)
    if s[0] <= 0:
        return(np.zeros((M.shape[0], 0), dtype = complex))
    rank = int(np.sum(s > rank_tol * s[0]))
    return(U[:, :rank])


### Functionals of states

def expectation(state, A):
    """tr(ρA) for a density matrix or ⟨ψ|A|ψ⟩ for a vector (real part)."""
    A = as_matrix(A, "observable")
    s = np.asarray(state, dtype = complex)
    if s.ndim == 1:
        return(float(np.real(np.vdot(s, A @ s))))
    return(float(np.real(np.trace(s @ A))))


def purity(rho):
    """tr ρ²."""
    rho = as_matrix(rho, "rho")
    return(float(np.real(np.trace(rho @ rho))))


def trace_distance(rho, sigma):
    """½‖ρ − σ‖₁."""
    D = as_matrix(rho, "rho") - as_matrix(sigma, "sigma")
    w, _ = hermitian_eig(D)
    return(float(0.5 * np.sum(np.abs(w))))


def psd_sqrt(rho):
    """Square root of a positive semi-definite operator."""
    w, V = hermitian_eig(rho)
    w = np.sqrt(np.clip(w, 0.0, None))
    return((V * w[np.newaxis, :]) @ dagger(V))


def fidelity(rho, sigma):
    """Uhlmann fidelity (tr √(√ρ σ √ρ))²."""
    r = psd_sqrt(rho)
    M = r @ as_matrix(sigma, "sigma") @ r
    w, _ = hermitian_eig((M + dagger(M)) / 2)
    return(float(np.sum(np.sqrt(np.clip(w, 0.0, None))) ** 2))


def spin_observable(n):
    """n·σ⃗ for a real 3-vector `n`."""
    n = np.asarray(n, dtype = float)
    if n.shape != (3, ):
        raise DimensionMismatch("direction should be a 3-vector.")
    return(n[0] * PAULI_X + n[1] * PAULI_Y + n[2] * PAULI_Z)
