# gns.py - the GNS construction for block algebras.


import numpy as np
import scipy.linalg as sla

from logging import debug, error
from ..config import DefaultConfig
from ..linalg.core import hermitian_eig
from ..utils.errors import AlgebraMismatch, InvalidState, NoConvergence
from ..utils.xmatrix import dagger, max_abs
from .block import AlgebraElement, AlgebraState, WEIGHT_TOL, \
    element_mul, element_star, state_value


_DEF = DefaultConfig()


class GnsRepresentation:
    """Cyclic representation (H_φ, π_φ, ξ_φ) induced by a state φ.

    Vectors of H_φ are classes [x] of algebra elements modulo the null
    ideal {x : φ(x*x) = 0}, realized in ℂ^r through the embedding
    E = diag(√λ) W† of the Gram matrix G = W diag(λ) W†.

    Attributes
    ----------
    algebra : BlockAlgebra
    state : AlgebraState
    hilbert_dim : int
        r, the numerical rank of the Gram matrix.
    basis_labels : list of tuple
        Matrix-unit labels (k, i, j) of the algebra basis.
    rep_map : list of numpy.ndarray
        π(e) for every basis element e, in the order of `basis_labels`.
    cyclic_vector : numpy.ndarray
        ξ = [1].
    gram_eigenvalues : numpy.ndarray
        All eigenvalues of the Gram matrix, ascending.
    """
    def __init__(self, algebra, state, embedding, embedding_inv,
                 gram_eigenvalues):
        self.algebra = algebra
        self.state = state
        self.embedding = embedding
        self.embedding_inv = embedding_inv
        self.gram_eigenvalues = gram_eigenvalues
        self.hilbert_dim = embedding.shape[0]

        labels, elems = algebra.matrix_units()
        self.basis_labels = labels
        self.basis = elems
        self.rep_map = [self.represent(e) for e in elems]
        self.cyclic_vector = embedding @ algebra.unit().coefficients()

    def represent(self, x):
        """π(x) = E L_x E⁺, with L_x left multiplication on coefficients."""
        if x.algebra != self.algebra:
            raise AlgebraMismatch("element of another algebra.")
        L = sla.block_diag(*[np.kron(b, np.eye(b.shape[0])) for b in x.blocks])
        return(self.embedding @ L @ self.embedding_inv)

    def vector(self, x):
        """The vector [x] ∈ H_φ."""
        return(self.embedding @ x.coefficients())

    def homomorphism_residual(self):
        """max over basis pairs of ‖π(xy) − π(x)π(y)‖_max and
        ‖π(x*) − π(x)†‖_max."""
        res = 0.0
        for a, pa in zip(self.basis, self.rep_map):
            res = max(res, max_abs(self.represent(element_star(a)) - dagger(pa)))
            for b, pb in zip(self.basis, self.rep_map):
                res = max(res, max_abs(self.represent(element_mul(a, b)) - pa @ pb))
        return(res)

    def cyclic_rank(self, rank_tol = _DEF.RANK_TOL):
        """Numerical rank of {π(e)ξ : e in basis}."""
        M = np.column_stack([p @ self.cyclic_vector for p in self.rep_map])
        s = np.linalg.svd(M, compute_uv = False)
        return(int(np.sum(s > rank_tol * s[0])) if s[0] > 0 else 0)


def gram_matrix(algebra, state):
    """G[x][y] = φ(x*y) over the matrix-unit basis."""
    _, elems = algebra.matrix_units()
    m = len(elems)
    G = np.zeros((m, m), dtype = complex)
    stars = [element_star(e) for e in elems]
    for a in range(m):
        for b in range(m):
            G[a, b] = state_value(state, element_mul(stars[a], elems[b]))
    return(G)


def gns_construct(algebra, state, gram_tol = _DEF.GRAM_TOL,
                  eig_tol = _DEF.EIG_TOL):
    """Build the GNS representation of `state`.

    Parameters
    ----------
    algebra : BlockAlgebra
    state : AlgebraState
    gram_tol : float
        Gram eigenvalues <= `gram_tol` × the largest one span the null
        ideal and are quotiented out.
    eig_tol : float
        Residual tolerance of the Gram eigendecomposition.

    Returns
    -------
    GnsRepresentation

    Raises
    ------
    InvalidState
        If `state` is not a valid state on `algebra`.
    """
    if not isinstance(state, AlgebraState) or state.algebra != algebra:
        error("state does not belong to %s." % algebra)
        raise InvalidState("state does not belong to the algebra.")
    if abs(np.sum(state.weights) - 1.0) > WEIGHT_TOL:
        raise InvalidState("state is not normalized.")

    G = gram_matrix(algebra, state)
    try:
        lam, W = hermitian_eig(G, eig_tol = eig_tol)
    except NoConvergence:
        raise InvalidState("Gram matrix of the state is not Hermitian.")
    lmax = lam[-1]
    if lmax <= 0:
        raise InvalidState("Gram matrix vanishes.")
    if lam[0] < -1e-9 * lmax:
        error("Gram matrix has negative eigenvalue %.3g." % lam[0])
        raise InvalidState("state is not positive.")
    keep = lam > gram_tol * lmax
    lk, Wk = lam[keep], W[:, keep]
    E = np.sqrt(lk)[:, np.newaxis] * dagger(Wk)
    E_inv = Wk / np.sqrt(lk)[np.newaxis, :]
    debug("GNS space of dimension %d from %d basis elements." % \
        (E.shape[0], G.shape[0]))
    return GnsRepresentation(algebra, state, E, E_inv, lam)


def state_reproduction_residual(rep, state = None):
    """max over basis elements e of |⟨ξ|π(e)|ξ⟩ − φ(e)|."""
    if state is None:
        state = rep.state
    xi = rep.cyclic_vector
    res = 0.0
    for e, p in zip(rep.basis, rep.rep_map):
        res = max(res, abs(np.vdot(xi, p @ xi) - state_value(state, e)))
    return(float(res))


def commutant_dimension(rep, rank_tol = _DEF.RANK_TOL):
    """Dimension of {M : Mπ(e) = π(e)M for all basis e}.

    Solved as the null space of the stacked equations
    (I ⊗ π(e)ᵀ − π(e) ⊗ I) vec(M) = 0, vec row-major.
    """
    r = rep.hilbert_dim
    I = np.eye(r)
    A = np.vstack([np.kron(I, p.T) - np.kron(p, I) for p in rep.rep_map])
    N = sla.null_space(A, rcond = rank_tol)
    return(int(N.shape[1]))


def purity_check(state, rank_tol = _DEF.RANK_TOL, eig_tol = _DEF.EIG_TOL):
    """True iff the state is pure: all weight on one block whose density
    has rank 1."""
    w = state.weights
    idx = np.where(np.abs(w - 1.0) <= WEIGHT_TOL)[0]
    if len(idx) != 1:
        return(False)
    lam, _ = hermitian_eig(state.densities[idx[0]], eig_tol = eig_tol)
    return(int(np.sum(lam > rank_tol * max(lam[-1], 1e-300))) == 1)
