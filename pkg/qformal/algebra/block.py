# block.py - direct sums of full complex matrix blocks, their elements and
# states.


import numpy as np
import scipy.linalg as sla

from logging import error
from ..config import DefaultConfig
from ..linalg.core import hermitian_eig
from ..linalg.rand import complex_gaussian, get_rng, random_density, \
    random_state
from ..utils.errors import AlgebraMismatch, DimensionMismatch, \
    InvalidMatrix, InvalidState, NotNormal, NotNormalized, NotSymmetric
from ..utils.xmatrix import as_matrix, check_density, check_state_vector, \
    dagger, ket2dm, max_abs


_DEF = DefaultConfig()
WEIGHT_TOL = 1e-12


class BlockAlgebra:
    """The algebra ⊕_i M_{n_i} of block-diagonal complex matrices.

    Parameters
    ----------
    block_dims : list of int
        Dimension n_i of every block; at least one block, each >= 1.
    """
    def __init__(self, block_dims):
        dims = [int(n) for n in block_dims]
        if len(dims) == 0 or min(dims) < 1:
            error("invalid block dims %s." % (list(block_dims), ))
            raise InvalidMatrix("block dims should be a non-empty list of positive ints.")
        self.block_dims = tuple(dims)

    def __eq__(self, other):
        return isinstance(other, BlockAlgebra) and \
            self.block_dims == other.block_dims

    def __hash__(self):
        return hash(self.block_dims)

    def __repr__(self):
        return "BlockAlgebra(%s)" % (list(self.block_dims), )

    @property
    def n_blocks(self):
        return len(self.block_dims)

    @property
    def total_dim(self):
        """Dimension of the direct-sum space ⊕ ℂ^{n_i}."""
        return sum(self.block_dims)

    @property
    def dim(self):
        """Vector-space dimension Σ n_i²."""
        return sum(n * n for n in self.block_dims)

    def element(self, blocks):
        return AlgebraElement(self, blocks)

    def unit(self):
        return AlgebraElement(self, [np.eye(n) for n in self.block_dims])

    def zero(self):
        return AlgebraElement(self, [np.zeros((n, n)) for n in self.block_dims])

    def matrix_units(self):
        """The matrix-unit basis e^k_{ij}.

        Returns
        -------
        list of tuple
            Labels (k, i, j), block-major and row-major inside a block; this
            is also the order of :meth:`AlgebraElement.coefficients`.
        list of AlgebraElement
            The basis elements.
        """
        labels, elems = [], []
        for k, n in enumerate(self.block_dims):
            for i in range(n):
                for j in range(n):
                    blocks = [np.zeros((m, m), dtype = complex) \
                              for m in self.block_dims]
                    blocks[k][i, j] = 1.0
                    labels.append((k, i, j))
                    elems.append(AlgebraElement(self, blocks))
        return((labels, elems))

    def from_coefficients(self, c):
        c = np.asarray(c, dtype = complex)
        if c.shape != (self.dim, ):
            raise DimensionMismatch("expect %d coefficients." % self.dim)
        blocks, s = [], 0
        for n in self.block_dims:
            blocks.append(c[s:(s + n * n)].reshape(n, n))
            s += n * n
        return AlgebraElement(self, blocks)


class AlgebraElement:
    """An element x = ⊕_i x_i of a :class:`BlockAlgebra`."""
    def __init__(self, algebra, blocks):
        if len(blocks) != algebra.n_blocks:
            error("expect %d blocks, got %d." % \
                (algebra.n_blocks, len(blocks)))
            raise DimensionMismatch("wrong number of blocks.")
        mats = []
        for k, (n, b) in enumerate(zip(algebra.block_dims, blocks)):
            M = as_matrix(b, "block %d" % k)
            if M.shape != (n, n):
                error("block %d should be %dx%d, got %s." % (k, n, n, M.shape))
                raise DimensionMismatch("block %d has wrong shape." % k)
            mats.append(M)
        self.algebra = algebra
        self.blocks = tuple(mats)

    def coefficients(self):
        """Coordinates in the matrix-unit basis."""
        return(np.concatenate([b.ravel() for b in self.blocks]))

    def __add__(self, other):
        return element_add(self, other)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return element_mul(self, other)
        return AlgebraElement(self.algebra, [other * b for b in self.blocks])

    def __rmul__(self, other):
        return AlgebraElement(self.algebra, [other * b for b in self.blocks])

    def __sub__(self, other):
        return element_add(self, -1.0 * other)

    def star(self):
        return element_star(self)

    def __repr__(self):
        return "AlgebraElement(%s)" % (list(self.algebra.block_dims), )


class AlgebraState:
    """A state ω(x) = Σ_i p_i tr(ρ_i x_i).

    Parameters
    ----------
    algebra : BlockAlgebra
    weights : list of float
        p_i >= 0 summing to 1 within 1e-12.
    densities : list of array_like
        A density matrix ρ_i per block (ignored where p_i = 0, but still
        required to be valid).

    Raises
    ------
    InvalidState
        If the weights or densities are invalid.
    """
    def __init__(self, algebra, weights, densities):
        w = np.asarray(weights, dtype = float)
        if w.shape != (algebra.n_blocks, ) or len(densities) != algebra.n_blocks:
            error("state should have %d weights and densities." % \
                algebra.n_blocks)
            raise InvalidState("state does not match the algebra.")
        if not np.all(np.isfinite(w)) or np.any(w < 0) or \
                abs(np.sum(w) - 1.0) > WEIGHT_TOL:
            error("invalid weights %s." % (w.tolist(), ))
            raise InvalidState("weights should be non-negative and sum to 1.")
        rhos = []
        for k, (n, rho) in enumerate(zip(algebra.block_dims, densities)):
            try:
                rho = check_density(rho, name = "density of block %d" % k)
            except InvalidMatrix as e:
                raise InvalidState(str(e))
            if rho.shape != (n, n):
                error("density %d should be %dx%d, got %s." % \
                    (k, n, n, rho.shape))
                raise InvalidState("density %d has wrong shape." % k)
            rhos.append(rho)
        self.algebra = algebra
        self.weights = w
        self.densities = tuple(rhos)

    def __call__(self, x):
        return state_value(self, x)


### Algebraic operations

def _check_same(x, y):
    if x.algebra != y.algebra:
        error("elements of different algebras %s and %s." % \
            (x.algebra, y.algebra))
        raise AlgebraMismatch("elements belong to different algebras.")


def element_mul(x, y):
    _check_same(x, y)
    return AlgebraElement(x.algebra, [a @ b for a, b in zip(x.blocks, y.blocks)])


def element_add(x, y):
    _check_same(x, y)
    return AlgebraElement(x.algebra, [a + b for a, b in zip(x.blocks, y.blocks)])


def element_star(x):
    return AlgebraElement(x.algebra, [dagger(a) for a in x.blocks])


def element_to_direct_sum(x):
    """Block-diagonal matrix of `x` on ⊕ ℂ^{n_i}."""
    return(sla.block_diag(*x.blocks))


def element_from_direct_sum(algebra, M, tol = _DEF.HERMITICITY_TOL):
    """Inverse of :func:`element_to_direct_sum`.

    Raises
    ------
    AlgebraMismatch
        If `M` has entries outside the diagonal blocks larger than `tol`.
    """
    M = as_matrix(M)
    D = algebra.total_dim
    if M.shape != (D, D):
        raise DimensionMismatch("expect a %dx%d matrix." % (D, D))
    blocks, s = [], 0
    for n in algebra.block_dims:
        blocks.append(M[s:(s + n), s:(s + n)].copy())
        s += n
    x = AlgebraElement(algebra, blocks)
    if max_abs(M - element_to_direct_sum(x)) > tol * max(1.0, max_abs(M)):
        error("matrix has entries between different blocks.")
        raise AlgebraMismatch("matrix is not block diagonal.")
    return(x)


### States and norms

def state_value(omega, x):
    """ω(x) = Σ_i p_i tr(ρ_i x_i)."""
    if omega.algebra != x.algebra:
        error("state of %s applied to element of %s." % \
            (omega.algebra, x.algebra))
        raise AlgebraMismatch("state and element belong to different algebras.")
    v = 0j
    for p, rho, b in zip(omega.weights, omega.densities, x.blocks):
        if p > 0:
            v += p * np.trace(rho @ b)
    return(complex(v))


def cstar_norm(x):
    """‖x‖ = √(spectral radius of x*x), maximized over blocks."""
    m = 0.0
    for b in x.blocks:
        w = np.linalg.eigvalsh(dagger(b) @ b)
        m = max(m, float(w[-1]))
    return(float(np.sqrt(max(m, 0.0))))


def sampled_state_norm(x, samples = 10000, seed = 0):
    """Monte Carlo lower estimate √(sup_ω ω(x*x)) over random pure states.

    The supremum over states equals ‖x‖²; sampling approaches it from
    below.
    """
    rng = get_rng(seed)
    xx = element_star(x) * x
    A = x.algebra
    best = 0.0
    for _ in range(samples):
        k = int(rng.integers(A.n_blocks))
        psi = random_state(A.block_dims[k], rng)
        v = float(np.real(np.vdot(psi, xx.blocks[k] @ psi)))
        best = max(best, v)
    return(float(np.sqrt(best)))


### Spectra and outcomes

def is_symmetric(x, tol = _DEF.HERMITICITY_TOL):
    return all(max_abs(b - dagger(b)) <= tol * max(1.0, max_abs(b)) \
               for b in x.blocks)


def element_spectrum(x, tol = _DEF.HERMITICITY_TOL):
    """Union of the block spectra.

    Returns
    -------
    list of tuple
        (eigenvalue, block index); eigenvalues are real floats when `x` is
        symmetric and complex otherwise.

    Raises
    ------
    NotNormal
        If some block does not commute with its adjoint.
    """
    sym = is_symmetric(x, tol)
    res = []
    for k, b in enumerate(x.blocks):
        scale = max(1.0, max_abs(b) ** 2)
        if max_abs(b @ dagger(b) - dagger(b) @ b) > tol * scale:
            error("block %d is not normal." % k)
            raise NotNormal("element is not normal.")
        if sym:
            w = np.linalg.eigvalsh((b + dagger(b)) / 2)
            res.extend([(float(z), k) for z in w])
        else:
            w = np.linalg.eigvals(b)
            res.extend([(complex(z), k) for z in w])
    return(res)


def _check_symmetric(x, tol):
    if not is_symmetric(x, tol):
        error("element is not symmetric (x != x*).")
        raise NotSymmetric("element is not symmetric.")


def _spectral_blocks(x):
    return([hermitian_eig((b + dagger(b)) / 2) for b in x.blocks])


def _cluster(values, tol):
    """Group sorted values into clusters of consecutive gaps <= `tol`."""
    order = np.argsort(values)
    labels = np.zeros(len(values), dtype = int)
    c = -1
    prev = None
    for i in order:
        if prev is None or values[i] - prev > tol:
            c += 1
        labels[i] = c
        prev = values[i]
    return(labels)


def outcome_probability(omega, x, z, cluster_tol = _DEF.CLUSTER_TOL,
                        tol = _DEF.HERMITICITY_TOL):
    """ω(Π_z), the probability of measuring the value `z` of `x`.

    Π_z is the spectral projector of `x` onto eigenvalues within
    `cluster_tol` of `z`.

    Raises
    ------
    NotSymmetric
        If x != x*.
    """
    _check_symmetric(x, tol)
    if omega.algebra != x.algebra:
        raise AlgebraMismatch("state and element belong to different algebras.")
    p = 0.0
    for wk, rho, (w, V) in zip(omega.weights, omega.densities,
                               _spectral_blocks(x)):
        idx = np.abs(w - z) <= cluster_tol
        if wk <= 0 or not np.any(idx):
            continue
        B = V[:, idx]
        p += wk * float(np.real(np.trace(dagger(B) @ rho @ B)))
    return(p)


def outcome_distribution(omega, x, cluster_tol = _DEF.CLUSTER_TOL,
                         tol = _DEF.HERMITICITY_TOL):
    """Probabilities over the distinct spectrum of a symmetric `x`.

    Returns
    -------
    list of tuple
        (outcome value, probability), ascending in value; eigenvalues
        closer than `cluster_tol` form one outcome, reported as their mean.
    """
    _check_symmetric(x, tol)
    if omega.algebra != x.algebra:
        raise AlgebraMismatch("state and element belong to different algebras.")
    eigs = _spectral_blocks(x)
    vals, owner = [], []
    for k, (w, V) in enumerate(eigs):
        for j in range(w.shape[0]):
            vals.append(w[j])
            owner.append((k, j))
    vals = np.array(vals)
    labels = _cluster(vals, cluster_tol)
    res = []
    for c in range(labels.max() + 1):
        idx = np.where(labels == c)[0]
        p = 0.0
        for i in idx:
            k, j = owner[i]
            v = eigs[k][1][:, j]
            p += omega.weights[k] * float(np.real(np.vdot(v, omega.densities[k] @ v)))
        res.append((float(np.mean(vals[idx])), p))
    return(res)


### Random objects

def random_element(algebra, seed = 0, symmetric = False):
    rng = get_rng(seed)
    blocks = []
    for n in algebra.block_dims:
        G = complex_gaussian((n, n), rng)
        blocks.append((G + dagger(G)) / 2 if symmetric else G)
    return AlgebraElement(algebra, blocks)


def random_algebra_state(algebra, seed = 0, pure = None):
    """Random state on `algebra`.

    Parameters
    ----------
    algebra : BlockAlgebra
    seed : int or numpy.random.SeedSequence or numpy.random.Generator
    pure : bool or None, default None
        True gives a pure state (one block, rank-1 density); False gives a
        Dirichlet mixture over blocks with random-rank densities; None
        picks either with equal probability.

    Returns
    -------
    AlgebraState
    """
    rng = get_rng(seed)
    if pure is None:
        pure = bool(rng.integers(2))
    dims = algebra.block_dims
    if pure:
        k = int(rng.integers(len(dims)))
        weights = np.zeros(len(dims))
        weights[k] = 1.0
        rhos = [ket2dm(random_state(n, rng)) for n in dims]
    else:
        weights = rng.dirichlet(np.ones(len(dims)))
        weights = weights / np.sum(weights)
        rhos = [random_density(n, rng, rank = int(rng.integers(1, n + 1))) \
                for n in dims]
    return AlgebraState(algebra, weights, rhos)


### Superselection

def superselection_indistinguishability(algebra, coefficients, block_pures,
        samples = 1000, seed = 0, full_algebra = False):
    """Largest deviation between a cross-sector superposition and the
    corresponding mixture, over sampled observables.

    With |ψ⟩ = Σ_i c_i |ψ_i⟩ on ⊕ ℂ^{n_i}, returns
    max |⟨ψ|a|ψ⟩ − Σ_i |c_i|² ⟨ψ_i|a_i|ψ_i⟩| over `samples` random
    block-diagonal elements a.

    Parameters
    ----------
    algebra : BlockAlgebra
    coefficients : list of complex
        c_i with Σ|c_i|² = 1.
    block_pures : list of array_like
        Unit vector ψ_i of every block.
    samples : int, default 1000
    seed : int or numpy.random.SeedSequence or numpy.random.Generator
    full_algebra : bool, default False
        If True, sample from the full matrix algebra on the direct sum
        (intertwiners between blocks allowed) instead, and include the
        explicit off-diagonal witness |ψ_0⟩⟨ψ_1| + h.c.

    Returns
    -------
    float
    """
    c = np.asarray(coefficients, dtype = complex)
    if c.shape != (algebra.n_blocks, ) or len(block_pures) != algebra.n_blocks:
        raise DimensionMismatch("one coefficient and vector per block expected.")
    if abs(np.sum(np.abs(c) ** 2) - 1.0) > WEIGHT_TOL:
        error("coefficients have squared norm %.12g." % np.sum(np.abs(c) ** 2))
        raise NotNormalized("coefficients should have unit norm.")
    pures = []
    for n, v in zip(algebra.block_dims, block_pures):
        v = check_state_vector(v)
        if v.shape != (n, ):
            raise DimensionMismatch("block vector of wrong dimension.")
        pures.append(v)

    D = algebra.total_dim
    embedded = []
    s = 0
    for n, v in zip(algebra.block_dims, pures):
        e = np.zeros(D, dtype = complex)
        e[s:(s + n)] = v
        embedded.append(e)
        s += n
    psi = sum(ci * e for ci, e in zip(c, embedded))
    rho_mix = sum(abs(ci) ** 2 * ket2dm(e) for ci, e in zip(c, embedded))

    rng = get_rng(seed)
    ops = []
    if full_algebra and algebra.n_blocks > 1:
        W = np.outer(embedded[0], np.conj(embedded[1]))
        ops.append(W + dagger(W))
    for _ in range(samples):
        if full_algebra:
            ops.append(complex_gaussian((D, D), rng))
        else:
            ops.append(element_to_direct_sum(random_element(algebra, rng)))
    dev = 0.0
    for A in ops:
        d = abs(np.vdot(psi, A @ psi) - np.trace(rho_mix @ A))
        dev = max(dev, float(d))
    return(dev)
