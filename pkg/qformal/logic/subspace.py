# subspace.py - the concrete lattice of subspaces of ℂ^d.

# Subspaces carry orthonormal bases; projectors are derived on demand, so
# every rank decision is a singular-value or eigenvalue threshold.


import numpy as np
import scipy.linalg as sla

from logging import error, warning
from ..config import DefaultConfig
from ..linalg.core import subspace_basis
from ..linalg.rand import get_rng, random_unitary
from ..utils.errors import DimensionMismatch, PreconditionFailed
from ..utils.xmatrix import as_matrix, dagger, max_abs, projector_onto


_DEF = DefaultConfig()
MAX_SUBLATTICE = 128


class Subspace:
    """A subspace of ℂ^d given by an orthonormal basis.

    Parameters
    ----------
    ambient_dim : int
    basis : array_like or None
        `ambient_dim x rank` matrix with orthonormal columns; None for the
        zero subspace.
    """
    def __init__(self, ambient_dim, basis = None):
        self.ambient_dim = int(ambient_dim)
        if basis is None:
            basis = np.zeros((self.ambient_dim, 0), dtype = complex)
        B = np.asarray(basis, dtype = complex)
        if B.ndim != 2 or B.shape[0] != self.ambient_dim:
            raise DimensionMismatch("basis should have %d rows." % \
                self.ambient_dim)
        if B.shape[1] > 0 and \
                max_abs(dagger(B) @ B - np.eye(B.shape[1])) > 1e-10:
            B = subspace_basis(B, dim = self.ambient_dim)
        self.basis = B
        self._proj = None

    @property
    def rank(self):
        return self.basis.shape[1]

    @property
    def projector(self):
        if self._proj is None:
            self._proj = projector_onto(self.basis)
        return self._proj

    def is_zero(self):
        return self.rank == 0

    def is_full(self):
        return self.rank == self.ambient_dim

    def __repr__(self):
        return "Subspace(dim=%d, rank=%d)" % (self.ambient_dim, self.rank)


def span(vectors, dim = None, rank_tol = _DEF.RANK_TOL):
    B = subspace_basis(vectors, dim = dim, rank_tol = rank_tol)
    return Subspace(B.shape[0], B)


def zero_subspace(dim):
    return Subspace(dim)


def full_subspace(dim):
    return Subspace(dim, np.eye(dim, dtype = complex))


def random_subspace(dim, rank, seed = 0):
    """Haar-random subspace of the given rank."""
    U = random_unitary(dim, seed)
    return Subspace(dim, U[:, :rank])


def _check_dims(a, b):
    if a.ambient_dim != b.ambient_dim:
        error("subspaces of ℂ^%d and ℂ^%d." % (a.ambient_dim, b.ambient_dim))
        raise DimensionMismatch("subspaces live in different dimensions.")


### Lattice operations

def meet(a, b, rank_tol = _DEF.RANK_TOL):
    """a ∧ b: the null space of (I − P_a) + (I − P_b)."""
    _check_dims(a, b)
    d = a.ambient_dim
    if a.is_zero() or b.is_zero():
        return zero_subspace(d)
    I = np.eye(d)
    M = (I - a.projector) + (I - b.projector)
    w, V = np.linalg.eigh((M + dagger(M)) / 2)
    keep = w <= rank_tol * max(1.0, float(w[-1]))
    return Subspace(d, V[:, keep])


def join(a, b, rank_tol = _DEF.RANK_TOL):
    """a ∨ b: orthonormalized union of the bases."""
    _check_dims(a, b)
    d = a.ambient_dim
    M = np.hstack([a.basis, b.basis])
    if M.shape[1] == 0:
        return zero_subspace(d)
    return Subspace(d, subspace_basis(M, dim = d, rank_tol = rank_tol))


def ortho(a):
    """a′, the orthogonal complement."""
    d = a.ambient_dim
    if a.is_zero():
        return full_subspace(d)
    if a.is_full():
        return zero_subspace(d)
    return Subspace(d, sla.null_space(dagger(a.basis)))


def leq(a, b, tol = _DEF.COMPAT_TOL):
    """a ⪯ b, i.e., ‖P_b P_a − P_a‖_max < `tol`."""
    _check_dims(a, b)
    return bool(max_abs(b.projector @ a.projector - a.projector) < tol)


def equal(a, b, tol = _DEF.COMPAT_TOL):
    _check_dims(a, b)
    return a.rank == b.rank and \
        bool(max_abs(a.projector - b.projector) < tol)


def sasaki_projection(a, b):
    """Φ_b(a) = b ∧ (a ∨ b′)."""
    _check_dims(a, b)
    return meet(b, join(a, ortho(b)))


def sasaki_hook(a, b):
    """b′ ∨ (a ∧ b)."""
    _check_dims(a, b)
    return join(ortho(b), meet(a, b))


### Distributivity and compatibility

def non_distributivity_witness(dim = 2):
    """Three coplanar lines breaking the distributive law.

    Returns
    -------
    tuple
        (A, B, C, lhs, rhs) with A = span{e₁}, B = span{e₂},
        C = span{e₁ + e₂}, lhs = A ∧ (B ∨ C) = A and
        rhs = (A ∧ B) ∨ (A ∧ C) = 0.
    """
    if dim < 2:
        raise PreconditionFailed("dimension should be >= 2.")
    e = np.eye(dim, dtype = complex)
    A = span([e[0]])
    B = span([e[1]])
    C = span([e[0] + e[1]])
    lhs = meet(A, join(B, C))
    rhs = join(meet(A, B), meet(A, C))
    return((A, B, C, lhs, rhs))


def distributive_inclusion_violations(dim, trials, seed = 0):
    """Count random triples violating (a∧b)∨(a∧c) ⪯ a∧(b∨c)."""
    rng = get_rng(seed)
    n = 0
    for _ in range(trials):
        a, b, c = [random_subspace(dim, int(rng.integers(0, dim + 1)), rng) \
                   for _ in range(3)]
        lhs = meet(a, join(b, c))
        rhs = join(meet(a, b), meet(a, c))
        if not leq(rhs, lhs):
            n += 1
    return(n)


def _index_of(x, elements, tol):
    for i, y in enumerate(elements):
        if equal(x, y, tol):
            return(i)
    return(-1)


def generated_sublattice(elements, tol = _DEF.COMPAT_TOL,
                         max_elements = MAX_SUBLATTICE):
    """Closure of `elements` ∪ {0, 1} under ∧, ∨ and ′.

    Raises
    ------
    PreconditionFailed
        If the closure exceeds `max_elements`.
    """
    d = elements[0].ambient_dim
    res = []
    for x in [zero_subspace(d), full_subspace(d)] + list(elements):
        if _index_of(x, res, tol) < 0:
            res.append(x)
    done = 0
    while done < len(res):
        new = []
        n = len(res)
        for i in range(done, n):
            cands = [ortho(res[i])]
            for j in range(n):
                cands.extend([meet(res[i], res[j]), join(res[i], res[j])])
            for x in cands:
                if _index_of(x, res, tol) < 0 and _index_of(x, new, tol) < 0:
                    new.append(x)
        done = n
        res.extend(new)
        if len(res) > max_elements:
            error("generated sublattice exceeds %d elements." % max_elements)
            raise PreconditionFailed("generated sublattice too large.")
    return(res)


def is_distributive(elements, tol = _DEF.COMPAT_TOL):
    """Whether a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c) for all triples."""
    n = len(elements)
    mt = [[meet(x, y) for y in elements] for x in elements]
    jt = [[join(x, y) for y in elements] for x in elements]
    for a in range(n):
        for b in range(n):
            for c in range(b, n):
                lhs = meet(elements[a], jt[b][c])
                rhs = join(mt[a][b], mt[a][c])
                if not equal(lhs, rhs, tol):
                    return(False)
    return(True)


def commutator_norm(a, b):
    _check_dims(a, b)
    Pa, Pb = a.projector, b.projector
    return(max_abs(Pa @ Pb - Pb @ Pa))


def is_compatible(a, b, tol = _DEF.COMPAT_TOL, verify = True):
    """Whether P_a and P_b commute (‖[P_a, P_b]‖_max < `tol`).

    With `verify`, a positive answer is confirmed by checking that the
    sublattice generated by {a, b} is distributive.
    """
    ok = commutator_norm(a, b) < tol
    if ok and verify:
        if not is_distributive(generated_sublattice([a, b], tol), tol):
            warning("commuting pair generates a non-distributive sublattice.")
            return(False)
    return(bool(ok))


### Orthomodularity and atoms

def check_orthomodularity(a, b, tol = _DEF.COMPAT_TOL):
    """‖P_{(a∧b′)∨b} − P_a‖_max for b ⪯ a.

    Raises
    ------
    PreconditionFailed
        If not b ⪯ a.
    """
    _check_dims(a, b)
    if not leq(b, a, tol):
        error("orthomodularity check requires b <= a.")
        raise PreconditionFailed("orthomodularity check requires b <= a.")
    c = join(meet(a, ortho(b)), b)
    return(max_abs(c.projector - a.projector))


def is_atom(a):
    return a.rank == 1


def superposition_atom(p, q, tol = _DEF.COMPAT_TOL):
    """A third atom below p ∨ q, distinct from the lines p and q."""
    _check_dims(p, q)
    if not (is_atom(p) and is_atom(q)) or equal(p, q, tol):
        error("superposition needs two distinct atoms.")
        raise PreconditionFailed("superposition needs two distinct atoms.")
    u = p.basis[:, 0]
    v = q.basis[:, 0]
    # align phases so that u + v does not cancel
    ph = np.vdot(u, v)
    if abs(ph) > 0:
        v = v * np.conj(ph) / abs(ph)
    return span([u + v])


def random_nested_pair(dim, seed = 0):
    """(a, b) with b ⪯ a, both of random rank."""
    rng = get_rng(seed)
    U = random_unitary(dim, rng)
    ra = int(rng.integers(0, dim + 1))
    rb = int(rng.integers(0, ra + 1))
    return((Subspace(dim, U[:, :ra]), Subspace(dim, U[:, :rb])))
