# entropy.py - von Neumann, relative, conditional entropies and mutual
# information.


import numpy as np

from logging import error
from ..config import DefaultConfig
from ..linalg.core import partial_trace_multi
from ..utils.errors import DimensionMismatch, UnknownLabel, UsageError
from ..utils.xmatrix import as_vector, check_density, check_square, dagger


_DEF = DefaultConfig()
DEFAULT_LABELS = ("A", "B", "C", "D")


def _to_unit(x, unit):
    if unit == "nats":
        return(x)
    elif unit == "bits":
        return(x / np.log(2))
    error("invalid entropy unit '%s'." % unit)
    raise UsageError("entropy unit should be 'nats' or 'bits'.")


def _eigvals(rho):
    rho = np.asarray(rho, dtype = complex)
    return(np.linalg.eigvalsh((rho + dagger(rho)) / 2))


def shannon(p, unit = _DEF.ENTROPY_UNIT, clamp = _DEF.ENTROPY_CLAMP):
    """−Σ p log p with entries below `clamp` treated as 0."""
    p = np.clip(np.asarray(p, dtype = float), 0.0, 1.0)
    p = p[p >= clamp]
    return(_to_unit(float(-np.sum(p * np.log(p))), unit))


def von_neumann_entropy(rho, unit = _DEF.ENTROPY_UNIT,
                        clamp = _DEF.ENTROPY_CLAMP, check = True):
    """S(ρ) = −tr ρ log ρ.

    Parameters
    ----------
    rho : array_like
        Density matrix.
    unit : {"nats", "bits"}
    clamp : float
        Eigenvalues below it count as 0 (0 log 0 = 0).
    check : bool, default True
        Whether to validate `rho` as a density matrix.

    Returns
    -------
    float
    """
    if check:
        rho = check_density(rho)
    return(shannon(_eigvals(rho), unit, clamp))


def relative_entropy(rho, sigma, unit = _DEF.ENTROPY_UNIT,
                     clamp = _DEF.ENTROPY_CLAMP, rank_tol = _DEF.RANK_TOL):
    """S(ρ‖σ) = tr ρ log ρ − tr ρ log σ.

    Returns
    -------
    float
        +inf when the support of ρ is not inside the support of σ, i.e.,
        when ρ puts weight > `rank_tol` on the kernel of σ.

    Raises
    ------
    DimensionMismatch
    """
    rho = check_density(rho, name = "rho")
    sigma = check_density(sigma, name = "sigma")
    if rho.shape != sigma.shape:
        error("rho %s and sigma %s differ in shape." % (rho.shape, sigma.shape))
        raise DimensionMismatch("rho and sigma differ in dimension.")
    lr = np.clip(_eigvals(rho), 0.0, 1.0)
    ws, Vs = np.linalg.eigh((sigma + dagger(sigma)) / 2)
    ws = np.clip(ws, 0.0, 1.0)
    supp = ws > max(rank_tol * ws[-1], clamp)
    # diagonal of rho in the eigenbasis of sigma
    d = np.real(np.einsum("ij,ik,kj->j", np.conj(Vs), rho, Vs))
    if np.sum(d[~supp]) > rank_tol:
        return(float("inf"))
    lr = lr[lr >= clamp]
    s = float(np.sum(lr * np.log(lr)) - np.sum(d[supp] * np.log(ws[supp])))
    return(_to_unit(s, unit))


def entanglement_entropy(psi, dims, unit = _DEF.ENTROPY_UNIT,
                         clamp = _DEF.ENTROPY_CLAMP):
    """Entropy of either half of a pure bipartite state, from its Schmidt
    coefficients."""
    psi = as_vector(psi)
    if len(dims) != 2 or dims[0] * dims[1] != psi.shape[0]:
        raise DimensionMismatch("vector does not match dims %s." % (list(dims), ))
    s = np.linalg.svd(psi.reshape(dims[0], dims[1]), compute_uv = False)
    p = s ** 2
    return(shannon(p / np.sum(p), unit, clamp))


class MultipartiteState:
    """A density matrix on ⊗_k ℂ^{d_k} with named subsystems.

    Parameters
    ----------
    rho : array_like
        The density matrix.
    dims : list of int
        Subsystem dimensions, A-major.
    labels : list of str or None, default None
        Subsystem names; defaults to "A", "B", ...
    clamp : float
        Default eigenvalue clamp of :meth:`entropy`.
    """
    def __init__(self, rho, dims, labels = None, clamp = _DEF.ENTROPY_CLAMP):
        rho = check_density(rho)
        dims = [int(d) for d in dims]
        if int(np.prod(dims)) != rho.shape[0]:
            error("dims %s do not match a %dx%d density matrix." % \
                (dims, rho.shape[0], rho.shape[1]))
            raise DimensionMismatch("dims do not match the density matrix.")
        if labels is None:
            if len(dims) > len(DEFAULT_LABELS):
                labels = ["S%d" % i for i in range(len(dims))]
            else:
                labels = list(DEFAULT_LABELS[:len(dims)])
        labels = [str(x) for x in labels]
        if len(labels) != len(dims) or len(set(labels)) != len(labels):
            raise UsageError("labels should be distinct, one per subsystem.")
        self.rho = rho
        self.dims = dims
        self.labels = labels
        self.clamp = float(clamp)
        self._cache = {}

    @property
    def n(self):
        return len(self.dims)

    def resolve(self, label):
        """Subsystem indices of a label, a list of labels, or a string of
        one-letter labels such as "BC"."""
        if isinstance(label, (list, tuple, set)):
            idx = []
            for x in label:
                idx.extend(self.resolve(x))
            return(sorted(set(idx)))
        label = str(label)
        if label in self.labels:
            return([self.labels.index(label)])
        if len(label) > 1 and all(c in self.labels for c in label):
            return(sorted(set(self.labels.index(c) for c in label)))
        error("unknown subsystem label '%s'; known: %s." % \
            (label, ",".join(self.labels)))
        raise UnknownLabel("unknown subsystem label '%s'." % label)

    def name(self, idx):
        return("".join(self.labels[i] for i in sorted(idx)))

    def marginal(self, label):
        return(partial_trace_multi(self.rho, self.dims, self.resolve(label)))

    def entropy(self, label, unit = _DEF.ENTROPY_UNIT, clamp = None):
        """Entropy of the marginal on `label` (nats internally cached).
        `clamp` defaults to the clamp of the state."""
        if clamp is None:
            clamp = self.clamp
        idx = tuple(self.resolve(label))
        key = (idx, clamp)
        if key not in self._cache:
            if len(idx) == 0:
                self._cache[key] = 0.0
            else:
                r = partial_trace_multi(self.rho, self.dims, list(idx))
                self._cache[key] = shannon(_eigvals(r), "nats", clamp)
        return(_to_unit(self._cache[key], unit))


def conditional_entropy(state, target, given, unit = _DEF.ENTROPY_UNIT):
    """S(target|given) = S(target given) − S(given); may be negative."""
    t = state.resolve(target)
    g = state.resolve(given)
    joint = [state.labels[i] for i in sorted(set(t) | set(g))]
    return(state.entropy(joint, unit) - \
        state.entropy([state.labels[i] for i in g], unit))


def mutual_information(state, a, b, unit = _DEF.ENTROPY_UNIT):
    """S(a:b) = S(a) + S(b) − S(ab)."""
    ia = state.resolve(a)
    ib = state.resolve(b)
    lab = lambda idx: [state.labels[i] for i in idx]
    return(state.entropy(lab(ia), unit) + state.entropy(lab(ib), unit) - \
        state.entropy(lab(sorted(set(ia) | set(ib))), unit))
