# box.py - correlation boxes P(A,B|x,y) for two binary settings and two
# binary outcomes.

# Tables are indexed [x][y][i][j]; outcome index 0 means +1 and 1 means -1.
# Alice's setting 0 measures ā′ and setting 1 measures ā; Bob's setting 0
# measures b̄ and setting 1 measures b̄′. With this, box_chsh =
# E00 + E01 + E10 − E11 equals tr(ρM).


import itertools
import numpy as np
import scipy.optimize as sopt

from logging import error
from ..linalg.core import spin_observable, tensor
from ..utils.errors import MalformedTable, NotNonSignaling
from .chsh import _check_two_qubit


SIGN = np.array([1, -1])
TABLE_TOL = 1e-12
NS_TOL = 1e-10


class CorrelationBox:
    """A conditional probability table P(A,B|x,y).

    Raises
    ------
    MalformedTable
        If an entry is below −1e-12 or a setting does not sum to 1.
    """
    def __init__(self, table, tol = TABLE_TOL):
        P = np.asarray(table, dtype = float)
        if P.shape != (2, 2, 2, 2):
            error("box table should have shape (2,2,2,2), got %s." % (P.shape, ))
            raise MalformedTable("box table should have shape (2,2,2,2).")
        if not np.all(np.isfinite(P)) or np.min(P) < -tol:
            raise MalformedTable("box probabilities should be non-negative.")
        s = P.sum(axis = (2, 3))
        if np.max(np.abs(s - 1)) > tol:
            error("box settings sum to %s." % (s.tolist(), ))
            raise MalformedTable("every setting should sum to 1.")
        self.table = P

    def correlator(self, x, y):
        """E_xy = Σ A·B P(A,B|x,y)."""
        return(float(SIGN @ self.table[x, y] @ SIGN))

    def to_dict(self):
        return({"table": self.table.tolist()})


def box_chsh(box):
    """E00 + E01 + E10 − E11."""
    E = box.correlator
    return(E(0, 0) + E(0, 1) + E(1, 0) - E(1, 1))


def box_marginals(box):
    """Alice's P(A|x,y) and Bob's P(B|x,y), each of shape (2, 2, 2)."""
    return((box.table.sum(axis = 3), box.table.sum(axis = 2)))


def is_nonsignaling(box, tol = NS_TOL):
    """Whether Alice's marginals do not depend on y and Bob's not on x.

    Returns
    -------
    bool
    float
        The largest marginal difference.
    """
    pa, pb = box_marginals(box)
    va = np.max(np.abs(pa[:, 0, :] - pa[:, 1, :]))
    vb = np.max(np.abs(pb[0, :, :] - pb[1, :, :]))
    v = float(max(va, vb))
    return((v <= tol, v))


def pr_box():
    """P(A,B|x,y) = 1/2 iff A·B = (−1)^{xy}."""
    P = np.zeros((2, 2, 2, 2))
    for x, y, i, j in itertools.product(range(2), repeat = 4):
        if SIGN[i] * SIGN[j] == (-1) ** (x * y):
            P[x, y, i, j] = 0.5
    return CorrelationBox(P)


def deterministic_box(strategy):
    """Box of the local strategy (A₀, A₁, B₀, B₁) in {±1}⁴, A_x being
    Alice's output on setting x."""
    a0, a1, b0, b1 = [int(s) for s in strategy]
    P = np.zeros((2, 2, 2, 2))
    for x, y in itertools.product(range(2), repeat = 2):
        i = 0 if (a0, a1)[x] == 1 else 1
        j = 0 if (b0, b1)[y] == 1 else 1
        P[x, y, i, j] = 1.0
    return CorrelationBox(P)


STRATEGIES = list(itertools.product((1, -1), repeat = 4))


def quantum_box(rho, dirs):
    """Born probabilities of ±1 spin outcomes, with the setting convention
    of this module."""
    rho = _check_two_qubit(rho)
    alice = (dirs.a_prime, dirs.a)
    bob = (dirs.b, dirs.b_prime)
    I = np.eye(2)
    P = np.zeros((2, 2, 2, 2))
    for x, y in itertools.product(range(2), repeat = 2):
        Sa, Sb = spin_observable(alice[x]), spin_observable(bob[y])
        for i, j in itertools.product(range(2), repeat = 2):
            Pa = (I + SIGN[i] * Sa) / 2
            Pb = (I + SIGN[j] * Sb) / 2
            P[x, y, i, j] = np.real(np.trace(rho @ tensor(Pa, Pb)))
    return CorrelationBox(np.clip(P, 0.0, None))


def chsh_variants(box):
    """The 8 CHSH expressions ±(ΣE − 2E_{x₀y₀}), keyed by name."""
    E = {(x, y): box.correlator(x, y) for x in range(2) for y in range(2)}
    tot = sum(E.values())
    res = {}
    for (x0, y0), s in itertools.product(sorted(E), (1, -1)):
        name = "%sCHSH[minus E%d%d]" % ("+" if s > 0 else "-", x0, y0)
        res[name] = s * (tot - 2 * E[(x0, y0)])
    return(res)


def local_membership(box, tol = 1e-9):
    """Whether the box lies in the local polytope.

    For two binary settings and outcomes, a non-signaling box is local iff
    all 8 CHSH variants are <= 2.

    Returns
    -------
    bool
    dict
        When local: "weights" over the 16 deterministic strategies (by
        "A0,A1,B0,B1" key) and "reconstruction_error". Otherwise:
        "inequality" and "value" of the most violated variant.

    Raises
    ------
    NotNonSignaling
    """
    ok, v = is_nonsignaling(box)
    if not ok:
        error("box is signaling (violation %.3g)." % v)
        raise NotNonSignaling("box is signaling.")
    variants = chsh_variants(box)
    name = max(variants, key = lambda k: variants[k])
    if variants[name] > 2 + tol:
        return((False, {"inequality": name, "value": float(variants[name])}))
    D = np.column_stack([deterministic_box(s).table.ravel() for s in STRATEGIES])
    w, _ = sopt.nnls(D, box.table.ravel())
    err = float(np.max(np.abs(D @ w - box.table.ravel())))
    weights = {",".join("%+d" % x for x in s): float(wi) \
               for s, wi in zip(STRATEGIES, w) if wi > 1e-12}
    return((True, {"weights": weights, "reconstruction_error": err}))
