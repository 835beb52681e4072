# protocol.py - conditional probabilities, the two reversibility protocols,
# the projection postulate and observables built from projector families.


import numpy as np

from logging import error, info, warning
from ..config import DefaultConfig
from ..linalg.core import hermitian_eig
from ..linalg.rand import get_rng
from ..utils.errors import DimensionMismatch, NotOrthogonalFamily, \
    UsageError, ZeroProbability, ZeroProjector
from ..utils.xmath import binom_std_error
from ..utils.xmatrix import as_matrix, check_density, check_projector, \
    check_state_vector, dagger, max_abs


_DEF = DefaultConfig()
ZERO_PROB = 1e-14


class ProtocolResult:
    """Outcome of a Monte Carlo protocol.

    Attributes
    ----------
    trials : int
    empirical_prob : float
    analytic_prob : float
    std_error : float
        Binomial standard error at the analytic probability.
    n_conditioned : int
        Number of trials the estimate is conditioned on (all trials for
        the forward protocol, those where A was TRUE for the backward one).
    """
    def __init__(self, protocol, trials, empirical_prob, analytic_prob,
                 std_error, n_conditioned):
        self.protocol = protocol
        self.trials = int(trials)
        self.empirical_prob = float(empirical_prob)
        self.analytic_prob = float(analytic_prob)
        self.std_error = float(std_error)
        self.n_conditioned = int(n_conditioned)

    @property
    def deviation(self):
        return abs(self.empirical_prob - self.analytic_prob)

    def to_dict(self):
        return({
            "protocol": self.protocol,
            "trials": self.trials,
            "empirical_prob": self.empirical_prob,
            "analytic_prob": self.analytic_prob,
            "std_error": self.std_error,
            "n_conditioned": self.n_conditioned
        })


def _check_pair(P_A, P_B, tol):
    P_A = check_projector(P_A, tol = tol, name = "P_A")
    P_B = check_projector(P_B, tol = tol, name = "P_B")
    if P_A.shape != P_B.shape:
        error("P_A %s and P_B %s differ in shape." % (P_A.shape, P_B.shape))
        raise DimensionMismatch("projectors differ in dimension.")
    return((P_A, P_B))


def _rank(P):
    return(float(np.real(np.trace(P))))


def conditional_probability(P_A, P_B, tol = _DEF.IDEMPOTENCY_TOL):
    """tr(P_A P_B) / tr(P_A).

    Raises
    ------
    ZeroProjector
        If P_A = 0.
    """
    P_A, P_B = _check_pair(P_A, P_B, tol)
    trA = _rank(P_A)
    if trA < 0.5:
        error("P_A is the zero projector.")
        raise ZeroProjector("P_A is the zero projector.")
    p = float(np.real(np.trace(P_A @ P_B))) / trA
    return(min(max(p, 0.0), 1.0))


def _check_trials(trials):
    if int(trials) < 1:
        raise UsageError("number of trials should be >= 1.")
    return(int(trials))


def protocol_forward(P_A, P_B, trials, seed = 0, tol = _DEF.IDEMPOTENCY_TOL):
    """Alice prepares ρ_A = P_A / tr(P_A); Bob tests B on every copy.

    Each copy is a pure state |v⟩ drawn uniformly from an orthonormal
    eigenbasis of range(P_A), so the ensemble is ρ_A; B is then TRUE with
    the Born probability ⟨v|P_B|v⟩.

    Returns
    -------
    ProtocolResult
        `analytic_prob` = tr(ρ_A P_B).
    """
    trials = _check_trials(trials)
    p = conditional_probability(P_A, P_B, tol)
    P_A, P_B = _check_pair(P_A, P_B, tol)
    w, V = hermitian_eig(P_A, hermiticity_tol = tol)
    R = V[:, w > 0.5]
    # Born probabilities of B on the prepared pure states
    q = np.real(np.einsum("ij,ik,kj->j", np.conj(R), P_B, R))
    q = np.clip(q, 0.0, 1.0)
    rng = get_rng(seed)
    idx = rng.integers(0, R.shape[1], size = trials)
    hits = int(np.sum(rng.random(trials) < q[idx]))
    return ProtocolResult(
        protocol = "forward",
        trials = trials,
        empirical_prob = hits / trials,
        analytic_prob = p,
        std_error = binom_std_error(p, trials),
        n_conditioned = trials
    )


def protocol_backward(P_A, P_B, trials, seed = 0,
                      tol = _DEF.IDEMPOTENCY_TOL):
    """Bob tests B on the uninformative state I/N, Alice then tests A;
    among the runs where A is TRUE, estimate how often B was TRUE.

    Returns
    -------
    ProtocolResult
        `analytic_prob` = tr(P_A P_B)/tr(P_A), the same value as the
        forward protocol.
    """
    trials = _check_trials(trials)
    analytic = conditional_probability(P_A, P_B, tol)
    P_A, P_B = _check_pair(P_A, P_B, tol)
    N = P_A.shape[0]
    trA, trB = _rank(P_A), _rank(P_B)
    trAB = float(np.real(np.trace(P_A @ P_B)))

    p_b = trB / N
    # P(A TRUE | B TRUE) from ρ_B = P_B/tr(P_B), and from ρ_¬B otherwise.
    p_a_b = trAB / trB if trB > 0.5 else 0.0
    p_a_nb = (trA - trAB) / (N - trB) if N - trB > 0.5 else 0.0
    p_a_b = min(max(p_a_b, 0.0), 1.0)
    p_a_nb = min(max(p_a_nb, 0.0), 1.0)

    rng = get_rng(seed)
    b = rng.random(trials) < p_b
    u = rng.random(trials)
    a = np.where(b, u < p_a_b, u < p_a_nb)
    n_a = int(np.sum(a))
    if n_a == 0:
        warning("A was never TRUE in %d trials." % trials)
        emp = 0.0
    else:
        emp = float(np.sum(a & b)) / n_a
    return ProtocolResult(
        protocol = "backward",
        trials = trials,
        empirical_prob = emp,
        analytic_prob = analytic,
        std_error = binom_std_error(analytic, n_a),
        n_conditioned = n_a
    )


def luders_update(rho, P, tol = _DEF.IDEMPOTENCY_TOL):
    """Projection postulate: (PρP / tr(PρP), tr(Pρ)).

    Raises
    ------
    ZeroProbability
        If tr(Pρ) < 1e-14.
    """
    rho = check_density(rho)
    P = check_projector(P, tol = tol)
    if rho.shape != P.shape:
        raise DimensionMismatch("state and projector differ in dimension.")
    prob = float(np.real(np.trace(P @ rho)))
    if prob < ZERO_PROB:
        error("outcome has probability %.3g." % prob)
        raise ZeroProbability("outcome has zero probability.")
    post = P @ rho @ P
    post = (post + dagger(post)) / 2
    return((post / np.real(np.trace(post)), min(prob, 1.0)))


def born_probability(phi, psi):
    """|⟨φ|ψ⟩|² for unit vectors."""
    phi = check_state_vector(phi, name = "phi")
    psi = check_state_vector(psi, name = "psi")
    if phi.shape != psi.shape:
        raise DimensionMismatch("vectors differ in dimension.")
    return(float(abs(np.vdot(phi, psi)) ** 2))


def _check_family(outcomes, tol):
    if len(outcomes) == 0:
        raise NotOrthogonalFamily("empty projector family.")
    fam = [(float(o), check_projector(P, tol = tol)) for o, P in outcomes]
    d = fam[0][1].shape
    for _, P in fam:
        if P.shape != d:
            raise DimensionMismatch("projectors differ in dimension.")
    for i in range(len(fam)):
        for j in range(i + 1, len(fam)):
            r = max_abs(fam[i][1] @ fam[j][1])
            if r > tol:
                error("projectors %d and %d overlap (%.3g)." % (i, j, r))
                raise NotOrthogonalFamily("projectors are not mutually orthogonal.")
    return(fam)


def observable_from_projectors(outcomes, tol = _DEF.IDEMPOTENCY_TOL):
    """O = Σ_i o_i P_i for mutually orthogonal projectors.

    Parameters
    ----------
    outcomes : list of tuple
        (o_i, P_i) pairs.

    Raises
    ------
    NotOrthogonalFamily
    """
    fam = _check_family(outcomes, tol)
    O = sum(o * P for o, P in fam)
    return((O + dagger(O)) / 2)


def expectation_from_projectors(outcomes, rho, tol = _DEF.IDEMPOTENCY_TOL):
    """Σ_i o_i tr(P_i ρ)."""
    fam = _check_family(outcomes, tol)
    rho = as_matrix(rho, "rho")
    return(float(sum(o * np.real(np.trace(P @ rho)) for o, P in fam)))
