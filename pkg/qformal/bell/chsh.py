# chsh.py - the CHSH operator, Tsirelson bound and the classical bound.


import itertools
import numpy as np

from logging import debug, error
from ..config import DefaultConfig
from ..linalg.core import PAULIS, spin_observable, tensor
from ..linalg.rand import get_rng, random_direction, spawn_seeds
from ..utils.errors import DimensionMismatch, NotNormalized
from ..utils.xmatrix import check_density


_DEF = DefaultConfig()
TSIRELSON = 2 * np.sqrt(2)
UNIT_TOL = 1e-12


class MeasurementDirections:
    """Spin directions ā, ā′ (Alice) and b̄, b̄′ (Bob)."""
    NAMES = ("a", "a_prime", "b", "b_prime")

    def __init__(self, a, a_prime, b, b_prime):
        vs = []
        for name, v in zip(self.NAMES, (a, a_prime, b, b_prime)):
            v = np.asarray(v, dtype = float).reshape(-1)
            if v.shape != (3, ) or abs(np.linalg.norm(v) - 1) > UNIT_TOL:
                error("direction '%s' should be a real unit 3-vector." % name)
                raise NotNormalized("direction '%s' is not a unit 3-vector." % name)
            vs.append(v)
        self.a, self.a_prime, self.b, self.b_prime = vs

    def to_dict(self):
        return({k: getattr(self, k).tolist() for k in self.NAMES})

    @classmethod
    def from_dict(cls, d):
        return cls(*[d[k] for k in cls.NAMES])


def _unit(v):
    return(np.asarray(v, dtype = float) / np.linalg.norm(v))


def canonical_directions():
    """Coplanar settings reaching 2√2 on the singlet (|01⟩ − |10⟩)/√2:
    ā = z, ā′ = x, b̄ = −(z + x)/√2, b̄′ = (z − x)/√2."""
    x = np.array([1.0, 0.0, 0.0])
    z = np.array([0.0, 0.0, 1.0])
    return MeasurementDirections(z, x, _unit(-(z + x)), _unit(z - x))


def random_directions(seed = 0):
    rng = get_rng(seed)
    return MeasurementDirections(*[random_direction(rng) for _ in range(4)])


def chsh_operator(dirs):
    """M = AB − AB′ + A′B + A′B′, A = ā·σ⃗ ⊗ I etc."""
    A, Ap = spin_observable(dirs.a), spin_observable(dirs.a_prime)
    B, Bp = spin_observable(dirs.b), spin_observable(dirs.b_prime)
    return(tensor(A, B) - tensor(A, Bp) + tensor(Ap, B) + tensor(Ap, Bp))


def _check_two_qubit(rho):
    rho = check_density(rho)
    if rho.shape != (4, 4):
        error("CHSH needs a two-qubit state, got shape %s." % (rho.shape, ))
        raise DimensionMismatch("CHSH needs a 4x4 density matrix.")
    return(rho)


def chsh_value(rho, dirs):
    """tr(ρM)."""
    rho = _check_two_qubit(rho)
    return(float(np.real(np.trace(rho @ chsh_operator(dirs)))))


def correlation_matrix(rho):
    """T_ij = tr(ρ σ_i ⊗ σ_j), so that tr(ρ (ā·σ⃗ ⊗ b̄·σ⃗)) = āᵀ T b̄."""
    rho = _check_two_qubit(rho)
    T = np.zeros((3, 3))
    for i, si in enumerate(PAULIS):
        for j, sj in enumerate(PAULIS):
            T[i, j] = np.real(np.trace(rho @ tensor(si, sj)))
    return(T)


def horodecki_bound(rho):
    """max over settings of tr(ρM) = 2√(m₁ + m₂), m₁ >= m₂ the two
    largest eigenvalues of TᵀT."""
    T = correlation_matrix(rho)
    m = np.sort(np.linalg.eigvalsh(T.T @ T))[::-1]
    return(float(2 * np.sqrt(max(m[0] + m[1], 0.0))))


def _value_T(T, a, ap, b, bp):
    return(float(a @ T @ (b - bp) + ap @ T @ (b + bp)))


def _normalize_or(v, fallback):
    n = np.linalg.norm(v)
    return(v / n if n > 1e-15 else fallback)


def _ascent(T, dirs, max_iter, tol):
    a, ap, b, bp = dirs.a, dirs.a_prime, dirs.b, dirs.b_prime
    val = _value_T(T, a, ap, b, bp)
    for it in range(max_iter):
        a = _normalize_or(T @ (b - bp), a)
        ap = _normalize_or(T @ (b + bp), ap)
        b = _normalize_or(T.T @ (a + ap), b)
        bp = _normalize_or(T.T @ (ap - a), bp)
        new = _value_T(T, a, ap, b, bp)
        if new - val < tol:
            val = max(val, new)
            break
        val = new
    return((MeasurementDirections(_unit(a), _unit(ap), _unit(b), _unit(bp)),
            val))


def maximize_chsh(rho, seed = 0, restarts = 32, max_iter = 500, tol = 1e-14):
    """Multi-start coordinate ascent of tr(ρM) over the four directions.

    Every step optimizes one direction in closed form: with the others
    fixed, tr(ρM) is linear in it, maximized by the normalized
    coefficient vector built from the correlation matrix T.

    Returns
    -------
    MeasurementDirections
    float
        Best value, at least the value of every random starting point.
    """
    T = correlation_matrix(rho)
    best_dirs, best = None, -np.inf
    starts = []
    for ss in spawn_seeds(seed, max(1, restarts)):
        d0 = random_directions(ss)
        v0 = _value_T(T, d0.a, d0.a_prime, d0.b, d0.b_prime)
        starts.append(v0)
        d, v = _ascent(T, d0, max_iter, tol)
        if v0 > v:
            d, v = d0, v0
        if v > best:
            best_dirs, best = d, v
    debug("CHSH ascent: best %.12g over %d restarts (best start %.6g)." % \
        (best, len(starts), max(starts)))
    return((best_dirs, float(best)))


def classical_max():
    """Exhaustive enumeration of the 16 deterministic strategies.

    Returns
    -------
    dict
        - "max" : max |AB − AB′ + A′B + A′B′| (= 2).
        - "strategies" : (A, A′, B, B′) tuples reaching value +2.
        - "values" : {strategy: value} for all 16.
    """
    values = {}
    for A, Ap, B, Bp in itertools.product((1, -1), repeat = 4):
        values[(A, Ap, B, Bp)] = A * B - A * Bp + Ap * B + Ap * Bp
    m = max(abs(v) for v in values.values())
    top = max(values.values())
    return({
        "max": int(m),
        "strategies": [s for s, v in values.items() if v == top],
        "values": values
    })
