# inequality.py - the entropic inequality suite and its randomized fuzzing.


import itertools
import multiprocessing
import numpy as np
import pandas as pd

from logging import info, error
from ..config import DefaultConfig
from ..linalg.rand import get_rng, random_density, spawn_seeds
from ..utils.errors import UnsupportedPartition, UsageError
from .entropy import MultipartiteState


_DEF = DefaultConfig()


class EntropyReport:
    """Named entropic quantities plus inequality verdicts.

    Attributes
    ----------
    quantities : dict of {str : float}
        E.g., "S_AB", "S_cond_A_given_B", "I_A_B".
    margins : dict of {str : float}
        rhs − lhs of every inequality "lhs <= rhs"; raw, not clipped.
    violation_tol : float
        An inequality is satisfied iff its margin >= −`violation_tol`.
    unit : {"nats", "bits"}
    """
    def __init__(self, quantities, margins, violation_tol, unit):
        self.quantities = quantities
        self.margins = margins
        self.violation_tol = violation_tol
        self.unit = unit

    @property
    def verdicts(self):
        return({k: bool(m >= -self.violation_tol) \
                for k, m in self.margins.items()})

    def violations(self):
        return(sorted(k for k, ok in self.verdicts.items() if not ok))

    @property
    def all_satisfied(self):
        return(len(self.violations()) == 0)

    def min_margin(self):
        return(min(self.margins.values()) if self.margins else 0.0)

    def to_dict(self):
        res = dict(self.quantities)
        res["unit"] = self.unit
        verdicts = self.verdicts
        res["inequalities"] = {k: {"margin": float(m), "satisfied": verdicts[k]} \
            for k, m in sorted(self.margins.items())}
        res["all_satisfied"] = self.all_satisfied
        return(res)


def _bipartite(state, x, y, S, margins):
    sx, sy, sxy = S([x]), S([y]), S([x, y])
    margins["subadditivity[%s,%s]" % (x, y)] = sx + sy - sxy
    margins["araki_lieb[%s,%s]" % (x, y)] = sxy - abs(sx - sy)


def _tripartite(state, trio, S, margins):
    for z in trio:
        x, y = [t for t in trio if t != z]
        # S(XYZ) + S(Z) <= S(XZ) + S(YZ)
        margins["strong_subadditivity[%s%s|%s]" % (x, y, z)] = \
            S([x, z]) + S([y, z]) - S([x, y, z]) - S([z])
        # S(X) + S(Y) <= S(XZ) + S(YZ)
        margins["weak_monotonicity[%s%s|%s]" % (x, y, z)] = \
            S([x, z]) + S([y, z]) - S([x]) - S([y])
        # S(Z|X) + S(Z|Y) >= 0
        margins["conditional_sum[%s|%s,%s]" % (z, x, y)] = \
            (S([x, z]) - S([x])) + (S([y, z]) - S([y]))
        # S(XY) <= S(XZ) + S(ZY)
        margins["triangle[%s%s|%s]" % (x, y, z)] = \
            S([x, z]) + S([z, y]) - S([x, y])
    for x, y, z in itertools.permutations(trio):
        # S(X|YZ) <= S(X|Y)
        margins["conditioning_reduces[%s|%s,%s]" % (x, y, z)] = \
            (S([x, y]) - S([y])) - (S([x, y, z]) - S([y, z]))
        # S(X:Y) <= S(X:YZ)
        margins["mutual_information_monotone[%s:%s,%s]" % (x, y, z)] = \
            (S([x]) + S([y, z]) - S([x, y, z])) - \
            (S([x]) + S([y]) - S([x, y]))


def _quadripartite(state, labs, S, margins):
    a, b, c, d = labs
    for (x, y), (u, v) in [((a, b), (c, d)), ((a, c), (b, d)),
                           ((a, d), (b, c))]:
        for (p, q) in [(u, v), (v, u)]:
            # S(XY|PQ) <= S(X|P) + S(Y|Q)
            lhs = S([x, y, p, q]) - S([p, q])
            rhs = (S([x, p]) - S([p])) + (S([y, q]) - S([q]))
            margins["block_conditioning[%s%s|%s%s]" % (x, y, p, q)] = rhs - lhs


def check_inequalities(state, violation_tol = _DEF.VIOLATION_TOL,
                       unit = _DEF.ENTROPY_UNIT):
    """Evaluate every applicable entropic inequality.

    Parameters
    ----------
    state : MultipartiteState
        With 2, 3 or 4 subsystems.
    violation_tol : float
    unit : {"nats", "bits"}

    Returns
    -------
    EntropyReport
        Bipartite checks (subadditivity, Araki-Lieb) run on every pair;
        tripartite checks (strong subadditivity for each conditioning
        system, weak monotonicity, triangle, and the conditional/mutual
        corollaries) on every triple; 4 subsystems add the block
        conditioning inequality S(XY|PQ) <= S(X|P) + S(Y|Q).

    Raises
    ------
    UnsupportedPartition
        For fewer than 2 or more than 4 subsystems.
    """
    n = state.n
    if n < 2 or n > 4:
        error("entropic inequalities need 2 to 4 subsystems, got %d." % n)
        raise UnsupportedPartition("entropic inequalities need 2 to 4 subsystems.")
    S = lambda labs: state.entropy(list(labs), unit)
    labs = state.labels
    margins = {}
    for x, y in itertools.combinations(labs, 2):
        _bipartite(state, x, y, S, margins)
    for trio in itertools.combinations(labs, 3):
        _tripartite(state, trio, S, margins)
    if n == 4:
        _quadripartite(state, labs, S, margins)

    quantities = {}
    for k in range(1, n + 1):
        for sub in itertools.combinations(labs, k):
            quantities["S_" + "".join(sub)] = S(sub)
    for x, y in itertools.permutations(labs, 2):
        quantities["S_cond_%s_given_%s" % (x, y)] = S([x, y]) - S([y])
    for x, y in itertools.combinations(labs, 2):
        quantities["I_%s_%s" % (x, y)] = S([x]) + S([y]) - S([x, y])
    if n == 2:
        x, y = labs
        quantities["classical_bound_margin"] = S([x, y]) - max(S([x]), S([y]))
    return EntropyReport(quantities, margins, violation_tol, unit)


### Randomized fuzzing

N_SHARDS = 16


def fuzz_shard(idx, seed, n_states, dims, violation_tol,
               clamp = _DEF.ENTROPY_CLAMP):
    """Check `n_states` random densities drawn from one seed shard.

    Returns
    -------
    list of dict
        One row of margins per sample.
    """
    rng = get_rng(seed)
    D = int(np.prod(dims))
    rows = []
    for i in range(n_states):
        rank = int(rng.integers(1, D + 1))
        rho = random_density(D, rng, rank = rank)
        rep = check_inequalities(MultipartiteState(rho, dims, clamp = clamp),
                                 violation_tol = violation_tol)
        row = {"shard": idx, "sample": i, "rank": rank}
        row.update(rep.margins)
        rows.append(row)
    return(rows)


def fuzz_inequalities(n_states, dims, seed = 0, workers = 1,
                      violation_tol = _DEF.VIOLATION_TOL,
                      clamp = _DEF.ENTROPY_CLAMP):
    """Randomized sweep of the inequality suite.

    The states are split over a fixed number of seed shards, so the
    samples only depend on `seed`, not on `workers`.

    Parameters
    ----------
    n_states : int
    dims : list of int
        Subsystem dimensions (2 to 4 subsystems).
    seed : int
    workers : int, default 1
        Number of sub-processes.
    violation_tol : float
    clamp : float
        Eigenvalue clamp of the entropies.

    Returns
    -------
    dict
        Summary with "n_states", "n_violations", "min_margin",
        "worst_inequality" and per-inequality minimal margins.
    pandas.DataFrame
        One row per sample, one column per inequality margin.
    """
    dims = [int(d) for d in dims]
    if len(dims) < 2 or len(dims) > 4:
        raise UnsupportedPartition("entropic inequalities need 2 to 4 subsystems.")
    if n_states < 1:
        raise UsageError("number of states should be >= 1.")
    n_shards = max(1, min(N_SHARDS, n_states))
    sizes = [n_states // n_shards + (1 if i < n_states % n_shards else 0) \
             for i in range(n_shards)]
    seeds = spawn_seeds(seed, n_shards)

    info("fuzzing %d random states of dims %s in %d shards ..." % \
        (n_states, dims, n_shards))
    rows = []
    if workers <= 1:
        step = max(1, n_shards // 10)
        for i in range(n_shards):
            rows.extend(fuzz_shard(i, seeds[i], sizes[i], dims, violation_tol,
                                   clamp))
            if (i + 1) % step == 0:
                info("%d/%d shards done." % (i + 1, n_shards))
    else:
        pool = multiprocessing.Pool(processes = workers)
        mp_result = []
        for i in range(n_shards):
            mp_result.append(pool.apply_async(
                func = fuzz_shard,
                args = (i, seeds[i], sizes[i], dims, violation_tol, clamp)))
        pool.close()
        pool.join()
        mp_result = [res.get() for res in mp_result]
        for r in mp_result:
            rows.extend(r)
    df = pd.DataFrame(rows)

    ineq = [c for c in df.columns if c not in ("shard", "sample", "rank")]
    mins = df[ineq].min(axis = 0)
    n_viol = int((df[ineq] < -violation_tol).any(axis = 1).sum())
    summary = {
        "n_states": int(n_states),
        "dims": dims,
        "n_violations": n_viol,
        "min_margin": float(mins.min()),
        "worst_inequality": str(mins.idxmin()),
        "min_margins": {k: float(v) for k, v in mins.sort_index().items()}
    }
    info("fuzzing done: %d violations, min margin %.3g." % \
        (n_viol, summary["min_margin"]))
    return((summary, df))
