# ks.py - Kochen-Specker context sets and the {0,1}-colouring search.


import hashlib
import itertools
import json
import numpy as np
import os

from logging import debug, error, info
from ..config import DefaultConfig
from ..utils.errors import ChecksumMismatch, MalformedContexts, UnknownLabel


_DEF = DefaultConfig()
DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data")
BUNDLED_FILES = ("cabello18", )


class KsContextSet:
    """Rays of ℂ^dim grouped into contexts (orthonormal bases).

    Parameters
    ----------
    dim : int
    rays : array_like
        `n x dim` array; rays need not be normalized.
    contexts : list of list of int
        Ray indices of every context; each context has `dim` mutually
        orthogonal rays.
    name : str or None, default None
    provenance : str or None, default None
    ray_tol : float
        Orthogonality tolerance on normalized rays.

    Raises
    ------
    MalformedContexts
        If a context has the wrong size, an invalid index, or two
        non-orthogonal rays.
    """
    def __init__(self, dim, rays, contexts, name = None, provenance = None,
                 ray_tol = _DEF.RAY_TOL):
        self.dim = int(dim)
        R = np.asarray(rays, dtype = complex)
        if R.ndim != 2 or R.shape[1] != self.dim:
            error("rays of shape %s for dim %d." % (R.shape, self.dim))
            raise MalformedContexts("rays should have %d components." % self.dim)
        nrm = np.linalg.norm(R, axis = 1)
        if np.any(nrm == 0) or not np.all(np.isfinite(nrm)):
            raise MalformedContexts("rays should be finite and non-zero.")
        self.rays = R / nrm[:, np.newaxis]
        self.contexts = [tuple(int(i) for i in c) for c in contexts]
        self.name = name
        self.provenance = provenance
        self._validate(ray_tol)

    def _validate(self, ray_tol):
        n = self.rays.shape[0]
        for k, ctx in enumerate(self.contexts):
            if len(ctx) != self.dim or len(set(ctx)) != self.dim:
                error("context %d has %d distinct rays, expected %d." % \
                    (k, len(set(ctx)), self.dim))
                raise MalformedContexts("context %d is not a full basis." % k)
            if min(ctx) < 0 or max(ctx) >= n:
                raise MalformedContexts("context %d refers to unknown rays." % k)
            B = self.rays[list(ctx)]
            G = np.abs(np.conj(B) @ B.T - np.eye(self.dim))
            if np.max(G) > ray_tol:
                error("context %d is not orthogonal (max overlap %.3g)." % \
                    (k, np.max(G)))
                raise MalformedContexts("context %d is not orthogonal." % k)

    @property
    def n_rays(self):
        return self.rays.shape[0]

    def drop_context(self, k):
        """Copy without the k-th context."""
        ctx = [c for i, c in enumerate(self.contexts) if i != k]
        return KsContextSet(self.dim, self.rays, ctx, name = self.name,
                            provenance = self.provenance)

    def with_contexts(self, contexts):
        return KsContextSet(self.dim, self.rays, contexts, name = self.name,
                            provenance = self.provenance)


class KsResult:
    """Verdict of the colouring search.

    Attributes
    ----------
    satisfiable : bool
    witness : list of int or None
        Value (0/1) of every ray when satisfiable.
    nodes : int
        Search nodes visited.
    backtracks : int
        Dead ends refuted.
    n_variables : int
        Distinct rays after identifying colinear ones.
    """
    def __init__(self, satisfiable, witness, nodes, backtracks,
                 n_variables, n_contexts):
        self.satisfiable = satisfiable
        self.witness = witness
        self.nodes = nodes
        self.backtracks = backtracks
        self.n_variables = n_variables
        self.n_contexts = n_contexts

    def to_dict(self):
        return({
            "verdict": "SATISFIABLE" if self.satisfiable else "UNSATISFIABLE",
            "witness": self.witness,
            "nodes": self.nodes,
            "backtracks": self.backtracks,
            "n_variables": self.n_variables,
            "n_contexts": self.n_contexts
        })


def identify_rays(rays, ray_tol = _DEF.RAY_TOL):
    """Map every ray to a variable; rays colinear up to a phase
    (|⟨u|v⟩| >= 1 − `ray_tol`) share one."""
    n = rays.shape[0]
    var = [-1] * n
    reps = []
    for i in range(n):
        for v, r in enumerate(reps):
            if abs(np.vdot(rays[r], rays[i])) >= 1 - ray_tol:
                var[i] = v
                break
        if var[i] < 0:
            var[i] = len(reps)
            reps.append(i)
    return((var, len(reps)))


class _Search:
    """Backtracking with unit propagation: exactly one 1 per context."""
    def __init__(self, contexts, n_vars):
        self.contexts = contexts
        self.n_vars = n_vars
        self.nodes = 0
        self.backtracks = 0

    def propagate(self, val):
        changed = True
        while changed:
            changed = False
            for ctx in self.contexts:
                ones = sum(1 for v in ctx if val[v] == 1)
                free = [v for v in ctx if val[v] < 0]
                if ones > 1:
                    return(False)
                if ones == 1:
                    for v in free:
                        val[v] = 0
                        changed = True
                elif len(free) == 0:
                    return(False)
                elif len(free) == 1:
                    val[free[0]] = 1
                    changed = True
        return(True)

    def pick(self, val):
        """Open context with the fewest free variables (first on ties)."""
        best, best_free = None, None
        for ctx in self.contexts:
            if any(val[v] == 1 for v in ctx):
                continue
            free = [v for v in ctx if val[v] < 0]
            if best is None or len(free) < len(best_free):
                best, best_free = ctx, free
        return(best_free)

    def solve(self, val):
        """Yield every complete assignment extending `val`."""
        self.nodes += 1
        if not self.propagate(val):
            self.backtracks += 1
            return
        free = self.pick(val)
        if free is None:
            yield [max(x, 0) for x in val]
            return
        for v in free:
            child = list(val)
            child[v] = 1
            yield from self.solve(child)
            # later branches: v is 0
            val = list(val)
            val[v] = 0


def _search(ks_set, ray_tol):
    var, n_vars = identify_rays(ks_set.rays, ray_tol)
    contexts = [tuple(var[i] for i in ctx) for ctx in ks_set.contexts]
    return((var, n_vars, _Search(contexts, n_vars)))


def ks_verify(ks_set, ray_tol = _DEF.RAY_TOL):
    """Search a {0,1} assignment with exactly one 1 in every context.

    Returns
    -------
    KsResult
        UNSATISFIABLE only after the full search tree is refuted. Variable
        and branch order are fixed, so statistics are reproducible.
    """
    var, n_vars, s = _search(ks_set, ray_tol)
    sol = next(s.solve([-1] * n_vars), None)
    witness = None if sol is None else [int(sol[var[i]]) \
                                        for i in range(ks_set.n_rays)]
    info("KS search over %d variables and %d contexts: %s (%d nodes, %d backtracks)." % \
        (n_vars, len(ks_set.contexts),
         "SAT" if sol is not None else "UNSAT", s.nodes, s.backtracks))
    return KsResult(sol is not None, witness, s.nodes, s.backtracks,
                    n_vars, len(ks_set.contexts))


def ks_solutions(ks_set, limit = None, ray_tol = _DEF.RAY_TOL):
    """All (up to `limit`) distinct valid assignments, per ray."""
    var, n_vars, s = _search(ks_set, ray_tol)
    res = []
    seen = set()
    for sol in s.solve([-1] * n_vars):
        key = tuple(sol)
        if key in seen:
            continue
        seen.add(key)
        res.append([int(sol[var[i]]) for i in range(ks_set.n_rays)])
        if limit is not None and len(res) >= limit:
            break
    return(res)


### Data files

def _parse_component(x):
    if isinstance(x, (list, tuple)):
        return(complex(float(x[0]), float(x[1])))
    return(float(x))


def ks_checksum(d):
    """sha256 of the canonical JSON of "contexts", "dim" and "rays"."""
    core = {"contexts": d["contexts"], "dim": d["dim"], "rays": d["rays"]}
    s = json.dumps(core, sort_keys = True, separators = (",", ":"))
    return(hashlib.sha256(s.encode("utf-8")).hexdigest())


def ks_set_from_dict(d, ray_tol = _DEF.RAY_TOL):
    """Build a KsContextSet from its JSON object, verifying the optional
    "checksum" field ("sha256:<hex>").

    Raises
    ------
    ChecksumMismatch
    MalformedContexts
    """
    for k in ("dim", "rays", "contexts"):
        if k not in d:
            raise MalformedContexts("KS set misses key '%s'." % k)
    if d.get("checksum"):
        expect = str(d["checksum"]).split(":", 1)[-1]
        got = ks_checksum(d)
        if got != expect:
            error("KS set checksum mismatch: %s != %s." % (got, expect))
            raise ChecksumMismatch("KS set checksum mismatch.")
    rays = [[_parse_component(x) for x in r] for r in d["rays"]]
    return KsContextSet(d["dim"], rays, d["contexts"], name = d.get("name"),
                        provenance = d.get("provenance"), ray_tol = ray_tol)


def load_ks_set(fn, ray_tol = _DEF.RAY_TOL):
    with open(fn, "r") as fp:
        d = json.load(fp)
    debug("loaded KS set '%s' from '%s'." % (d.get("name"), fn))
    return ks_set_from_dict(d, ray_tol)


def peres33_set(ray_tol = _DEF.RAY_TOL):
    """The 33 rays of ℝ³ with components in {0, ±1, ±√2} and absolute
    values one of (0,0,1), (0,1,1), (0,1,√2), (1,1,√2), up to sign;
    contexts are all orthogonal triads among them."""
    r2 = np.sqrt(2)
    shapes = {(0, 0, 1), (0, 1, 1), (0, 1, 2), (1, 1, 2)}
    code = {0: 0, 1: 1, r2: 2}
    rays = []
    for v in itertools.product([0, 1, -1, r2, -r2], repeat = 3):
        if tuple(sorted(code[abs(x)] for x in v)) not in shapes:
            continue
        first = next(x for x in v if x != 0)
        if first < 0:
            continue
        rays.append(np.array(v, dtype = float))
    R = np.vstack(rays)
    R = R / np.linalg.norm(R, axis = 1)[:, np.newaxis]
    G = np.abs(R @ R.T)
    contexts = [c for c in itertools.combinations(range(R.shape[0]), 3) \
                if G[c[0], c[1]] < ray_tol and G[c[0], c[2]] < ray_tol and \
                   G[c[1], c[2]] < ray_tol]
    return KsContextSet(3, R, contexts, name = "peres33",
        provenance = "Peres' 33-ray set in dimension 3 (J. Phys. A 24, L175 (1991)), generated in code.")


def bundled_ks_set(name):
    """A KS set shipped with the package ("cabello18") or generated in
    code ("peres33")."""
    key = name.lower()
    if key == "peres33":
        return peres33_set()
    if key in BUNDLED_FILES:
        return load_ks_set(os.path.join(DATA_DIR, key + ".json"))
    error("unknown KS set '%s'." % name)
    raise UnknownLabel("unknown KS set '%s'." % name)


BUNDLED_KS_SETS = BUNDLED_FILES + ("peres33", )
