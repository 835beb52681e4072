# main.py - the `lattice` subcommand.


import os

from logging import info
from .lattice import BUILTIN_LATTICES, lattice_audit
from .subspace import check_orthomodularity, distributive_inclusion_violations, \
    is_atom, non_distributivity_witness, random_nested_pair, \
    random_subspace, sasaki_projection
from ..io.base import load_lattice
from ..linalg.rand import get_rng
from ..utils.errors import UsageError


def lattice_audit_wrapper(source, conf):
    """Audit a finite lattice given as a JSON file or a builtin name
    ("boolean3", "mo2", "o6")."""
    if source in BUILTIN_LATTICES and not os.path.exists(source):
        l = BUILTIN_LATTICES[source]()
    else:
        l = load_lattice(source)
    res = lattice_audit(l)
    res["lattice"] = source
    return((0, res))


def witness_core(dim, trials, seed, tol):
    """The non-distributivity witness in ℂ^dim plus random sweeps.

    Returns
    -------
    dict
        "lhs_rank" and "rhs_rank" of A ∧ (B ∨ C) and (A ∧ B) ∨ (A ∧ C);
        with `trials` > 0 also "orthomodularity_max_margin" over random
        nested pairs, "sasaki_non_atoms" (Sasaki projections of random
        lines onto random lines that are not atoms) and
        "distributive_inclusion_violations".
    """
    A, B, C, lhs, rhs = non_distributivity_witness(dim)
    res = {
        "dim": dim,
        "lhs_rank": lhs.rank,
        "rhs_rank": rhs.rank,
        "distributive": lhs.rank == rhs.rank
    }
    if trials <= 0:
        return(res)

    rng = get_rng(seed)
    margin = 0.0
    non_atoms = 0
    for _ in range(trials):
        a, b = random_nested_pair(dim, rng)
        margin = max(margin, check_orthomodularity(a, b, tol))
        p = random_subspace(dim, 1, rng)
        q = random_subspace(dim, 1, rng)
        if not is_atom(sasaki_projection(p, q)):
            non_atoms += 1
    res["trials"] = trials
    res["orthomodularity_max_margin"] = margin
    res["sasaki_non_atoms"] = non_atoms
    res["distributive_inclusion_violations"] = \
        distributive_inclusion_violations(dim, trials, rng)
    info("lattice witness in dim %d: lhs rank %d, rhs rank %d." % \
        (dim, lhs.rank, rhs.rank))
    return(res)


def lattice_witness_wrapper(dim, trials, conf):
    if dim < 2:
        raise UsageError("--dim should be >= 2.")
    return((0, witness_core(dim, trials, conf.seed, conf.tol("compat_tol"))))
