# Lattices of propositions: closed subspaces of ℂ^d and finite
# orthocomplemented lattices.

from .subspace import Subspace, meet, join, ortho, leq, equal, \
    sasaki_projection, sasaki_hook, is_compatible, check_orthomodularity, \
    non_distributivity_witness
from .lattice import FiniteLattice, lattice_audit
