# Entropy functionals, entropic inequalities and thermal states.

from .entropy import MultipartiteState, von_neumann_entropy, \
    relative_entropy, conditional_entropy, mutual_information, \
    entanglement_entropy
from .inequality import EntropyReport, check_inequalities, fuzz_inequalities
from .thermal import gibbs_state, imaginary_time_consistency, \
    thermal_quantities
