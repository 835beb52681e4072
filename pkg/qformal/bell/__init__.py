# Bell-CHSH nonlocality, correlation boxes and Kochen-Specker contextuality.

from .chsh import MeasurementDirections, canonical_directions, \
    chsh_operator, chsh_value, maximize_chsh, classical_max
from .box import CorrelationBox, is_nonsignaling, pr_box, box_chsh, \
    local_membership, quantum_box
from .ks import KsContextSet, ks_verify, bundled_ks_set, load_ks_set, \
    peres33_set
