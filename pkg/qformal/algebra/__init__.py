# Finite-dimensional C*-algebras of observables and the GNS construction.

from .block import BlockAlgebra, AlgebraElement, AlgebraState
from .gns import GnsRepresentation, gns_construct
