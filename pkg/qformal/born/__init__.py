# Frame functions, the Born rule, conditional probabilities and evolution.

from .frame import FrameSample, frame_from_density, fit_density_from_frame
from .protocol import ProtocolResult, conditional_probability, \
    protocol_forward, protocol_backward, luders_update, \
    observable_from_projectors
from .evolve import schrodinger_evolve, heisenberg_evolve
