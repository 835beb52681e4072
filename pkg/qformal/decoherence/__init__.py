# The von Neumann measurement model and pointer-state decoherence.

from .model import MeasurementModel, measure_evolution, \
    reduced_system_state, overlap_scaling_experiment, repeated_measurement
