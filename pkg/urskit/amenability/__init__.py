from .functions import (
    AmenabilityFunction,
    amenability_check,
    backward_bridge,
    derive_epsilon_schedule,
    epsilon_schedule_check,
    flatten,
    forward_bridge,
    functions_to_witness,
    witness_to_functions,
)
from .witness import (
    PropAWitness,
    ball_indicator_witness,
    check_witness,
    normalization_check,
    normalized,
)

__all__ = [
    "AmenabilityFunction",
    "PropAWitness",
    "amenability_check",
    "backward_bridge",
    "ball_indicator_witness",
    "check_witness",
    "derive_epsilon_schedule",
    "epsilon_schedule_check",
    "flatten",
    "forward_bridge",
    "functions_to_witness",
    "normalization_check",
    "normalized",
    "witness_to_functions",
]
