from .ball_type import BallType, ball_type, canonical_ball, restrict_type, type_in_region
from .checks import (
    IsotropyCandidate,
    RepetitivityReport,
    base_independence_check,
    isotropy_scan,
    urs_repetitivity,
)
from .export import ball_graph, ball_to_dict, level_system_from_dict, level_system_to_dict, to_dot
from .levels import Level, LevelSystem, classify, type_region

__all__ = [
    "BallType",
    "IsotropyCandidate",
    "Level",
    "LevelSystem",
    "RepetitivityReport",
    "ball_graph",
    "ball_to_dict",
    "ball_type",
    "base_independence_check",
    "canonical_ball",
    "classify",
    "isotropy_scan",
    "level_system_from_dict",
    "level_system_to_dict",
    "restrict_type",
    "to_dot",
    "type_in_region",
    "type_region",
    "urs_repetitivity",
]
