from .arrows import (
    ArrowClass,
    ClassRef,
    DyadicDistance,
    FLevel,
    Infinity,
    arrow_distance,
    arrows_with_range,
    build_F,
    compose,
    composable,
    depth,
    divide,
    invert_arrow,
    is_unit,
    project_arrow,
    range_of,
    source,
    unit,
)
from .functions import GroupoidFunction, adjoint_function, convolve_functions
from .quotient import TransformationArrow, q_map, quotient_checks, transformation_product

__all__ = [
    "ArrowClass",
    "ClassRef",
    "DyadicDistance",
    "FLevel",
    "GroupoidFunction",
    "Infinity",
    "TransformationArrow",
    "adjoint_function",
    "arrow_distance",
    "arrows_with_range",
    "build_F",
    "composable",
    "compose",
    "convolve_functions",
    "depth",
    "divide",
    "invert_arrow",
    "is_unit",
    "project_arrow",
    "q_map",
    "quotient_checks",
    "range_of",
    "source",
    "transformation_product",
    "unit",
]
