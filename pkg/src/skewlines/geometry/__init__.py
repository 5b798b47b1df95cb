from skewlines.geometry.projective import (
    Plane,
    ProjLine,
    ProjPoint,
    Quadric,
    are_skew,
    cross_ratio,
    line_through,
    meet_line_plane,
    meet_lines,
    plane_span,
    project_from_point,
    projective_points,
    quadric_through_skew_triple,
    ruling_transversal_through,
    transversal_through,
)
from skewlines.geometry.transversals import (
    TransversalKind,
    TransversalResult,
    transversal_census,
    transversals_of_quadruple,
)

__all__ = [
    "Plane",
    "ProjLine",
    "ProjPoint",
    "Quadric",
    "TransversalKind",
    "TransversalResult",
    "are_skew",
    "cross_ratio",
    "line_through",
    "meet_line_plane",
    "meet_lines",
    "plane_span",
    "project_from_point",
    "projective_points",
    "quadric_through_skew_triple",
    "ruling_transversal_through",
    "transversal_census",
    "transversal_through",
    "transversals_of_quadruple",
]
