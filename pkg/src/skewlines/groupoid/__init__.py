from skewlines.groupoid.analysis import (
    GroupDescription,
    GroupStatus,
    cross_ratio_ratio_generators,
    group_analysis,
)
from skewlines.groupoid.config import SkewConfig
from skewlines.groupoid.equivalence import projective_equivalence_of_orbits
from skewlines.groupoid.maps import GMap, element_order, f_map, generators_of_Gi
from skewlines.groupoid.orbits import (
    CompletenessResult,
    PointSet,
    is_collinearly_complete,
    orbit,
    orbit_decomposition,
    restrict,
)

__all__ = [
    "CompletenessResult",
    "GMap",
    "GroupDescription",
    "GroupStatus",
    "PointSet",
    "SkewConfig",
    "cross_ratio_ratio_generators",
    "element_order",
    "f_map",
    "generators_of_Gi",
    "group_analysis",
    "is_collinearly_complete",
    "orbit",
    "orbit_decomposition",
    "projective_equivalence_of_orbits",
    "restrict",
]
