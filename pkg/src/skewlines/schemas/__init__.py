from skewlines.schemas.documents import (
    ConfigDocument,
    FieldSpec,
    LineSpec,
    PointEntry,
    PointsDocument,
)
from skewlines.schemas.io import dumps, loads, read_document
from skewlines.schemas.reports import (
    ClassifyReport,
    CompletenessCertificate,
    CompletenessReport,
    CountReport,
    CountRow,
    EquivalenceReport,
    GeprociReport,
    GroupReport,
    HopfReport,
    OrbitReport,
    TrialReport,
)

__all__ = [
    "ClassifyReport",
    "CompletenessCertificate",
    "CompletenessReport",
    "ConfigDocument",
    "CountReport",
    "CountRow",
    "EquivalenceReport",
    "FieldSpec",
    "GeprociReport",
    "GroupReport",
    "HopfReport",
    "LineSpec",
    "OrbitReport",
    "PointEntry",
    "PointsDocument",
    "TrialReport",
    "dumps",
    "loads",
    "read_document",
]
